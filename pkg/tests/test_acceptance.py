"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, FAMILY  # noqa: E402
from oracles import maschke  # noqa: E402

from hopftrace import hopf as H  # noqa: E402
from hopftrace.blocks import dual_group, expected_pairing, pairing_of_idempotents, split_center  # noqa: E402
from hopftrace.comodules import (character, dual_comodule, invariants_dim, regular_comodule,  # noqa: E402
                                 representation_comodule, reynolds_matrix, tensor_product, trivial_comodule)
from hopftrace.diag import (FinGenAbelianGroup, FinSupportFunctional, LaurentElement, diag_fourier,  # noqa: E402
                            diag_integral, diag_phi, finite_hopf_algebra)
from hopftrace.dual import (convolution_algebra, functional_left_action, functional_right_action,  # noqa: E402
                            is_linearly_reductive, phi_matrix, polarity_varphi, separability_oracle, trace_form_gram,
                            varphi_matrix)
from hopftrace.fields import GF, QQ  # noqa: E402
from hopftrace.groups import abelian_group, symmetric_group  # noqa: E402
from hopftrace.integral import (NotReductiveError, fourier, fourier_matrix, invariant_integral,  # noqa: E402
                                left_action_on_A, right_action_on_A, verify_parseval)
from hopftrace.linalg import Matrix  # noqa: E402

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]


def divisor_chains(m, lo=2):
    """Invariant-factor lists d1 | d2 | ... with product m: one per abelian group of order m."""
    if m == 1:
        return [[]]
    out = []
    for d in range(lo, m + 1):
        if m % d == 0:
            for rest in divisor_chains(m // d, d):
                if all(r % d == 0 for r in rest):
                    out.append([d] + rest)
    return out


def maschke_instances():
    """(name, order, algebra): every abelian group of order <= 12 plus S3, over every test field."""
    groups = [(f"Z/{'xZ/'.join(map(str, c)) or '1'}", m, abelian_group(c) if c else [[0]])
              for m in range(1, 13) for c in divisor_chains(m)]
    groups.append(("S3", 6, symmetric_group(3)))
    return [(f"{name} over {f}", m, H.constant_group_scheme(table, f)) for name, m, table in groups for f in FIELDS]


def extra_instances():
    out = [(f"mu_{n} over {f}", H.mu_n(n, f)) for n in range(1, 9) for f in FIELDS]
    out += [(f"alpha_{p}", H.alpha_p(GF(p))) for p in (2, 3, 5)]
    return out


def contrast_instances():
    out = []
    for p in (2, 3, 5):
        out.append((f"mu_{p} over GF({p})", H.mu_n(p, GF(p))))
        out.append((f"Z/{p} over GF({p})", H.constant_group_scheme(abelian_group([p]), GF(p))))
    return out


def all_instances():
    return [(n, A) for n, _, A in maschke_instances()] + extra_instances() + contrast_instances()


def criterion_1():
    cases = maschke_instances()
    bad = [name for name, m, A in cases if is_linearly_reductive(A).reductive != maschke(m, A.field.characteristic)]
    return not bad, f"{len(cases)} cases, {len(bad)} mismatches {bad[:3]}"


def criterion_2():
    cases = [(n, A) for n, _, A in maschke_instances()] + extra_instances()
    bad = [n for n, A in cases if is_linearly_reductive(A).reductive != separability_oracle(convolution_algebra(A))]
    return not bad, f"{len(cases)} instances, {len(bad)} disagreements {bad[:3]}"


def criterion_3():
    lines = []
    ok = True
    for p in (2, 3, 5):
        mu = is_linearly_reductive(H.mu_n(p, GF(p))).reductive
        const = is_linearly_reductive(H.constant_group_scheme(abelian_group([p]), GF(p))).reductive
        ok &= mu and not const
        lines.append(f"p={p}: mu reductive={mu}, Z/p reductive={const}")
    return ok, "; ".join(lines)


def criterion_4():
    reductive = non = 0
    bad = []
    for name, A in all_instances():
        if is_linearly_reductive(A).reductive:
            reductive += 1
            r = verify_parseval(A)
            if not (r.F_after_phi_is_identity and r.phi_after_F_is_identity):
                bad.append(name)
        else:
            non += 1
            try:
                fourier(A, A.unit)
                bad.append(name)
            except NotReductiveError:
                pass
    return not bad, f"{reductive} Parseval checks, {non} refusals, failures {bad[:3]}"


def sign_rep(A, k):
    from itertools import permutations

    def sign(s):
        return (-1) ** sum(1 for i in range(k) for j in range(i + 1, k) if s[i] > s[j])

    return representation_comodule(A, [[[sign(s)]] for s in permutations(range(k))], "sign")


def criterion_5():
    pairs = []
    for f in (QQ, GF(5), GF(7)):
        s3 = H.constant_group_scheme(symmetric_group(3), f)
        z2 = H.constant_group_scheme(abelian_group([2]), f)
        z3 = H.constant_group_scheme(abelian_group([3]), f)
        mu4 = H.mu_n(4, f)
        reg3 = regular_comodule(s3)
        pairs += [("S3", s3, reg3), ("S3", s3, trivial_comodule(s3)), ("S3", s3, sign_rep(s3, 3)),
                  ("S3", s3, tensor_product(sign_rep(s3, 3), sign_rep(s3, 3))),
                  ("S3", s3, tensor_product(reg3, dual_comodule(reg3))),
                  ("Z/2", z2, representation_comodule(z2, [[[1]], [[-1]]], "sign")),
                  ("Z/3", z3, tensor_product(regular_comodule(z3), dual_comodule(regular_comodule(z3)))),
                  ("mu_4", mu4, dual_comodule(regular_comodule(mu4)))]
    bad = []
    for name, A, V in pairs:
        wG = invariant_integral(A).normalized
        lhs = convolution_algebra(A).evaluate(wG, character(V))
        if lhs != A.field(invariants_dim(V)):
            bad.append(f"{name}/{V.name}")
    return not bad and len(pairs) >= 10, f"{len(pairs)} pairs, failures {bad[:3]}"


def criterion_6():
    cases = [("GF(7)[Z/3]", H.constant_group_scheme(abelian_group([3]), GF(7)), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
             ("GF(5)[Z/3]", H.constant_group_scheme(abelian_group([3]), GF(5)), [[1, 0], [0, 2]]),
             ("mu_6 over GF(5)", H.mu_n(6, GF(5)), None), ("mu_6 over GF(7)", H.mu_n(6, GF(7)), None)]
    details, ok = [], True
    for name, A, frozen in cases:
        C = convolution_algebra(A)
        B = split_center(C)
        P = pairing_of_idempotents(B, trace_form_gram(C))
        good = P == expected_pairing(B)
        if frozen is not None:
            good &= P == Matrix.from_rows(C.field, frozen)
        ok &= good
        details.append(f"{name} dims {list(B.block_dims)}")
    return ok, "; ".join(details)


def criterion_7():
    cases = [(n, A) for n, A in all_instances() if A.field.characteristic]
    bad = [n for n, A in cases if dual_group(A).discrete != is_linearly_reductive(A).reductive]
    return not bad, f"{len(cases)} instances over prime fields, mismatches {bad[:3]}"


def criterion_8():
    rnd = random.Random(20241016)
    groups = [FinGenAbelianGroup(1), FinGenAbelianGroup(2), FinGenAbelianGroup(0, (6,)), FinGenAbelianGroup(1, (4,))]
    bad = 0
    for t in range(100):
        M = groups[t % 4]
        f = QQ if t % 2 else GF(5)
        mapping = {}
        for _ in range(rnd.randint(0, 6)):
            m = tuple(rnd.randint(-8, 8) for _ in range(M.free_rank)) + tuple(rnd.randrange(d) for d in M.torsion)
            mapping[m] = rnd.randint(-20, 20)
        w = FinSupportFunctional.from_mapping(M, f, mapping)
        a = diag_phi(w)
        if diag_fourier(a) != w or diag_phi(diag_fourier(a)) != a:
            bad += 1
    cross = 0
    for n in (2, 3):
        for f in (QQ, GF(5)):
            M = FinGenAbelianGroup(0, (n,))
            A = finite_hopf_algebra(M, f)
            elems = M.elements()
            same = invariant_integral(A).normalized == tuple(diag_integral(M, f)(m) for m in elems)
            for i, m in enumerate(elems):
                F = diag_fourier(LaurentElement.from_mapping(M, f, {m: 1}))
                same &= fourier(A, A.basis(i)) == tuple(F(k) for k in elems)
            cross += not same
    return bad == 0 and cross == 0, f"100 random functionals, {bad} failures; mu_2/mu_3 cross-checks, {cross} failures"


def structural_failures(A):
    """Names of structural properties that fail on one algebra."""
    failed = []
    if not H.verify_hopf_axioms(A).ok:
        failed.append("hopf axioms")
    C = convolution_algebra(A)
    G = trace_form_gram(C).entries
    if G != G.T:
        failed.append("gram symmetry")
    if varphi_matrix(C) != phi_matrix(C).T:
        failed.append("polarity transpose")
    n = C.dim
    vphi = [polarity_varphi(C, C.basis(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = polarity_varphi(C, C.multiply(C.basis(i), C.basis(j)))
            if not lhs == functional_left_action(C, C.basis(i), vphi[j]) == functional_right_action(C, vphi[i],
                                                                                                   C.basis(j)):
                failed.append("varphi bimodule")
                break
    if is_linearly_reductive(A).reductive:
        F = fourier_matrix(A)
        for i in range(n):
            w = C.basis(i)
            for j in range(n):
                a = A.basis(j)
                if F.apply(left_action_on_A(A, w, a)) != C.multiply(w, F.column(j)) or \
                        F.apply(right_action_on_A(A, a, w)) != C.multiply(F.column(j), w):
                    failed.append("fourier bimodule")
                    break
        for V in (regular_comodule(A), trivial_comodule(A), dual_comodule(regular_comodule(A))):
            R = reynolds_matrix(V)
            if R @ R != R:
                failed.append("reynolds idempotence")
            for j in range(V.dim):
                v = R.column(j)
                coact = {}
                for i, x in enumerate(v):
                    for jj, k, c in V.nz[i]:
                        coact[jj, k] = coact.get((jj, k), 0) + x * c
                fixed = {(i, k): x * u for i, x in enumerate(v) if x for k, u in enumerate(A.unit) if u}
                if {key: c for key, c in coact.items() if c} != fixed:
                    failed.append("reynolds coinvariance")
                    break
    return sorted(set(failed))


def criterion_9():
    bad = {name: fails for name, A in FAMILY if (fails := structural_failures(A))}
    return not bad, f"{len(FAMILY)} algebras, failures {bad}"


CRITERIA = {
    1: ("Maschke sweep", criterion_1),
    2: ("trace form vs separability oracle", criterion_2),
    3: ("Cartier contrast pair", criterion_3),
    4: ("Parseval / Fourier refusal", criterion_4),
    5: ("dimension formula for invariants", criterion_5),
    6: ("block pairing", criterion_6),
    7: ("discrete dual group iff reductive", criterion_7),
    8: ("diagonalizable Parseval", criterion_8),
    9: ("structural property suites", criterion_9),
}


def run_criterion(k):
    title, fn = CRITERIA[k]
    ok, detail = fn()
    line = f"criterion {k} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, line = run_criterion(k)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k)[0] for k in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
