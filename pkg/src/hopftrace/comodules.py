"""Finite-dimensional representations as A-comodules.

``coaction[i][j][k]`` is the coefficient of e_j (x) a_k in rho(e_i), where the
a_k are the basis of A.  The A*-module structure is derived from the
coaction: ``w . v = (id (x) w) rho(v)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .hopf import AxiomReport, FiniteHopfAlgebra, grouplike_elements_ok
from .linalg import Matrix, nullspace_sparse, rank


class ComoduleAxiomError(ValueError):
    def __init__(self, report: AxiomReport):
        super().__init__(f"comodule axioms fail: {', '.join(report.failures)}")
        self.report = report


@dataclass(frozen=True, eq=False)
class Comodule:
    algebra: FiniteHopfAlgebra
    coaction: tuple
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.coaction)

    @cached_property
    def nz(self) -> list:
        """``i -> [(j, k, coeff)]``."""
        return [[(j, k, c) for j, row in enumerate(plane) for k, c in enumerate(row) if c]
                for plane in self.coaction]

    def matrix_coefficient(self, i: int, j: int) -> tuple:
        """r_ij in A: the coefficient of e_i in rho(e_j)."""
        return tuple(self.coaction[j][i])


def make_comodule(A: FiniteHopfAlgebra, coaction, name: str = "", verify: bool = True) -> Comodule:
    f = A.field
    t = tuple(tuple(tuple(f(x) for x in row) for row in plane) for plane in coaction)
    v = len(t)
    if v == 0 or any(len(p) != v or any(len(r) != A.dim for r in p) for p in t):
        raise ValueError(f"coaction must be a {v}x{v}x{A.dim} tensor")
    V = Comodule(A, t, name)
    if verify:
        report = verify_comodule(V)
        if not report.ok:
            raise ComoduleAxiomError(report)
    return V


def _dense(A, v, entries: dict) -> tuple:
    zero = A.field.zero
    out = [[[zero] * A.dim for _ in range(v)] for _ in range(v)]
    for (i, j, k), c in entries.items():
        out[i][j][k] = A.field(c)
    return tuple(tuple(tuple(r) for r in p) for p in out)


def verify_comodule(V: Comodule) -> AxiomReport:
    A = V.algebra
    ok_counit = True
    for i in range(V.dim):
        acc = defaultdict(int)
        for j, k, c in V.nz[i]:
            acc[j] += c * A.counit[k]
        if {j: x for j, x in acc.items() if x} != {i: 1}:
            ok_counit = False
            break
    ok_coassoc = True
    for i in range(V.dim):
        lhs = defaultdict(int)
        for j, k, c in V.nz[i]:
            for l, m, d in V.nz[j]:
                lhs[l, m, k] += c * d
        rhs = defaultdict(int)
        for l, k, c in V.nz[i]:
            for m, nn, d in A.comult_nz[k]:
                rhs[l, m, nn] += c * d
        if {x: y for x, y in lhs.items() if y} != {x: y for x, y in rhs.items() if y}:
            ok_coassoc = False
            break
    return AxiomReport({"counit": ok_counit, "coassociativity": ok_coassoc})


def astar_action(V: Comodule, w: Sequence, v: Sequence) -> tuple:
    A = V.algebra
    if len(w) != A.dim or len(v) != V.dim:
        raise ValueError("dimension mismatch in A*-action")
    f = A.field
    out = [f.zero] * V.dim
    for i, x in enumerate(v):
        if x:
            for j, k, c in V.nz[i]:
                if w[k]:
                    out[j] += x * c * w[k]
    return tuple(out)


def action_matrix(V: Comodule, w: Sequence) -> Matrix:
    cols = [astar_action(V, w, tuple(V.algebra.field.one if j == i else V.algebra.field.zero
                                     for j in range(V.dim))) for i in range(V.dim)]
    return Matrix.from_columns(V.algebra.field, cols)


def character(V: Comodule) -> tuple:
    """Partial trace of the coaction: chi = sum_i r_ii."""
    A = V.algebra
    f = A.field
    chi = [f.zero] * A.dim
    for i in range(V.dim):
        for k, c in enumerate(V.coaction[i][i]):
            if c:
                chi[k] += c
    return tuple(chi)


def trivial_comodule(A: FiniteHopfAlgebra, dim: int = 1) -> Comodule:
    entries = {(i, i, k): u for i in range(dim) for k, u in enumerate(A.unit) if u}
    return Comodule(A, _dense(A, dim, entries), "trivial" if dim == 1 else f"trivial^{dim}")


def regular_comodule(A: FiniteHopfAlgebra) -> Comodule:
    return Comodule(A, A.comult, "regular")


def one_dimensional_comodule(A: FiniteHopfAlgebra, grouplike: Sequence, name: str = "") -> Comodule:
    """rho(v) = v (x) g for a grouplike element g of A."""
    g = tuple(A.field(x) for x in grouplike)
    if not grouplike_elements_ok(A, g):
        raise ValueError("element is not grouplike")
    return Comodule(A, (( g,),), name or "one-dimensional")


def representation_comodule(A: FiniteHopfAlgebra, matrices: Sequence[Sequence[Sequence]], name: str = "",
                            verify: bool = True) -> Comodule:
    """Comodule over a constant group scheme from matrices rho(g), one per group element.

    rho(e_j) = sum_i e_i (x) sum_g rho(g)[i][j] delta_g.
    """
    f = A.field
    if len(matrices) != A.dim:
        raise ValueError("need one matrix per group element")
    v = len(matrices[0])
    entries = {}
    for g, M in enumerate(matrices):
        for i in range(v):
            for j in range(v):
                x = f(M[i][j])
                if x:
                    entries[j, i, g] = x
    return make_comodule(A, _dense(A, v, entries), name, verify=verify)


def direct_sum(V: Comodule, W: Comodule) -> Comodule:
    _same(V, W)
    A = V.algebra
    entries = {}
    for i in range(V.dim):
        for j, k, c in V.nz[i]:
            entries[i, j, k] = c
    off = V.dim
    for i in range(W.dim):
        for j, k, c in W.nz[i]:
            entries[off + i, off + j, k] = c
    return Comodule(A, _dense(A, V.dim + W.dim, entries), f"({V.name}+{W.name})")


def tensor_product(V: Comodule, W: Comodule) -> Comodule:
    """rho(v (x) w) = v_0 (x) w_0 (x) v_1 w_1; pair (i, k) has index i*dim(W) + k."""
    _same(V, W)
    A = V.algebra
    m = W.dim
    entries = defaultdict(int)
    for i in range(V.dim):
        for j, a, c in V.nz[i]:
            for k in range(m):
                for l, b, d in W.nz[k]:
                    for t, e in A.mult_nz.get((a, b), ()):
                        entries[i * m + k, j * m + l, t] += c * d * e
    return Comodule(A, _dense(A, V.dim * m, entries), f"({V.name}x{W.name})")


def dual_comodule(V: Comodule) -> Comodule:
    """Contragredient: matrix coefficients r*_ij = S(r_ji)."""
    A = V.algebra
    entries = {}
    for i in range(V.dim):
        for j in range(V.dim):
            s = A.apply_antipode(V.matrix_coefficient(j, i))
            for k, x in enumerate(s):
                if x:
                    entries[j, i, k] = x
    return Comodule(A, _dense(A, V.dim, entries), f"{V.name}*")


def _same(V: Comodule, W: Comodule):
    if V.algebra is not W.algebra and V.algebra != W.algebra:
        raise ValueError("comodules over different Hopf algebras")


def invariants_basis(V: Comodule) -> list[tuple]:
    """Basis of {v : rho(v) = v (x) 1}."""
    A = V.algebra
    rows = defaultdict(dict)
    for i in range(V.dim):
        for j, k, c in V.nz[i]:
            rows[j, k][i] = rows[j, k].get(i, 0) + c
        for k, u in enumerate(A.unit):
            if u:
                rows[i, k][i] = rows[i, k].get(i, 0) - u
    return nullspace_sparse(A.field, rows.values(), V.dim)


def invariants_dim(V: Comodule) -> int:
    return len(invariants_basis(V))


def reynolds_matrix(V: Comodule) -> Matrix:
    from .integral import require_integral

    return action_matrix(V, require_integral(V.algebra))


def reynolds_rank(V: Comodule) -> int:
    return rank(reynolds_matrix(V))
