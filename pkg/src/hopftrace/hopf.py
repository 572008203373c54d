"""Finite commutative Hopf algebras A, i.e. coordinate rings of finite group schemes.

Structure constants are dense basis-indexed tensors:

* ``mult[i][j][k]``   -- e_i * e_j = sum_k mult[i][j][k] e_k
* ``comult[i][j][k]`` -- Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k
* ``unit[i]``         -- coordinates of 1 in A
* ``counit[i]``       -- epsilon(e_i)
* ``antipode``        -- matrix of S, column i holds S(e_i)

Elements of A are coordinate tuples; elements of A (x) A are dicts keyed by
index pairs.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Sequence

from .fields import Field
from .groups import check_group_table
from .linalg import Matrix, kron


class HopfAxiomError(ValueError):
    def __init__(self, report: AxiomReport):
        super().__init__(f"Hopf axioms fail: {', '.join(report.failures)}")
        self.report = report


@dataclass(frozen=True)
class AxiomReport:
    """Pass/fail per named axiom, in check order."""

    results: dict

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def as_dict(self) -> dict:
        return dict(self.results)


def _dense3(field: Field, n: int, entries: dict) -> tuple:
    zero = field.zero
    out = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in entries.items():
        out[i][j][k] = field(v)
    return tuple(tuple(tuple(r) for r in plane) for plane in out)


def _vec(field: Field, n: int, entries: dict) -> tuple:
    v = [field.zero] * n
    for i, x in entries.items():
        v[i] = field(x)
    return tuple(v)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True, eq=False)
class FiniteHopfAlgebra:
    field: Field
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: Matrix
    labels: tuple | None = field(default=None)

    @classmethod
    def from_structure(cls, fld: Field, mult, unit, comult, counit, antipode, labels=None,
                       verify: bool = True) -> FiniteHopfAlgebra:
        """Build from user-supplied structure constants, checking every axiom unless told otherwise."""
        n = len(unit)
        c3 = lambda t: tuple(tuple(tuple(fld(x) for x in r) for r in plane) for plane in t)
        for name, t in (("mult", mult), ("comult", comult)):
            if len(t) != n or any(len(p) != n or any(len(r) != n for r in p) for p in t):
                raise ValueError(f"{name} must be a {n}x{n}x{n} tensor")
        if len(counit) != n:
            raise ValueError("counit length differs from dim")
        S = antipode if isinstance(antipode, Matrix) else Matrix.from_rows(fld, antipode, n)
        if S.shape != (n, n):
            raise ValueError("antipode must be n x n")
        A = cls(fld, c3(mult), tuple(fld(x) for x in unit), c3(comult), tuple(fld(x) for x in counit), S,
                tuple(labels) if labels else None)
        if verify:
            report = verify_hopf_axioms(A)
            if not report.ok:
                raise HopfAxiomError(report)
        return A

    @property
    def dim(self) -> int:
        return len(self.unit)

    def __eq__(self, other):
        if not isinstance(other, FiniteHopfAlgebra):
            return NotImplemented
        return (self.field == other.field and self.mult == other.mult and self.unit == other.unit
                and self.comult == other.comult and self.counit == other.counit
                and self.antipode == other.antipode)

    __hash__ = object.__hash__

    @cached_property
    def mult_nz(self) -> dict:
        """``(i, j) -> [(k, coeff), ...]`` over the nonzero structure constants."""
        out = defaultdict(list)
        for i, plane in enumerate(self.mult):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    if v:
                        out[i, j].append((k, v))
        return dict(out)

    @cached_property
    def comult_nz(self) -> list:
        """``i -> [(j, k, coeff), ...]``."""
        return [[(j, k, v) for j, row in enumerate(plane) for k, v in enumerate(row) if v]
                for plane in self.comult]

    def basis(self, i: int) -> tuple:
        return tuple(self.field.one if j == i else self.field.zero for j in range(self.dim))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def multiply(self, a: Sequence, b: Sequence) -> tuple:
        out = defaultdict(int)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in self.mult_nz.get((i, j), ()):
                    out[k] += xy * c
        return _vec(self.field, self.dim, out)

    def coproduct(self, a: Sequence) -> dict:
        out = defaultdict(int)
        for i, x in enumerate(a):
            if x:
                for j, k, c in self.comult_nz[i]:
                    out[j, k] += x * c
        return _clean(out)

    def apply_counit(self, a: Sequence):
        return sum((x * e for x, e in zip(a, self.counit) if x), self.field.zero)

    def apply_antipode(self, a: Sequence) -> tuple:
        return self.antipode.apply(tuple(a))

    def is_cocommutative(self) -> bool:
        n = self.dim
        return all(self.comult[i][j][k] == self.comult[i][k][j]
                   for i in range(n) for j in range(n) for k in range(j + 1, n))


# --- tensor helpers on sparse elements -------------------------------------------------

def _mul_basis(A: FiniteHopfAlgebra, i: int, j: int):
    return A.mult_nz.get((i, j), ())


def _tensor_mult(A, x: dict, y: dict) -> dict:
    """Product in A (x) A of sparse two-tensors."""
    out = defaultdict(int)
    for (a, b), u in x.items():
        for (c, d), v in y.items():
            uv = u * v
            for s, m1 in _mul_basis(A, a, c):
                for t, m2 in _mul_basis(A, b, d):
                    out[s, t] += uv * m1 * m2
    return _clean(out)


def _as_sparse(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def verify_hopf_axioms(A: FiniteHopfAlgebra) -> AxiomReport:
    """Check every Hopf algebra axiom exactly; the report carries failures instead of raising."""
    n = A.dim
    f = A.field
    unit = _as_sparse(A.unit)
    res = {}

    def prod(x: dict, y: dict) -> dict:
        out = defaultdict(int)
        for i, a in x.items():
            for j, b in y.items():
                for k, c in _mul_basis(A, i, j):
                    out[k] += a * b * c
        return _clean(out)

    ok = True
    for i in range(n):
        for j in range(n):
            ij = prod({i: 1}, {j: 1})
            for k in range(n):
                if prod(ij, {k: 1}) != prod({i: 1}, prod({j: 1}, {k: 1})):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    res["associativity"] = ok

    res["commutativity"] = all(A.mult[i][j] == A.mult[j][i] for i in range(n) for j in range(i + 1, n))
    res["unit"] = all(prod(unit, {i: 1}) == {i: 1} == prod({i: 1}, unit) for i in range(n))

    def delta(x: dict) -> dict:
        out = defaultdict(int)
        for i, a in x.items():
            for j, k, c in A.comult_nz[i]:
                out[j, k] += a * c
        return _clean(out)

    coassoc = True
    for i in range(n):
        left = defaultdict(int)
        right = defaultdict(int)
        for j, k, c in A.comult_nz[i]:
            for a, b, d in A.comult_nz[j]:
                left[a, b, k] += c * d
            for a, b, d in A.comult_nz[k]:
                right[j, a, b] += c * d
        if _clean(left) != _clean(right):
            coassoc = False
            break
    res["coassociativity"] = coassoc

    counit_ok = True
    for i in range(n):
        left = defaultdict(int)
        right = defaultdict(int)
        for j, k, c in A.comult_nz[i]:
            left[k] += A.counit[j] * c
            right[j] += A.counit[k] * c
        if _clean(left) != {i: 1} or _clean(right) != {i: 1}:
            counit_ok = False
            break
    res["counit"] = counit_ok

    compat = delta(unit) == _clean({(a, b): x * y for a, x in unit.items() for b, y in unit.items()})
    compat = compat and A.apply_counit(A.unit) == 1
    for i in range(n):
        if not compat:
            break
        di = delta({i: 1})
        for j in range(n):
            lhs = delta(prod({i: 1}, {j: 1}))
            if lhs != _tensor_mult(A, di, delta({j: 1})):
                compat = False
                break
            e_ij = sum((c * A.counit[k] for k, c in _mul_basis(A, i, j)), f.zero)
            if e_ij != A.counit[i] * A.counit[j]:
                compat = False
                break
    res["bialgebra_compatibility"] = compat

    anti = True
    S = A.antipode
    for i in range(n):
        target = {k: A.counit[i] * u for k, u in unit.items() if A.counit[i] * u}
        left = defaultdict(int)
        right = defaultdict(int)
        for j, k, c in A.comult_nz[i]:
            for a, x in _as_sparse(S.column(j)).items():
                for t, m in _mul_basis(A, a, k):
                    left[t] += c * x * m
            for b, y in _as_sparse(S.column(k)).items():
                for t, m in _mul_basis(A, j, b):
                    right[t] += c * y * m
        if _clean(left) != target or _clean(right) != target:
            anti = False
            break
    res["antipode"] = anti
    res["antipode_involution"] = (S @ S).is_identity()
    return AxiomReport(res)


# --- standard families ---------------------------------------------------------------

def constant_group_scheme(table, fld: Field, labels=None) -> FiniteHopfAlgebra:
    """Functions on a finite group: basis of indicators, pointwise product."""
    e, inv = check_group_table(table)
    n = len(table)
    mult = {(g, g, g): 1 for g in range(n)}
    comult = {(table[a][b], a, b): 1 for a in range(n) for b in range(n)}
    S = Matrix.from_rows(fld, [[1 if inv[j] == i else 0 for j in range(n)] for i in range(n)], n)
    return FiniteHopfAlgebra(
        fld, _dense3(fld, n, mult), _vec(fld, n, {g: 1 for g in range(n)}), _dense3(fld, n, comult),
        _vec(fld, n, {e: 1}), S, tuple(labels) if labels else tuple(f"d{g}" for g in range(n)))


def mu_n(n: int, fld: Field) -> FiniteHopfAlgebra:
    """K[x]/(x^n - 1) with x grouplike."""
    if n < 1:
        raise ValueError("mu_n needs n >= 1")
    mult = {(i, j, (i + j) % n): 1 for i in range(n) for j in range(n)}
    comult = {(i, i, i): 1 for i in range(n)}
    S = Matrix.from_rows(fld, [[1 if (-j) % n == i else 0 for j in range(n)] for i in range(n)], n)
    return FiniteHopfAlgebra(fld, _dense3(fld, n, mult), _vec(fld, n, {0: 1}), _dense3(fld, n, comult),
                             _vec(fld, n, {i: 1 for i in range(n)}), S, tuple(f"x^{i}" for i in range(n)))


def alpha_p(fld: Field) -> FiniteHopfAlgebra:
    """K[x]/(x^p) with x primitive; needs characteristic p > 0."""
    p = fld.characteristic
    if p == 0:
        raise ValueError("alpha_p needs a field of positive characteristic")
    mult = {(i, j, i + j): 1 for i in range(p) for j in range(p) if i + j < p}
    comult = {(k, j, k - j): comb(k, j) for k in range(p) for j in range(k + 1)}
    S = Matrix.from_rows(fld, [[(-1) ** j if i == j else 0 for j in range(p)] for i in range(p)], p)
    return FiniteHopfAlgebra(fld, _dense3(fld, p, mult), _vec(fld, p, {0: 1}), _dense3(fld, p, comult),
                             _vec(fld, p, {0: 1}), S, tuple(f"x^{i}" for i in range(p)))


def product(A: FiniteHopfAlgebra, B: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """Coordinate ring A (x) B of G x H; basis pair (i, k) has index i*dim(B) + k."""
    if A.field != B.field:
        raise ValueError(f"field mismatch: {A.field} vs {B.field}")
    fld = A.field
    m = B.dim
    n = A.dim * m
    mult = defaultdict(int)
    for (i, j), ks in A.mult_nz.items():
        for (k, l), ls in B.mult_nz.items():
            for a, x in ks:
                for b, y in ls:
                    mult[i * m + k, j * m + l, a * m + b] += x * y
    comult = defaultdict(int)
    for i in range(A.dim):
        for k in range(m):
            for j, a, x in A.comult_nz[i]:
                for l, b, y in B.comult_nz[k]:
                    comult[i * m + k, j * m + l, a * m + b] += x * y
    unit = {i * m + k: x * y for i, x in enumerate(A.unit) for k, y in enumerate(B.unit) if x * y}
    counit = {i * m + k: x * y for i, x in enumerate(A.counit) for k, y in enumerate(B.counit) if x * y}
    labels = tuple(f"{A.label(i)}*{B.label(k)}" for i in range(A.dim) for k in range(m))
    return FiniteHopfAlgebra(fld, _dense3(fld, n, mult), _vec(fld, n, unit), _dense3(fld, n, comult),
                             _vec(fld, n, counit), kron(A.antipode, B.antipode), labels)


def cartier_dual(A: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """Dual Hopf algebra on the dual basis; A must be cocommutative."""
    if not A.is_cocommutative():
        raise ValueError("Cartier dual needs a cocommutative Hopf algebra (the dual would not be commutative)")
    n = A.dim
    mult = tuple(tuple(tuple(A.comult[k][i][j] for k in range(n)) for j in range(n)) for i in range(n))
    comult = tuple(tuple(tuple(A.mult[j][k][i] for k in range(n)) for j in range(n)) for i in range(n))
    labels = tuple(f"{A.label(i)}'" for i in range(n))
    return FiniteHopfAlgebra(A.field, mult, A.counit, comult, A.unit, A.antipode.T, labels)


def grouplike_elements_ok(A: FiniteHopfAlgebra, a: Sequence) -> bool:
    """True iff ``a`` is grouplike: Delta(a) = a (x) a and eps(a) = 1."""
    sq = _clean({(i, j): x * y for i, x in enumerate(a) for j, y in enumerate(a) if x and y})
    return A.coproduct(a) == sq and A.apply_counit(a) == 1
