"""Diagonalizable group schemes Spec K[M] for a finitely generated abelian group M.

A = K[M] has basis x^m (m in M), every x^m grouplike.  A* = prod_M K with the
componentwise product, and the finite-orbit ideal is the finite-support part
sum_M K.  Only two shapes of functionals are materialized: finite support,
and constant outside a finite set (enough for the unit of A*).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .fields import Field
from .hopf import FiniteHopfAlgebra, mu_n, product
from .linalg import Matrix, rank


def _prime_powers(d: int) -> dict[int, int]:
    out = {}
    q = 2
    while q * q <= d:
        while d % q == 0:
            out[q] = out.get(q, 0) + 1
            d //= q
        q += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def invariant_factors(torsion: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... (each >= 2) of prod Z/d."""
    by_prime = defaultdict(list)
    for d in torsion:
        if d < 1:
            raise ValueError(f"torsion orders must be positive, got {d}")
        for q, e in _prime_powers(d).items():
            by_prime[q].append(q**e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for q, pows in by_prime.items():
        pows.sort(reverse=True)
        for i, x in enumerate(pows):
            factors[i] *= x
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FinGenAbelianGroup:
    """Z^free_rank x Z/d1 x ... x Z/dk in invariant-factor normal form."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        normal = invariant_factors(self.torsion)
        object.__setattr__(self, "torsion", normal)

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def element(self, coords: Sequence[int]) -> tuple:
        if len(coords) != self.rank:
            raise ValueError(f"element needs {self.rank} coordinates, got {len(coords)}")
        r = self.free_rank
        return tuple(int(c) for c in coords[:r]) + tuple(int(c) % d for c, d in zip(coords[r:], self.torsion))

    @property
    def identity(self) -> tuple:
        return (0,) * self.rank

    def add(self, a, b) -> tuple:
        return self.element([x + y for x, y in zip(a, b)])

    def neg(self, a) -> tuple:
        return self.element([-x for x in a])

    def elements(self) -> list[tuple]:
        """All elements of a finite M, in lexicographic order."""
        if not self.is_finite:
            raise ValueError("infinite group")
        from itertools import product as cartesian

        return [tuple(t) for t in cartesian(*(range(d) for d in self.torsion))] if self.torsion else [()]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def _items(group, field, mapping: Mapping) -> tuple:
    vals = {}
    for m, v in mapping.items():
        m = group.element(m)
        vals[m] = vals.get(m, field.zero) + field(v)
    return tuple(sorted((m, v) for m, v in vals.items() if v))


@dataclass(frozen=True)
class FinSupportFunctional:
    group: FinGenAbelianGroup
    field: Field
    support: tuple  # sorted ((element, nonzero value), ...)

    @classmethod
    def from_mapping(cls, group, field, mapping: Mapping) -> FinSupportFunctional:
        return cls(group, field, _items(group, field, mapping))

    @classmethod
    def indicator(cls, group, field, m, value=1) -> FinSupportFunctional:
        return cls.from_mapping(group, field, {tuple(m): value})

    def __call__(self, m):
        return dict(self.support).get(self.group.element(m), self.field.zero)

    def as_dict(self) -> dict:
        return dict(self.support)

    def __add__(self, other: FinSupportFunctional) -> FinSupportFunctional:
        _same(self, other)
        d = self.as_dict()
        for m, v in other.support:
            d[m] = d.get(m, self.field.zero) + v
        return FinSupportFunctional.from_mapping(self.group, self.field, d)

    def scale(self, c) -> FinSupportFunctional:
        c = self.field(c)
        return FinSupportFunctional.from_mapping(self.group, self.field, {m: c * v for m, v in self.support})


@dataclass(frozen=True)
class CofiniteFunctional:
    """Functional equal to ``default`` outside a finite set of exceptions."""

    group: FinGenAbelianGroup
    field: Field
    default: object
    exceptions: tuple = ()

    def __call__(self, m):
        m = self.group.element(m)
        return dict(self.exceptions).get(m, self.default)


@dataclass(frozen=True)
class LaurentElement:
    """sum_m a_m x^m in K[M]."""

    group: FinGenAbelianGroup
    field: Field
    coeffs: tuple

    @classmethod
    def from_mapping(cls, group, field, mapping: Mapping) -> LaurentElement:
        return cls(group, field, _items(group, field, mapping))

    def coefficient(self, m):
        return dict(self.coeffs).get(self.group.element(m), self.field.zero)

    def as_dict(self) -> dict:
        return dict(self.coeffs)


def _same(u, v):
    if u.group != v.group or u.field != v.field:
        raise ValueError("functionals over different groups or fields")


def diag_unit(group: FinGenAbelianGroup, field: Field) -> CofiniteFunctional:
    """Unit of A* (= counit of A): the constant functional 1."""
    return CofiniteFunctional(group, field, field.one)


def _finite_points(w) -> list:
    if isinstance(w, FinSupportFunctional):
        return [m for m, _ in w.support]
    return [m for m, _ in w.exceptions]


def diag_convolve(u, v):
    """Product in A* = prod_M K, which is componentwise."""
    _same(u, v)
    f = u.field
    if isinstance(u, CofiniteFunctional) and isinstance(v, CofiniteFunctional):
        pts = sorted(set(_finite_points(u)) | set(_finite_points(v)))
        return CofiniteFunctional(u.group, f, u.default * v.default,
                                  tuple((m, u(m) * v(m)) for m in pts if u(m) * v(m) != u.default * v.default))
    pts = _finite_points(u) if isinstance(u, FinSupportFunctional) else _finite_points(v)
    if isinstance(u, FinSupportFunctional) and isinstance(v, FinSupportFunctional):
        pts = sorted(set(_finite_points(u)) & set(_finite_points(v)))
    return FinSupportFunctional.from_mapping(u.group, f, {m: u(m) * v(m) for m in pts})


def diag_trace_pair(w, wt: FinSupportFunctional):
    """<w, w~> = sum over supp(w~) of w(m) w~(m); every block is one-dimensional."""
    _same(w, wt)
    return sum((w(m) * v for m, v in wt.support), wt.field.zero)


def diag_phi(wt: FinSupportFunctional) -> LaurentElement:
    """The polarity: (a_m) |-> sum_m a_m x^m."""
    return LaurentElement(wt.group, wt.field, wt.support)


def diag_integral(group: FinGenAbelianGroup, field: Field) -> FinSupportFunctional:
    return FinSupportFunctional.indicator(group, field, group.identity)


def diag_star(a: LaurentElement) -> LaurentElement:
    """x^m |-> x^{-m}."""
    return LaurentElement.from_mapping(a.group, a.field, {a.group.neg(m): v for m, v in a.coeffs})


def laurent_mul(a: LaurentElement, b: LaurentElement) -> LaurentElement:
    _same(a, b)
    out = {}
    for m, x in a.coeffs:
        for n, y in b.coeffs:
            k = a.group.add(m, n)
            out[k] = out.get(k, a.field.zero) + x * y
    return LaurentElement.from_mapping(a.group, a.field, out)


def diag_evaluate(w, a: LaurentElement):
    """w(a) for w in A* and a in A."""
    _same(w, a)
    return sum((w(m) * v for m, v in a.coeffs), a.field.zero)


def diag_fourier(a: LaurentElement) -> FinSupportFunctional:
    """F(a) = w_G(a* . -); the value at x^m is w_G(a* x^m), nonzero only for m in supp(a)."""
    wG = diag_integral(a.group, a.field)
    astar = diag_star(a)
    values = {}
    for m, _ in a.coeffs:
        xm = LaurentElement.from_mapping(a.group, a.field, {m: 1})
        values[m] = diag_evaluate(wG, laurent_mul(astar, xm))
    return FinSupportFunctional.from_mapping(a.group, a.field, values)


def is_invariant_integral(wG: FinSupportFunctional, w) -> bool:
    """w * w_G == w(1) w_G == w_G * w for one test functional w."""
    one = wG.group.identity
    target = wG.scale(w(one))
    return diag_convolve(w, wG) == target == diag_convolve(wG, w)


def density_witness(group: FinGenAbelianGroup, field: Field, coords: Sequence) -> bool:
    """Projection of A* onto finitely many coordinates is onto already from finite-support functionals."""
    coords = [group.element(c) for c in coords]
    if len(set(coords)) != len(coords):
        raise ValueError("coordinates must be distinct")
    gens = [FinSupportFunctional.indicator(group, field, m) for m in coords]
    M = Matrix.from_rows(field, [[g(m) for m in coords] for g in gens], len(coords))
    return rank(M) == len(coords)


def finite_hopf_algebra(group: FinGenAbelianGroup, field: Field) -> FiniteHopfAlgebra:
    """K[M] for finite M as a product of mu_d; basis in the order of ``group.elements()``."""
    if not group.is_finite:
        raise ValueError("K[M] is infinite-dimensional for a group with free part")
    A = mu_n(1, field)
    for d in group.torsion:
        A = mu_n(d, field) if A.dim == 1 else product(A, mu_n(d, field))
    return A
