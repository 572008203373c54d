"""Convolution algebra A*, its trace form, the two polarities, and the reductivity test.

Elements of A* are coordinate tuples in the dual basis ``w_i = e_i^*``.
Functionals on A* (elements of A** = A) are tuples of their values on the
dual basis.  In finite dimension every functional generates a finite
two-sided orbit, so the whole of A* is the ideal the trace form lives on.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .fields import Field
from .hopf import FiniteHopfAlgebra
from .linalg import Matrix, rank, solve_sparse


@dataclass(frozen=True, eq=False)
class ConvolutionAlgebra:
    """A* with ``mult[i][j][k]`` = coefficient of w_k in w_i * w_j = comult[k][i][j] of A."""

    source: FiniteHopfAlgebra
    mult: tuple
    unit: tuple

    @property
    def field(self) -> Field:
        return self.source.field

    @property
    def dim(self) -> int:
        return len(self.unit)

    @cached_property
    def mult_nz(self) -> dict:
        out = defaultdict(list)
        for i, plane in enumerate(self.mult):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    if v:
                        out[i, j].append((k, v))
        return dict(out)

    @cached_property
    def _by_left(self) -> list:
        """``i -> [(j, k, c)]`` nonzero constants with first factor w_i."""
        out = [[] for _ in range(self.dim)]
        for (i, j), ks in self.mult_nz.items():
            out[i].extend((j, k, c) for k, c in ks)
        return out

    def basis(self, i: int) -> tuple:
        return self.source.basis(i)

    def multiply(self, u: Sequence, v: Sequence) -> tuple:
        acc = defaultdict(int)
        nz_v = [(j, y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in nz_v:
                for k, c in self.mult_nz.get((i, j), ()):
                    acc[k] += x * y * c
        f = self.field
        return tuple(f(acc[k]) if k in acc else f.zero for k in range(self.dim))

    def power(self, u: Sequence, e: int) -> tuple:
        result = self.unit
        base = tuple(u)
        while e:
            if e & 1:
                result = self.multiply(result, base)
            e >>= 1
            if e:
                base = self.multiply(base, base)
        return result

    def evaluate(self, w: Sequence, a: Sequence):
        """Pair a functional w in A* with an element a of A."""
        return sum((x * y for x, y in zip(w, a) if x and y), self.field.zero)

    @cached_property
    def trace_vector(self) -> tuple:
        """``t_k`` = trace of left multiplication by w_k."""
        f = self.field
        t = [f.zero] * self.dim
        for (k, j), ks in self.mult_nz.items():
            for kk, c in ks:
                if kk == j:
                    t[k] += c
        return tuple(t)


def convolution_algebra(A: FiniteHopfAlgebra) -> ConvolutionAlgebra:
    n = A.dim
    mult = tuple(tuple(tuple(A.comult[k][i][j] for k in range(n)) for j in range(n)) for i in range(n))
    return ConvolutionAlgebra(A, mult, A.counit)


def _check_len(C: ConvolutionAlgebra, w: Sequence):
    if len(w) != C.dim:
        raise ValueError(f"vector of length {len(w)} for an algebra of dimension {C.dim}")


def left_mult_matrix(C: ConvolutionAlgebra, w: Sequence) -> Matrix:
    """Matrix of ``v -> w*v`` in the dual basis (column j is w*w_j)."""
    _check_len(C, w)
    n = C.dim
    f = C.field
    M = [[f.zero] * n for _ in range(n)]
    for i, x in enumerate(w):
        if x:
            for j, k, c in C._by_left[i]:
                M[k][j] += x * c
    return Matrix(f, tuple(tuple(r) for r in M), n)


def right_mult_matrix(C: ConvolutionAlgebra, w: Sequence) -> Matrix:
    """Matrix of ``v -> v*w``."""
    _check_len(C, w)
    n = C.dim
    f = C.field
    M = [[f.zero] * n for _ in range(n)]
    for (i, j), ks in C.mult_nz.items():
        x = w[j]
        if x:
            for k, c in ks:
                M[k][i] += x * c
    return Matrix(f, tuple(tuple(r) for r in M), n)


def trace(C: ConvolutionAlgebra, w: Sequence):
    """Trace of left multiplication by w on all of A*."""
    _check_len(C, w)
    return sum((x * t for x, t in zip(w, C.trace_vector) if x), C.field.zero)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    algebra: ConvolutionAlgebra
    entries: Matrix

    def __getitem__(self, ij):
        return self.entries[ij]


def trace_form_gram(C: ConvolutionAlgebra) -> GramMatrix:
    """Gram matrix ``<w_i, w_j> = tr(w_i * w_j)``.

    Uses linearity of the trace: tr(w_i w_j) = sum_k c_ijk tr(L_{w_k}).
    """
    n = C.dim
    f = C.field
    t = C.trace_vector
    G = [[f.zero] * n for _ in range(n)]
    for (i, j), ks in C.mult_nz.items():
        G[i][j] = sum((c * t[k] for k, c in ks if t[k]), f.zero)
    return GramMatrix(C, Matrix(f, tuple(tuple(r) for r in G), n))


def phi_matrix(C: ConvolutionAlgebra) -> Matrix:
    """Matrix of the polarity A* -> A, w~ |-> <-, w~>, from dual-basis to A-basis coordinates."""
    return trace_form_gram(C).entries


def varphi_matrix(C: ConvolutionAlgebra) -> Matrix:
    """Matrix of the polarity A* -> (A*)*, w |-> <w, ->, as values on the dual basis."""
    return trace_form_gram(C).entries.T


def polarity_phi(C: ConvolutionAlgebra, wt: Sequence) -> tuple:
    _check_len(C, wt)
    return phi_matrix(C).apply(tuple(wt))


def polarity_varphi(C: ConvolutionAlgebra, w: Sequence) -> tuple:
    _check_len(C, w)
    return varphi_matrix(C).apply(tuple(w))


def functional_left_action(C: ConvolutionAlgebra, c: Sequence, fn: Sequence) -> tuple:
    """``(c . f)(m) = f(m * c)`` for a functional f on A* given by its values on the dual basis."""
    return tuple(C.evaluate(fn, C.multiply(C.basis(j), c)) for j in range(C.dim))


def functional_right_action(C: ConvolutionAlgebra, fn: Sequence, c: Sequence) -> tuple:
    """``(f . c)(m) = f(c * m)``."""
    return tuple(C.evaluate(fn, C.multiply(c, C.basis(j))) for j in range(C.dim))


@dataclass(frozen=True)
class ReductivityDecision:
    reductive: bool
    gram_rank: int
    dim: int
    criteria: tuple = (
        "polarity A* -> A is an isomorphism",
        "trace form non-degenerate on A*",
        "trace form non-degenerate on the finite-orbit ideal, which is dense",
    )
    note: str = ("finite dimension: the finite-orbit ideal is all of A*, so density is automatic and "
                 "all three criteria are the single condition rank(Gram) == dim")

    @property
    def corank(self) -> int:
        return self.dim - self.gram_rank


def is_linearly_reductive(A: FiniteHopfAlgebra) -> ReductivityDecision:
    C = convolution_algebra(A)
    r = rank(trace_form_gram(C).entries)
    return ReductivityDecision(reductive=(r == A.dim), gram_rank=r, dim=A.dim)


def separability_idempotent(C: ConvolutionAlgebra) -> tuple | None:
    """A separability idempotent e in A* (x) A*^op, or ``None`` if none exists.

    Coordinates are indexed ``i*n + j`` for ``w_i (x) w_j``.  Conditions:
    sum e_ij w_i w_j = 1 and (x (x) 1) e = e (1 (x) x) for every basis x.
    """
    n = C.dim
    by_out_left = defaultdict(list)   # (a, s) -> [(i, c)] with w_a w_i having coefficient c on w_s
    by_out_right = defaultdict(list)  # (a, t) -> [(j, c)] with w_j w_a having coefficient c on w_t
    for (i, j), ks in C.mult_nz.items():
        for k, c in ks:
            by_out_left[i, k].append((j, c))
            by_out_right[j, k].append((i, c))

    def equations():
        for k in range(n):
            row = defaultdict(int)
            for (i, j), ks in C.mult_nz.items():
                for kk, c in ks:
                    if kk == k:
                        row[i * n + j] += c
            yield dict(row), C.unit[k]
        for a in range(n):
            for s in range(n):
                left = by_out_left.get((a, s), ())
                for t in range(n):
                    right = by_out_right.get((a, t), ())
                    if not left and not right:
                        continue
                    row = defaultdict(int)
                    for i, c in left:
                        row[i * n + t] += c
                    for j, c in right:
                        row[s * n + j] -= c
                    row = {key: v for key, v in row.items() if v}
                    if row:
                        yield row, 0

    return solve_sparse(C.field, equations(), n * n)


def separability_oracle(C: ConvolutionAlgebra) -> bool:
    """Semisimplicity of A* via solvability of the separability-idempotent system."""
    return separability_idempotent(C) is not None
