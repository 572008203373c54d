"""Invariant integral, star map, Fourier transform and Reynolds projection."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dual import ConvolutionAlgebra, convolution_algebra, phi_matrix
from .hopf import FiniteHopfAlgebra
from .linalg import Matrix, nullspace_sparse


class NotReductiveError(ValueError):
    """Raised when an operation needs the invariant integral and there is none."""


class IntegralSpaceError(RuntimeError):
    """The space of integrals is not one-dimensional (corrupted structure constants)."""


@dataclass(frozen=True)
class IntegralResult:
    integral_space_dim: int
    normalized: tuple | None
    space: tuple = ()

    @property
    def exists(self) -> bool:
        return self.normalized is not None


def _conv(A) -> ConvolutionAlgebra:
    return A if isinstance(A, ConvolutionAlgebra) else convolution_algebra(A)


def integral_space(A: FiniteHopfAlgebra) -> list[tuple]:
    """Basis of {lam in A* : w*lam = w(1) lam for all w}."""
    C = _conv(A)
    n = C.dim
    one = C.source.unit

    def rows():
        for i in range(n):
            for k in range(n):
                row = {}
                for j, kk, c in C._by_left[i]:
                    if kk == k:
                        row[j] = row.get(j, 0) + c
                if one[i]:
                    row[k] = row.get(k, 0) - one[i]
                row = {j: v for j, v in row.items() if v}
                if row:
                    yield row

    return nullspace_sparse(C.field, rows(), n)


def _is_two_sided_integral(C: ConvolutionAlgebra, lam: Sequence) -> bool:
    one = C.source.unit
    for i in range(C.dim):
        w = C.basis(i)
        target = tuple(one[i] * x for x in lam)
        if C.multiply(w, lam) != target or C.multiply(lam, w) != target:
            return False
    return True


def invariant_integral(A: FiniteHopfAlgebra) -> IntegralResult:
    """Normalized invariant integral w_G when it exists."""
    C = _conv(A)
    space = integral_space(C)
    if len(space) != 1:
        raise IntegralSpaceError(f"integral space has dimension {len(space)}, expected 1")
    lam = space[0]
    at_one = C.evaluate(lam, C.source.unit)
    if not at_one:
        return IntegralResult(1, None, tuple(space))
    wG = tuple(x / at_one for x in lam)
    if not _is_two_sided_integral(C, wG):
        raise IntegralSpaceError("normalized left integral is not right invariant")
    return IntegralResult(1, wG, tuple(space))


def require_integral(A: FiniteHopfAlgebra) -> tuple:
    res = invariant_integral(A)
    if res.normalized is None:
        raise NotReductiveError("no invariant integral: the group scheme is not linearly reductive")
    return res.normalized


def star_map(A: FiniteHopfAlgebra, a: Sequence) -> tuple:
    """a* = S(a), the pullback along inversion."""
    return A.apply_antipode(a)


def fourier_matrix(A: FiniteHopfAlgebra, wG: Sequence | None = None) -> Matrix:
    """Matrix of F: A -> A*, F(a) = w_G(a* . -); column i is F(e_i) in the dual basis."""
    if wG is None:
        wG = require_integral(A)
    n = A.dim
    f = A.field
    cols = []
    for i in range(n):
        s = star_map(A, A.basis(i))
        cols.append(tuple(sum((x * wG[k] for k, x in enumerate(A.multiply(s, A.basis(j))) if x), f.zero)
                          for j in range(n)))
    return Matrix.from_columns(f, cols)


def fourier(A: FiniteHopfAlgebra, a: Sequence) -> tuple:
    if len(a) != A.dim:
        raise ValueError(f"element of length {len(a)} for dim {A.dim}")
    wG = require_integral(A)
    s = star_map(A, a)
    f = A.field
    return tuple(sum((x * wG[k] for k, x in enumerate(A.multiply(s, A.basis(j))) if x), f.zero)
                 for j in range(A.dim))


@dataclass(frozen=True)
class ParsevalReport:
    F_after_phi_is_identity: bool
    phi_after_F_is_identity: bool

    @property
    def ok(self) -> bool:
        return self.F_after_phi_is_identity and self.phi_after_F_is_identity


def verify_parseval(A: FiniteHopfAlgebra) -> ParsevalReport:
    """Compare F . phi and phi . F against the identity, exactly."""
    F = fourier_matrix(A)
    P = phi_matrix(convolution_algebra(A))
    return ParsevalReport((F @ P).is_identity(), (P @ F).is_identity())


def left_action_on_A(A: FiniteHopfAlgebra, w: Sequence, a: Sequence) -> tuple:
    """``w . a = (id (x) w) Delta(a)``: the action dual to right multiplication in A*."""
    f = A.field
    out = [f.zero] * A.dim
    for (j, k), c in A.coproduct(a).items():
        if w[k]:
            out[j] += c * w[k]
    return tuple(out)


def right_action_on_A(A: FiniteHopfAlgebra, a: Sequence, w: Sequence) -> tuple:
    """``a . w = (w (x) id) Delta(a)``."""
    f = A.field
    out = [f.zero] * A.dim
    for (j, k), c in A.coproduct(a).items():
        if w[j]:
            out[k] += c * w[j]
    return tuple(out)


def reynolds(A: FiniteHopfAlgebra, V, v: Sequence) -> tuple:
    """Project v onto the invariants of the comodule V by acting with w_G."""
    from .comodules import astar_action

    if V.algebra is not A and V.algebra != A:
        raise ValueError("comodule over a different Hopf algebra")
    wG = require_integral(A)
    return astar_action(V, wG, v)
