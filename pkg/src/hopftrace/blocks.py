"""Block decomposition of A* over GF(p): central primitive idempotents.

The center is split recursively with Berlekamp's trick: in characteristic p
the Frobenius x -> x^p is linear on the (commutative) center, its fixed
space is spanned by the central primitive idempotents, and any fixed element
not proportional to the current idempotent has eigenvalues in GF(p) that
separate blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dual import ConvolutionAlgebra, GramMatrix, convolution_algebra, left_mult_matrix, separability_oracle
from .fields import Field
from .hopf import FiniteHopfAlgebra
from .linalg import Matrix, in_span, nullspace_sparse, rank, row_space, solve_linear

MAX_SPLIT_PRIME = 10**4


class UnsupportedFieldError(ValueError):
    pass


class NotSemisimpleError(ValueError):
    pass


@dataclass(frozen=True)
class BlockDecomposition:
    idempotents: tuple
    block_dims: tuple
    field: Field

    @property
    def num_blocks(self) -> int:
        return len(self.idempotents)


def center(C: ConvolutionAlgebra) -> list[tuple]:
    """Basis of Z(A*) from the commutator equations [x, w_j] = 0."""
    n = C.dim
    rows = {}
    for (i, j), ks in C.mult_nz.items():
        for k, c in ks:
            # equation (j, k) gets +c on x_i from x*w_j; equation (i, k) gets -c on x_j from w_i*x
            rows.setdefault((j, k), {})
            rows[j, k][i] = rows[j, k].get(i, 0) + c
            rows.setdefault((i, k), {})
            rows[i, k][j] = rows[i, k].get(j, 0) - c
    return nullspace_sparse(C.field, rows.values(), n)


def _berlekamp(C: ConvolutionAlgebra, zbasis: list[tuple]) -> list[tuple]:
    """Basis of {x in span(zbasis) : x^p = x}."""
    p = C.field.characteristic
    n = C.dim
    diffs = [tuple(a - b for a, b in zip(C.power(z, p), z)) for z in zbasis]
    rows = [{i: d[k] for i, d in enumerate(diffs) if d[k]} for k in range(n)]
    coeffs = nullspace_sparse(C.field, rows, len(zbasis))
    f = C.field
    return [tuple(sum((c * z[k] for c, z in zip(cs, zbasis) if c), f.zero) for k in range(n)) for cs in coeffs]


def _min_poly_roots(C: ConvolutionAlgebra, e: tuple, x: tuple) -> list:
    """Roots in GF(p) of the minimal polynomial of x in the algebra with unit e."""
    f = C.field
    p = f.characteristic
    powers = [e]
    while True:
        nxt = C.multiply(powers[-1], x)
        M = Matrix.from_columns(f, powers)
        sol = solve_linear(M, nxt)
        if sol is not None:
            coeffs = [-c for c in sol] + [f.one]  # monic: x^d - sum sol_i x^i
            break
        powers.append(nxt)
    raw = [int(c) for c in coeffs]
    roots = []
    for lam in range(p):
        acc = 0
        for c in reversed(raw):
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(f(lam))
    return roots


def _lagrange_idempotents(C: ConvolutionAlgebra, e: tuple, x: tuple, roots: list) -> list[tuple]:
    out = []
    for lam in roots:
        idem = e
        for mu in roots:
            if mu == lam:
                continue
            factor = tuple((a - mu * b) / (lam - mu) for a, b in zip(x, e))
            idem = C.multiply(idem, factor)
        out.append(idem)
    return out


def split_block(C: ConvolutionAlgebra, e: tuple, zbasis: list[tuple]) -> list[tuple]:
    """Primitive central idempotents below e; ``zbasis`` spans e*Z(A*)."""
    B = _berlekamp(C, zbasis)
    if len(B) <= 1:
        return [e]
    x = next(b for b in B if not in_span(C.field, [e], b))
    roots = _min_poly_roots(C, e, x)
    out = []
    for idem in _lagrange_idempotents(C, e, x, roots):
        sub = row_space(C.field, [C.multiply(idem, z) for z in zbasis], C.dim)
        out.extend(split_block(C, idem, sub))
    return out


def block_dim(C: ConvolutionAlgebra, idem: Sequence) -> int:
    return rank(left_mult_matrix(C, idem))


def _check_splittable(C: ConvolutionAlgebra):
    p = C.field.characteristic
    if p == 0:
        raise UnsupportedFieldError("block decomposition over Q is unsupported (needs rational factorization)")
    if p > MAX_SPLIT_PRIME:
        raise UnsupportedFieldError(f"splitting scans GF(p); p = {p} exceeds the cap {MAX_SPLIT_PRIME}")


def split_center(C: ConvolutionAlgebra) -> BlockDecomposition:
    """Central primitive idempotents of a semisimple A* over GF(p).

    Blocks are listed by increasing dimension, ties broken by idempotent coordinates.
    """
    _check_splittable(C)
    if not separability_oracle(C):
        raise NotSemisimpleError("A* is not semisimple; blocks would describe A*/rad only")
    idems = split_block(C, C.unit, center(C))
    blocks = sorted(((block_dim(C, e), tuple(int(x) for x in e), e) for e in idems), key=lambda t: t[:2])
    return BlockDecomposition(tuple(b[2] for b in blocks), tuple(b[0] for b in blocks), C.field)


def is_primitive(C: ConvolutionAlgebra, idem: Sequence) -> bool:
    """Re-split inside the block of ``idem``; primitive iff exactly one block comes back."""
    _check_splittable(C)
    idem = tuple(idem)
    sub = row_space(C.field, [C.multiply(idem, z) for z in center(C)], C.dim)
    return len(split_block(C, idem, sub)) == 1


def pairing_of_idempotents(B: BlockDecomposition, G: GramMatrix) -> Matrix:
    """Matrix of trace-form pairings <1_i, 1_j>."""
    if B.field != G.entries.field or any(len(e) != G.entries.ncols for e in B.idempotents):
        raise ValueError("decomposition and Gram matrix come from different algebras")
    M = G.entries
    rows = [[sum((a * b for a, b in zip(ei, M.apply(ej)) if a and b), B.field.zero) for ej in B.idempotents]
            for ei in B.idempotents]
    return Matrix.from_rows(B.field, rows, len(B.idempotents))


def expected_pairing(B: BlockDecomposition) -> Matrix:
    """diag(block dims) read in the field."""
    n = B.num_blocks
    return Matrix.from_rows(B.field, [[B.block_dims[i] if i == j else 0 for j in range(n)] for i in range(n)], n)


@dataclass(frozen=True)
class DualGroupSummary:
    discrete: bool
    num_blocks: int | None
    block_dims: tuple


def dual_group(A: FiniteHopfAlgebra) -> DualGroupSummary:
    """Blocks of A* as points of the dual group; discrete iff A* is separable (density is automatic)."""
    C = convolution_algebra(A)
    _check_splittable(C)
    if not separability_oracle(C):
        return DualGroupSummary(False, None, ())
    B = split_center(C)
    return DualGroupSummary(True, B.num_blocks, B.block_dims)
