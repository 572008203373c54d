"""Dense exact linear algebra over Q and GF(p).

Rank over Q uses fraction-free (Bareiss) elimination on an integer copy of
the matrix.  Kernels and solutions go through the reduced row echelon form,
built one row at a time so that the tall, sparse systems coming out of the
Hopf-algebra code stay cheap.  Pivots are always the first nonzero column.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .fields import Field

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; ``rows`` is a tuple of equal-length tuples."""

    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, rows, ncols)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int | None = None) -> Matrix:
        if not cols:
            return cls(field, tuple(() for _ in range(nrows or 0)), 0)
        return cls.from_rows(field, zip(*cols), len(cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        one, zero = field.one, field.zero
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        zero = field.zero
        return cls(field, tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> tuple:
        """Row-major flat sequence of entries."""
        return tuple(x for r in self.rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)),
                      self.nrows)

    def _check_same(self, other: Matrix):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                      self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                      self.ncols)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix(self.field, tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check_same(other)
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.T.rows
            zero = self.field.zero
            return Matrix(self.field,
                          tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols)
                                for r in self.rows),
                          other.ncols)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.ncols} columns")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), zero) for r in self.rows)

    def trace(self):
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), self.field.zero)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) if self.field.characteristic == 0 else str(x.v) for x in r)
                         for r in self.rows)
        return f"Matrix[{self.field}]({self.nrows}x{self.ncols}: {body})"


def _raw(field: Field, x):
    """Field element -> Fraction (Q) or int residue (GF(p)) for the inner loops."""
    return x if field.characteristic == 0 else x.v


def _rref_sparse(p: int, rows: Iterable[dict], ncols: int) -> dict[int, dict]:
    """Reduced row echelon form of the span of ``rows``.

    Rows are sparse dicts ``col -> value`` with Fraction (p == 0) or int
    residues.  Returns ``pivot_col -> normalized row``; every stored row is
    zero on the other pivot columns.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        if p:
            r = {c: v % p for c, v in row.items() if v % p}
        else:
            r = {c: Fraction(v) for c, v in row.items() if v}
        for c in [c for c in r if c in pivots]:
            coef = r.get(c)
            if not coef:
                continue
            for cc, vv in pivots[c].items():
                nv = r.get(cc, 0) - coef * vv
                if p:
                    nv %= p
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        if not r:
            continue
        lead = min(r)
        inv = pow(r[lead], -1, p) if p else 1 / r[lead]
        r = {c: (v * inv) % p if p else v * inv for c, v in r.items()}
        for prow in pivots.values():
            coef = prow.get(lead)
            if coef:
                for cc, vv in r.items():
                    nv = prow.get(cc, 0) - coef * vv
                    if p:
                        nv %= p
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        pivots[lead] = r
    return dict(sorted(pivots.items()))


def _sparse_rows(m: Matrix) -> list[dict]:
    f = m.field
    return [{j: _raw(f, x) for j, x in enumerate(r) if x} for r in m.rows]


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and the pivot columns."""
    piv = _rref_sparse(m.field.characteristic, _sparse_rows(m), m.ncols)
    f = m.field
    rows = tuple(tuple(f(r.get(j, 0)) for j in range(m.ncols)) for r in piv.values())
    return Matrix(f, rows, m.ncols), tuple(piv)


def _bareiss_rank(int_rows: list[list[int]], ncols: int) -> int:
    M = [list(r) for r in int_rows]
    nrows = len(M)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        pc = pr[c]
        for i in range(r + 1, nrows):
            row = M[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pc * row[j] - a * pr[j]) // prev
            row[c] = 0
        prev = pc
        r += 1
    return r


def _integer_rows(m: Matrix) -> list[list[int]]:
    out = []
    for r in m.rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def rank(m: Matrix) -> int:
    """Exact rank over the matrix's field."""
    if m.field.characteristic == 0:
        return _bareiss_rank(_integer_rows(m), m.ncols)
    return len(_rref_sparse(m.field.characteristic, _sparse_rows(m), m.ncols))


def determinant(m: Matrix):
    """Determinant by Bareiss elimination over Q, Gaussian elimination over GF(p)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return f.one
    if f.characteristic:
        p = f.characteristic
        M = [[x.v for x in r] for r in m.rows]
        det = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c]), None)
            if piv is None:
                return f.zero
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = -det
            det = det * M[c][c] % p
            inv = pow(M[c][c], -1, p)
            for i in range(c + 1, n):
                a = M[i][c] * inv % p
                if a:
                    M[i] = [(x - a * y) % p for x, y in zip(M[i], M[c])]
        return f(det)
    scale = 1
    M = []
    for r in m.rows:
        den = lcm(*(x.denominator for x in r))
        scale *= den
        M.append([int(x * den) for x in r])
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return f.zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                M[i][j] = (M[c][c] * M[i][j] - M[i][c] * M[c][j]) // prev
            M[i][c] = 0
        prev = M[c][c]
    return f(Fraction(sign * M[n - 1][n - 1], scale))


def _kernel_from_pivots(field: Field, piv: dict[int, dict], ncols: int) -> list[Vector]:
    basis = []
    for free in range(ncols):
        if free in piv:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for pc, row in piv.items():
            x = row.get(free)
            if x:
                v[pc] = -field(x)
        basis.append(tuple(v))
    return basis


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of the right kernel, one vector per non-pivot column."""
    piv = _rref_sparse(m.field.characteristic, _sparse_rows(m), m.ncols)
    return _kernel_from_pivots(m.field, piv, m.ncols)


def nullspace_sparse(field: Field, rows: Iterable[dict], ncols: int) -> list[Vector]:
    """Like :func:`nullspace` for a system given as sparse rows ``col -> scalar``."""
    p = field.characteristic
    piv = _rref_sparse(p, ({c: _raw(field, field(v)) for c, v in r.items()} for r in rows), ncols)
    return _kernel_from_pivots(field, piv, ncols)


def solve_sparse(field: Field, rows: Iterable[tuple[dict, object]], ncols: int) -> Vector | None:
    """Solve a system of sparse equations ``(row, rhs)``; ``None`` when inconsistent.

    Free variables are set to zero.
    """
    p = field.characteristic

    def augmented():
        for r, b in rows:
            d = {c: _raw(field, field(v)) for c, v in r.items()}
            b = field(b)
            if b:
                d[ncols] = _raw(field, b)
            yield d

    piv = _rref_sparse(p, augmented(), ncols + 1)
    if ncols in piv:
        return None
    x = [field.zero] * ncols
    for pc, row in piv.items():
        x[pc] = field(row.get(ncols, 0))
    return tuple(x)


def solve_linear(m: Matrix, rhs: Sequence) -> Vector | None:
    """One exact solution of ``m @ x = rhs``, or ``None`` if the system is inconsistent."""
    if len(rhs) != m.nrows:
        raise ValueError(f"rhs has length {len(rhs)}, matrix has {m.nrows} rows")
    f = m.field
    eqs = (({j: x for j, x in enumerate(r) if x}, b) for r, b in zip(m.rows, rhs))
    return solve_sparse(f, eqs, m.ncols)


def row_space(field: Field, vectors: Iterable[Sequence], ncols: int) -> list[Vector]:
    """RREF basis of the span of ``vectors``."""
    p = field.characteristic
    piv = _rref_sparse(p, ({j: _raw(field, field(x)) for j, x in enumerate(v) if x} for v in vectors), ncols)
    return [tuple(field(r.get(j, 0)) for j in range(ncols)) for r in piv.values()]


def in_span(field: Field, basis: Sequence[Sequence], v: Sequence) -> bool:
    return len(row_space(field, list(basis) + [v], len(v))) == len(row_space(field, basis, len(v)))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; entry ``(i*b.nrows + k, j*b.ncols + l)`` is ``a[i,j]*b[k,l]``."""
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix(a.field, tuple(rows), a.ncols * b.ncols)

