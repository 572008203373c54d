from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopftrace.fields import GF, QQ
from hopftrace.linalg import Matrix, determinant, in_span, kron, nullspace, rank, rref, row_space, solve_linear

fields = st.sampled_from([QQ, GF(2), GF(3), GF(7)])


@st.composite
def matrices(draw, max_side=6):
    f = draw(fields)
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    rows = draw(st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(f, rows, c)


def naive_rank(m: Matrix) -> int:
    """Textbook elimination on a copy, reducing mod p by hand for prime fields."""
    p = m.field.characteristic
    rows = [[int(x) % p if p else Fraction(x) for x in r] for r in m.rows]
    rk = 0
    for col in range(m.ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = 1 / rows[rk][col] if not p else pow(rows[rk][col], -1, p)
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                fct = rows[i][col] * inv
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[rk])]
                if p:
                    rows[i] = [a % p for a in rows[i]]
        rk += 1
    return rk


def test_rank_examples():
    assert rank(Matrix.identity(QQ, 3)) == 3
    assert rank(Matrix.from_rows(GF(2), [[2, 0], [0, 2]])) == 0
    assert rank(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) == 1


def test_nullspace_examples():
    assert nullspace(Matrix.identity(QQ, 3)) == []
    assert len(nullspace(Matrix.zeros(QQ, 2, 2))) == 2
    (v,) = nullspace(Matrix.from_rows(QQ, [[1, 1], [1, 1]]))
    assert v[0] == -v[1] != 0


def test_solve_examples():
    assert solve_linear(Matrix.identity(QQ, 2), [5, 7]) == (5, 7)
    (a, b) = solve_linear(Matrix.from_rows(QQ, [[1, 1]]), [2])
    assert a + b == 2
    assert solve_linear(Matrix.from_rows(QQ, [[1], [1]]), [1, 2]) is None
    with pytest.raises(ValueError):
        solve_linear(Matrix.identity(QQ, 2), [1])


def test_kron_examples():
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)).is_identity()
    k = kron(Matrix.from_rows(QQ, [[0, 1], [1, 0]]), Matrix.from_rows(QQ, [[2]]))
    assert k.rows == ((0, 2), (2, 0))
    a = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    b = Matrix.from_rows(QQ, [[1, 0], [1, 1]])
    k = kron(a, b)
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for s in range(2):
                    assert k[i * 2 + r, j * 2 + s] == a[i, j] * b[r, s]
    assert k.rows == ((1, 0, 1, 0), (1, 1, 1, 1), (0, 0, 1, 0), (0, 0, 1, 1))
    with pytest.raises(ValueError):
        kron(a, Matrix.identity(GF(2), 1))


def test_big_rationals_do_not_overflow():
    n = 12
    hilbert = Matrix.from_rows(QQ, [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    assert rank(hilbert) == n
    d = determinant(hilbert)
    assert d.denominator > 2**64 and d.numerator == 1


def test_determinant_small():
    assert determinant(Matrix.from_rows(QQ, [[1, 2], [3, 4]])) == -2
    assert determinant(Matrix.from_rows(GF(5), [[1, 2], [3, 4]])) == 3


def test_rref_pivots_first_nonzero_column():
    r, piv = rref(Matrix.from_rows(QQ, [[0, 2, 4], [0, 1, 3]]))
    assert piv == (1, 2)
    assert r.rows[0] == (0, 1, 0)


@given(matrices())
def test_rank_nullity(m):
    ns = nullspace(m)
    assert rank(m) + len(ns) == m.ncols
    for v in ns:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
def test_rank_matches_naive_elimination(m):
    assert rank(m) == naive_rank(m)


@given(matrices(), st.randoms(use_true_random=False))
def test_rank_row_permutation_invariant(m, rnd):
    rows = list(m.rows)
    rnd.shuffle(rows)
    assert rank(Matrix.from_rows(m.field, rows, m.ncols)) == rank(m)


@given(matrices(), st.data())
def test_solve_by_substitution(m, data):
    rhs = data.draw(st.lists(st.integers(-5, 5), min_size=m.nrows, max_size=m.nrows))
    sol = solve_linear(m, rhs)
    if sol is None:
        aug = Matrix.from_rows(m.field, [list(r) + [b] for r, b in zip(m.rows, rhs)], m.ncols + 1)
        assert rank(aug) == rank(m) + 1
    else:
        assert m.apply(sol) == tuple(m.field(b) for b in rhs)


@given(matrices())
def test_row_space_spans_rows(m):
    basis = row_space(m.field, m.rows, m.ncols)
    assert len(basis) == rank(m)
    assert all(in_span(m.field, basis, r) for r in m.rows)


@given(matrices(max_side=4))
def test_square_determinant_vs_rank(m):
    if m.nrows == m.ncols:
        assert (determinant(m) != 0) == (rank(m) == m.ncols)
