from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import FAMILY
from hopftrace import hopf as H
from hopftrace.dual import (convolution_algebra, functional_left_action, functional_right_action, is_linearly_reductive,
                            left_mult_matrix, phi_matrix, polarity_phi, polarity_varphi, right_mult_matrix,
                            separability_idempotent, separability_oracle, trace, trace_form_gram, varphi_matrix)
from hopftrace.fields import GF, QQ
from hopftrace.groups import cyclic_group, symmetric_group


def z(n, f):
    return H.constant_group_scheme(cyclic_group(n), f)


def test_group_algebra_multiplication():
    table = symmetric_group(3)
    C = convolution_algebra(H.constant_group_scheme(table, QQ))
    for a in range(6):
        for b in range(6):
            assert C.multiply(C.basis(a), C.basis(b)) == C.basis(table[a][b])


def test_mu2_dual_basis_is_orthogonal_idempotents():
    C = convolution_algebra(H.mu_n(2, QQ))
    for i in range(2):
        for j in range(2):
            assert C.multiply(C.basis(i), C.basis(j)) == (C.basis(i) if i == j else (0, 0))


def test_trivial_group_dual():
    A = H.mu_n(1, QQ)
    C = convolution_algebra(A)
    assert C.dim == 1 and C.unit == tuple(A.counit)
    assert trace_form_gram(C).entries.rows == ((1,),)
    assert is_linearly_reductive(A).reductive


def test_unit_is_counit_and_associative(algebra):
    C = convolution_algebra(algebra)
    assert tuple(C.unit) == tuple(algebra.counit)
    n = C.dim
    for i in range(n):
        assert C.multiply(C.unit, C.basis(i)) == C.basis(i) == C.multiply(C.basis(i), C.unit)
        for j in range(n):
            ij = C.multiply(C.basis(i), C.basis(j))
            for k in range(n):
                assert C.multiply(ij, C.basis(k)) == C.multiply(C.basis(i), C.multiply(C.basis(j), C.basis(k)))


def test_left_right_mult_matrices():
    C = convolution_algebra(H.constant_group_scheme(symmetric_group(3), QQ))
    w = tuple(Fraction(i + 1, 3) for i in range(6))
    L, R = left_mult_matrix(C, w), right_mult_matrix(C, w)
    for j in range(6):
        assert L.column(j) == C.multiply(w, C.basis(j))
        assert R.column(j) == C.multiply(C.basis(j), w)
    with pytest.raises(ValueError):
        left_mult_matrix(C, (1, 2))


def test_gram_examples():
    assert trace_form_gram(convolution_algebra(z(2, QQ))).entries.rows == ((2, 0), (0, 2))
    assert trace_form_gram(convolution_algebra(z(2, GF(2)))).entries.is_zero()
    assert trace_form_gram(convolution_algebra(H.mu_n(2, GF(2)))).entries.is_identity()


def test_gram_matches_direct_traces(algebra):
    C = convolution_algebra(algebra)
    G = trace_form_gram(C).entries
    for i in range(C.dim):
        for j in range(C.dim):
            assert G[i, j] == left_mult_matrix(C, C.multiply(C.basis(i), C.basis(j))).trace() == G[j, i]


@pytest.mark.parametrize("f", [QQ, GF(2), GF(5)])
def test_gram_of_group_algebra_oracle(f):
    table = symmetric_group(3)
    G = trace_form_gram(convolution_algebra(H.constant_group_scheme(table, f))).entries
    e = 0
    for a in range(6):
        for b in range(6):
            assert G[a, b] == f(6 if table[a][b] == e else 0)


def test_polarity_examples():
    C = convolution_algebra(z(2, QQ))
    assert polarity_phi(C, (0, 0)) == (0, 0)
    assert polarity_phi(C, C.basis(0)) == (2, 0)
    assert polarity_varphi(C, (0, 0)) == (0, 0)
    C3 = convolution_algebra(z(3, QQ))
    assert polarity_varphi(C3, C3.unit) == (3, 0, 0)
    A = H.mu_n(2, QQ)
    Cm = convolution_algebra(A)
    for i in range(2):
        # the block of 1_i is one-dimensional; its trace character is x^i read in A
        assert polarity_phi(Cm, Cm.basis(i)) == A.basis(i)
    with pytest.raises(ValueError):
        polarity_phi(C, (1,))


def test_polarity_transpose_duality(algebra):
    C = convolution_algebra(algebra)
    assert varphi_matrix(C) == phi_matrix(C).T
    assert phi_matrix(C) == phi_matrix(C).T


def test_varphi_bimodule_law_on_dual_basis(algebra):
    C = convolution_algebra(algebra)
    n = C.dim
    vphi = [polarity_varphi(C, C.basis(i)) for i in range(n)]
    for i in range(n):
        u = C.basis(i)
        for j in range(n):
            v = C.basis(j)
            lhs = polarity_varphi(C, C.multiply(u, v))
            assert lhs == functional_left_action(C, u, vphi[j]) == functional_right_action(C, vphi[i], v)


@given(st.sampled_from(FAMILY), st.data())
def test_varphi_bimodule_law_random(member, data):
    _, A = member
    C = convolution_algebra(A)
    vec = st.lists(st.integers(-3, 3), min_size=C.dim, max_size=C.dim).map(lambda xs: tuple(map(A.field, xs)))
    u, v = data.draw(vec), data.draw(vec)
    lhs = polarity_varphi(C, C.multiply(u, v))
    assert lhs == functional_left_action(C, u, polarity_varphi(C, v))
    assert lhs == functional_right_action(C, polarity_varphi(C, u), v)


def test_trace_of_unit_is_dim():
    C = convolution_algebra(H.constant_group_scheme(symmetric_group(3), QQ))
    assert trace(C, C.unit) == 6


def test_reductivity_examples():
    assert is_linearly_reductive(z(3, QQ)).reductive
    d = is_linearly_reductive(z(2, GF(2)))
    assert not d.reductive and d.gram_rank == 0 and d.corank == 2
    assert is_linearly_reductive(H.mu_n(2, GF(2))).reductive
    assert not is_linearly_reductive(H.cartier_dual(H.mu_n(2, GF(2)))).reductive
    assert "rank(Gram) == dim" in d.note and len(d.criteria) == 3


def test_separability_examples():
    C = convolution_algebra(z(2, QQ))
    e = separability_idempotent(C)
    assert e is not None
    # e = 1/2 (e (x) e + g (x) g) is the unique solution for this commutative algebra
    assert e == (Fraction(1, 2), 0, 0, Fraction(1, 2))
    assert not separability_oracle(convolution_algebra(z(2, GF(2))))
    for p in (2, 3, 5):
        assert not separability_oracle(convolution_algebra(H.alpha_p(GF(p))))


def test_oracle_agreement(algebra):
    assert is_linearly_reductive(algebra).reductive == separability_oracle(convolution_algebra(algebra))


def test_product_functoriality():
    parts = [z(2, GF(3)), z(3, GF(3)), H.mu_n(3, GF(3)), H.alpha_p(GF(3)), z(2, QQ)]
    for a in parts:
        for b in parts:
            if a.field != b.field:
                continue
            expected = is_linearly_reductive(a).reductive and is_linearly_reductive(b).reductive
            assert is_linearly_reductive(H.product(a, b)).reductive == expected
