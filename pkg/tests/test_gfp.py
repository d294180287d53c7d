"""Field arithmetic, matrix kernels, blow-up and polynomial factoring."""

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from regorb.gfp import (
    factorize,
    field,
    is_prime,
    mult_order,
    poly_mul,
    poly_factor,
)


def mats(p, n, count=1):
    return st.lists(
        st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n),
        min_size=count,
        max_size=count,
    ).map(lambda ms: [np.array(m, dtype=np.int64) for m in ms])


# -- integer helpers ---------------------------------------------------------


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(97)
    assert not is_prime(91)


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    assert factorize(97) == {97: 1}


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(3, 8) == 2
    assert mult_order(3, 4) == 2
    assert mult_order(2, 5) == 4
    with pytest.raises(ValueError):
        mult_order(2, 4)


# -- element arithmetic ------------------------------------------------------


def test_prime_field_basics():
    F = field(5)
    assert F.el_inv(2) == 3
    assert F.el_neg(2) == 3
    assert F.el_add(3, 4) == 2
    assert F.el_mul(3, 4) == 2
    assert F.el_pow(2, 3) == 3


def test_moduli_are_first_in_coefficient_order():
    assert field(2, 2).modulus == (1, 1, 1)  # x^2+x+1
    assert field(3, 2).modulus == (1, 0, 1)  # x^2+1
    assert field(2, 3).modulus == (1, 1, 0, 1)  # x^3+x+1


def test_extension_field_tables_consistent():
    for (p, a) in [(2, 2), (3, 2), (2, 3), (5, 2)]:
        F = field(p, a)
        q = F.q
        for x in range(q):
            assert F.el_add(x, F.el_neg(x)) == 0
            if x:
                assert F.el_mul(x, F.el_inv(x)) == 1
            assert F.el_frob(x) == F.el_pow(x, p)
        # distributivity spot check on all pairs
        for x in range(q):
            for y in range(q):
                assert F.el_mul(x, F.el_add(y, 1)) == F.el_add(F.el_mul(x, y), x)


def test_primitive_elements():
    assert field(3).primitive_element() == 2
    assert field(5).primitive_element() == 2
    assert field(7).primitive_element() == 3
    assert field(3, 2).primitive_element() == 4  # 1 + x has order 8


def test_el_order():
    F = field(7)
    assert F.el_order(3) == 6
    assert F.el_order(2) == 3
    assert F.el_order(6) == 2


def test_root_of_unity():
    assert field(7).root_of_unity(3) == 2
    assert field(13).root_of_unity(3) == 3
    assert field(5).root_of_unity(2) == 4
    # least element of exact order 4 in GF(9) is x itself (code 3)
    assert field(3, 2).root_of_unity(4) == 3
    with pytest.raises(ValueError):
        field(7).root_of_unity(5)


# -- matrices ----------------------------------------------------------------


def test_mat_kernel_example():
    F = field(3)
    g = np.array([[1, 1], [0, 1]])
    M = F.mat_sub(g, F.identity(2))
    assert F.mat_kernel(M).tolist() == [[1, 0]]
    assert F.row_kernel(M).tolist() == [[0, 1]]


def test_mat_inv_frozen():
    F = field(3)
    A = np.array([[1, 1], [0, 1]])
    assert F.mat_inv(A).tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ZeroDivisionError):
        F.mat_inv(np.array([[1, 1], [2, 2]]))


@given(mats(5, 3, 2))
def test_rank_nullity(ms):
    F = field(5)
    A, _ = ms
    assert F.mat_rank(A) + F.mat_kernel(A).shape[0] == 3


@given(mats(5, 3, 1))
def test_kernel_vectors_annihilate(ms):
    F = field(5)
    A = ms[0]
    for v in F.mat_kernel(A):
        assert not np.any(F.mat_mul(A, v[:, None]))


@given(mats(7, 3, 1))
def test_mat_inv_property(ms):
    F = field(7)
    A = ms[0]
    if F.is_invertible(A):
        assert np.array_equal(F.mat_mul(A, F.mat_inv(A)), F.identity(3))


@given(mats(3, 2, 4))
def test_kron_mixed_product(ms):
    F = field(3)
    A, B, C, D = ms
    lhs = F.mat_mul(F.kron(A, B), F.kron(C, D))
    rhs = F.kron(F.mat_mul(A, C), F.mat_mul(B, D))
    assert np.array_equal(lhs, rhs)


def test_kron_extension_field_matches_scalar_products():
    F = field(2, 2)
    A = np.array([[2, 1], [0, 3]])
    B = np.array([[3]])
    K = F.kron(A, B)
    expect = np.array([[F.el_mul(2, 3), F.el_mul(1, 3)], [0, F.el_mul(3, 3)]])
    assert np.array_equal(K, expect)


# -- blow-up to the prime field ----------------------------------------------


def test_gf4_blowup_block():
    F = field(2, 2)
    assert F.blow_up(np.array([[2]])).tolist() == [[0, 1], [1, 1]]


def test_gf4_frobenius_matrix():
    assert field(2, 2).frobenius_matrix().tolist() == [[1, 0], [1, 1]]


@given(mats(9, 2, 2).map(lambda ms: [m % 9 for m in ms]))
def test_blowup_is_multiplicative(ms):
    F = field(3, 2)
    A, B = ms
    Fp = field(3)
    lhs = F.blow_up(F.mat_mul(A, B))
    rhs = Fp.mat_mul(F.blow_up(A), F.blow_up(B))
    assert np.array_equal(lhs, rhs)


@given(mats(4, 2, 2))
def test_blowup_is_additive(ms):
    F = field(2, 2)
    A, B = ms
    Fp = field(2)
    assert np.array_equal(F.blow_up(F.mat_add(A, B)), Fp.mat_add(F.blow_up(A), F.blow_up(B)))


@given(mats(9, 2, 1).map(lambda ms: ms[0] % 9))
def test_frobenius_conjugation_identity(M):
    # Phi blow(M) Phi^-1 = blow(M^sigma) for a = 2
    F = field(3, 2)
    Fp = field(3)
    Phi = Fp.kron(Fp.identity(2), F.frobenius_matrix())
    lhs = Fp.mat_mul(Fp.mat_mul(Phi, F.blow_up(M)), Fp.mat_inv(Phi))
    assert np.array_equal(lhs, F.blow_up(F.mat_frob(M)))


# -- characteristic polynomial and factoring ----------------------------------


def _brute_charpoly(A, p):
    # permutation expansion of det(xI - A), fine for n <= 4
    n = A.shape[0]
    total = [0]
    from regorb.gfp import poly_add, poly_scale

    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                ln, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    ln += 1
                if ln % 2 == 0:
                    sign = -sign
        term = [1]
        for i in range(n):
            entry = [(-int(A[i, perm[i]])) % p] if perm[i] != i else [(-int(A[i, i])) % p, 1]
            term = poly_mul(term, entry, p)
        total = poly_add(total, poly_scale(term, sign % p, p), p)
    return total + [0] * (n + 1 - len(total))


def test_charpoly_rotation():
    F = field(3)
    assert F.charpoly(np.array([[0, 1], [2, 0]])) == [1, 0, 1]


@given(st.sampled_from([2, 3, 5]), st.data())
def test_charpoly_matches_permutation_expansion(p, data):
    n = data.draw(st.integers(1, 4))
    A = np.array(data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
    F = field(p)
    assert F.charpoly(A) == _brute_charpoly(A, p)


@given(mats(5, 4, 1))
def test_cayley_hamilton(ms):
    F = field(5)
    A = ms[0]
    assert not np.any(F.poly_apply(F.charpoly(A), A))


def test_factor_poly_frozen():
    assert poly_factor([1, 0, 1], 3) == [((1, 0, 1), 1)]
    assert poly_factor([2, 0, 1], 3) == [((1, 1), 1), ((2, 1), 1)]  # x^2 - 1
    assert poly_factor([1, 0, 0, 0, 1], 2) == [((1, 1), 4)]  # x^4 + 1 = (x+1)^4


@given(st.sampled_from([2, 3, 7]), st.data())
def test_factor_poly_roundtrip(p, data):
    deg = data.draw(st.integers(1, 6))
    f = data.draw(st.lists(st.integers(0, p - 1), min_size=deg, max_size=deg)) + [1]
    factors = poly_factor(f, p)
    prod = [1]
    for coeffs, mult in factors:
        for _ in range(mult):
            prod = poly_mul(prod, list(coeffs), p)
    assert prod == f
    for coeffs, _ in factors:
        assert coeffs[-1] == 1  # monic


def test_poly_apply_cayley_hamilton_frozen():
    F = field(3)
    A = np.array([[0, 1], [2, 0]])
    assert not np.any(F.poly_apply([1, 0, 1], A))


# -- intertwiner solving -------------------------------------------------------


def test_solve_intertwiner_recovers_conjugation():
    F = field(3)
    rng = np.random.default_rng(7)
    while True:
        P = rng.integers(0, 3, size=(3, 3))
        if F.is_invertible(P):
            break
    gens_a = []
    for _ in range(2):
        while True:
            A = rng.integers(0, 3, size=(3, 3))
            if F.is_invertible(A):
                gens_a.append(A)
                break
    Pi = F.mat_inv(P)
    gens_b = [F.mat_mul(F.mat_mul(Pi, A), P) for A in gens_a]
    M = F.solve_intertwiner(gens_a, gens_b)
    assert M is not None
    Mi = F.mat_inv(M)
    for A, B in zip(gens_a, gens_b):
        assert np.array_equal(F.mat_mul(F.mat_mul(Mi, A), M), B)


def test_solve_intertwiner_none_when_inequivalent():
    F = field(3)
    # scalar 1 vs scalar 2 cannot be conjugate
    assert F.solve_intertwiner([F.identity(2)], [F.scalar_mat(2, 2)]) is None
