"""Exact scalars, sparse matrices, and chain complexes.

Rank agreement between the rational and modular eliminations is the load
bearing property here: the cohomology sweeps trust it to move between
characteristic 0 and characteristic p.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from decatkit.exactlin import (
    QQ,
    ComplexError,
    FiniteComplex,
    LaurentPoly,
    PrimeField,
    SparseMatrix,
    geometric_shift_sum,
    is_prime,
    matrix_rank,
    nullspace,
)


def test_is_prime_small_cases():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    # Carmichael number: any Fermat-style shortcut would wave this through.
    assert not is_prime(561)
    assert is_prime(65521)


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(ValueError, match="not prime"):
        PrimeField(6)


def test_prime_field_arithmetic():
    f7 = PrimeField(7)
    assert f7.of(10) == 3
    assert f7.of(Fraction(1, 3)) == 5
    assert f7.mul(3, 5) == 1
    assert f7.inv(2) == 4
    assert f7.is_zero(f7.add(3, 4))
    with pytest.raises(ZeroDivisionError):
        f7.inv(0)
    with pytest.raises(ZeroDivisionError):
        f7.of(Fraction(1, 7))


def test_rational_field_of_int():
    assert QQ.of(3) == Fraction(3)
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_laurent_poly_arithmetic():
    p = LaurentPoly.from_dict({0: 1, 2: 1})
    q = LaurentPoly.t_power(-1)
    assert (p * q).terms == ((-1, 1), (1, 1))
    assert (p + p).terms == ((0, 2), (2, 2))
    assert (p - p) == LaurentPoly.zero()
    assert p.at_one() == 2
    assert p.min_degree() == 0 and p.max_degree() == 2
    assert p.shifted(3).terms == ((3, 1), (5, 1))


def test_laurent_poly_zero_has_no_degree():
    with pytest.raises(ValueError, match="no degree"):
        LaurentPoly.zero().min_degree()


def test_geometric_shift_sum():
    assert geometric_shift_sum(1) == LaurentPoly.one()
    assert geometric_shift_sum(3).terms == ((0, 1), (2, 1), (4, 1))
    assert geometric_shift_sum(4, step=1).terms == ((0, 1), (1, 1), (2, 1), (3, 1))
    assert geometric_shift_sum(0) == LaurentPoly.zero()


def test_sparse_matrix_construction_guards():
    with pytest.raises(ValueError, match="duplicate"):
        SparseMatrix.from_triples(2, 2, [(0, 0, 1), (0, 0, 2)])
    with pytest.raises(ValueError, match="stored zero"):
        SparseMatrix(2, 2, {(0, 0): 0})
    with pytest.raises(ValueError, match="outside"):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_sparse_matrix_algebra():
    m = SparseMatrix.from_triples(2, 2, [(0, 0, 1), (0, 1, 2), (1, 1, 3)])
    ident = SparseMatrix.identity(2)
    assert m @ ident == m
    assert ident @ m == m
    assert m.transpose().transpose() == m
    assert (m - m).is_zero()
    k = m.kron(ident)
    assert (k.nrows, k.ncols) == (4, 4)
    assert m.column(1) == {0: 2, 1: 3}


def test_sparse_matrix_at_one_collapses_laurent_entries():
    m = SparseMatrix(1, 1, {(0, 0): LaurentPoly.from_dict({0: 1, 2: 1})})
    assert m.at_one().rows() is not None
    assert dict(enumerate(m.at_one().column(0).values())) == {0: 2}


def test_matrix_rank_known_values():
    m = SparseMatrix.from_triples(2, 2, [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)])
    assert matrix_rank(m, QQ) == 1
    assert matrix_rank(SparseMatrix.zeros(3, 5), QQ) == 0
    assert matrix_rank(SparseMatrix.identity(4), PrimeField(5)) == 4
    # Rank can genuinely drop mod p.
    drop = SparseMatrix.from_triples(1, 1, [(0, 0, 5)])
    assert matrix_rank(drop, QQ) == 1
    assert matrix_rank(drop, PrimeField(5)) == 0


small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda r: st.integers(min_value=1, max_value=5).flatmap(
        lambda c: st.lists(
            st.integers(min_value=-3, max_value=3), min_size=r * c, max_size=r * c
        ).map(lambda vals: (r, c, vals))
    )
)


def _build(r, c, vals):
    triples = [
        (i, j, v) for (i, j), v in zip(((i, j) for i in range(r) for j in range(c)), vals) if v
    ]
    return SparseMatrix.from_triples(r, c, triples)


@given(small_matrices)
def test_rank_agrees_with_large_prime(data):
    # 65521 exceeds the Hadamard bound 3^5 * 5^(5/2) on any minor of these
    # matrices, so no elimination pivot can vanish mod p.
    r, c, vals = data
    m = _build(r, c, vals)
    assert matrix_rank(m, QQ) == matrix_rank(m, PrimeField(65521))


@given(small_matrices)
def test_rank_mod_p_never_exceeds_rational_rank(data):
    r, c, vals = data
    m = _build(r, c, vals)
    assert matrix_rank(m, PrimeField(5)) <= matrix_rank(m, QQ)


@given(small_matrices)
@settings(max_examples=60)
def test_nullspace_rank_nullity(data):
    r, c, vals = data
    m = _build(r, c, vals)
    basis = nullspace(m, QQ)
    assert len(basis) == c - matrix_rank(m, QQ)
    for vec in basis:
        image = {}
        for (i, j), entry in m.entries.items():
            image[i] = image.get(i, 0) + entry * vec[j]
        assert all(v == 0 for v in image.values())


def test_finite_complex_accepts_exact_sequence():
    # Q^2 -> Q via projection onto the first coordinate.
    d = SparseMatrix.from_triples(1, 2, [(0, 0, 1)])
    cx = FiniteComplex(QQ, (2, 1), (d,))
    cx.check_complex()
    assert cx.homology_dims() == {0: 1, 1: 0}


def test_finite_complex_rejects_nonzero_square():
    d0 = SparseMatrix.identity(1)
    d1 = SparseMatrix.identity(1)
    cx = FiniteComplex(QQ, (1, 1, 1), (d0, d1))
    with pytest.raises(ComplexError, match="differential squared"):
        cx.check_complex()


def test_finite_complex_degree_labels():
    d = SparseMatrix.zeros(1, 1)
    cx = FiniteComplex(QQ, (1, 1), (d,), degrees=(-1, 0))
    assert cx.degrees == (-1, 0)
    with pytest.raises(ValueError, match="degree labels"):
        FiniteComplex(QQ, (1, 1), (d,), degrees=(0,))
