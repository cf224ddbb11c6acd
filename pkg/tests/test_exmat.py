from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smithforge import exmat
from smithforge.divstruct import DivisorSet
from smithforge.errors import DimensionMismatch, SingularMatrix
from smithforge.exmat import ExactMatrix, NonIntegralWitness, RationalMatrix


def test_exact_matrix_validation():
    with pytest.raises(DimensionMismatch):
        ExactMatrix([])
    with pytest.raises(DimensionMismatch):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        ExactMatrix([[1, 2], [3, Fraction(1, 2)]])
    with pytest.raises(DimensionMismatch):
        ExactMatrix([[True]])


def test_identity_and_equality_across_types():
    assert ExactMatrix.identity(3) == RationalMatrix.identity(3)
    assert ExactMatrix([[1, 2], [3, 4]]) == RationalMatrix([[1, 2], [3, 4]])
    assert ExactMatrix([[1]]) != ExactMatrix([[2]])


def test_power_gcd_matrix_worked_example():
    s = DivisorSet([1, 2, 3, 6])
    m = exmat.power_gcd_matrix(s, 1)
    assert m.rows == (
        (1, 1, 1, 1),
        (1, 2, 1, 2),
        (1, 1, 3, 3),
        (1, 2, 3, 6),
    )
    m2 = exmat.power_gcd_matrix(s, 2)
    assert m2.rows[1] == (1, 4, 1, 4)


def test_power_lcm_matrix_worked_example():
    s = DivisorSet([1, 2, 3, 6])
    m = exmat.power_lcm_matrix(s, 1)
    assert m.rows == (
        (1, 2, 3, 6),
        (2, 2, 6, 6),
        (3, 6, 3, 6),
        (6, 6, 6, 6),
    )


def test_power_matrix_rejects_bad_exponent():
    s = DivisorSet([1, 2])
    for bad in (0, -1, 1.5):
        with pytest.raises(ValueError):
            exmat.power_gcd_matrix(s, bad)
        with pytest.raises(ValueError):
            exmat.power_lcm_matrix(s, bad)


def test_det_frozen_values():
    s = DivisorSet([1, 2, 3, 6])
    assert exmat.det(exmat.power_gcd_matrix(s, 1)) == 4
    m = ExactMatrix([[2, 1], [1, 2]])
    assert exmat.det(m) == 3
    assert exmat.det(ExactMatrix([[5]])) == 5
    assert exmat.det(ExactMatrix([[0, 1], [1, 0]])) == -1
    assert exmat.det(ExactMatrix([[1, 2], [2, 4]])) == 0


def test_det_matches_cofactor_on_power_matrices(corpus):
    for entry in corpus:
        s = entry.set
        if len(s) > 6:
            continue
        for a in (1, 2):
            g = exmat.power_gcd_matrix(s, a)
            assert exmat.det(g) == exmat.det_cofactor(g)
        l = exmat.power_lcm_matrix(s, 1)
        assert exmat.det(l) == exmat.det_cofactor(l)


@settings(deadline=None)
@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-50, max_value=50), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_det_matches_cofactor_on_random_matrices(rows):
    m = ExactMatrix(rows)
    assert exmat.det(m) == exmat.det_cofactor(m)


def test_inverse_round_trip():
    m = ExactMatrix([[1, 1, 1], [1, 2, 1], [1, 1, 3]])
    inv = exmat.inverse(m)
    ident = RationalMatrix.identity(3)
    assert exmat.mul(m, inv) == ident
    assert exmat.mul(inv, m) == ident


def test_inverse_frozen_example():
    # frozen after cross-checking Gauss-Jordan against adjugate/determinant
    s = DivisorSet([1, 2, 3, 6])
    inv = exmat.inverse(exmat.power_gcd_matrix(s, 1))
    expected = RationalMatrix(
        [
            [Fraction(3), Fraction(-3, 2), Fraction(-1), Fraction(1, 2)],
            [Fraction(-3, 2), Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2)],
            [Fraction(-1), Fraction(1, 2), Fraction(1), Fraction(-1, 2)],
            [Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)],
        ]
    )
    assert inv == expected


def test_inverse_matches_adjugate_oracle():
    s = DivisorSet([1, 2, 4, 5, 20])
    m = exmat.power_gcd_matrix(s, 2)
    inv = exmat.inverse(m)
    n, d = m.n, exmat.det(m)
    adj = [
        [
            Fraction(
                (-1) ** (i + j)
                * exmat.det_cofactor(
                    ExactMatrix(
                        [[m.rows[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
                    )
                ),
                d,
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    assert inv == RationalMatrix(adj)


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        exmat.inverse(ExactMatrix([[1, 2], [2, 4]]))


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        exmat.mul(ExactMatrix.identity(2), ExactMatrix.identity(3))


def test_as_integer_matrix_pass_through_and_conversion():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert exmat.as_integer_matrix(m) is m
    r = RationalMatrix([[Fraction(2), Fraction(4)], [Fraction(6), Fraction(8)]])
    out = exmat.as_integer_matrix(r)
    assert isinstance(out, ExactMatrix)
    assert out.rows == ((2, 4), (6, 8))


def test_as_integer_matrix_witness_is_first_row_major():
    r = RationalMatrix([[1, 2], [Fraction(-4, 3), Fraction(7, 3)]])
    w = exmat.as_integer_matrix(r)
    assert w == NonIntegralWitness(row=1, col=0, value=Fraction(-4, 3))


def test_json_and_csv_rendering():
    r = RationalMatrix([[1, Fraction(1, 2)], [Fraction(-4, 3), 2]])
    assert exmat.to_json_obj(r) == [[1, {"n": 1, "d": 2}], [{"n": -4, "d": 3}, 2]]
    assert exmat.to_csv_text(r) == "1,1/2\n-4/3,2\n"
    m = ExactMatrix([[1, 2], [3, 4]])
    assert exmat.to_json_obj(m) == [[1, 2], [3, 4]]
    assert exmat.to_csv_text(m) == "1,2\n3,4\n"


def test_power_gcd_det_positive_on_gcd_closed(gcd_closed_sets):
    # determinants of power gcd matrices on gcd-closed sets factor into
    # strictly positive terms, so zero/negative values would flag a bug
    for s in gcd_closed_sets[:60]:
        assert exmat.det(exmat.power_gcd_matrix(s, 1)) > 0
