# test/test_lattice_algebra.py

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csformula.algebra.group_algebra import GroupAlgebraElement, alt, exact_divide, is_alternating
from csformula.algebra.lattice import LatticeMap, integer_kernel, inverse, lattice_basis, rank
from csformula.algebra.scalars import LaurentScalar, format_rational, parse_rational
from csformula.exceptions import LatticeMismatch, NonDivisible

scalars = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=4).map(LaurentScalar)
points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
elements = st.dictionaries(points, scalars, max_size=4).map(lambda d: GroupAlgebraElement("t", 2, d))


# ----- scalars -----

def test_laurent_arithmetic():
    v = LaurentScalar.v_power(1)
    assert (v + 1) * (v - 1) == LaurentScalar({2: 1, 0: -1})
    assert LaurentScalar.v_power(-3, 2).inverse() == LaurentScalar.v_power(3, Fraction(1, 2))
    assert (v + 1).evaluate(Fraction(3, 2)) == Fraction(5, 2)
    assert LaurentScalar({1: 1, 0: 1}) != LaurentScalar.one()


def test_rational_text():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert format_rational(Fraction(2, 3)) == "2/3"


@settings(max_examples=50, deadline=None)
@given(scalars, scalars, scalars)
def test_laurent_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# ----- lattice -----

def test_rank_and_inverse():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 0], [0, 3]]) == 2
    assert inverse([[2, 1], [1, 1]]) == ((1, -1), (-1, 2))


def test_integer_kernel_is_saturated():
    kernel = integer_kernel([(2, 2, 0)], 3)
    assert len(kernel) == 2
    for row in kernel:
        assert 2 * row[0] + 2 * row[1] == 0
    assert rank(kernel) == 2


def test_lattice_basis_spans_generators():
    basis = lattice_basis([(Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))], 2)
    assert len(basis) == 2
    assert abs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]) == Fraction(1, 2)


def test_lattice_map_preimage():
    doubling = LatticeMap(((2,),), 1, 1, injective=True)
    assert doubling.apply((3,)) == (6,)
    assert doubling.preimage((6,)) == (3,)
    assert doubling.preimage((5,)) is None


# ----- group algebra -----

@settings(max_examples=50, deadline=None)
@given(elements, elements, elements)
def test_group_algebra_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c


@settings(max_examples=30, deadline=None)
@given(elements, elements)
def test_exact_divide_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


def test_exact_divide_rejects_remainder():
    one = GroupAlgebraElement.one("t", 1)
    e = GroupAlgebraElement.monomial("t", (1,))
    with pytest.raises(NonDivisible):
        exact_divide(e + one, e - one)


def test_lattice_tags_must_agree():
    with pytest.raises(LatticeMismatch):
        GroupAlgebraElement.one("a", 1) + GroupAlgebraElement.one("b", 1)


def test_weyl_character_by_division(a1):
    dual = a1.dual_datum()
    W = dual.weyl_group
    rho = GroupAlgebraElement.monomial(dual.lattice_tag, (1,))
    top = GroupAlgebraElement.monomial(dual.lattice_tag, (4,))
    denominator = alt(rho, W)
    assert is_alternating(denominator, W)
    quotient = exact_divide(alt(top, W), denominator)
    assert quotient == GroupAlgebraElement(dual.lattice_tag, 1, {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1})


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
