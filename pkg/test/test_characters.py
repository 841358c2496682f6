# test/test_characters.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csformula.algebra.group_algebra import is_symmetric
from csformula.characters.freudenthal import freudenthal_multiplicities
from csformula.characters.tensor import straighten, tensor_coeffs
from csformula.characters.weyl_character import dimension, weyl_character
from csformula.exceptions import NonDominant, NonStrictlyDominant
from csformula.roots.catalog import load_datum


@pytest.mark.parametrize(
    "name, lam, dim",
    [
        ("A2-adjoint", (1, 0), 3),
        ("A2-adjoint", (2, 0), 6),
        ("A2-adjoint", (1, 1), 8),
        ("B2-adjoint", (1, 0), 4),
        ("B2-adjoint", (0, 1), 5),
        ("B2-adjoint", (2, 0), 10),
        ("G2-adjoint", (1, 0), 14),
        ("G2-adjoint", (0, 1), 7),
    ],
)
def test_dimensions(name, lam, dim):
    dual = load_datum(name).dual_datum()
    character = weyl_character(dual, lam)
    assert character.dimension() == dim
    assert dimension(dual, lam) == dim


def test_adjoint_representation_of_a2(a2):
    dual = a2.dual_datum()
    mults = weyl_character(dual, (1, 1)).multiplicities()
    assert mults[(0, 0)] == 2
    assert sum(mults.values()) == 8
    assert mults == freudenthal_multiplicities(dual, (1, 1))


def test_nonreduced_dual_character():
    dual = load_datum("BC1").dual_datum()
    character = weyl_character(dual, dual.include((1,)))
    assert character.multiplicities() == {(-1,): 1, (1,): 1}
    assert character.dimension() == 2


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from(["A2-adjoint", "B2-adjoint", "C2-sc"]))
def test_weyl_and_freudenthal_agree(a, b, name):
    dual = load_datum(name).dual_datum()
    lam = dual.point_from_pairings((a, b))
    if lam is None:
        return
    character = weyl_character(dual, lam)
    assert character.multiplicities() == freudenthal_multiplicities(dual, lam)
    assert is_symmetric(character.element, dual.weyl_group)
    assert character.dimension() == dimension(dual, lam)


def test_character_requires_dominance(a1):
    with pytest.raises(NonDominant):
        weyl_character(a1.dual_datum(), (-1,))


# ----- tensor coefficients -----

def test_straighten(a1):
    dual = a1.dual_datum()
    assert straighten(dual, (0,)) is None
    assert straighten(dual, (-3,)) == ((3,), -1)
    assert straighten(dual, (2,)) == ((2,), 1)


def test_clebsch_gordan(a1):
    dual = a1.dual_datum()
    assert tensor_coeffs(dual, (1,), (1,)).coeffs == {(2,): 1}
    assert tensor_coeffs(dual, (2,), (1,)).coeffs == {(3,): 1}
    assert tensor_coeffs(dual, (2,), (3,)).coeffs == {(1,): 1, (3,): 1, (5,): 1}
    assert tensor_coeffs(dual, (2,), (2,)).coeffs == {(2,): 1, (4,): 1}


@pytest.mark.parametrize("lam, mu", [((1, 0), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (1, 3))])
def test_tensor_dimensions_add_up(a2, lam, mu):
    dual = a2.dual_datum()
    rho = dual.rho_vee
    shift = lambda x: tuple(a - b for a, b in zip(x, rho))
    table = tensor_coeffs(dual, lam, mu)
    total = sum(c * dimension(dual, shift(eta)) for eta, c in table.coeffs.items())
    assert total == dimension(dual, dual.include(lam)) * dimension(dual, shift(mu))


def test_tensor_requires_strict_dominance(a1):
    with pytest.raises(NonStrictlyDominant):
        tensor_coeffs(a1.dual_datum(), (1,), (0,))


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
