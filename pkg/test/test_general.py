# test/test_general.py

import pytest

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.scalars import LaurentScalar
from csformula.exceptions import NonStrictlyDominant, NotInImageOfRprime
from csformula.roots.isogeny import isogeny_decomposition
from csformula.verify import SweepOptions, run_check
from csformula.whittaker import (
    general_cs_O_value,
    general_cs_value,
    pull_back_to_source,
    reduce_to_product,
    torus_factor,
)


def test_reduce_to_product(gl2, a1_sc):
    dec = isogeny_decomposition(gl2)
    assert reduce_to_product(dec, (2, 1)) == ((1,), (3,))
    assert reduce_to_product(dec, (1, 0)) == ((1,), (1,))
    assert reduce_to_product(isogeny_decomposition(a1_sc), (1,)) == ((2,), ())


def test_torus_factor(gl2):
    dec = isogeny_decomposition(gl2)
    assert torus_factor(dec, (2,)) == GroupAlgebraElement.monomial(dec.product_tag, (0, -2))


def test_sl2_value_pulls_back(a1_sc):
    dec = isogeny_decomposition(a1_sc)
    value = pull_back_to_source(dec, general_cs_value(dec, (1,)))
    assert value.lattice == "cochar:A1-sc"
    assert value == GroupAlgebraElement(
        "cochar:A1-sc", 1, {(1,): LaurentScalar.v_power(-3), (-1,): LaurentScalar.v_power(-3, -1)}
    )
    with pytest.raises(NonStrictlyDominant):
        general_cs_value(dec, (0,))


def test_gl2_conductor_o_value(gl2):
    dec = isogeny_decomposition(gl2)
    value = pull_back_to_source(dec, general_cs_O_value(dec, (1, 0)))
    v = LaurentScalar.v_power(-1)
    assert value == GroupAlgebraElement(gl2.lattice_tag, 2, {(1, 0): v, (0, 1): v})


def test_pull_back_rejects_points_off_the_image(gl2):
    dec = isogeny_decomposition(gl2)
    with pytest.raises(NotInImageOfRprime):
        pull_back_to_source(dec, GroupAlgebraElement.monomial(dec.product_tag, (1, 0)))


@pytest.mark.parametrize("name", ["a1_sc", "gl2"])
def test_general_sweep(request, name):
    datum = request.getfixturevalue(name)
    report = run_check("general", datum, SweepOptions(box=3, lambda_max=2), timings=False)
    assert report.cases > 0
    assert report.failures == []


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
