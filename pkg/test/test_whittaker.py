# test/test_whittaker.py

from fractions import Fraction

import pytest

from csformula.algebra.group_algebra import GroupAlgebraElement
from csformula.algebra.scalars import LaurentScalar
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import (
    EmptyConstraintSet,
    IrrationalSqrt,
    LatticeMismatch,
    MissingTableEntry,
    NonStrictlyDominant,
    RhoNotInLattice,
)
from csformula.roots.boxes import dominant_box, dominant_generators, level_box
from csformula.roots.catalog import load_datum
from csformula.verify import SweepOptions, run_check
from csformula.whittaker import (
    SatakeSpecialization,
    adjoint_ratio,
    conductor_O_table,
    conductor_O_value,
    conductor_swap,
    cs_table,
    cs_value,
    cs_value_alt,
    delta_half,
    recursion_failures,
    recursion_residual,
    specialize,
    uniqueness_rank,
    uniqueness_report,
)


def laurent(datum, terms, v):
    dual = datum.dual_datum()
    return GroupAlgebraElement(dual.lattice_tag, dual.rank, terms) * LaurentScalar.v_power(v)


def test_cs_value_on_a1(a1):
    assert cs_value(a1, (3,)) == laurent(a1, {(3,): 1, (-3,): -1}, -3)
    assert cs_value(a1, (1,)) == laurent(a1, {(1,): 1, (-1,): -1}, -1)
    with pytest.raises(NonStrictlyDominant):
        cs_value(a1, (0,))


def test_cs_value_matches_alternating_form(a2):
    for mu in level_box(a2, 3):
        assert cs_value(a2, mu) == cs_value_alt(a2, mu)


def test_normalization_must_live_on_the_dual(a1):
    with pytest.raises(LatticeMismatch):
        cs_value(a1, (1,), GroupAlgebraElement.one(a1.lattice_tag, 1))


@pytest.mark.parametrize("name, lam, power", [("A1-adjoint", (2,), -2), ("BC1", (1,), -3), ("BC1-su3", (1,), -4)])
def test_delta_half(name, lam, power):
    assert delta_half(load_datum(name), lam) == LaurentScalar.v_power(power)


def test_adjoint_ratio_on_a1(a1):
    assert adjoint_ratio(a1, (2,)) == laurent(a1, {(2,): 1, (0,): 1, (-2,): 1}, -2)


def test_conductor_o_needs_rho_in_lattice(a1_sc):
    with pytest.raises(RhoNotInLattice):
        conductor_O_value(a1_sc, (1,))


def test_conductor_swap(a1):
    swapped = conductor_swap(conductor_O_table(a1, dominant_box(a1, 3)))
    assert swapped.conductor == "p"
    assert swapped.keys() == [(1,), (2,), (3,), (4,)]
    for lam in dominant_box(a1, 3):
        assert swapped.get((lam[0] + 1,)) == adjoint_ratio(a1, lam)
    assert recursion_failures(a1, swapped, [(1,), (2,)])[1] == []
    with pytest.raises(ValueError):
        conductor_swap(swapped)


# ----- recursion -----

def test_recursion_holds_on_cs_table(a2):
    table = cs_table(a2, level_box(a2, 4))
    cases, failures = recursion_failures(a2, table, [(1, 0), (0, 1), (1, 1)])
    assert cases > 0
    assert failures == []


def test_perturbed_table_is_detected(a1):
    table = cs_table(a1, level_box(a1, 4))
    assert recursion_residual(a1, (1,), (2,), table).is_zero()
    assert not recursion_residual(a1, (1,), (2,), table.perturbed((2,))).is_zero()


def test_missing_table_entry(a1):
    table = cs_table(a1, level_box(a1, 4))
    with pytest.raises(MissingTableEntry) as info:
        recursion_residual(a1, (1,), (5,), table)
    assert info.value.missing == [(6,)]


# ----- uniqueness -----

def test_uniqueness_on_a1(a1):
    report = uniqueness_report(a1, level_box(a1, 4), [(1,)], seed=0, trials=3)
    assert report.unknowns == 5
    assert report.constraints_used == 4
    assert report.nullity == 1


def test_uniqueness_on_a2(a2):
    report = uniqueness_report(a2, level_box(a2, 4), [(1, 0), (0, 1)], seed=0, trials=3)
    assert report.nullity == 1


def test_uniqueness_needs_a_constraint(a1):
    with pytest.raises(EmptyConstraintSet):
        uniqueness_report(a1, [(1,)], [(1,)])


def test_uniqueness_rank_on_a1_box_one_to_six(a1):
    box = [(k,) for k in range(1, 7)]
    report = uniqueness_report(a1, box, [(1,), (2,)], seed=0, trials=3)
    assert report.unknowns == 6
    assert report.nullity == 1
    assert uniqueness_rank(a1, box, [(1,), (2,)], seed=0, trials=3) == 1


def test_dominant_generators_of_sl3():
    a2_sc = load_datum("A2-sc")
    assert dominant_generators(a2_sc) == [(1, 1), (1, 2), (2, 1)]
    assert dominant_generators(load_datum("A2-adjoint")) == [(0, 1), (1, 0)]


def test_uniqueness_on_sl3_needs_monoid_generators():
    a2_sc = load_datum("A2-sc")
    box = level_box(a2_sc, 4)
    assert uniqueness_report(a2_sc, box, [(1, 1), (2, 2)], seed=0, trials=3).nullity > 1
    assert uniqueness_report(a2_sc, box, dominant_generators(a2_sc), seed=0, trials=3).nullity == 1


@pytest.mark.parametrize("name", ["A1-sc", "A2-sc"])
def test_uniqueness_sweep_on_simply_connected_data(name):
    report = run_check("uniqueness", load_datum(name), SweepOptions(box=4, lambda_max=2), timings=False)
    assert report.cases > 0
    assert report.failures == []


# ----- specialization -----

def test_specialize_adjoint_ratio(a1):
    s = SatakeSpecialization.parse("2", "9/4")
    assert s.v == Fraction(3, 2)
    assert specialize(adjoint_ratio(a1, (2,)), s) == Fraction(7, 3)


def test_specialize_character(a1):
    dual = a1.dual_datum()
    character = weyl_character(dual, dual.include((2,))).element
    assert specialize(character, SatakeSpecialization.parse("2", "4")) == Fraction(21, 4)


def test_specialize_rejects_irrational_v(a1):
    s = SatakeSpecialization.parse("2", "2")
    with pytest.raises(IrrationalSqrt):
        specialize(adjoint_ratio(a1, (1,)), s)
    with pytest.raises(ValueError):
        SatakeSpecialization.parse("0", "4")


@pytest.mark.parametrize("check", ["recursion", "split", "adjoint"])
def test_sweeps_pass_on_a1(a1, check):
    report = run_check(check, a1, SweepOptions(box=4, lambda_max=2, specialization_points=5), timings=False)
    assert report.cases > 0
    assert report.failures == []


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
