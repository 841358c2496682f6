# test/test_root_datum.py

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from csformula.exceptions import InvalidCartanType, MultNotOrbitConstant, RhoNotInLattice
from csformula.roots.boxes import dominant_box, level_box, orbit_box, strictly_dominant_box
from csformula.roots.cartan import cartan_matrix, parse_cartan_type
from csformula.roots.catalog import CartanSpec, catalog_names, load_catalog, load_datum, resolve_datum
from csformula.roots.isogeny import isogeny_decomposition


def test_catalog_lists_every_entry():
    names = catalog_names()
    for name in ["A1-adjoint", "A1-sc", "A1-gl2", "A2-adjoint", "B2-adjoint", "G2-adjoint", "BC1", "BC2", "BC1-su3"]:
        assert name in names
    assert len(load_catalog()) == len(names)


def test_a1_adjoint_and_sc(a1, a1_sc):
    assert a1.positive_roots == ((1,),)
    assert a1.positive_coroots == ((2,),)
    assert a1.rho_vee_point() == (1,)
    assert a1.weyl_group.order == 2

    assert a1_sc.positive_roots == ((2,),)
    assert a1_sc.positive_coroots == ((1,),)
    assert a1_sc.rho_vee == (Fraction(1, 2),)
    assert not a1_sc.rho_in_lattice
    with pytest.raises(RhoNotInLattice):
        a1_sc.rho_vee_point()


@pytest.mark.parametrize(
    "name, order, positive",
    [("A2-adjoint", 6, 3), ("A3-adjoint", 24, 6), ("B2-adjoint", 8, 4), ("C3-adjoint", 48, 9),
     ("G2-adjoint", 12, 6), ("D4-adjoint", 192, 12), ("BC2", 8, 6)],
)
def test_weyl_orders_and_root_counts(name, order, positive):
    datum = load_datum(name)
    assert datum.weyl_group.order == order
    assert len(datum.positive_roots) == positive


def test_pairing_matrix_is_cartan_matrix():
    for name, kind in [("A2-adjoint", "A2"), ("B2-adjoint", "B2"), ("G2-adjoint", "G2")]:
        datum = load_datum(name)
        assert [list(row) for row in datum.pairing_matrix] == cartan_matrix(kind).tolist()


def test_nonreduced_rank_one():
    bc1 = load_datum("BC1")
    assert bc1.nonreduced
    assert bc1.positive_roots == ((1,), (2,))
    assert bc1.nondivisible == (0,)
    assert bc1.mult == (1, 1)
    assert load_datum("BC1-su3").mult == (2, 1)


def test_multiplicities_must_be_orbit_constant(a2):
    with pytest.raises(MultNotOrbitConstant):
        a2.with_mult({0: 2})
    assert load_datum("B2-adjoint").with_mult({0: 1}).mult == (1, 1, 1, 1)


def test_bad_specs_are_rejected(tmp_path):
    with pytest.raises(InvalidCartanType):
        parse_cartan_type("E8")
    with pytest.raises(ValidationError):
        CartanSpec(type="A1", mult={"0": 0})
    with pytest.raises(ValidationError):
        CartanSpec(type="A1", lattice={"basis": [[1, 0]]})
    with pytest.raises(ValueError):
        resolve_datum("catalog:no-such-datum")
    with pytest.raises(FileNotFoundError):
        resolve_datum(f"file:{tmp_path / 'missing.json'}")


def test_datum_from_file(tmp_path):
    path = tmp_path / "pgl3.json"
    path.write_text(json.dumps({"name": "my-A2", "type": "A2", "lattice": "adjoint"}))
    datum = resolve_datum(f"file:{path}")
    assert datum.name == "my-A2"
    assert datum.weyl_group.order == 6


def test_gl2_has_central_rank_one(gl2):
    assert gl2.rank == 2
    assert gl2.semisimple_rank == 1
    assert gl2.central_rank == 1
    assert gl2.positive_roots == ((1, -1),)
    assert gl2.positive_coroots == ((1, -1),)
    assert not gl2.rho_in_lattice


# ----- dual datum -----

def test_dual_of_adjoint_a1(a1):
    dual = a1.dual_datum()
    assert dual.positive_roots == ((2,),)
    assert dual.positive_coroots == ((1,),)
    assert dual.rho_vee == (1,)
    assert dual.include((3,)) == (3,)


def test_dual_of_nonreduced_is_type_c():
    dual = load_datum("BC2").dual_datum()
    cartan = [[int(sum(c * a for c, a in zip(f, x))) for x in dual.simple_roots] for f in dual.simple_coroots]
    assert cartan == cartan_matrix("C2").tolist()


@pytest.mark.parametrize("name", ["A1-sc", "A1-gl2", "A2-sc", "B2-sc", "C2-adjoint", "BC1-su3"])
def test_dual_contains_rho(name):
    datum = load_datum(name)
    dual = datum.dual_datum()
    assert dual.strictly_dominant(dual.rho_vee)
    for lam in dominant_box(datum, 2):
        assert dual.dominant(dual.include(lam))


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(0, 5))
def test_weyl_action_preserves_inner_product(point, w):
    dual = load_datum("A2-adjoint").dual_datum()
    W = dual.weyl_group
    image = W.act(w, point)
    assert dual.inner_product(image, image) == dual.inner_product(point, point)
    assert W.act(W.inverse(w), image) == point


# ----- boxes and dominance -----

def test_boxes(a1, a2, a1_sc):
    assert level_box(a1, 2) == [(1,), (2,), (3,)]
    assert len(dominant_box(a2, 1)) == 4
    assert len(strictly_dominant_box(a2, 2)) == 4
    assert strictly_dominant_box(a1_sc, 3) == [(1,)]
    assert orbit_box(a1, 1) == [(-1,), (0,), (1,)]


def test_to_dominant(a2):
    W = a2.weyl_group
    dominant, w = W.to_dominant((-1, -1))
    assert dominant == (1, 1)
    assert W.act(w, (-1, -1)) == (1, 1)


# ----- isogeny -----

def test_isogeny_of_gl2(gl2):
    dec = isogeny_decomposition(gl2)
    assert dec.torus_rank == 1
    assert dec.adjoint.rank == 1
    mu, lam = dec.split((2, 1))
    assert mu == (1,)
    assert lam == (3,)


def test_isogeny_of_sl2(a1_sc):
    dec = isogeny_decomposition(a1_sc)
    assert dec.torus_rank == 0
    assert dec.split((1,)) == ((2,), ())


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
