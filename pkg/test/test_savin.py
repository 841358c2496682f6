# test/test_savin.py

import pytest

from csformula.algebra.group_algebra import GroupAlgebraElement, alt
from csformula.algebra.scalars import LaurentScalar
from csformula.exceptions import LatticeMismatch, NonStrictlyDominant
from csformula.hecke.savin import (
    kernel_image_ranks,
    phi_action,
    project_to_whittaker,
    satake_character,
    savin_transform,
    spherical_action,
    theta_K_element,
    twisted_kernel_element,
)
from csformula.roots.boxes import dominant_box, orbit_box, strictly_dominant_box


def test_theta_k_maps_to_phi(a2):
    for mu in strictly_dominant_box(a2, 3):
        model = project_to_whittaker(a2, theta_K_element(a2, mu))
        assert model.coords == {mu: LaurentScalar.one()}


def test_walls_map_to_zero(a1):
    assert project_to_whittaker(a1, theta_K_element(a1, (0,))).is_zero()


@pytest.mark.parametrize("fixture, bound", [("a1", 3), ("a2", 1)])
def test_twisted_kernel_is_killed(request, fixture, bound):
    datum = request.getfixturevalue(fixture)
    W = datum.weyl_group
    for lam in orbit_box(datum, bound):
        for w in range(W.order):
            assert project_to_whittaker(datum, twisted_kernel_element(datum, lam, w)).is_zero()


@pytest.mark.parametrize("fixture, bound", [("a1", 3), ("a2", 1)])
def test_rank_identity(request, fixture, bound):
    datum = request.getfixturevalue(fixture)
    image, kernel, size = kernel_image_ranks(datum, orbit_box(datum, bound))
    assert image + kernel == size
    assert image == len([p for p in orbit_box(datum, bound) if datum.strictly_dominant(p)])


def test_phi_action_on_a1(a1):
    assert phi_action(a1, (1,), (1,)).coords == {(2,): LaurentScalar.one()}
    assert phi_action(a1, (2,), (2,)).coords == {
        (4,): LaurentScalar.one(),
        (2,): LaurentScalar.one(),
    }
    with pytest.raises(NonStrictlyDominant):
        phi_action(a1, (0,), (1,))


def test_module_action_matches_phi_action(a2):
    W = a2.weyl_group
    for mu in strictly_dominant_box(a2, 2):
        for lam in dominant_box(a2, 1):
            acted = project_to_whittaker(a2, spherical_action(a2, theta_K_element(a2, mu), lam))
            model = phi_action(a2, mu, lam)
            assert acted.coords == model.coords
            expected = satake_character(a2, lam) * alt(GroupAlgebraElement.monomial(a2.lattice_tag, mu), W)
            assert model.j(a2) == expected


def test_savin_transform_checks_lattice(a1):
    with pytest.raises(LatticeMismatch):
        savin_transform(a1, GroupAlgebraElement.one(a1.lattice_tag, 1))


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
