"""Dual-space points, the coadjoint action and orbit parameterizations."""
import numpy as np
import pytest

from orbitc.coadjoint import (CharacterOrbit, Functional, GenericOrbit,
                              GroupElement, IntermediateOrbit,
                              base_functional, coadjoint_act,
                              functional_distance, functional_to_json,
                              orbit_point_generic, orbit_point_intermediate,
                              param_from_json, param_to_json,
                              stabilizer_member, v_r)
from orbitc.matrixcore import cross, haar_unitary


class TestValidation:
    def test_functional_requires_skew(self):
        with pytest.raises(ValueError):
            Functional(np.eye(2), np.zeros(2), 0.0)
        Functional(1j * np.eye(2), np.zeros(2), 1.0)

    def test_group_element_requires_unitary(self):
        with pytest.raises(ValueError):
            GroupElement(2.0 * np.eye(2), np.zeros(2), 0.0)

    def test_orbit_params_validate(self):
        with pytest.raises(ValueError):
            GenericOrbit((0, 1), 1.0)
        with pytest.raises(ValueError):
            GenericOrbit((1, 0), 0.0)
        with pytest.raises(ValueError):
            IntermediateOrbit((1,), 0.0)
        assert CharacterOrbit((2, 2)).n == 2


class TestAction:
    def test_center_coordinate_invariant(self):
        rng = np.random.default_rng(31)
        ell = base_functional(GenericOrbit((2, 0, -1), 0.7))
        g = GroupElement(haar_unitary(3, rng),
                         rng.standard_normal(3) + 1j * rng.standard_normal(3),
                         0.4)
        assert coadjoint_act(g, ell).x == ell.x

    def test_pure_rotation_conjugates(self):
        rng = np.random.default_rng(32)
        A = haar_unitary(3, rng)
        ell = base_functional(GenericOrbit((2, 1, 0), 1.0))
        out = coadjoint_act(GroupElement(A, np.zeros(3), 0.0), ell)
        assert np.allclose(out.U, A @ ell.U @ A.conj().T)
        assert np.allclose(out.u, A @ ell.u)

    def test_generic_point_is_coadjoint_image(self):
        # the parameterized point equals Ad*(A, sqrt(2) A z / alpha, 0)
        # applied to the base functional
        rng = np.random.default_rng(33)
        lam, alpha = (3, 1, 0), 0.8
        A = haar_unitary(3, rng)
        z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        pt = orbit_point_generic(lam, alpha, A, z)
        g = GroupElement(A, np.sqrt(2.0) * (A @ z) / alpha, 0.0)
        img = coadjoint_act(g, base_functional(GenericOrbit(lam, alpha)))
        assert functional_distance(pt, img) < 1e-10

    def test_intermediate_point_is_coadjoint_image(self):
        rng = np.random.default_rng(34)
        mu, r = (2, 0), 1.5
        n = 3
        A = haar_unitary(n, rng)
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        w = cross(z, v_r(n, r))
        pt = orbit_point_intermediate(mu, r, A, w)
        g = GroupElement(A, A @ z, 0.0)
        img = coadjoint_act(g, base_functional(IntermediateOrbit(mu, r)))
        assert functional_distance(pt, img) < 1e-10

    def test_intermediate_point_rejects_bad_border(self):
        with pytest.raises(ValueError):
            orbit_point_intermediate((1,), 1.0, np.eye(2), 1j * np.eye(2))


class TestStabilizer:
    def test_torus_stabilizes_distinct_diagonal(self):
        p = GenericOrbit((2, 1, 0), 1.0)
        D = np.diag(np.exp(1j * np.array([0.3, -1.0, 2.2])))
        assert stabilizer_member(p, GroupElement(D, np.zeros(3), 0.5))

    def test_generic_rotation_does_not_stabilize(self):
        rng = np.random.default_rng(35)
        p = GenericOrbit((2, 1, 0), 1.0)
        A = haar_unitary(3, rng)
        assert not stabilizer_member(p, GroupElement(A, np.zeros(3), 0.0))

    def test_translation_moves_generic_base(self):
        p = GenericOrbit((1, 0), 1.0)
        g = GroupElement(np.eye(2), np.array([1.0, 0.0]), 0.0)
        assert not stabilizer_member(p, g)


class TestSerialization:
    def test_param_round_trip(self):
        for p in [GenericOrbit((2, 0), -0.5), IntermediateOrbit((1,), 2.0),
                  CharacterOrbit((3, 1, 1))]:
            assert param_from_json(param_to_json(p)) == p

    def test_param_from_json_rejects_unknown(self):
        with pytest.raises(ValueError):
            param_from_json({'kind': 'mystery'})

    def test_functional_to_json_shape(self):
        ell = base_functional(IntermediateOrbit((1,), 2.0))
        d = functional_to_json(ell)
        assert d['U'][0][0] == [0.0, 1.0]
        assert d['u'][1] == [2.0, 0.0]
        assert d['x'] == 0.0


class TestDistance:
    def test_metric_basics(self):
        a = base_functional(CharacterOrbit((1, 0)))
        b = base_functional(CharacterOrbit((2, 0)))
        assert functional_distance(a, a) == 0.0
        assert functional_distance(a, b) == functional_distance(b, a) > 0

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            functional_distance(base_functional(CharacterOrbit((1,))),
                                base_functional(CharacterOrbit((1, 0))))
