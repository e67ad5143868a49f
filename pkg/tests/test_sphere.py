"""Invariant sphere measure: the parameterization, its Jacobian, moment
identities, the ball decomposition and the Haar Monte-Carlo cross-check."""
import math

import numpy as np
import pytest
from scipy.special import j0

from orbitc.matrixcore import haar_unitary
from orbitc.sphere_measure import (SpherePoint, ball_integral_check,
                                   complex_pairing, haar_unitary_integral,
                                   jacobian_analytic, jacobian_numeric, psi,
                                   sphere_integral)


def random_interior_point(rng, n):
    while True:
        s = rng.uniform(0.05, 0.95, size=n - 1)
        if s.sum() < 0.9:
            break
    t = rng.uniform(0.1, 2 * math.pi - 0.1, size=n)
    rho = rng.uniform(0.1, 0.9)
    return SpherePoint(tuple(s), tuple(t), rho)


class TestParameterization:
    def test_psi_norm_is_rho(self):
        rng = np.random.default_rng(71)
        for n in (1, 2, 3):
            for _ in range(20):
                p = random_interior_point(rng, n)
                v = np.array(psi(p))
                assert abs(np.linalg.norm(v) - p.rho) < 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            SpherePoint((0.5, 0.7), (0.1, 0.2, 0.3), 0.5)  # sum > 1
        with pytest.raises(ValueError):
            SpherePoint((0.5,), (0.1, 0.2), 1.5)  # rho > 1
        with pytest.raises(ValueError):
            SpherePoint((0.5,), (0.1,), 0.5)  # wrong angle count

    def test_jacobian_numeric_matches_analytic(self):
        rng = np.random.default_rng(72)
        for n in (1, 2, 3):
            for _ in range(20):
                p = random_interior_point(rng, n)
                got = jacobian_numeric(p)
                ref = jacobian_analytic(p.rho, n)
                assert abs(got - ref) < 1e-5 * (1.0 + ref)

    def test_jacobian_numeric_boundary_guard(self):
        with pytest.raises(ValueError):
            jacobian_numeric(SpherePoint((1e-6,), (0.1, 0.2), 0.5))


class TestSphereIntegral:
    def test_moment_identities(self):
        # int |v^a|^2 dsigma = (n-1)! a! / (n-1+|a|)!
        for n in (1, 2, 3):
            grid = 48 if n < 3 else 24
            one = sphere_integral(lambda v: np.ones(v.shape[0]), n, grid=grid)
            assert abs(one - 1.0) < 1e-10
            sq = sphere_integral(lambda v: np.abs(v[:, 0]) ** 2, n, grid=grid)
            assert abs(sq - 1.0 / n) < 2e-4
            quart = sphere_integral(lambda v: np.abs(v[:, 0]) ** 4, n,
                                    grid=grid)
            assert abs(quart - 2.0 / (n * (n + 1))) < 2e-4

    def test_odd_moments_vanish(self):
        got = sphere_integral(lambda v: v[:, 0] * np.conj(v[:, 1]), 2,
                              grid=48)
        assert abs(got) < 1e-12

    def test_unitary_invariance(self):
        B = haar_unitary(2, np.random.default_rng(73))
        z = np.array([0.9, -0.4 + 0.2j])

        def f(v):
            return np.exp(-1j * np.real(np.sum(v * np.conj(z), axis=-1)))

        plain = sphere_integral(f, 2, grid=96)
        rotated = sphere_integral(lambda v: f(v @ B.T), 2, grid=96)
        assert abs(plain - rotated) < 2e-4

    def test_bessel_value_n1(self):
        got = sphere_integral(
            lambda v: np.exp(-1j * np.real(v[:, 0] * 1.0)), 1, grid=128)
        assert abs(got - j0(1.0)) < 1e-10


class TestBallDecomposition:
    def test_volume_n1(self):
        lhs, rhs = ball_integral_check(lambda v: np.ones(v.shape[0]), 1,
                                       grid=400)
        assert abs(lhs - math.pi) < 1e-3 * math.pi
        assert abs(rhs - math.pi) < 1e-6

    def test_volume_n2(self):
        vol = math.pi ** 2 / 2.0
        lhs, rhs = ball_integral_check(lambda v: np.ones(v.shape[0]), 2,
                                       grid=100)
        assert abs(lhs - vol) < 1e-2 * vol
        assert abs(rhs - vol) < 1e-5 * vol

    def test_radial_profile(self):
        lhs, rhs = ball_integral_check(
            lambda v: np.abs(v[:, 0]) ** 2, 1, grid=400)
        assert abs(rhs - math.pi / 2.0) < 1e-6
        assert abs(lhs - rhs) < 1e-3 * (1.0 + abs(rhs))


class TestHaarMonteCarlo:
    def test_matches_quadrature(self):
        r, z = 1.0, np.array([1.0 + 0.0j])
        mean, err = haar_unitary_integral(r, z, 200000, seed=5)
        assert err < 5e-3
        assert abs(mean - j0(1.0)) < 3.0 * err + 1e-4

    def test_deterministic(self):
        a = haar_unitary_integral(1.0, np.array([1.0]), 1000, seed=9)
        b = haar_unitary_integral(1.0, np.array([1.0]), 1000, seed=9)
        assert a == b

    def test_complex_pairing(self):
        assert complex_pairing([1j], [1j]) == 1.0
        assert complex_pairing([1.0, 1j], [1j, 1.0]) == 0.0
