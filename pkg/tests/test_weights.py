"""Exact combinatorics: interlacing orders, Pieri sets, GT patterns."""
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitc.weights import (DominantWeight, RankMismatchError, WeightVector,
                            complete_homogeneous, dominant_tuples,
                            enumerate_interlacing, gt_patterns, gt_weights,
                            interlaces_down, pieri_down, pieri_up, precsim,
                            schur_eval, verify_weight_order, weight_sum,
                            weyl_dim)

dominant = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n, max_size=n).map(
        lambda v: tuple(sorted(v, reverse=True))))


class TestOrders:
    def test_interlaces_down_definition(self):
        assert interlaces_down((2, 1, 0), (1, 1))
        assert interlaces_down((2, 1, 0), (2, 0))
        assert not interlaces_down((2, 1, 0), (3, 0))
        assert not interlaces_down((2, 1, 0), (0, 0))

    def test_interlaces_down_rank(self):
        with pytest.raises(RankMismatchError):
            interlaces_down((2, 1), (1, 0))

    def test_precsim_definition(self):
        assert precsim((1, 0), (2, 0))
        assert precsim((1, 0), (1, 0))
        assert not precsim((1, 0), (0, 0))
        # literal on unordered tuples
        assert not precsim((0, 1), (2, 0))

    @given(dominant, dominant)
    @settings(max_examples=200, deadline=None)
    def test_precsim_brute(self, mu, nu):
        if len(mu) != len(nu):
            return
        n = len(mu)
        expect = all(nu[i] >= mu[i] for i in range(n)) and all(
            mu[i] >= nu[i + 1] for i in range(n - 1))
        assert precsim(mu, nu) == expect

    def test_dominant_weight_validates(self):
        assert DominantWeight((3, 1, 1)).entries == (3, 1, 1)
        with pytest.raises(ValueError):
            DominantWeight((1, 2))
        assert WeightVector((1, 2)).entries == (1, 2)


class TestPieri:
    def test_known_expansion(self):
        # tau_(1,0) (x) tau_[1] = tau_(2,0) + tau_(1,1)
        assert pieri_up((1, 0), 1) == {(2, 0), (1, 1)}
        assert pieri_down((1, 0), 1) == {(0, 0), (1, -1)}

    def test_m_zero(self):
        assert pieri_up((2, 1), 0) == {(2, 1)}
        assert pieri_down((2, 1), 0) == {(2, 1)}

    @given(dominant, st.integers(0, 4))
    @settings(max_examples=100, deadline=None)
    def test_brute_force_membership(self, lam, m):
        got = pieri_up(lam, m)
        lo, hi = min(lam), max(lam) + m
        expect = {nu for nu in dominant_tuples(len(lam), lo, hi)
                  if precsim(lam, nu) and weight_sum(nu) == weight_sum(lam) + m}
        assert got == expect

    @given(dominant, st.integers(0, 4))
    @settings(max_examples=100, deadline=None)
    def test_up_down_adjoint(self, lam, m):
        for nu in pieri_up(lam, m):
            assert lam in pieri_down(nu, m)

    def test_schur_identity(self):
        # s_lam * h_m = sum of s_nu over the Pieri set
        rng = np.random.default_rng(7)
        for lam in [(2, 0), (3, 1, 0), (1, 1, -1)]:
            for m in (1, 2, 3):
                x = tuple(rng.standard_normal(len(lam))
                          + 1j * rng.standard_normal(len(lam)))
                lhs = schur_eval(lam, x) * complete_homogeneous(m, x)
                rhs = sum(schur_eval(nu, x) for nu in pieri_up(lam, m))
                assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))


class TestGelfandTsetlin:
    def test_pattern_count_is_dimension(self):
        for lam in [(1, 0), (2, 1, 0), (3, 1), (2, 0, -1)]:
            assert sum(1 for _ in gt_patterns(lam)) == weyl_dim(lam)

    def test_weyl_dim_known(self):
        assert weyl_dim((1, 0)) == 2
        assert weyl_dim((2, 1, 0)) == 8
        assert weyl_dim((1, 1, 0, 0)) == 6  # wedge^2 of C^4

    def test_weights_of_standard_rep(self):
        w = gt_weights((1, 0, 0))
        assert w == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}

    def test_weight_multiplicity_adjoint(self):
        # tau_(1,0,-1) on su(3): the zero weight has multiplicity 2
        w = gt_weights((1, 0, -1))
        assert weyl_dim((1, 0, -1)) == 8
        assert w[(0, 0, 0)] == 2

    def test_character_at_point_matches_weights(self):
        lam = (2, 1, 0)
        rng = np.random.default_rng(3)
        x = tuple(np.exp(2j * np.pi * rng.random(3)))
        direct = sum(cnt * math.prod(x[i] ** nu[i] for i in range(3))
                     for nu, cnt in gt_weights(lam).items())
        assert abs(direct - schur_eval(lam, x)) < 1e-9

    def test_schur_at_coincident_point(self):
        # the bialternant degenerates; the GT fallback takes over
        assert abs(schur_eval((2, 1, 0), (1.0, 1.0, 1.0)) - 8) < 1e-9

    def test_verify_weight_order_small(self):
        for mu in dominant_tuples(3, 0, 3):
            assert verify_weight_order(mu)


class TestEnumeration:
    def test_dominant_tuples(self):
        ts = dominant_tuples(2, -1, 1)
        assert len(ts) == 6
        assert all(a >= b for a, b in ts)

    def test_enumerate_interlacing(self):
        got = enumerate_interlacing((1,), 0, 2)
        assert set(got) == {(1, 0), (1, 1), (2, 0), (2, 1)}
