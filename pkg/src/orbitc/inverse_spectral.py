"""Inverse spectral constructions.

The rational sum identity, the arrowhead inverse-eigenvalue construction
(distinct and repeated mu, via grouped products), and the rank-one inverse
constructions for both signs with the interlacing verdict.  All entry
moduli are computed in exact rational arithmetic from the integer inputs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrixcore import rank_one_update, spectrum_skew
from .weights import _entries, interlaces_down, precsim

__all__ = [
    'InterlacingError',
    'ArrowheadSolution',
    'RankOneSolution',
    'sum_identity_sides',
    'build_arrowhead',
    'build_rank_one',
    'update_interlacing_verdict',
]


class InterlacingError(ValueError):
    pass


@dataclass(frozen=True)
class ArrowheadSolution:
    """Border moduli |z_j| and corner value x of an arrowhead matrix."""

    zmods: tuple
    x: float


@dataclass(frozen=True)
class RankOneSolution:
    """Moduli |z_j| of a rank-one update J_lam + sign * i z z*."""

    zmods: tuple
    sign: int


def sum_identity_sides(X, Y, k):
    """Both sides of the rational sum identity.

    lhs = sum_j prod_{i!=k}(X_i - Y_j) / prod_{i!=j}(Y_i - Y_j),
    rhs = sum_{j!=k} X_j - sum_j Y_j, for 1 <= k <= n and |Y| = n-1.
    """
    X = tuple(float(v) for v in X)
    Y = tuple(float(v) for v in Y)
    n = len(X)
    if len(Y) != n - 1:
        raise ValueError('need |Y| = |X| - 1')
    if not 1 <= int(k) <= n:
        raise ValueError('k out of range')
    k = int(k) - 1
    for i in range(len(Y)):
        for j in range(i + 1, len(Y)):
            if Y[i] == Y[j]:
                raise ValueError('Y entries must be pairwise distinct')
    lhs = 0.0
    for j, yj in enumerate(Y):
        num = math.prod(X[i] - yj for i in range(n) if i != k)
        den = math.prod(Y[i] - yj for i in range(len(Y)) if i != j)
        lhs += num / den
    rhs = sum(X[j] for j in range(n) if j != k) - sum(Y)
    return lhs, rhs


def _clamp_modulus_sq(v):
    """Roundoff at equality boundaries can leave a tiny negative square."""
    if -1e-12 <= v < 0.0:
        return 0.0
    if v < 0.0:
        raise InterlacingError('negative squared modulus %r' % (v,))
    return v


def build_arrowhead(mu, lam) -> ArrowheadSolution:
    """Border entries making the arrowhead over (mu, x) have spectrum lam.

    For pairwise distinct mu,
        |z_j|^2 = -prod_i(lam_i - mu_j) / prod_{i!=j}(mu_i - mu_j).
    Runs of equal mu values are handled by the grouped products: the
    factors forced to cancel by interlacing are dropped from both products
    and the whole group mass is assigned to the run's first index.
    In all cases x = sum(lam) - sum(mu).
    """
    mu = _entries(mu)
    lam = _entries(lam)
    n = len(lam)
    if not interlaces_down(lam, mu):
        raise InterlacingError(
            'interlacing lam_1 >= mu_1 >= ... >= lam_n fails for '
            'lam=%r mu=%r' % (lam, mu))
    # runs of equal mu values, 0-based [start, end] inclusive
    runs = []
    start = 0
    for j in range(1, n - 1):
        if mu[j] != mu[start]:
            runs.append((start, j - 1))
            start = j
    if n >= 2:
        runs.append((start, n - 2))
    reps = [a for a, _ in runs]
    dropped = {i for a, b in runs for i in range(a + 1, b + 1)}
    kept_lam = [i for i in range(n) if i not in dropped]
    zsq = [Fraction(0)] * (n - 1)
    for j in reps:
        num = math.prod(lam[i] - mu[j] for i in kept_lam)
        den = math.prod(mu[i] - mu[j] for i in reps if i != j)
        zsq[j] = Fraction(-num, den) if den != 0 else Fraction(-num)
    zmods = tuple(math.sqrt(_clamp_modulus_sq(float(v))) for v in zsq)
    return ArrowheadSolution(zmods, float(sum(lam) - sum(mu)))


def _rank_one_strict(lam, bet, sign):
    """Moduli squared in the strictly interlaced, distinct-lam case."""
    m = len(lam)
    out = []
    for j in range(m):
        num = math.prod(lam[j] - b for b in bet)
        den = math.prod(lam[j] - lam[i] for i in range(m) if i != j)
        out.append(Fraction(-sign * num, den))
    return out


def build_rank_one(lam, beta, sign) -> RankOneSolution:
    """Vector moduli making J_lam + sign * i z z* have spectrum beta.

    sign=+1 needs precsim(lam, beta) (beta interlaces from above), sign=-1
    needs precsim(beta, lam).  Boundary equalities are removed recursively,
    smallest index first, zeroing the pinched coordinate each time; the
    remaining strictly interlaced problem is solved by the product formula.
    """
    lam = _entries(lam)
    bet = _entries(beta)
    sign = int(sign)
    if sign not in (1, -1):
        raise ValueError('sign must be +1 or -1')
    if sign == 1 and not precsim(lam, bet):
        raise InterlacingError('need beta interlacing lam from above')
    if sign == -1 and not precsim(bet, lam):
        raise InterlacingError('need beta interlacing lam from below')
    n = len(lam)
    zsq = [Fraction(0)] * n

    def solve(lam_l, bet_l, idxs):
        m = len(lam_l)
        if m == 0:
            return
        for l in range(m):
            if bet_l[l] == lam_l[l]:
                solve(lam_l[:l] + lam_l[l + 1:], bet_l[:l] + bet_l[l + 1:],
                      idxs[:l] + idxs[l + 1:])
                return
            if sign == 1 and l >= 1 and lam_l[l - 1] == bet_l[l]:
                # lam_{l-1} stays an eigenvalue with z there zeroed
                solve(lam_l[:l - 1] + lam_l[l:], bet_l[:l] + bet_l[l + 1:],
                      idxs[:l - 1] + idxs[l:])
                return
            if sign == -1 and l >= 1 and bet_l[l - 1] == lam_l[l]:
                solve(lam_l[:l] + lam_l[l + 1:], bet_l[:l - 1] + bet_l[l:],
                      idxs[:l] + idxs[l + 1:])
                return
        vals = _rank_one_strict(lam_l, bet_l, sign)
        for i, v in zip(idxs, vals):
            zsq[i] = v

    solve(lam, bet, tuple(range(n)))
    zmods = tuple(math.sqrt(_clamp_modulus_sq(float(v))) for v in zsq)
    return RankOneSolution(zmods, sign)


def update_interlacing_verdict(lam, z, alpha):
    """Spectrum of J_lam/i + z z*/alpha and its interlacing verdict.

    For alpha > 0 the spectrum interlaces lam from above, for alpha < 0
    from below; the verdict is checked with tolerance 1e-10 on the sorted
    values relative to their magnitude.
    """
    alpha = float(alpha)
    if alpha == 0.0:
        raise ValueError('alpha must be nonzero')
    lam = _entries(lam)
    beta = spectrum_skew(rank_one_update(lam, z, 1.0 / alpha))
    scale = 1.0 + max([abs(float(v)) for v in lam]
                      + [abs(float(v)) for v in beta])
    tol = 1e-10 * scale
    ok = True
    n = len(lam)
    if alpha > 0:
        # beta_1 >= lam_1 >= beta_2 >= ... >= beta_n >= lam_n
        for i in range(n):
            if beta[i] < lam[i] - tol:
                ok = False
            if i + 1 < n and lam[i] < beta[i + 1] - tol:
                ok = False
    else:
        # lam_1 >= beta_1 >= lam_2 >= ... >= lam_n >= beta_n
        for i in range(n):
            if lam[i] < beta[i] - tol:
                ok = False
            if i + 1 < n and beta[i] < lam[i + 1] - tol:
                ok = False
    return np.asarray(beta), ok
