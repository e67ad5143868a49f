"""Exact integer combinatorics of dominant weights of U(n).

Interlacing orders, Pieri expansions, Gelfand-Tsetlin pattern enumeration
and Schur character evaluation.  Everything here is exact integer (or exact
rational) arithmetic except ``schur_eval``, which evaluates at complex
points and serves as an independent oracle for the Pieri sets.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    'RankMismatchError',
    'DominantWeight',
    'WeightVector',
    'interlaces_down',
    'precsim',
    'weight_sum',
    'pieri_up',
    'pieri_down',
    'gt_patterns',
    'gt_weights',
    'weyl_dim',
    'verify_weight_order',
    'schur_eval',
    'complete_homogeneous',
    'dominant_tuples',
    'enumerate_interlacing',
]


class RankMismatchError(ValueError):
    pass


def _entries(w):
    """Coerce a weight-like object to a plain integer tuple."""
    if isinstance(w, (DominantWeight, WeightVector)):
        return w.entries
    t = tuple(int(v) for v in w)
    return t


@dataclass(frozen=True)
class DominantWeight:
    """A nonincreasing integer tuple, the highest weight of a U(n) irrep."""

    entries: tuple

    def __post_init__(self):
        ent = tuple(int(v) for v in self.entries)
        if len(ent) < 1:
            raise ValueError('weight must have positive rank')
        for a, b in zip(ent, ent[1:]):
            if a < b:
                raise ValueError('entries must be nonincreasing: %r' % (ent,))
        object.__setattr__(self, 'entries', ent)

    @property
    def n(self):
        return len(self.entries)


@dataclass(frozen=True)
class WeightVector:
    """An integer tuple without ordering constraint (a torus weight)."""

    entries: tuple

    def __post_init__(self):
        ent = tuple(int(v) for v in self.entries)
        if len(ent) < 1:
            raise ValueError('weight must have positive rank')
        object.__setattr__(self, 'entries', ent)

    @property
    def n(self):
        return len(self.entries)


def interlaces_down(lam, mu) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n."""
    lam = _entries(lam)
    mu = _entries(mu)
    if len(mu) != len(lam) - 1:
        raise RankMismatchError('need ranks n and n-1, got %d and %d'
                                % (len(lam), len(mu)))
    for i, m in enumerate(mu):
        if not (lam[i] >= m >= lam[i + 1]):
            return False
    return True


def precsim(mu, nu) -> bool:
    """True iff nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... >= nu_n >= mu_n.

    Evaluated literally on arbitrary integer tuples, ordered or not.
    """
    mu = _entries(mu)
    nu = _entries(nu)
    if len(mu) != len(nu):
        raise RankMismatchError('need equal ranks, got %d and %d'
                                % (len(mu), len(nu)))
    for i in range(len(mu)):
        if not nu[i] >= mu[i]:
            return False
        if i + 1 < len(nu) and not mu[i] >= nu[i + 1]:
            return False
    return True


def weight_sum(nu) -> int:
    return sum(_entries(nu))


def pieri_up(lam, m):
    """All lam' with precsim(lam, lam') and |lam'| = |lam| + m.

    The decomposition of tau_lam (x) tau_[m] into irreducibles.
    """
    lam = _entries(lam)
    m = int(m)
    if m < 0:
        raise ValueError('m must be nonnegative')
    n = len(lam)
    out = set()

    def rec(i, prefix, budget):
        if i == n:
            if budget == 0:
                out.add(tuple(prefix))
            return
        lo = lam[i]
        hi = lam[0] + budget if i == 0 else lam[i - 1]
        hi = min(hi, lo + budget)
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(i + 1, prefix, budget - (v - lo))
            prefix.pop()

    rec(0, [], m)
    return out


def pieri_down(lam, m):
    """All lam' with precsim(lam', lam) and |lam'| = |lam| - m."""
    lam = _entries(lam)
    m = int(m)
    if m < 0:
        raise ValueError('m must be nonnegative')
    n = len(lam)
    out = set()

    def rec(i, prefix, budget):
        if i == n:
            if budget == 0:
                out.add(tuple(prefix))
            return
        hi = lam[i]
        lo = lam[i + 1] if i + 1 < n else lam[n - 1] - budget
        lo = max(lo, hi - budget)
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(i + 1, prefix, budget - (hi - v))
            prefix.pop()

    rec(0, [], m)
    return out


def gt_patterns(lam):
    """Yield all Gelfand-Tsetlin patterns with top row lam.

    A pattern is returned as a list of rows, from the top row (length n)
    down to the final length-1 row, each consecutive pair interlacing.
    """
    lam = _entries(lam)

    def rec(row):
        if len(row) == 1:
            yield [row]
            return
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        for sub in itertools.product(*ranges):
            for rest in rec(sub):
                yield [row] + rest

    return rec(lam)


def gt_weights(lam):
    """Multiset of torus weights of tau_lam, via GT pattern row sums."""
    lam = _entries(lam)
    n = len(lam)
    counts = Counter()
    for pat in gt_patterns(lam):
        sums = [sum(row) for row in pat]          # lengths n .. 1
        sums.append(0)
        w = tuple(sums[n - 1 - k] - sums[n - k] for k in range(n))
        counts[w] += 1
    return counts


def weyl_dim(lam) -> int:
    """dim tau_lam = prod_{i<j} (lam_i - lam_j + j - i)/(j - i)."""
    lam = _entries(lam)
    n = len(lam)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def verify_weight_order(mu) -> bool:
    """Every weight of tau_mu other than mu itself fails precsim against mu
    and differs from mu in its first n-1 entries."""
    mu = _entries(mu)
    n = len(mu)
    for nu in gt_weights(mu):
        if nu == mu:
            continue
        if precsim(nu, mu):
            return False
        if nu[:n - 1] == mu[:n - 1]:
            return False
    return True


def schur_eval(lam, x):
    """Schur character s_lam(x) via the bialternant determinant ratio.

    Falls back to the Gelfand-Tsetlin monomial sum when coordinates
    (nearly) coincide and the determinant ratio degenerates.
    """
    import numpy as np

    lam = _entries(lam)
    x = tuple(complex(v) for v in x)
    n = len(lam)
    if len(x) != n:
        raise RankMismatchError('point has wrong dimension')
    scale = max(abs(v) for v in x)
    sep = min((abs(a - b) for a, b in itertools.combinations(x, 2)),
              default=1.0)
    if n > 1 and sep < 1e-8 * max(scale, 1.0):
        return sum(cnt * math.prod(x[i] ** nu[i] for i in range(n))
                   for nu, cnt in gt_weights(lam).items())
    num = np.array([[xi ** (lam[j] + n - 1 - j) for j in range(n)]
                    for xi in x])
    den = np.array([[xi ** (n - 1 - j) for j in range(n)] for xi in x])
    return complex(np.linalg.det(num) / np.linalg.det(den))


def complete_homogeneous(m, x):
    """h_m(x), the sum of all degree-m monomials in the coordinates."""
    m = int(m)
    x = tuple(complex(v) for v in x)
    total = 0j
    for combo in itertools.combinations_with_replacement(x, m):
        total += math.prod(combo) if combo else 1
    if m == 0:
        total = 1 + 0j
    return total


def dominant_tuples(n, lo, hi):
    """All nonincreasing integer n-tuples with entries in [lo, hi]."""
    n = int(n)
    return [tuple(reversed(c)) for c in
            itertools.combinations_with_replacement(range(lo, hi + 1), n)]


def enumerate_interlacing(mu, lo, hi):
    """All lam with interlaces_down(lam, mu) and lam_1 <= hi, lam_n >= lo.

    The full set is infinite; the caller supplies the truncation bounds.
    """
    mu = _entries(mu)
    n = len(mu) + 1
    out = []
    for lam in dominant_tuples(n, lo, hi):
        if interlaces_down(lam, mu):
            out.append(lam)
    return out
