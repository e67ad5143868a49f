"""The invariant measure on the unit sphere of C^n.

The psi parameterization of the real 2n-ball, its Jacobian (closed form
and finite differences), the normalized U(n)-invariant sphere integral on
a simplex-times-torus grid, the ball decomposition check, and a Haar
Monte-Carlo cross-oracle.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .matrixcore import haar_unitary

__all__ = [
    'SpherePoint',
    'psi',
    'jacobian_analytic',
    'jacobian_numeric',
    'sphere_integral',
    'ball_integral_check',
    'haar_unitary_integral',
    'complex_pairing',
]


@dataclass(frozen=True)
class SpherePoint:
    """Coordinates (s, t, rho): s in the open simplex, angles t, radius rho."""

    s: tuple
    t: tuple
    rho: float

    def __post_init__(self):
        s = tuple(float(v) for v in self.s)
        t = tuple(float(v) for v in self.t)
        object.__setattr__(self, 's', s)
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'rho', float(self.rho))
        if len(t) != len(s) + 1:
            raise ValueError('need n angles for n-1 simplex coordinates')
        if any(v < 0.0 for v in s) or sum(s) > 1.0:
            raise ValueError('s must lie in the simplex')
        if not 0.0 < self.rho <= 1.0:
            raise ValueError('rho must lie in (0, 1]')

    @property
    def n(self):
        return len(self.t)


def psi(p: SpherePoint):
    """The ball parameterization; returns a real 2n-tuple of norm rho."""
    s, t, rho = p.s, p.t, p.rho
    out = []
    for si, ti in zip(s, t[:-1]):
        out.append(math.sqrt(si) * math.cos(ti))
        out.append(math.sqrt(si) * math.sin(ti))
    last = math.sqrt(max(1.0 - sum(s), 0.0))
    out.append(last * math.cos(t[-1]))
    out.append(last * math.sin(t[-1]))
    return tuple(rho * v for v in out)


def jacobian_analytic(rho, n) -> float:
    """|det D psi| = rho^(2n-1) / 2^(n-1)."""
    return float(rho) ** (2 * int(n) - 1) / 2.0 ** (int(n) - 1)


def jacobian_numeric(p: SpherePoint, h=1e-4) -> float:
    """Central-difference Jacobian determinant of psi at an interior point."""
    s, t, rho = list(p.s), list(p.t), p.rho
    n = p.n
    margin = min([rho, 1.0 - sum(s)] + s) if s else rho
    if margin < 2.0 * h or rho > 1.0 - 2.0 * h:
        raise ValueError('point too close to the boundary for step %g' % h)
    coords = ([('s', i) for i in range(n - 1)]
              + [('t', i) for i in range(n)] + [('rho', 0)])
    J = np.zeros((2 * n, 2 * n))
    for col, (which, i) in enumerate(coords):
        sp, tp, rp = list(s), list(t), rho
        sm, tm, rm = list(s), list(t), rho
        if which == 's':
            sp[i] += h
            sm[i] -= h
        elif which == 't':
            tp[i] += h
            tm[i] -= h
        else:
            rp += h
            rm -= h
        fp = psi(SpherePoint(tuple(sp), tuple(tp), rp))
        fm = psi(SpherePoint(tuple(sm), tuple(tm), rm))
        J[:, col] = (np.array(fp) - np.array(fm)) / (2.0 * h)
    return abs(float(np.linalg.det(J)))


def _simplex_grid(n, grid):
    """Uniform grid on the (n-1)-simplex with boundary weights halved.

    Returns (points, weights); weights sum to the simplex volume
    1/(n-1)!.  For n = 1 a single unit-weight empty point is returned.
    """
    if n == 1:
        return [()], np.array([1.0])
    m = int(grid)
    step = 1.0 / m
    nodes = np.linspace(0.0, 1.0, m + 1)
    pts = []
    wts = []
    for combo in itertools.product(range(m + 1), repeat=n - 1):
        ssum = sum(combo) * step
        if ssum > 1.0 + 1e-12:
            continue
        w = step ** (n - 1)
        for c in combo:
            if c == 0 or c == m:
                w *= 0.5
        # the diagonal facet needs its own halving only when it cuts
        # through cells; for n = 2 it is the endpoint already halved above
        if n > 2 and abs(ssum - 1.0) < 1e-12:
            w *= 0.5
        pts.append(tuple(nodes[c] for c in combo))
        wts.append(w)
    return pts, np.array(wts)


def complex_pairing(v, z):
    """The real pairing (v, z) = Re <v, z> on C^n."""
    v = np.asarray(v, dtype=complex)
    z = np.asarray(z, dtype=complex)
    return float(np.real(np.sum(v * np.conj(z))))


def _angle_mesh(n, grid):
    m = int(grid)
    th = 2.0 * math.pi * np.arange(m) / m
    mesh = np.meshgrid(*([th] * n), indexing='ij')
    return np.stack([a.reshape(-1) for a in mesh], axis=-1), (
        2.0 * math.pi / m) ** n


def sphere_integral(f, n, grid=64):
    """Normalized invariant integral of f over the unit sphere of C^n.

    ((n-1)!/(2pi)^n) int_simplex int_torus f(psi(s, t, 1)) dt ds via
    periodic trapezoid in the angles and the simplex grid in s.  f is
    called on complex point arrays of shape (m, n).
    """
    n = int(n)
    spts, swts = _simplex_grid(n, grid)
    angles, aw = _angle_mesh(n, grid)
    phases = np.exp(1j * angles)            # (m, n)
    norm = math.factorial(n - 1) / (2.0 * math.pi) ** n
    total = 0.0
    for s, w in zip(spts, swts):
        radii = np.array([math.sqrt(v) for v in s]
                         + [math.sqrt(max(1.0 - sum(s), 0.0))])
        vals = f(phases * radii)
        total += w * aw * np.sum(vals)
    return norm * total


def ball_integral_check(f, n, grid=200):
    """Both sides of the ball decomposition of Lebesgue measure.

    lhs: midpoint product grid over [-1,1]^{2n} with the ball indicator;
    rhs: int_0^1 rho^{2n-1} [unnormalized sphere integral of f(rho .)]
    / 2^{n-1} drho, the unnormalized sphere measure carrying total mass
    (2pi)^n/(n-1)!.  f is called on complex arrays of shape (m, n).
    """
    n = int(n)
    m = int(grid)
    step = 2.0 / m
    axis = -1.0 + step * (np.arange(m) + 0.5)
    if n == 1:
        X, Y = np.meshgrid(axis, axis, indexing='ij')
        W = X + 1j * Y
        inside = (np.abs(W) <= 1.0).reshape(-1)
        vals = f(W.reshape(-1, 1)[inside])
        lhs = float(np.real(np.sum(vals))) * step ** 2
    elif n == 2:
        X, Y = np.meshgrid(axis, axis, indexing='ij')
        W1 = (X + 1j * Y).reshape(-1)
        r1sq = np.abs(W1) ** 2
        keep = W1[r1sq < 1.0]
        lhs = 0.0
        block = 64
        for lo in range(0, keep.shape[0], block):
            w1 = keep[lo: lo + block]
            pairs_first = np.repeat(w1, W1.shape[0])
            pairs_second = np.tile(W1, w1.shape[0])
            inside = (np.abs(pairs_first) ** 2
                      + np.abs(pairs_second) ** 2) <= 1.0
            pts = np.stack([pairs_first[inside], pairs_second[inside]],
                           axis=-1)
            lhs += float(np.real(np.sum(f(pts))))
        lhs *= step ** 4
    else:
        raise ValueError('direct grid oracle supports n in {1, 2}')
    # radial quadrature of the decomposed side
    nodes, wts = np.polynomial.legendre.leggauss(64)
    rho = 0.5 * (nodes + 1.0)
    rw = 0.5 * wts
    mass = (2.0 * math.pi) ** n / math.factorial(n - 1)
    rhs = 0.0
    for r, w in zip(rho, rw):
        avg = sphere_integral(lambda v: f(r * v), n,
                              grid=min(grid, 64))
        rhs += w * r ** (2 * n - 1) * (avg * mass) / 2.0 ** (n - 1)
    return lhs, float(np.real(rhs))


def haar_unitary_integral(r, z, samples, seed=0):
    """Monte-Carlo mean of exp(-i (B v_r, z)) over Haar-random unitaries.

    Returns (mean, standard_error).
    """
    z = np.asarray(z, dtype=complex).reshape(-1)
    n = z.shape[0]
    r = float(r)
    samples = int(samples)
    if samples < 1:
        raise ValueError('need at least one sample')
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((samples, n, n)) + 1j * rng.standard_normal(
        (samples, n, n))
    Q, R = np.linalg.qr(G)
    d = np.einsum('kii->ki', R)
    Q = Q * (d / np.abs(d))[:, None, :]
    v = r * Q[:, :, -1]                     # B v_r, the scaled last column
    pair = np.real(np.sum(v * np.conj(z)[None, :], axis=-1))
    vals = np.exp(-1j * pair)
    mean = complex(np.mean(vals))
    err = float(np.std(vals) / math.sqrt(samples))
    return mean, err
