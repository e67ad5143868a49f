"""Points of the dual g_n*, the coadjoint action and orbit parameterizations.

A functional is a triple (U, u, x) with U skew-Hermitian, u a complex
n-vector and x real.  The three orbit families are carried by a tagged
union: Generic (lam, alpha), Intermediate (mu, r) and Character (lam).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .matrixcore import cross, frobenius, is_skew_hermitian, j_diag
from .weights import DominantWeight

__all__ = [
    'Functional',
    'GroupElement',
    'GenericOrbit',
    'IntermediateOrbit',
    'CharacterOrbit',
    'OrbitParam',
    'coadjoint_act',
    'base_functional',
    'v_r',
    'orbit_point_generic',
    'orbit_point_intermediate',
    'functional_distance',
    'stabilizer_member',
    'param_to_json',
    'param_from_json',
    'functional_to_json',
]


@dataclass
class Functional:
    """A point (U, u, x) of g_n*."""

    U: np.ndarray
    u: np.ndarray
    x: float

    def __post_init__(self):
        self.U = np.asarray(self.U, dtype=complex)
        self.u = np.asarray(self.u, dtype=complex).reshape(-1)
        self.x = float(self.x)
        if self.U.shape != (self.u.shape[0], self.u.shape[0]):
            raise ValueError('U and u dimensions disagree')
        if not is_skew_hermitian(self.U):
            raise ValueError('U must be skew-Hermitian')

    @property
    def n(self):
        return self.u.shape[0]


@dataclass
class GroupElement:
    """An element (A, z, t) of G_n = U(n) x H_n."""

    A: np.ndarray
    z: np.ndarray
    t: float

    def __post_init__(self):
        self.A = np.asarray(self.A, dtype=complex)
        self.z = np.asarray(self.z, dtype=complex).reshape(-1)
        self.t = float(self.t)
        n = self.z.shape[0]
        if self.A.shape != (n, n):
            raise ValueError('A and z dimensions disagree')
        if frobenius(self.A @ self.A.conj().T - np.eye(n)) > 1e-10:
            raise ValueError('A must be unitary')

    @property
    def n(self):
        return self.z.shape[0]


@dataclass(frozen=True)
class GenericOrbit:
    lam: tuple
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, 'lam', DominantWeight(self.lam).entries)
        object.__setattr__(self, 'alpha', float(self.alpha))
        if self.alpha == 0.0:
            raise ValueError('generic orbit needs alpha != 0')

    @property
    def n(self):
        return len(self.lam)


@dataclass(frozen=True)
class IntermediateOrbit:
    mu: tuple
    r: float

    def __post_init__(self):
        object.__setattr__(self, 'mu', DominantWeight(self.mu).entries)
        object.__setattr__(self, 'r', float(self.r))
        if self.r <= 0.0:
            raise ValueError('intermediate orbit needs r > 0')

    @property
    def n(self):
        return len(self.mu) + 1


@dataclass(frozen=True)
class CharacterOrbit:
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, 'lam', DominantWeight(self.lam).entries)

    @property
    def n(self):
        return len(self.lam)


OrbitParam = Union[GenericOrbit, IntermediateOrbit, CharacterOrbit]


def coadjoint_act(g: GroupElement, ell: Functional) -> Functional:
    """Ad*(g) applied to (U, u, x); the third slot is invariant."""
    if g.n != ell.n:
        raise ValueError('dimension mismatch')
    A, z, x = g.A, g.z, ell.x
    Au = A @ ell.u
    U = A @ ell.U @ A.conj().T + cross(z, Au) + (x / 2.0) * cross(z, z)
    return Functional(U, Au + x * z, x)


def v_r(n, r):
    v = np.zeros(int(n), dtype=complex)
    v[-1] = float(r)
    return v


def base_functional(p: OrbitParam) -> Functional:
    """The base points ell_{lam,alpha}, ell_{mu,r} and ell_lam."""
    if isinstance(p, GenericOrbit):
        return Functional(j_diag(p.lam), np.zeros(p.n), p.alpha)
    if isinstance(p, IntermediateOrbit):
        return Functional(j_diag(p.mu, size=p.n), v_r(p.n, p.r), 0.0)
    if isinstance(p, CharacterOrbit):
        return Functional(j_diag(p.lam), np.zeros(p.n), 0.0)
    raise TypeError('not an orbit parameter: %r' % (p,))


def orbit_point_generic(lam, alpha, A, z) -> Functional:
    """The proof's point (A(J_lam + (i/alpha) z z*)A*, sqrt(2) A z, alpha).

    Lies on the orbit of ell_{lam,alpha}: it equals the coadjoint image of
    ell_{lam,alpha} under (A, sqrt(2) A z / alpha, 0).
    """
    alpha = float(alpha)
    if alpha == 0.0:
        raise ValueError('alpha must be nonzero')
    A = np.asarray(A, dtype=complex)
    z = np.asarray(z, dtype=complex).reshape(-1)
    U = A @ (j_diag(lam) + (1j / alpha) * np.outer(z, z.conj())) @ A.conj().T
    return Functional(U, math.sqrt(2.0) * (A @ z), alpha)


def orbit_point_intermediate(mu, r, A, w) -> Functional:
    """A point (A(J_mu (+) 0 + w)A*, A v_r, 0) of the orbit of ell_{mu,r}.

    w must lie in the span of cross(z, v_r): its upper-left block of size
    (n-1) x (n-1) vanishes.
    """
    mu = tuple(int(v) for v in mu)
    n = len(mu) + 1
    A = np.asarray(A, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if frobenius(w[: n - 1, : n - 1]) > 1e-12 * (1.0 + frobenius(w)):
        raise ValueError('w outside the admissible span')
    U = A @ (j_diag(mu, size=n) + w) @ A.conj().T
    return Functional(U, A @ v_r(n, r), 0.0)


def functional_distance(l1: Functional, l2: Functional) -> float:
    if l1.n != l2.n:
        raise ValueError('rank mismatch')
    du = frobenius(l1.U - l2.U)
    dv = float(np.linalg.norm(l1.u - l2.u))
    return math.sqrt(du * du + dv * dv + (l1.x - l2.x) ** 2)


def stabilizer_member(p: OrbitParam, g: GroupElement, tol=1e-9) -> bool:
    base = base_functional(p)
    return functional_distance(coadjoint_act(g, base), base) <= tol


def param_to_json(p: OrbitParam) -> dict:
    if isinstance(p, GenericOrbit):
        return {'kind': 'generic', 'lambda': list(p.lam), 'alpha': p.alpha}
    if isinstance(p, IntermediateOrbit):
        return {'kind': 'intermediate', 'mu': list(p.mu), 'r': p.r}
    if isinstance(p, CharacterOrbit):
        return {'kind': 'character', 'lambda': list(p.lam)}
    raise TypeError('not an orbit parameter: %r' % (p,))


def param_from_json(d: dict) -> OrbitParam:
    kind = d.get('kind')
    if kind == 'generic':
        return GenericOrbit(tuple(d['lambda']), float(d['alpha']))
    if kind == 'intermediate':
        return IntermediateOrbit(tuple(d['mu']), float(d['r']))
    if kind == 'character':
        return CharacterOrbit(tuple(d['lambda']))
    raise ValueError('unknown orbit kind: %r' % (kind,))


def functional_to_json(ell: Functional) -> dict:
    mat = [[[float(v.real), float(v.imag)] for v in row] for row in ell.U]
    vec = [[float(v.real), float(v.imag)] for v in ell.u]
    return {'U': mat, 'u': vec, 'x': ell.x}
