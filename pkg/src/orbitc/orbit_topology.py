"""Convergence calculus on the orbit space.

Sequence descriptors sample rule-generated sequences of orbit parameters.
``is_limit_orbit`` decides the six-case limit criterion on the sampled
tail, ``witness_points`` / ``verify_convergence`` realize the limits by
explicit orbit points, ``rep_side_limit`` re-evaluates the same verdicts
through the representation-side condition sets (center and sub-Laplacian
invariants, Pieri membership, characters, branching), and
``homeomorphism_check`` confirms the two agree.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .coadjoint import (CharacterOrbit, Functional, GenericOrbit,
                        IntermediateOrbit, base_functional,
                        functional_distance, orbit_point_generic, v_r)
from .inverse_spectral import InterlacingError, build_arrowhead, build_rank_one
from .matrixcore import arrowhead, eig_hermitian, j_diag
from .weights import (dominant_tuples, interlaces_down, precsim, schur_eval,
                      weight_sum, weyl_dim)

__all__ = [
    'DescriptorError',
    'WitnessError',
    'SequenceDescriptor',
    'LimitReport',
    'is_limit_orbit',
    'enumerate_limit_orbits',
    'witness_points',
    'verify_convergence',
    'rep_side_limit',
    'homeomorphism_check',
    'spectral_invariant_sublaplacian',
    'center_invariant',
]


class DescriptorError(ValueError):
    pass


class WitnessError(RuntimeError):
    pass


def _rule_values(rule, K):
    """Sample a scalar rule at k = 1..K."""
    kind = rule.get('rule')
    k = np.arange(1, K + 1, dtype=float)
    if kind == 'list':
        vals = np.asarray(rule['values'], dtype=float)
        if vals.shape[0] < K:
            raise DescriptorError('explicit list shorter than K')
        return vals[:K]
    if kind == 'const':
        return np.full(K, float(rule['c']))
    off = float(rule.get('offset', 0.0))
    if kind == 'harmonic':
        return off + float(rule['c']) / k
    if kind == 'power':
        return off + float(rule['c']) / k ** float(rule['p'])
    if kind == 'linear':
        return off + float(rule['c']) * k
    if kind == 'geometric':
        q = float(rule['q'])
        if not abs(q) < 1.0:
            raise DescriptorError('geometric rule needs |q| < 1')
        return off + float(rule['c']) * q ** k
    raise DescriptorError('unknown rule: %r' % (kind,))


def _rule_limit(rule):
    """Analytic limit of a scalar rule; None for explicit lists, +-inf for
    divergent linear rules."""
    kind = rule.get('rule')
    if kind == 'list':
        return None
    if kind == 'const':
        return float(rule['c'])
    if kind == 'linear':
        c = float(rule['c'])
        if c == 0.0:
            return float(rule.get('offset', 0.0))
        return math.inf if c > 0 else -math.inf
    if kind == 'power':
        p = float(rule['p'])
        if p <= 0.0:
            raise DescriptorError('power rule needs p > 0')
        return float(rule.get('offset', 0.0))
    if kind in ('harmonic', 'geometric'):
        return float(rule.get('offset', 0.0))
    raise DescriptorError('unknown rule: %r' % (kind,))


@dataclass
class SequenceDescriptor:
    """A rule-generated or explicitly listed sequence of orbit parameters.

    kind='generic' carries alpha plus lam = {'head': (n-1)-tuple,
    'tail': rule}; the tail rule may be 'const'/'list' or the linked rule
    {'rule': 'linked', 'c': c} sampling round(c / alpha_k).  The moving
    entry sits last when alpha_k > 0 and first when alpha_k < 0.
    kind='intermediate' carries mu ('const' values or 'list' of tuples)
    and r.  kind='character' carries lam the same way as mu.
    """

    n: int
    kind: str = 'generic'
    alpha: dict | None = None
    lam: dict | None = None
    mu: dict | None = None
    r: dict | None = None
    K: int = 10000
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.n = int(self.n)
        self.K = int(self.K)
        if self.n < 1 or self.K < 8:
            raise DescriptorError('need n >= 1 and K >= 8')
        if self.kind not in ('generic', 'intermediate', 'character'):
            raise DescriptorError('unknown sequence kind %r' % (self.kind,))
        if self.kind == 'generic' and (self.alpha is None or self.lam is None):
            raise DescriptorError('generic sequences need alpha and lambda')
        if self.kind == 'intermediate' and (self.mu is None or self.r is None):
            raise DescriptorError('intermediate sequences need mu and r')
        if self.kind == 'character' and self.lam is None:
            raise DescriptorError('character sequences need lambda')

    @classmethod
    def from_json(cls, d):
        try:
            return cls(n=d['n'], kind=d.get('kind', 'generic'),
                       alpha=d.get('alpha'), lam=d.get('lambda'),
                       mu=d.get('mu'), r=d.get('r'),
                       K=d.get('K', 10000))
        except (KeyError, TypeError) as exc:
            raise DescriptorError('malformed descriptor: %s' % (exc,))

    @property
    def tail_start(self):
        """First index of the final quarter of the samples."""
        return self.K - math.ceil(self.K / 4)

    def alpha_values(self):
        if 'alpha' not in self._cache:
            if self.kind != 'generic':
                raise DescriptorError('alpha only set on generic sequences')
            a = _rule_values(self.alpha, self.K)
            if np.any(a == 0.0):
                raise DescriptorError('sampled alpha_k must be nonzero')
            self._cache['alpha'] = a
        return self._cache['alpha']

    def lam_values(self):
        """Sampled weights, an integer array of shape (K, n)."""
        if 'lam' in self._cache:
            return self._cache['lam']
        if self.kind == 'character':
            vals = self._tuple_rule_values(self.lam, self.n)
        else:
            head = tuple(int(v) for v in self.lam.get('head', ()))
            if len(head) != self.n - 1:
                raise DescriptorError('head must have n-1 entries')
            tail_rule = self.lam['tail']
            if tail_rule.get('rule') == 'linked':
                a = self.alpha_values()
                tail = np.rint(float(tail_rule['c']) / a).astype(int)
            elif tail_rule.get('rule') == 'const':
                tail = np.full(self.K, int(tail_rule['c']), dtype=int)
            else:
                tail = np.rint(_rule_values(tail_rule, self.K)).astype(int)
            a = self.alpha_values()
            vals = np.empty((self.K, self.n), dtype=int)
            head_arr = np.array(head, dtype=int)
            pos = a > 0
            vals[pos, : self.n - 1] = head_arr
            vals[pos, self.n - 1] = tail[pos]
            vals[~pos, 1:] = head_arr
            vals[~pos, 0] = tail[~pos]
            bad = np.any(vals[:, :-1] < vals[:, 1:], axis=1)
            if np.any(bad[self.tail_start:]):
                raise DescriptorError('sampled lambda^k not dominant on tail')
        self._cache['lam'] = vals
        return vals

    def mu_values(self):
        if 'mu' not in self._cache:
            self._cache['mu'] = self._tuple_rule_values(self.mu, self.n - 1)
        return self._cache['mu']

    def r_values(self):
        if 'r' not in self._cache:
            rv = _rule_values(self.r, self.K)
            if np.any(rv <= 0.0):
                raise DescriptorError('sampled r_k must be positive')
            self._cache['r'] = rv
        return self._cache['r']

    def _tuple_rule_values(self, rule, width):
        kind = rule.get('rule', 'const')
        if kind == 'const':
            row = np.array([int(v) for v in rule['values']], dtype=int)
            if row.shape[0] != width:
                raise DescriptorError('tuple rule has wrong width')
            vals = np.tile(row, (self.K, 1))
        elif kind == 'list':
            vals = np.asarray(rule['values'], dtype=int)
            if vals.shape[0] < self.K or vals.shape[1] != width:
                raise DescriptorError('tuple list has wrong shape')
            vals = vals[: self.K]
        else:
            raise DescriptorError('unknown tuple rule %r' % (kind,))
        if np.any(vals[:, :-1] < vals[:, 1:]):
            raise DescriptorError('sampled weights must be nonincreasing')
        return vals

    # -- analytic limits ---------------------------------------------------

    def alpha_limit(self):
        lim = _rule_limit(self.alpha)
        if lim is None:
            lim = float(self.alpha_values()[-1])
        return lim

    def r_limit(self):
        lim = _rule_limit(self.r)
        if lim is None:
            lim = float(self.r_values()[-1])
        return lim

    def alpha_tail_product_limit(self):
        """Limit of alpha_k times the moving lambda entry."""
        tail_rule = self.lam['tail']
        kind = tail_rule.get('rule')
        a_lim = _rule_limit(self.alpha)
        if kind == 'linked':
            return float(tail_rule['c'])
        if kind == 'const' and a_lim is not None:
            return a_lim * float(tail_rule['c'])
        if kind == 'linear' and self.alpha.get('rule') != 'list':
            ct = float(tail_rule['c'])
            off = float(tail_rule.get('offset', 0.0))
            a_rule = self.alpha['rule']
            a_off = float(self.alpha.get('offset', 0.0))
            if a_off != 0.0:
                if ct == 0.0:
                    return a_off * off
                return math.copysign(math.inf, a_off * ct)
            ca = float(self.alpha.get('c', 0.0))
            if a_rule == 'const':
                return math.copysign(math.inf, ca * ct) if ct else ca * off
            if a_rule == 'geometric':
                return 0.0
            p = 1.0 if a_rule == 'harmonic' else float(self.alpha['p'])
            if p > 1.0:
                return 0.0
            if p == 1.0:
                return ca * ct
            return math.copysign(math.inf, ca * ct) if ct else 0.0
        a = self.alpha_values()
        lam = self.lam_values()
        moving = np.where(a > 0, lam[:, -1], lam[:, 0]).astype(float)
        return float(a[-1] * moving[-1])


@dataclass
class LimitReport:
    target: object
    distances: list
    converged: bool
    diagnostic: str | None = None


def _tol_limit(value, tol=None):
    return 1e-6 * (1.0 + abs(value)) if tol is None else tol


def _tail_sign(seq):
    """Constant sign of alpha_k on the tail, or None if it flips."""
    a = seq.alpha_values()[seq.tail_start:]
    if np.all(a > 0):
        return 1
    if np.all(a < 0):
        return -1
    return None


def is_limit_orbit(seq: SequenceDescriptor, target, tol=None) -> bool:
    """Decide whether the orbit sequence converges to the target orbit.

    Evaluates the six-case criterion on the sampled tail (the final
    quarter of the K samples); numeric limits compare against the rules'
    analytic limits with tolerance 1e-6 * (1 + |limit|) unless a caller
    tolerance is supplied for explicit lists.
    """
    if seq.kind == 'generic':
        a_lim = seq.alpha_limit()
        lam = seq.lam_values()[seq.tail_start:]
        if isinstance(target, GenericOrbit):
            if target.n != seq.n:
                return False
            if abs(a_lim - target.alpha) > _tol_limit(target.alpha, tol):
                return False
            return bool(np.all(lam == np.array(target.lam)))
        if isinstance(target, IntermediateOrbit):
            if target.n != seq.n:
                return False
            if abs(a_lim) > _tol_limit(0.0, tol):
                return False
            sign = _tail_sign(seq)
            if sign is None:
                return False
            mu = np.array(target.mu)
            heads = lam[:, :-1] if sign > 0 else lam[:, 1:]
            if not np.all(heads == mu):
                return False
            prod_lim = seq.alpha_tail_product_limit()
            want = -0.5 * target.r ** 2
            return abs(prod_lim - want) <= _tol_limit(want, tol)
        if isinstance(target, CharacterOrbit):
            if target.n != seq.n:
                return False
            if abs(a_lim) > _tol_limit(0.0, tol):
                return False
            sign = _tail_sign(seq)
            if sign is None:
                return False
            tgt = target.lam
            for row in lam:
                row = tuple(int(v) for v in row)
                ok = precsim(row, tgt) if sign > 0 else precsim(tgt, row)
                if not ok:
                    return False
            prod_lim = seq.alpha_tail_product_limit()
            return abs(prod_lim) <= _tol_limit(0.0, tol)
        return False
    if seq.kind == 'intermediate':
        mu = seq.mu_values()[seq.tail_start:]
        r_lim = seq.r_limit()
        if isinstance(target, IntermediateOrbit):
            if target.n != seq.n:
                return False
            if abs(r_lim - target.r) > _tol_limit(target.r, tol):
                return False
            return bool(np.all(mu == np.array(target.mu)))
        if isinstance(target, CharacterOrbit):
            if target.n != seq.n:
                return False
            if abs(r_lim) > _tol_limit(0.0, tol):
                return False
            return all(interlaces_down(target.lam, tuple(int(v) for v in row))
                       for row in mu)
        return False
    # character sequences
    lam = seq.lam_values()[seq.tail_start:]
    if isinstance(target, CharacterOrbit) and target.n == seq.n:
        return bool(np.all(lam == np.array(target.lam)))
    return False


def enumerate_limit_orbits(seq: SequenceDescriptor, bound: int):
    """All limit targets with weight entries in [-bound, bound].

    r values are taken from the detected -r^2/2 (or r_k) limit; in the
    interlacing cases the returned list truncates an infinite limit set.
    """
    bound = int(bound)
    fixed = []
    if seq.kind == 'generic':
        fixed = [int(v) for v in seq.lam.get('head', ())]
    elif seq.kind == 'intermediate':
        if seq.mu.get('rule', 'const') == 'const':
            fixed = [int(v) for v in seq.mu['values']]
    elif seq.lam.get('rule', 'const') == 'const':
        fixed = [int(v) for v in seq.lam['values']]
    if fixed and bound < max(abs(v) for v in fixed):
        raise ValueError('bound smaller than the sampled head entries')
    cands = []
    n = seq.n
    if seq.kind == 'generic':
        a_lim = seq.alpha_limit()
        if a_lim != 0.0:
            for lam in dominant_tuples(n, -bound, bound):
                cands.append(GenericOrbit(lam, a_lim))
        else:
            prod_lim = seq.alpha_tail_product_limit()
            if prod_lim < 0.0:
                r = math.sqrt(-2.0 * prod_lim)
                for mu in dominant_tuples(n - 1, -bound, bound):
                    cands.append(IntermediateOrbit(mu, r))
            for lam in dominant_tuples(n, -bound, bound):
                cands.append(CharacterOrbit(lam))
    elif seq.kind == 'intermediate':
        r_lim = seq.r_limit()
        if r_lim > 0.0:
            for mu in dominant_tuples(n - 1, -bound, bound):
                cands.append(IntermediateOrbit(mu, r_lim))
        for lam in dominant_tuples(n, -bound, bound):
            cands.append(CharacterOrbit(lam))
    else:
        for lam in dominant_tuples(n, -bound, bound):
            cands.append(CharacterOrbit(lam))
    return [t for t in cands if is_limit_orbit(seq, t)]


def _cyclic_shift(n):
    """The permutation matrix with ones on the superdiagonal and in the
    bottom-left corner."""
    A = np.zeros((n, n), dtype=complex)
    for i in range(n - 1):
        A[i, i + 1] = 1.0
    A[n - 1, 0] = 1.0
    return A


def _diagonalizer(S, target):
    """A unitary with A S A* = J_target for skew-Hermitian S with the
    given integer spectrum."""
    w, Q = eig_hermitian(-1j * S)
    if np.max(np.abs(w - np.array(target, dtype=float))) > 1e-8 * (
            1.0 + np.max(np.abs(w))):
        raise WitnessError('constructed matrix has spectrum %r, wanted %r'
                           % (tuple(w), tuple(target)))
    return Q.conj().T


class _GenericWitness:
    """Witness tuples (A_k, z_k) for a generic orbit sequence and target."""

    def __init__(self, seq, target):
        self.seq = seq
        self.target = target
        self.n = seq.n
        self.alpha = seq.alpha_values()
        self.lam = seq.lam_values()
        if isinstance(target, GenericOrbit):
            self.mode = 'generic'
            return
        sign = _tail_sign(seq)
        if sign is None:
            raise WitnessError('alpha_k changes sign on the tail')
        self.sign = sign
        if isinstance(target, IntermediateOrbit):
            self.mode = 'intermediate'
            return
        moving = np.where(self.alpha > 0, self.lam[:, -1], self.lam[:, 0])
        bounded = bool(np.all(moving[seq.tail_start:] == moving[-1]))
        head = tuple(int(v) for v in seq.lam['head'])
        if bounded:
            self.mode = 'char_bounded'
            lam_const = tuple(int(v) for v in self.lam[-1])
            try:
                sol = build_rank_one(lam_const, target.lam, sign)
            except InterlacingError as exc:
                raise WitnessError(str(exc))
            self.ztilde = np.array(sol.zmods, dtype=complex)
            S = j_diag(lam_const) + sign * 1j * np.outer(
                self.ztilde, self.ztilde.conj())
            self.A = _diagonalizer(S, target.lam)
            return
        self.mode = 'char_unbounded'
        try:
            sol = build_arrowhead(head, target.lam)
        except InterlacingError as exc:
            raise WitnessError(str(exc))
        self.w = np.array(sol.zmods, dtype=float)
        self.x = sol.x
        if sign > 0:
            limit = arrowhead(head, self.w, self.x)
            self.A = _diagonalizer(limit, target.lam)
        else:
            n = self.n
            limit = np.zeros((n, n), dtype=complex)
            limit[0, 0] = 1j * self.x
            for j in range(1, n):
                limit[j, j] = 1j * head[j - 1]
                limit[0, j] = -self.w[j - 1]
                limit[j, 0] = self.w[j - 1]
            self.A = _diagonalizer(limit, target.lam)

    def pair(self, k):
        """(A_k, z_k) at sample index k (1-based)."""
        i = k - 1
        a = self.alpha[i]
        lam = self.lam[i]
        n = self.n
        z = np.zeros(n, dtype=complex)
        if self.mode == 'generic':
            return np.eye(n, dtype=complex), z
        if self.mode == 'intermediate':
            if self.sign > 0:
                z[-1] = math.sqrt(max(-a * lam[-1], 0.0))
                return np.eye(n, dtype=complex), z
            z[0] = math.sqrt(max(-a * lam[0], 0.0))
            return _cyclic_shift(n), z
        if self.mode == 'char_bounded':
            return self.A, self.ztilde * math.sqrt(abs(a))
        if self.sign > 0:
            zn = math.sqrt(max(a * (self.x - lam[-1]), 0.0))
            if zn == 0.0:
                raise WitnessError('degenerate witness scale at k=%d' % k)
            z[: n - 1] = 1j * a * self.w / zn
            z[n - 1] = zn
            return self.A, z
        z1 = math.sqrt(max(a * (self.x - lam[0]), 0.0))
        if z1 == 0.0:
            raise WitnessError('degenerate witness scale at k=%d' % k)
        z[0] = z1
        z[1:] = -1j * a * self.w / z1
        return self.A, z

    def point(self, k):
        i = k - 1
        A, z = self.pair(k)
        return orbit_point_generic(tuple(int(v) for v in self.lam[i]),
                                   self.alpha[i], A, z)


class _NonGenericWitness:
    """Orbit points for intermediate and character sequences."""

    def __init__(self, seq, target):
        self.seq = seq
        self.target = target
        self.n = seq.n
        if isinstance(target, GenericOrbit):
            raise WitnessError(
                'the center forces alpha = 0 on every limit of this family')
        if seq.kind == 'intermediate':
            self.mu = seq.mu_values()
            self.r = seq.r_values()
            if isinstance(target, CharacterOrbit):
                self.mode = 'char'
                mu_const = tuple(int(v) for v in self.mu[-1])
                if not np.all(self.mu[seq.tail_start:] == self.mu[-1]):
                    raise WitnessError('mu^k not eventually constant')
                try:
                    sol = build_arrowhead(mu_const, target.lam)
                except InterlacingError as exc:
                    raise WitnessError(str(exc))
                limit = arrowhead(mu_const, np.array(sol.zmods), sol.x)
                self.A = _diagonalizer(limit, target.lam)
                self.warrow = limit - j_diag(mu_const, size=self.n)
            else:
                self.mode = 'intermediate'
        else:
            self.lam = seq.lam_values()
            if not isinstance(target, CharacterOrbit):
                raise WitnessError('character sequences only converge to '
                                   'characters')
            self.mode = 'char_seq'

    def point(self, k):
        i = k - 1
        n = self.n
        if self.mode == 'intermediate':
            mu = tuple(int(v) for v in self.mu[i])
            return Functional(j_diag(mu, size=n), v_r(n, self.r[i]), 0.0)
        if self.mode == 'char':
            mu = tuple(int(v) for v in self.mu[i])
            U = self.A @ (j_diag(mu, size=n) + self.warrow) @ self.A.conj().T
            return Functional(U, self.A @ v_r(n, self.r[i]), 0.0)
        lam = tuple(int(v) for v in self.lam[i])
        return Functional(j_diag(lam), np.zeros(n), 0.0)


def _witness(seq, target):
    if seq.kind == 'generic':
        return _GenericWitness(seq, target)
    return _NonGenericWitness(seq, target)


def witness_points(seq: SequenceDescriptor, target, k):
    """The proof's witness pair (A_k, z_k) at sample k for a generic
    sequence converging to the target."""
    if seq.kind != 'generic':
        raise WitnessError('witness pairs are defined for generic sequences')
    if not is_limit_orbit(seq, target):
        raise WitnessError('target is not a limit of the sequence')
    return _GenericWitness(seq, target).pair(int(k))


def verify_convergence(seq: SequenceDescriptor, target, tol,
                       ks=None) -> LimitReport:
    """Numerically drive witness orbit points toward the target base point.

    distances[j] is the functional distance at the j-th sampled k; the
    report converges when the final distance drops below tol.  Witness
    construction failure is reported as non-convergence with a diagnostic.
    """
    if ks is None:
        ks = range(1, seq.K + 1)
    try:
        gen = _witness(seq, target)
    except WitnessError as exc:
        return LimitReport(target, [], False, diagnostic=str(exc))
    base = base_functional(target)
    distances = []
    try:
        for k in ks:
            distances.append(functional_distance(gen.point(int(k)), base))
    except WitnessError as exc:
        return LimitReport(target, distances, False, diagnostic=str(exc))
    converged = bool(distances) and distances[-1] < tol
    return LimitReport(target, distances, converged)


# -- representation-side evaluation ---------------------------------------

def _torus_points(n):
    rng = np.random.default_rng(20240 + n)
    pts = []
    for _ in range(3):
        pts.append(tuple(np.exp(2j * np.pi * rng.random(n))))
    return pts


def _same_irrep(a, b):
    """Equality of irreducible characters, decided by dimension plus
    Schur evaluation at fixed random torus points."""
    a = tuple(int(v) for v in a)
    b = tuple(int(v) for v in b)
    if len(a) != len(b):
        return False
    if weyl_dim(a) != weyl_dim(b):
        return False
    for x in _torus_points(len(a)):
        va = schur_eval(a, x)
        vb = schur_eval(b, x)
        if abs(va - vb) > 1e-8 * (1.0 + abs(va) + abs(vb)):
            return False
    return True


def _pieri_contains(lam, cand, direction):
    """Whether cand occurs in the Pieri expansion of tau_lam with the
    symmetric power of matching degree."""
    lam = tuple(int(v) for v in lam)
    cand = tuple(int(v) for v in cand)
    if direction > 0:
        return weight_sum(cand) >= weight_sum(lam) and precsim(lam, cand)
    return weight_sum(cand) <= weight_sum(lam) and precsim(cand, lam)


def _occurs_in_restriction(lam, mu):
    """Whether rho_mu occurs in tau_lam restricted to U(n-1), decided by
    scanning the interlacing rows below lam."""
    lam = tuple(int(v) for v in lam)
    mu = tuple(int(v) for v in mu)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    return any(row == mu for row in itertools.product(*ranges))


def rep_side_limit(seq: SequenceDescriptor, target, tol=None) -> bool:
    """The dual-space verdict from the representation-theorem conditions.

    Independent evaluation path: the center invariant drives alpha limits,
    the sub-Laplacian invariant drives the -r^2 limits, head equalities are
    recovered from Pieri membership of the doubled weights, and eventual
    weight equality is decided by character comparison.
    """
    if seq.kind == 'generic':
        tail = range(seq.tail_start, seq.K)
        a = seq.alpha_values()
        lam = seq.lam_values()
        a_lim = seq.alpha_limit()
        if isinstance(target, GenericOrbit):
            if target.n != seq.n:
                return False
            if abs(a_lim - target.alpha) > _tol_limit(target.alpha, tol):
                return False
            if a_lim == 0.0:
                return False
            return all(_same_irrep(lam[i], target.lam) for i in tail)
        if abs(a_lim) > _tol_limit(0.0, tol):
            return False
        sign = _tail_sign(seq)
        if sign is None:
            return False
        n = seq.n
        prod_lim = seq.alpha_tail_product_limit()
        if isinstance(target, IntermediateOrbit):
            if target.n != seq.n:
                return False
            mu = target.mu
            for s in range(n - 1):
                doubled = mu[: s + 1] + (mu[s],) + mu[s + 1:]
                for i in tail:
                    if not _pieri_contains(lam[i], doubled, sign):
                        return False
            # sub-Laplacian invariant limit equals -r^2
            sub_lim = 2.0 * prod_lim
            return abs(sub_lim + target.r ** 2) <= _tol_limit(
                target.r ** 2, tol)
        if isinstance(target, CharacterOrbit):
            if target.n != seq.n:
                return False
            for i in tail:
                if not _pieri_contains(lam[i], target.lam, sign):
                    return False
            return abs(2.0 * prod_lim) <= _tol_limit(0.0, tol)
        return False
    if seq.kind == 'intermediate':
        tail = range(seq.tail_start, seq.K)
        mu = seq.mu_values()
        r_lim = seq.r_limit()
        if isinstance(target, IntermediateOrbit):
            if target.n != seq.n:
                return False
            if abs(r_lim - target.r) > _tol_limit(target.r, tol):
                return False
            return all(_same_irrep(mu[i], target.mu) for i in tail)
        if isinstance(target, CharacterOrbit):
            if target.n != seq.n:
                return False
            if abs(r_lim) > _tol_limit(0.0, tol):
                return False
            return all(_occurs_in_restriction(target.lam, tuple(mu[i]))
                       for i in tail)
        return False
    tail = range(seq.tail_start, seq.K)
    lam = seq.lam_values()
    if isinstance(target, CharacterOrbit) and target.n == seq.n:
        return all(_same_irrep(lam[i], target.lam) for i in tail)
    return False


def homeomorphism_check(seq: SequenceDescriptor, targets, tol=None) -> bool:
    """Instance check of the orbit-space / dual-space homeomorphism."""
    return all(is_limit_orbit(seq, t, tol) == rep_side_limit(seq, t, tol)
               for t in targets)


def spectral_invariant_sublaplacian(seq: SequenceDescriptor, k) -> float:
    """-alpha_k (n + 2 mu_{n-1} - 2 lambda_n^k) at sample k.

    Defined on generic descriptors with alpha_k > 0 (the case-(i) branch);
    converges to -r^2 toward an intermediate limit and to 0 toward a
    character.
    """
    if seq.kind != 'generic':
        raise ValueError('sub-Laplacian invariant needs a generic sequence')
    i = int(k) - 1
    a = float(seq.alpha_values()[i])
    if a <= 0:
        raise ValueError('case-(i) branch needs alpha_k > 0')
    lam = seq.lam_values()[i]
    head_last = int(lam[-2]) if seq.n >= 2 else 0
    return -a * (seq.n + 2 * head_last - 2 * int(lam[-1]))


def center_invariant(seq: SequenceDescriptor, k) -> float:
    """The central derivative scale alpha_k at sample k."""
    return float(seq.alpha_values()[int(k) - 1])
