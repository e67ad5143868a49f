"""Scalar Fock-space computations.

Hermite monomial basis of the Fock space with Gaussian weight
exp(-alpha |w|^2 / 2), the closed-form diagonal matrix coefficients of the
projective Heisenberg action, their layer average zeta, the Bessel-series
sphere target, the limit gap, and the unitary action of U(n) on a
homogeneous layer.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    'dim_homog',
    'hermite_fn',
    'sigma_action',
    'diag_coeff',
    'fock_inner_numeric',
    'fock_pair_numeric',
    'zeta',
    'bessel_sphere_target',
    'limit_gap',
    'monomials_of_degree',
    'w_action_matrix',
    'sub_laplacian_diag',
]

_TERM_TOL = 1e-14
_J_CAP = 60


def dim_homog(N, n) -> int:
    """Dimension of the degree-N homogeneous layer in n variables."""
    return math.comb(int(N) + int(n) - 1, int(n) - 1)


def hermite_fn(q, alpha):
    """The normalized Hermite basis monomial h_{q,alpha}.

    h(w) = (alpha/2pi)^{n/2} sqrt(alpha^{|q|} / (2^{|q|} q!)) w^q, a unit
    vector for the pairing with weight exp(-alpha |w|^2 / 2).  The returned
    callable is vectorized over point arrays of shape (..., n).
    """
    q = tuple(int(v) for v in q)
    alpha = float(alpha)
    n = len(q)
    aq = sum(q)
    norm = (alpha / (2.0 * math.pi)) ** (n / 2.0) * math.sqrt(
        alpha ** aq / (2.0 ** aq * math.prod(math.factorial(v) for v in q)))

    def h(w):
        w = np.asarray(w, dtype=complex)
        out = np.full(w.shape[:-1], norm, dtype=complex)
        for i in range(n):
            out = out * w[..., i] ** q[i]
        return out

    return h


def sigma_action(f, alpha, z, t):
    """The projective Heisenberg action applied to an entire function:
    (sigma(z,t) f)(w) = exp(i alpha t - alpha|z|^2/4 - (alpha/2) <w,z>) f(w+z).
    """
    alpha = float(alpha)
    z = np.asarray(z, dtype=complex).reshape(-1)
    t = float(t)
    zz = float(np.sum(np.abs(z) ** 2))
    pref = np.exp(1j * alpha * t - alpha * zz / 4.0)

    def g(w):
        w = np.asarray(w, dtype=complex)
        pairing = np.sum(w * z.conj(), axis=-1)
        return pref * np.exp(-0.5 * alpha * pairing) * f(w + z)

    return g


def _coord_sum(q, c):
    """sum_{j=0}^{q} c^j * q!/(q-j)! / (j!)^2 for one coordinate."""
    total = 1.0
    term = 1.0
    for j in range(1, q + 1):
        term *= c * (q - j + 1) / (j * j)
        total += term
        if abs(term) < _TERM_TOL and j > 2:
            break
    return total


def _coord_sum_table(qmax, c):
    """_coord_sum(q, c) for every q in 0..qmax."""
    return [_coord_sum(q, c) for q in range(qmax + 1)]


def _index_sums(q, z2):
    """sum over 0 <= j <= q of prod_i z2_i^{j_i} q_i!/(q_i-j_i)! /(j_i!)^2;
    the sum factorizes over coordinates."""
    return math.prod(_coord_sum(q[i], z2[i]) for i in range(len(q)))


def diag_coeff(q, alpha, z, t):
    """The diagonal matrix coefficient <sigma(z,t) h_q, h_q>.

    Closed form exp(i alpha t - alpha|z|^2/4) *
    sum_{j<=q} (alpha/2)^{|j|} q!/(q-j)! z^j (-conj z)^j / (j!)^2.
    """
    q = tuple(int(v) for v in q)
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError('alpha must be positive')
    z = np.asarray(z, dtype=complex).reshape(-1)
    t = float(t)
    zz = float(np.sum(np.abs(z) ** 2))
    z2 = [-(alpha / 2.0) * abs(v) ** 2 for v in z]
    return complex(np.exp(1j * alpha * t - alpha * zz / 4.0)
                   * _index_sums(q, z2))


def _quad_nodes(alpha, degree, reach):
    """Radial Gauss-Legendre nodes on [0, R] and uniform angles."""
    R = (reach + 8.0) / math.sqrt(alpha)
    x, wts = np.polynomial.legendre.leggauss(int(degree))
    r = 0.5 * R * (x + 1.0)
    rw = 0.5 * R * wts
    m = max(2 * int(degree), 16)
    th = 2.0 * math.pi * np.arange(m) / m
    tw = 2.0 * math.pi / m
    return r, rw, th, tw


def fock_pair_numeric(f, g, n, alpha, degree=None, reach=4.0):
    """Quadrature value of integral f(w) conj(g(w)) exp(-alpha|w|^2/2) dw
    over C^n, n in {1, 2}; polar product rule per coordinate."""
    n = int(n)
    alpha = float(alpha)
    if n not in (1, 2):
        raise ValueError('quadrature oracle supports n in {1, 2}')
    if degree is None:
        degree = 80 if n == 1 else 32
    r, rw, th, tw = _quad_nodes(alpha, degree, reach)
    pts = (r[:, None] * np.exp(1j * th)[None, :]).reshape(-1)
    wts = ((rw * r * np.exp(-0.5 * alpha * r ** 2))[:, None]
           * np.full(th.shape[0], tw)).reshape(-1)
    if n == 1:
        w = pts[:, None]
        vals = f(w) * np.conj(g(w))
        return complex(np.sum(vals * wts))
    w1, w2 = np.meshgrid(pts, pts, indexing='ij')
    w = np.stack([w1.reshape(-1), w2.reshape(-1)], axis=-1)
    ww = np.outer(wts, wts).reshape(-1)
    vals = f(w) * np.conj(g(w))
    return complex(np.sum(vals * ww))


def fock_inner_numeric(p, q, alpha, degree=None):
    """Numeric Fock pairing <h_p, h_q>; an orthonormality oracle."""
    p = tuple(int(v) for v in p)
    q = tuple(int(v) for v in q)
    if len(p) != len(q):
        raise ValueError('index ranks differ')
    return fock_pair_numeric(hermite_fn(p, alpha), hermite_fn(q, alpha),
                             len(p), alpha, degree=degree)


def zeta(z, N, alpha):
    """Average of the prefactor-free diagonal sums over the degree-N layer.

    zeta = (1/R) sum_{|q|=N} sum_{j<=q} (alpha/2)^{|j|} q!/(q-j)!
    z^j (-conj z)^j / (j!)^2 with R = dim_homog(N, n).
    """
    z = np.asarray(z, dtype=complex).reshape(-1)
    N = int(N)
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError('alpha must be positive')
    n = z.shape[0]
    z2 = [-(alpha / 2.0) * abs(v) ** 2 for v in z]
    tables = [_coord_sum_table(N, c) for c in z2]
    total = 0.0
    for q in _compositions(N, n):
        total += math.prod(tables[i][q[i]] for i in range(n))
    return complex(total / dim_homog(N, n))


def _compositions(N, n):
    """All nonnegative integer n-tuples summing to N."""
    if n == 1:
        yield (N,)
        return
    for head in range(N + 1):
        for rest in _compositions(N - head, n - 1):
            yield (head,) + rest


def bessel_sphere_target(r, z) -> float:
    """The sphere-average of exp(-i (r v, z)) as a Bessel-type series.

    (n-1)! sum_j prod_i c_i^{j_i}/(j_i!)^2 * prod_i j_i! / (|j|+n-1)! with
    c_i = -r^2 |z_i|^2 / 4; collapsing the inner multinomial sum gives
    (n-1)! sum_J C^J / (J! (J+n-1)!) with C = -r^2 |z|^2 / 4.
    """
    r = float(r)
    z = np.asarray(z, dtype=complex).reshape(-1)
    n = z.shape[0]
    C = -0.25 * r * r * float(np.sum(np.abs(z) ** 2))
    total = 0.0
    term_base = math.factorial(n - 1)
    for J in range(_J_CAP + 1):
        term = term_base * C ** J / (
            math.factorial(J) * math.factorial(J + n - 1))
        total += term
        if abs(term) < _TERM_TOL and J > 0:
            break
    return float(total)


def limit_gap(r, z, N) -> float:
    """|zeta(z, N, r^2/(2N)) - bessel_sphere_target(r, z)|."""
    N = int(N)
    alpha = float(r) ** 2 / (2.0 * N)
    return abs(zeta(z, N, alpha) - bessel_sphere_target(r, z))


def monomials_of_degree(n, d):
    """Exponent tuples of the degree-d monomial layer, in a fixed order."""
    return sorted(_compositions(int(d), int(n)), reverse=True)


def w_action_matrix(A, d):
    """Matrix of f -> f(A^{-1} w) on the Fock-orthonormal monomial basis
    of homogeneous degree d."""
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    d = int(d)
    basis = monomials_of_degree(n, d)
    index = {m: i for i, m in enumerate(basis)}
    B = A.conj().T        # A^{-1} for unitary A
    M = np.zeros((len(basis), len(basis)), dtype=complex)
    for col, m in enumerate(basis):
        # expand prod_i (sum_j B[i, j] w_j)^{m_i}
        poly = {tuple([0] * n): 1.0 + 0.0j}
        for i in range(n):
            for _ in range(m[i]):
                nxt = {}
                for expo, coef in poly.items():
                    for jj in range(n):
                        if B[i, jj] == 0.0:
                            continue
                        e2 = list(expo)
                        e2[jj] += 1
                        e2 = tuple(e2)
                        nxt[e2] = nxt.get(e2, 0.0 + 0.0j) + coef * B[i, jj]
                poly = nxt
        src_norm = math.sqrt(math.prod(math.factorial(v) for v in m))
        for expo, coef in poly.items():
            dst_norm = math.sqrt(math.prod(math.factorial(v) for v in expo))
            M[index[expo], col] += coef * dst_norm / src_norm
    return M


def sub_laplacian_diag(alpha, m) -> float:
    """Diagonal sub-Laplacian value -|alpha| (n + 2|m|) on h_m."""
    alpha = float(alpha)
    if alpha == 0.0:
        raise ValueError('alpha must be nonzero')
    m = tuple(int(v) for v in m)
    return -abs(alpha) * (len(m) + 2 * sum(m))
