"""Dense complex matrix layer.

Skew-Hermitian builders (diagonal, rank-one update, arrowhead, the z x w
cross product), a self-contained cyclic-Jacobi eigensolver for complex
Hermitian matrices, the two structured characteristic polynomials, and
seeded Haar-random unitaries for tests and Monte-Carlo runs.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    'MatrixError',
    'NonHermitianError',
    'ConvergenceError',
    'frobenius',
    'is_skew_hermitian',
    'eig_hermitian',
    'spectrum_skew',
    'j_diag',
    'rank_one_update',
    'arrowhead',
    'cross',
    'char_poly_Q',
    'char_poly_P',
    'haar_unitary',
]


class MatrixError(Exception):
    pass


class NonHermitianError(MatrixError):
    pass


class ConvergenceError(MatrixError):
    pass


def frobenius(M) -> float:
    return float(np.linalg.norm(np.asarray(M), 'fro'))


def is_skew_hermitian(M, rel=1e-12) -> bool:
    M = np.asarray(M, dtype=complex)
    return frobenius(M + M.conj().T) <= rel * (1.0 + frobenius(M))


def eig_hermitian(H, vectors=True, max_sweeps=100):
    """Eigenvalues (nonincreasing) and eigenvectors of a Hermitian matrix.

    Cyclic Jacobi rotations on the upper triangle; each rotation removes
    one off-diagonal entry exactly.  Sweeps stop once the off-diagonal
    Frobenius norm drops below 1e-13 * ||H||.

    Returns (w, Q) with H = Q diag(w) Q* when vectors=True, else w alone.

    @raise NonHermitianError: input is not Hermitian within 1e-10 * (1+||H||).
    @raise ConvergenceError: threshold not reached within max_sweeps.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise MatrixError('matrix must be square')
    n = H.shape[0]
    norm = frobenius(H)
    if frobenius(H - H.conj().T) > 1e-10 * (1.0 + norm):
        raise NonHermitianError('matrix is not Hermitian')
    A = 0.5 * (H + H.conj().T)
    Q = np.eye(n, dtype=complex)
    thr = 1e-13 * norm
    done = False
    for _ in range(max_sweeps):
        off = frobenius(A - np.diag(np.diag(A)))
        if off <= thr:
            done = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = A[p, q]
                ah = abs(h)
                if ah <= thr / max(n, 1):
                    continue
                phase = h / ah
                app = A[p, p].real
                aqq = A[q, q].real
                # zero the (p, q) entry with |theta| <= pi/4 so the
                # cyclic sweep cannot oscillate
                denom = aqq - app
                if denom == 0.0:
                    theta = 0.25 * math.pi
                else:
                    theta = 0.5 * math.atan(2.0 * ah / denom)
                c = math.cos(theta)
                s = math.sin(theta)
                # 2x2 rotation J = diag(phase, 1) @ [[c, s], [-s, c]]
                jpp, jpq = phase * c, phase * s
                jqp, jqq = -s, c
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = colp * jpp + colq * jqp
                A[:, q] = colp * jpq + colq * jqq
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = np.conj(jpp) * rowp + np.conj(jqp) * rowq
                A[q, :] = np.conj(jpq) * rowp + np.conj(jqq) * rowq
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                colp = Q[:, p].copy()
                colq = Q[:, q].copy()
                Q[:, p] = colp * jpp + colq * jqp
                Q[:, q] = colp * jpq + colq * jqq
    else:
        done = False
    if not done:
        off = frobenius(A - np.diag(np.diag(A)))
        if off > thr:
            raise ConvergenceError('Jacobi sweeps did not converge')
    w = np.real(np.diag(A))
    order = np.argsort(-w, kind='stable')
    w = w[order]
    if not vectors:
        return w
    return w, Q[:, order]


def spectrum_skew(S):
    """Sorted (nonincreasing) real spectrum of S/i for skew-Hermitian S."""
    S = np.asarray(S, dtype=complex)
    return eig_hermitian(-1j * S, vectors=False)


def j_diag(lam, size=None):
    """diag(i*lam_1, ..., i*lam_k), zero-padded to the given size."""
    lam = tuple(float(v) for v in lam)
    k = len(lam)
    m = k if size is None else int(size)
    if m < k:
        raise MatrixError('size smaller than weight rank')
    M = np.zeros((m, m), dtype=complex)
    for i, v in enumerate(lam):
        M[i, i] = 1j * v
    return M


def rank_one_update(lam, z, c):
    """J_lam + i*c*z z*, skew-Hermitian by construction."""
    z = np.asarray(z, dtype=complex)
    return j_diag(lam, size=z.shape[0]) + 1j * float(c) * np.outer(z, z.conj())


def arrowhead(mu, z, x):
    """J_mu (+) 0 plus the arrow border.

    Last column (-z_1, ..., -z_{n-1}, ix)^T, last row (conj z, ix).
    """
    z = np.asarray(z, dtype=complex)
    n = z.shape[0] + 1
    M = j_diag(mu, size=n)
    M[: n - 1, n - 1] = -z
    M[n - 1, : n - 1] = z.conj()
    M[n - 1, n - 1] = 1j * float(x)
    return M


def cross(z, u):
    """(i/2)(u z* + z u*), the skew-Hermitian cross product z x u."""
    z = np.asarray(z, dtype=complex)
    u = np.asarray(u, dtype=complex)
    return 0.5j * (np.outer(u, z.conj()) + np.outer(z, u.conj()))


def char_poly_Q(lam, z, alpha, y):
    """Q(y) = prod(y - lam_i) - sum_j (|z_j|^2/alpha) prod_{i!=j}(y - lam_i).

    The characteristic polynomial of J_lam/i + zz*/alpha.
    """
    alpha = float(alpha)
    if alpha == 0.0:
        raise ValueError('alpha must be nonzero')
    lam = tuple(float(v) for v in lam)
    z = np.asarray(z, dtype=complex)
    total = math.prod(y - l for l in lam)
    for j, lj in enumerate(lam):
        part = math.prod(y - l for i, l in enumerate(lam) if i != j)
        total -= (abs(z[j]) ** 2 / alpha) * part
    return total


def char_poly_P(mu, z, x, y):
    """P(y) = (y - x) prod(y - mu_i) - sum_j |z_j|^2 prod_{i!=j}(y - mu_i).

    The characteristic polynomial of the arrowhead matrix over i, valid
    for pairwise distinct mu.
    """
    mu = tuple(float(v) for v in mu)
    if len(set(mu)) != len(mu):
        raise ValueError('mu entries must be pairwise distinct')
    z = np.asarray(z, dtype=complex)
    total = (y - float(x)) * math.prod(y - m for m in mu)
    for j, mj in enumerate(mu):
        part = math.prod(y - m for i, m in enumerate(mu) if i != j)
        total -= abs(z[j]) ** 2 * part
    return total


def haar_unitary(n, rng):
    """Haar-distributed unitary: QR of a complex Gaussian with the
    R-diagonal phases normalized away."""
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return Q * (d / np.abs(d))
