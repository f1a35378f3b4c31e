"""Raman-dressed spin-1 Hamiltonian and its ground state.

Basis order is (m_f=-1, 0, +1), i.e. the coupled states
|-1, q+2>, |0, q>, |+1, q-2> (momenta in k_r).
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .core import Degenerate, DressedParams, SpinorAmplitudes, ValidationError, validate_params

DEGENERACY_TOL = 1e-12


class EigenSolution(NamedTuple):
    energies: np.ndarray  # ascending, shape (3,)
    vectors: np.ndarray  # column i pairs with energies[i], shape (3, 3)


def build_hamiltonian(p: DressedParams) -> np.ndarray:
    validate_params(p)
    q, d, eps = p.q, p.delta, p.epsilon
    up, dn = q + 2.0, q - 2.0
    o = 0.5 * p.omega
    h = np.array(
        [
            [up * up - d, o, 0.0],
            [o, q * q - eps, o],
            [0.0, o, dn * dn + d],
        ]
    )
    h.flags.writeable = False
    return h


def _check_symmetric(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h, dtype=float)
    if h.shape != (3, 3):
        raise ValidationError(f"expected a 3x3 matrix, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValidationError("matrix has non-finite entries")
    if not np.array_equal(h, h.T):
        raise ValidationError("matrix is not exactly symmetric")
    return h


def _canonical_columns(v: np.ndarray) -> np.ndarray:
    out = v.copy()
    for j in range(3):
        col = out[:, j]
        k = int(np.argmax(np.abs(col) >= np.abs(col).max() - 1e-12))
        if col[k] < 0:
            out[:, j] = -col
    return out + 0.0


def closed_form_eigenvalues(h: np.ndarray) -> tuple[float, float, float]:
    """Roots of the characteristic cubic of a symmetric 3x3 matrix, ascending."""
    tr3 = (h[0, 0] + h[1, 1] + h[2, 2]) / 3.0
    p1 = h[0, 1] ** 2 + h[0, 2] ** 2 + h[1, 2] ** 2
    d = np.diag(h) - tr3
    p2 = float(d @ d + 2.0 * p1)
    if p2 == 0.0:
        return tr3, tr3, tr3
    p = math.sqrt(p2 / 6.0)
    b = (h - tr3 * np.eye(3)) / p
    det = (
        b[0, 0] * (b[1, 1] * b[2, 2] - b[1, 2] * b[2, 1])
        - b[0, 1] * (b[1, 0] * b[2, 2] - b[1, 2] * b[2, 0])
        + b[0, 2] * (b[1, 0] * b[2, 1] - b[1, 1] * b[2, 0])
    )
    r = min(1.0, max(-1.0, det / 2.0))
    phi = math.acos(r) / 3.0
    hi = tr3 + 2.0 * p * math.cos(phi)
    lo = tr3 + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    return lo, 3.0 * tr3 - hi - lo, hi


def _null_vector(h: np.ndarray, lam: float) -> np.ndarray:
    m = h - lam * np.eye(3)
    crosses = [np.cross(m[0], m[1]), np.cross(m[0], m[2]), np.cross(m[1], m[2])]
    v = max(crosses, key=lambda c: float(c @ c))
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValidationError("eigenvalue is not isolated")
    v = v / n
    # one inverse-iteration refinement
    try:
        y = np.linalg.solve(m, v)
    except np.linalg.LinAlgError:
        return v
    ny = np.linalg.norm(y)
    if not np.isfinite(ny) or ny == 0.0:
        return v
    return y / ny


def eigensolve(h) -> EigenSolution:
    """Full eigendecomposition of a real symmetric 3x3 matrix.

    Eigenvalues from the trigonometric solution of the characteristic cubic.
    The eigenvector of whichever extreme eigenvalue is farther from the middle
    one is taken from a cross product of two rows of (H - lam) and refined by
    one inverse-iteration step; the remaining pair is obtained by exactly
    diagonalizing H restricted to the orthogonal complement, so the result
    stays orthonormal through (near-)degeneracies.
    """
    h = _check_symmetric(h)
    lo, mid, hi = closed_form_eigenvalues(h)
    if lo == hi:
        return EigenSolution(np.array([lo, mid, hi]), np.eye(3))

    lam = lo if (mid - lo) >= (hi - mid) else hi
    v = _null_vector(h, lam)

    k = int(np.argmin(np.abs(v)))
    axis = np.zeros(3)
    axis[k] = 1.0
    u1 = np.cross(v, axis)
    u1 /= np.linalg.norm(u1)
    u2 = np.cross(v, u1)
    basis = np.column_stack([u1, u2])
    m = basis.T @ h @ basis
    a, b, c = m[0, 0], 0.5 * (m[0, 1] + m[1, 0]), m[1, 1]
    if b == 0.0:
        cs, sn = 1.0, 0.0
    else:
        tau = (c - a) / (2.0 * b)
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
        cs = 1.0 / math.hypot(1.0, t)
        sn = t * cs
    w1 = cs * u1 - sn * u2
    w2 = sn * u1 + cs * u2

    vecs = np.column_stack([v, w1, w2])
    energies = np.einsum("ij,ik,kj->j", vecs, h, vecs)
    order = np.argsort(energies, kind="stable")
    return EigenSolution(energies[order], _canonical_columns(vecs[:, order]))


def ground_state(p: DressedParams) -> tuple[float, SpinorAmplitudes]:
    """Lowest dressed level at ``p`` and its canonicalized spinor amplitudes."""
    sol = eigensolve(build_hamiltonian(p))
    if sol.energies[1] - sol.energies[0] < DEGENERACY_TOL:
        raise Degenerate(
            f"lowest levels differ by {sol.energies[1] - sol.energies[0]:.3e} E_r at {p}"
        )
    return float(sol.energies[0]), SpinorAmplitudes.from_vector(sol.vectors[:, 0])
