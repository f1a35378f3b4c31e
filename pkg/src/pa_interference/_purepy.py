"""Pure-Python/numpy versions of the hot kernels.

Same signatures as the compiled ``_kernels`` extension; selected by
``_backend`` when the extension is unavailable or disabled.

All kernels treat the tridiagonal dressed matrix

    [[a, o, 0],
     [o, b, o],
     [0, o, c]]

with a = (q+2)^2 - delta, b = q^2 - epsilon, c = (q-2)^2 + delta and
o = omega/2. Every expression is written symmetric in (a, c) so that the
mirror (q, delta) -> (-q, -delta) reproduces results bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

_TWO_PI_3 = 2.0 * math.pi / 3.0


def _diagonal(delta, epsilon, q):
    up, dn = q + 2.0, q - 2.0
    return up * up - delta, q * q - epsilon, dn * dn + delta


def lowest_energy(omega: float, delta: float, epsilon: float, q: float) -> float:
    """Lowest eigenvalue at one quasimomentum (trigonometric cubic root + one Newton polish)."""
    a, b, c = _diagonal(delta, epsilon, q)
    o = 0.5 * omega
    oo = o * o
    m = ((a + c) + b) / 3.0
    da, db, dc = a - m, b - m, c - m
    p2 = (da * da + dc * dc) + db * db + 4.0 * oo
    if p2 == 0.0:
        return m
    p = math.sqrt(p2 / 6.0)
    det = db * (da * dc) - oo * (da + dc)
    r = det / (2.0 * p * p * p)
    r = min(1.0, max(-1.0, r))
    phi = math.acos(r) / 3.0
    lam = m + 2.0 * p * math.cos(phi + _TWO_PI_3)
    return _polish(a, b, c, oo, lam, p)


def _polish(a, b, c, oo, lam, p):
    xa, xb, xc = a - lam, b - lam, c - lam
    f = xb * (xa * xc) - oo * (xa + xc)
    df = 2.0 * oo - (xb * (xa + xc) + xa * xc)
    if df != 0.0:
        step = f / df
        if abs(step) <= 1e-6 * (1.0 + p):
            lam -= step
    return lam


def lowest_energies(omega: float, delta: float, epsilon: float, qs) -> np.ndarray:
    """Vectorized :func:`lowest_energy` over an array of quasimomenta."""
    q = np.asarray(qs, dtype=float)
    a, b, c = _diagonal(delta, epsilon, q)
    o = 0.5 * omega
    oo = o * o
    m = ((a + c) + b) / 3.0
    da, db, dc = a - m, b - m, c - m
    p2 = (da * da + dc * dc) + db * db + 4.0 * oo
    flat = p2 == 0.0
    p = np.sqrt(np.where(flat, 6.0, p2) / 6.0)
    det = db * (da * dc) - oo * (da + dc)
    r = np.clip(det / (2.0 * p * p * p), -1.0, 1.0)
    phi = np.arccos(r) / 3.0
    lam = m + 2.0 * p * np.cos(phi + _TWO_PI_3)

    xa, xb, xc = a - lam, b - lam, c - lam
    f = xb * (xa * xc) - oo * (xa + xc)
    df = 2.0 * oo - (xb * (xa + xc) + xa * xc)
    with np.errstate(divide="ignore", invalid="ignore"):
        step = np.where(df != 0.0, f / df, 0.0)
    step = np.where(np.abs(step) <= 1e-6 * (1.0 + p), step, 0.0)
    lam = lam - step
    return np.where(flat, m, lam)


def _char_newton(a, b, c, oo, x):
    """Monotone Newton iteration for the smallest root of det(H - x) starting below it."""
    active = np.ones(x.shape, dtype=bool)
    for _ in range(400):
        if not active.any():
            break
        xa, xb, xc = a - x, b - x, c - x
        f = xb * (xa * xc) - oo * (xa + xc)
        df = 2.0 * oo - (xb * (xa + xc) + xa * xc)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(df < 0.0, -f / df, 0.0)
        move = active & (step > 0.0)
        x = np.where(move, x + step, x)
        active = move & (step > 4e-16 * (np.abs(x) + 1.0))
    return x


def dense_scan_min(omega: float, delta: float, epsilon: float, step: float, q_max: float = 3.0):
    """Exhaustive scan of the lowest band on q = k*step, |q| <= q_max.

    Returns ``(q_neg, e_neg, q_pos, e_pos)``: the first strict minimum among
    q < 0 and among q >= 0. Eigenvalues come from Newton's method on the
    characteristic polynomial started at the Gershgorin lower bound.
    """
    kmax = int(round(q_max / step))
    o = 0.5 * omega
    oo = o * o
    ao = abs(o)
    best = [(math.nan, math.inf), (math.nan, math.inf)]
    chunk = 1 << 20
    for start in range(-kmax, kmax + 1, chunk):
        k = np.arange(start, min(start + chunk, kmax + 1), dtype=float)
        q = k * step
        a, b, c = _diagonal(delta, epsilon, q)
        x0 = np.minimum(np.minimum(a - ao, c - ao), b - 2.0 * ao)
        e = _char_newton(a, b, c, oo, x0)
        for side, mask in ((0, k < 0), (1, k >= 0)):
            if not mask.any():
                continue
            idx = np.flatnonzero(mask)
            j = idx[np.argmin(e[idx])]
            if e[j] < best[side][1]:
                best[side] = (float(q[j]), float(e[j]))
    return best[0][0], best[0][1], best[1][0], best[1][1]
