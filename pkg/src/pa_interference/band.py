"""Lowest dressed band over quasimomentum and its global minimum."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import BadGrid, DressedParams, validate_params

Q_WINDOW = 3.0
COARSE_POINTS = 2001
Q_TOL = 1e-10
# relative energy tolerance under which two minima count as tied
TIE_RTOL = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class BandPoint:
    q: float
    energy: float


def _check(omega, delta, epsilon):
    validate_params(DressedParams(omega, delta, epsilon, 0.0))


def scan_band(omega, delta, epsilon, q_min, q_max, n) -> list[BandPoint]:
    """Lowest band energy on ``n`` uniformly spaced quasimomenta."""
    _check(omega, delta, epsilon)
    if int(n) != n or n < 2:
        raise BadGrid(f"need at least 2 grid points, got {n!r}")
    if not (math.isfinite(q_min) and math.isfinite(q_max)) or not q_min < q_max:
        raise BadGrid(f"need finite q_min < q_max, got [{q_min!r}, {q_max!r}]")
    qs = np.linspace(q_min, q_max, int(n))
    es = _backend.lowest_energies(omega, delta, epsilon, qs)
    return [BandPoint(float(q), float(e)) for q, e in zip(qs, es)]


def symmetric_grid(half_width: float, n: int) -> np.ndarray:
    """Odd-sized grid on [-w, w] whose negative half mirrors the positive half bit for bit."""
    if n < 3 or n % 2 == 0:
        raise BadGrid(f"symmetric grid needs an odd count >= 3, got {n}")
    pos = np.linspace(0.0, half_width, n // 2 + 1)
    return np.concatenate([-pos[:0:-1], pos])


def golden_section(f, lo: float, hi: float, tol: float = Q_TOL, max_iter: int = 500):
    """Minimize a unimodal ``f`` on [lo, hi]; returns (x, f(x)).

    On exact ties both interior points become the new bracket, which keeps the
    search mirror-symmetric: minimizing f(-x) on [-hi, -lo] yields exactly -x.
    """
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        elif f2 < f1:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
        else:
            lo, hi = x1, x2
            x1 = hi - _INV_PHI * (hi - lo)
            x2 = lo + _INV_PHI * (hi - lo)
            f1, f2 = f(x1), f(x2)
    x = 0.5 * (lo + hi)
    return float(x), float(f(x))


def _refine(f, qs, es, i):
    lo = qs[max(i - 1, 0)]
    hi = qs[min(i + 1, len(qs) - 1)]
    q, e = golden_section(f, lo, hi)
    if not e <= es[i]:
        # never worse than the coarse grid (edge minima, flat tops)
        return float(qs[i]), float(es[i])
    return q, e


def pick_minimum(q_neg, e_neg, q_pos, e_pos) -> tuple[float, float]:
    """Choose between the best q<0 and best q>=0 candidates; ties go to q>=0."""
    if e_neg < e_pos - TIE_RTOL * max(1.0, abs(e_pos)):
        return float(q_neg), float(e_neg)
    return float(q_pos), float(e_pos)


def find_band_minimum(omega, delta, epsilon) -> tuple[float, float]:
    """Global minimum (q_star, energy) of the lowest band in |q| <= 3 k_r.

    A 2001-point scan locates the best grid point on each side of q=0; each
    is refined by golden-section search within its neighbouring grid cells.
    Symmetric double minima (delta=0) resolve to q_star >= 0.
    """
    _check(omega, delta, epsilon)
    qs = symmetric_grid(Q_WINDOW, COARSE_POINTS)
    es = _backend.lowest_energies(omega, delta, epsilon, qs)

    def energy(q):
        return _backend.lowest_energy(omega, delta, epsilon, q)

    mid = COARSE_POINTS // 2
    i_neg = int(np.argmin(es[:mid]))
    i_pos = mid + int(np.argmin(es[mid:]))
    q_neg, e_neg = _refine(energy, qs, es, i_neg)
    q_pos, e_pos = _refine(energy, qs, es, i_pos)
    return pick_minimum(q_neg, e_neg, q_pos, e_pos)
