"""Slow, independent reference implementations used to check the main path.

Each oracle uses a different algorithm from the code it validates.
Jacobi rotations stand in for the closed-form cubic. An exhaustive fine
scan replaces golden-section refinement. The ratio is rebuilt by
enumerating two-particle product states with ladder-operator CG
coefficients rather than the factored formula.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from . import _backend
from .band import pick_minimum
from .core import (
    ChannelSpec,
    DressedParams,
    PAError,
    RatioResult,
    SpinorAmplitudes,
    ValidationError,
    ZeroBareChannel,
    validate_params,
)
from .dressed import EigenSolution, _canonical_columns, _check_symmetric

M_VALUES = (-1, 0, 1)


class NoConvergence(PAError):
    pass


def jacobi_eigensolve(h, max_sweeps: int = 100) -> EigenSolution:
    """Classical Jacobi: rotate away the largest off-diagonal element until none is left."""
    a = _check_symmetric(h).copy()
    n = 3
    v = np.eye(n)
    tol = 1e-14 * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps * 3):
        off = math.sqrt(2.0 * (a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2))
        if off < tol:
            break
        i, j = max(((0, 1), (0, 2), (1, 2)), key=lambda ij: abs(a[ij]))
        theta = (a[j, j] - a[i, i]) / (2.0 * a[i, j])
        t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
        c = 1.0 / math.hypot(1.0, t)
        s = t * c
        rot = np.eye(n)
        rot[i, i] = rot[j, j] = c
        rot[i, j] = s
        rot[j, i] = -s
        a = rot.T @ a @ rot
        a[i, j] = a[j, i] = 0.0
        v = v @ rot
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return EigenSolution(w[order], _canonical_columns(v[:, order]))


def dense_minimum(omega, delta, epsilon, step) -> tuple[float, float]:
    """Exhaustive scan of q in [-3, 3] at spacing ``step``; ties resolve to q >= 0."""
    validate_params(DressedParams(omega, delta, epsilon, 0.0))
    if not (math.isfinite(step) and step > 0):
        raise ValidationError(f"step must be positive, got {step!r}")
    q_neg, e_neg, q_pos, e_pos = _backend.dense_scan_min(omega, delta, epsilon, step, 3.0)
    if math.isnan(q_neg):
        return q_pos, e_pos
    return pick_minimum(q_neg, e_neg, q_pos, e_pos)


# --- Clebsch-Gordan coefficients from ladder operators ---------------------

def _lowering(j: int) -> np.ndarray:
    """J_- for spin j in the basis m = j, j-1, ..., -j."""
    ms = list(range(j, -j - 1, -1))
    op = np.zeros((len(ms), len(ms)))
    for col, m in enumerate(ms):
        if m > -j:
            op[col + 1, col] = math.sqrt(j * (j + 1) - m * (m - 1))
    return op


def _pair_index(m1: int, m2: int) -> int:
    # product basis |1,m1>|1,m2>, each factor ordered m = 1, 0, -1
    return (1 - m1) * 3 + (1 - m2)


def _pair_m(idx: int) -> int:
    return (1 - idx // 3) + (1 - idx % 3)


def coupled_state(total_f: int, m: int = 0) -> np.ndarray:
    """|F, m> of two spin-1 particles as a vector in the 9-dim product basis.

    Built by lowering from the stretched state |F, F>, which is fixed as the
    unit vector orthogonal to all higher-F states with the same m and with a
    positive coefficient on m1 = 1 (Condon-Shortley phase).
    """
    if total_f not in (0, 1, 2) or abs(m) > total_f:
        raise ValidationError(f"no state |{total_f}, {m}> for two spin-1 particles")
    lower = _lowering(1)
    j_minus = np.kron(lower, np.eye(3)) + np.kron(np.eye(3), lower)

    def stretched(f):
        mask = np.array([_pair_m(i) == f for i in range(9)])
        higher = []
        for g in range(f + 1, 3):
            s = stretched(g)
            for _ in range(g - f):
                s = j_minus @ s
                s /= np.linalg.norm(s)
            higher.append(s)
        # Gram-Schmidt of the m=f subspace basis against higher-F states
        for i in np.flatnonzero(mask):
            cand = np.zeros(9)
            cand[i] = 1.0
            for h in higher:
                cand -= (h @ cand) * h
            if np.linalg.norm(cand) > 1e-9:
                break
        cand /= np.linalg.norm(cand)
        lead = [i for i in np.flatnonzero(np.abs(cand) > 1e-12) if (1 - i // 3) == 1]
        if lead and cand[lead[0]] < 0:
            cand = -cand
        return cand

    state = stretched(total_f)
    for _ in range(total_f - m):
        state = j_minus @ state
        state /= np.linalg.norm(state)
    return state


def clebsch_gordan(m1: int, m2: int, total_f: int, m: int = 0) -> float:
    """<1,m1; 1,m2 | F, m> by projection onto the ladder-built coupled state."""
    if m1 + m2 != m:
        return 0.0
    value = float(coupled_state(total_f, m)[_pair_index(m1, m2)])
    return 0.0 if abs(value) < 1e-12 else value


def ladder_channel(total_f: int) -> ChannelSpec:
    return ChannelSpec(
        total_f,
        clebsch_gordan(0, 0, total_f),
        clebsch_gordan(1, -1, total_f),
        clebsch_gordan(-1, 1, total_f),
    )


def expand_ratio(amps: SpinorAmplitudes, channel: ChannelSpec) -> RatioResult:
    """Rate ratio by enumerating all nine pair products term by term.

    Each product |m_a>|m_b> contributes C_{m_a} C_{m_b} times its CG overlap
    with |F,0>. Contributions are grouped into the direct pathway (0,0) and
    the exchange pathway (+1,-1)/(-1,+1); |direct + exchange|^2 is expanded
    as |direct|^2 + |exchange|^2 + 2 direct*exchange.
    """
    cg = {
        (1, -1): channel.g_pm,
        (-1, 1): channel.g_mp,
        (0, 0): channel.g_00,
    }
    if channel.g_00 == 0.0:
        raise ZeroBareChannel(f"channel F={channel.total_f} has no bare m_f=0 projection")
    c = dict(zip(M_VALUES, amps.as_tuple()))
    direct = 0.0
    exchange = 0.0
    for ma, mb in itertools.product(M_VALUES, repeat=2):
        overlap = cg.get((ma, mb), 0.0) if ma + mb == 0 else 0.0
        term = c[ma] * c[mb] * overlap
        if (ma, mb) == (0, 0):
            direct += term
        else:
            exchange += term
    bare = channel.g_00  # pair (0,1,0) projects with amplitude g_00 * 1 * 1
    d2 = direct * direct / (bare * bare)
    x2 = exchange * exchange / (bare * bare)
    cross = 2.0 * direct * exchange / (bare * bare)
    return RatioResult(d2 + x2 + cross, d2 + x2, cross)
