"""RF-pulse preparation modeled as a Y rotation between m_f=0 and the
symmetric m_f=+-1 combination (an effective two-pole Bloch sphere)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import rate_ratio
from .core import ChannelSpec, NonFinite, SpinorAmplitudes, SweepSeries

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class RfState:
    theta_y: float
    amps: SpinorAmplitudes


def rf_amplitudes(theta_y: float) -> SpinorAmplitudes:
    """(sin(t/2)/sqrt2, cos(t/2), sin(t/2)/sqrt2), canonicalized."""
    if not math.isfinite(theta_y):
        raise NonFinite(f"theta_y must be finite, got {theta_y!r}")
    s = math.sin(0.5 * theta_y) * _INV_SQRT2
    c = math.cos(0.5 * theta_y)
    return SpinorAmplitudes.from_vector((s, c, s))


def rf_state(theta_y: float) -> RfState:
    return RfState(theta_y, rf_amplitudes(theta_y))


def rf_populations(theta_y: float) -> tuple[float, float, float]:
    return rf_amplitudes(theta_y).populations()


def rf_rate_curve(channel: ChannelSpec, thetas) -> SweepSeries:
    """Rate ratio (with, without, cross) versus rotation angle for one channel."""
    rows = [(t, rate_ratio(rf_amplitudes(t), channel).as_dict()) for t in thetas]
    return SweepSeries.from_rows("theta_sweep", ("with", "without", "cross"), rows)
