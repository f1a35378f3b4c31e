"""Two-atom total-spin channel projection and photoassociation rate ratios.

For two atoms in the same spin-1 state (C_-1, C_0, C_+1) the m_F=0 part of
the pair state is

    C_0^2 |0,0> + C_+1 C_-1 |+1,-1> + C_-1 C_+1 |-1,+1>,

so its amplitude in channel |F,0> is g_00 C_0^2 + (g_pm + g_mp) C_+1 C_-1.
Dividing by the bare-pair amplitude g_00 gives the rate ratio k_sup/k_00.
Spatial Raman phases are dropped (molecule much smaller than the Raman
wavelength) and the Franck-Condon factor cancels in the ratio.
"""

from __future__ import annotations

import math

from .core import ChannelSpec, RatioResult, SpinorAmplitudes, UnsupportedChannel, ZeroBareChannel

_S3 = math.sqrt(3.0)
_S6 = math.sqrt(6.0)
_S2 = math.sqrt(2.0)

# Condon-Shortley rows (g_00, g_pm, g_mp)
_CG_ROWS = {
    0: (-1.0 / _S3, 1.0 / _S3, 1.0 / _S3),
    1: (0.0, 1.0 / _S2, -1.0 / _S2),
    2: (2.0 / _S6, 1.0 / _S6, 1.0 / _S6),
}


def cg_table(total_f: int) -> ChannelSpec:
    if total_f not in _CG_ROWS or isinstance(total_f, bool):
        raise UnsupportedChannel(f"total spin F must be 0, 1 or 2, got {total_f!r}")
    return ChannelSpec(total_f, *_CG_ROWS[total_f])


def projection(amps: SpinorAmplitudes, channel: ChannelSpec) -> tuple[float, float]:
    """(bare, dressed) channel amplitudes of the m_F=0 pair state."""
    pair = amps.c_p1 * amps.c_m1
    dressed = channel.g_00 * amps.c_0**2 + (channel.g_pm + channel.g_mp) * pair
    return channel.g_00, dressed


def rate_ratio(amps: SpinorAmplitudes, channel: ChannelSpec) -> RatioResult:
    if channel.g_00 == 0.0:
        raise ZeroBareChannel(
            f"channel F={channel.total_f}: bare m_f=0 pair has no projection, ratio undefined"
        )
    k = (channel.g_pm + channel.g_mp) / channel.g_00
    direct = amps.c_0**2
    pathway = k * amps.c_p1 * amps.c_m1
    total = direct + pathway
    with_ = total * total
    without = direct * direct + pathway * pathway
    return RatioResult(with_, without, with_ - without)


def rate_ratio_f0(amps: SpinorAmplitudes) -> RatioResult:
    """Destructive channel |F=0,0>: (C_0^2 - 2 C_1 C_-1)^2."""
    return rate_ratio(amps, cg_table(0))


def rate_ratio_f2(amps: SpinorAmplitudes) -> RatioResult:
    """Constructive channel |F=2,0>: (C_0^2 + C_1 C_-1)^2."""
    return rate_ratio(amps, cg_table(2))


def channel_from_label(label: str) -> ChannelSpec:
    """Parse ``"F0"``/``"F2"`` (case-insensitive, ``F`` optional)."""
    s = str(label).strip().upper().removeprefix("F")
    try:
        f = int(s)
    except ValueError:
        raise UnsupportedChannel(f"unknown channel {label!r}") from None
    return cg_table(f)
