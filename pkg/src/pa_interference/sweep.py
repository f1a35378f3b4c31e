"""Parameter sweeps of the rate ratio and their CSV output."""

from __future__ import annotations

import io
import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .band import find_band_minimum, scan_band
from .channels import rate_ratio
from .core import (
    DEFAULT_EPSILON,
    BadGrid,
    ChannelSpec,
    DressedParams,
    IoError,
    SweepSeries,
    ValidationError,
    ZeroBareChannel,
)
from .dressed import ground_state
from .rf import rf_amplitudes, rf_rate_curve

RATIO_COLUMNS = ("with", "without", "cross")
POPULATION_COLUMNS = ("p_m1", "p_0", "p_p1")

X_UNITS = {
    "omega_sweep": "Omega_r/E_r",
    "delta_sweep": "delta/E_r",
    "theta_sweep": "theta_y/rad",
    "band_scan": "q/k_r",
    "populations": "theta_y/rad",
}


def _grid(lo, hi, n, name):
    if int(n) != n or n < 2:
        raise BadGrid(f"{name} grid needs at least 2 points, got {n!r}")
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise BadGrid(f"{name} grid needs finite min < max, got [{lo!r}, {hi!r}]")
    return np.linspace(lo, hi, int(n))


def _map(fn, xs, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, xs))
    return [fn(x) for x in xs]


def _require_bare(channel: ChannelSpec):
    if channel.g_00 == 0.0:
        raise ZeroBareChannel(f"channel F={channel.total_f} has no bare m_f=0 projection")


def dressed_point(channel: ChannelSpec, omega, delta, epsilon) -> dict[str, float]:
    """Ratios for a BEC sitting at the band minimum of the given dressing."""
    q_star, _ = find_band_minimum(omega, delta, epsilon)
    _, amps = ground_state(DressedParams(omega, delta, epsilon, q_star))
    row = rate_ratio(amps, channel).as_dict()
    row["q_star"] = q_star
    return row


def sweep_omega(
    channel: ChannelSpec,
    omega_min: float = 0.0,
    omega_max: float = 15.0,
    n: int = 301,
    delta: float = 0.0,
    epsilon: float = DEFAULT_EPSILON,
    workers: int = 1,
) -> SweepSeries:
    _require_bare(channel)
    if omega_min < 0:
        raise ValidationError(f"omega_min must be >= 0, got {omega_min!r}")
    omegas = _grid(omega_min, omega_max, n, "omega")
    rows = _map(lambda w: dressed_point(channel, w, delta, epsilon), omegas, workers)
    return SweepSeries.from_rows("omega_sweep", RATIO_COLUMNS, zip(omegas, rows))


def sweep_delta(
    channel: ChannelSpec,
    delta_min: float = -3.0,
    delta_max: float = 3.0,
    n: int = 301,
    omega: float = 5.4,
    epsilon: float = DEFAULT_EPSILON,
    workers: int = 1,
) -> SweepSeries:
    _require_bare(channel)
    deltas = _grid(delta_min, delta_max, n, "delta")
    rows = _map(lambda d: dressed_point(channel, omega, d, epsilon), deltas, workers)
    return SweepSeries.from_rows("delta_sweep", RATIO_COLUMNS + ("q_star",), zip(deltas, rows))


def theta_grid(n: int = 361) -> np.ndarray:
    return _grid(0.0, 2.0 * math.pi, n, "theta")


def sweep_theta(channel: ChannelSpec, n: int = 361) -> SweepSeries:
    thetas = theta_grid(n)
    curve = rf_rate_curve(channel, thetas)
    rows = []
    for (t, values), pops in zip(curve.records, map(_populations, thetas)):
        row = dict(zip(curve.columns, values))
        row.update(pops)
        rows.append((t, row))
    return SweepSeries.from_rows("theta_sweep", RATIO_COLUMNS + POPULATION_COLUMNS, rows)


def _populations(theta):
    return dict(zip(POPULATION_COLUMNS, rf_amplitudes(theta).populations()))


def population_series(n: int = 361) -> SweepSeries:
    """m_f populations versus RF rotation angle."""
    thetas = theta_grid(n)
    return SweepSeries.from_rows("populations", POPULATION_COLUMNS, [(t, _populations(t)) for t in thetas])


def band_scan_series(omega, delta, epsilon, q_min=-3.0, q_max=3.0, n=601) -> SweepSeries:
    points = scan_band(omega, delta, epsilon, q_min, q_max, n)
    return SweepSeries.from_rows("band_scan", ("energy",), [(p.q, {"energy": p.energy}) for p in points])


# --- CSV -------------------------------------------------------------------

def format_value(v: float) -> str:
    """12 significant digits; -0 is written as 0."""
    return format(float(v) + 0.0, ".12g")


def csv_bytes(series: SweepSeries, units_comment: bool = False) -> bytes:
    buf = io.StringIO(newline="")
    if units_comment:
        buf.write(f"# x = {X_UNITS[series.kind]}; energies in E_r, momenta in k_r; ratios are k_sup/k_00\n")
    buf.write(",".join(("x",) + series.columns) + "\n")
    for x, values in series.records:
        buf.write(",".join([format_value(x)] + [format_value(v) for v in values]) + "\n")
    return buf.getvalue().encode("ascii")


def emit_csv(series: SweepSeries, destination=None, units_comment: bool = False) -> bytes:
    """Serialize ``series``; write to a path or binary/text stream when given."""
    data = csv_bytes(series, units_comment)
    if destination is None:
        return data
    try:
        if isinstance(destination, (str, os.PathLike)):
            with open(destination, "wb") as fh:
                fh.write(data)
        elif isinstance(destination, io.TextIOBase):
            destination.write(data.decode("ascii"))
        else:
            destination.write(data)
    except OSError as exc:
        raise IoError(f"cannot write CSV: {exc}") from exc
    return data


PLOT_TEMPLATE = """\
# Companion plotting script; needs matplotlib, not required by the package.
import csv

import matplotlib.pyplot as plt

with open({csv_path!r}, newline="") as fh:
    rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
header, data = rows[0], [[float(v) for v in r] for r in rows[1:]]
x = [r[0] for r in data]
for j, name in enumerate(header[1:], start=1):
    plt.plot(x, [r[j] for r in data], label=name)
plt.xlabel({xlabel!r})
plt.legend()
plt.savefig({png_path!r}, dpi=150)
"""


def plot_script(series: SweepSeries, csv_path: str) -> str:
    stem = os.path.splitext(str(csv_path))[0]
    return PLOT_TEMPLATE.format(csv_path=str(csv_path), xlabel=X_UNITS[series.kind], png_path=stem + ".png")
