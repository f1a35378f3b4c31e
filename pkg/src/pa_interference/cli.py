"""Command-line front end.

Exit codes: 0 success, 2 validation error, 3 channel without bare m_f=0
projection, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from . import sweep
from .band import find_band_minimum
from .channels import channel_from_label, rate_ratio
from .core import (
    DEFAULT_EPSILON,
    Degenerate,
    DressedParams,
    IoError,
    SpinorAmplitudes,
    SweepSeries,
    ValidationError,
    ZeroBareChannel,
)
from .dressed import ground_state

EXIT_OK, EXIT_VALIDATION, EXIT_CHANNEL, EXIT_IO = 0, 2, 3, 4


def _common(p: argparse.ArgumentParser, channel=False, omega=None, delta=None, points=None):
    if channel:
        p.add_argument("--channel", default="F0", type=str.upper, choices=["F0", "F1", "F2"])
    if omega is not None:
        p.add_argument("--omega", type=float, default=omega, help="Raman coupling [E_r]")
    if delta is not None:
        p.add_argument("--delta", type=float, default=delta, help="detuning [E_r]")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="quadratic Zeeman shift [E_r]")
    if points is not None:
        p.add_argument("--points", type=int, default=points)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--units-comment", action="store_true", help="prepend a '#' line naming units")
    p.add_argument(
        "--no-interference-column",
        action="store_true",
        help="drop the without-interference and cross-term columns",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pa-interference",
        description="Photoassociation rate ratios of Raman- or RF-dressed spin-1 condensates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ground", help="ground-state energy and amplitudes at one quasimomentum")
    _common(p, omega=0.0, delta=0.0)
    p.add_argument("--q", type=float, default=None, help="quasimomentum [k_r] (default: band minimum)")

    p = sub.add_parser("band-min", help="band minimum q_star and its energy")
    _common(p, omega=0.0, delta=0.0)

    p = sub.add_parser("band-scan", help="lowest band energy on a q grid")
    _common(p, omega=0.0, delta=0.0, points=601)
    p.add_argument("--q-min", type=float, default=-3.0)
    p.add_argument("--q-max", type=float, default=3.0)

    for name, kwargs in (
        ("sweep-omega", dict(delta=0.0, points=301)),
        ("sweep-delta", dict(omega=5.4, points=301)),
        ("sweep-theta", dict(points=361)),
    ):
        p = sub.add_parser(name, help=f"{name.split('-')[1]} sweep of the rate ratio")
        _common(p, channel=True, **kwargs)
        p.add_argument("--workers", type=int, default=1, help="thread pool size")
        p.add_argument("--plot-script", default=None, help="also write a matplotlib script for the CSV")
        if name == "sweep-omega":
            p.add_argument("--omega-min", type=float, default=0.0)
            p.add_argument("--omega-max", type=float, default=15.0)
        elif name == "sweep-delta":
            p.add_argument("--delta-min", type=float, default=-3.0)
            p.add_argument("--delta-max", type=float, default=3.0)

    p = sub.add_parser("ratio", help="rate ratio from amplitudes or from a dressed ground state")
    _common(p, channel=True, omega=0.0, delta=0.0)
    p.add_argument("--amps", type=float, nargs=3, metavar=("C_M1", "C_0", "C_P1"), default=None)
    p.add_argument("--normalize", action="store_true", help="normalize --amps before use")
    p.add_argument("--q", type=float, default=None, help="quasimomentum [k_r] (default: band minimum)")
    return parser


def _ground(args):
    q = args.q
    if q is None:
        q, _ = find_band_minimum(args.omega, args.delta, args.epsilon)
    energy, amps = ground_state(DressedParams(args.omega, args.delta, args.epsilon, q))
    return q, energy, amps


def _table(columns, values) -> bytes:
    lines = [",".join(columns), ",".join(sweep.format_value(v) for v in values)]
    return ("\n".join(lines) + "\n").encode("ascii")


def _write(data: bytes, out):
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IoError(f"cannot write {out}: {exc}") from exc


def _series(args) -> SweepSeries:
    if args.command == "band-scan":
        return sweep.band_scan_series(args.omega, args.delta, args.epsilon, args.q_min, args.q_max, args.points)
    channel = channel_from_label(args.channel)
    if args.command == "sweep-omega":
        return sweep.sweep_omega(
            channel, args.omega_min, args.omega_max, args.points, args.delta, args.epsilon, args.workers
        )
    if args.command == "sweep-delta":
        return sweep.sweep_delta(
            channel, args.delta_min, args.delta_max, args.points, args.omega, args.epsilon, args.workers
        )
    return sweep.sweep_theta(channel, args.points)


def run(args) -> None:
    if args.command == "ground":
        q, energy, amps = _ground(args)
        _write(_table(("q", "energy", "c_m1", "c_0", "c_p1"), (q, energy) + amps.as_tuple()), args.out)
    elif args.command == "band-min":
        q, energy = find_band_minimum(args.omega, args.delta, args.epsilon)
        _write(_table(("q_star", "energy"), (q, energy)), args.out)
    elif args.command == "ratio":
        channel = channel_from_label(args.channel)
        if args.amps is not None:
            if args.normalize:
                amps = SpinorAmplitudes.from_vector(args.amps)
            else:
                amps = SpinorAmplitudes(*args.amps)
        else:
            amps = _ground(args)[2]
        result = rate_ratio(amps, channel).as_dict()
        cols = ("with",) if args.no_interference_column else ("with", "without", "cross")
        _write(_table(cols, [result[c] for c in cols]), args.out)
    else:
        series = _series(args)
        if args.no_interference_column:
            series = series.without_columns(("without", "cross"))
        _write(sweep.csv_bytes(series, args.units_comment), args.out)
        if getattr(args, "plot_script", None):
            csv_name = args.out or "sweep.csv"
            try:
                with open(args.plot_script, "w", encoding="ascii") as fh:
                    fh.write(sweep.plot_script(series, csv_name))
            except OSError as exc:
                raise IoError(f"cannot write {args.plot_script}: {exc}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args)
    except ZeroBareChannel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHANNEL
    except (ValidationError, Degenerate) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (IoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
