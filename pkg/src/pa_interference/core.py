"""Unit conventions, value types and validation shared by every module.

Energies are in recoil units (E_r = 1) and momenta in recoil momenta
(k_r = 1), so the kinetic energy of a plane wave with momentum ``k`` is
simply ``k**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_EPSILON = 0.65
NORM_TOL = 1e-12


class PAError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PAError, ValueError):
    pass


class NonFinite(ValidationError):
    pass


class NegativeOmega(ValidationError):
    pass


class BadGrid(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class UnsupportedChannel(ValidationError):
    pass


class ZeroBareChannel(PAError):
    """The bare m_f=0 pair has no projection on the channel; ratio undefined."""


class IoError(PAError, OSError):
    """Writing output failed."""


class Degenerate(PAError):
    """The two lowest dressed levels are degenerate; the ground state is ambiguous."""


@dataclass(frozen=True)
class DressedParams:
    """Raman dressing parameters.

    omega: Raman coupling, delta: two-photon detuning, epsilon: quadratic
    Zeeman shift (all E_r); q: quasimomentum (k_r).
    """

    omega: float
    delta: float = 0.0
    epsilon: float = DEFAULT_EPSILON
    q: float = 0.0

    def with_q(self, q: float) -> "DressedParams":
        return DressedParams(self.omega, self.delta, self.epsilon, q)


def validate_params(p: DressedParams) -> DressedParams:
    for name in ("omega", "delta", "epsilon", "q"):
        value = getattr(p, name)
        if not math.isfinite(value):
            raise NonFinite(f"{name} must be finite, got {value!r}")
    if p.omega < 0:
        raise NegativeOmega(f"omega must be >= 0, got {p.omega!r}")
    return p


def _canonical_sign(c_m1: float, c_0: float, c_p1: float) -> float:
    comps = (c_m1, c_0, c_p1)
    biggest = max(abs(c) for c in comps)
    # first component (in m_f order) that attains the maximum magnitude
    for c in comps:
        if abs(c) >= biggest - 1e-12:
            return -1.0 if c < 0 else 1.0
    return 1.0


@dataclass(frozen=True)
class SpinorAmplitudes:
    """Real amplitudes of the m_f = -1, 0, +1 components of a spin-1 state."""

    c_m1: float
    c_0: float
    c_p1: float

    def __post_init__(self):
        for c in (self.c_m1, self.c_0, self.c_p1):
            if not math.isfinite(c):
                raise NonFinite(f"amplitude must be finite, got {c!r}")
        norm2 = self.c_m1**2 + self.c_0**2 + self.c_p1**2
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NotNormalized(f"sum of squared amplitudes is {norm2!r}, expected 1")

    @classmethod
    def from_vector(cls, v, normalize: bool = True) -> "SpinorAmplitudes":
        """Build canonicalized amplitudes from any real 3-vector (m_f order -1, 0, +1)."""
        a, b, c = (float(x) for x in v)
        if normalize:
            n = math.sqrt(a * a + b * b + c * c)
            if n == 0.0 or not math.isfinite(n):
                raise NotNormalized("cannot normalize a zero or non-finite vector")
            a, b, c = a / n, b / n, c / n
        s = _canonical_sign(a, b, c)
        # adding 0.0 turns -0.0 into 0.0 so serialization is stable
        return cls(s * a + 0.0, s * b + 0.0, s * c + 0.0)

    def canonical(self) -> "SpinorAmplitudes":
        return SpinorAmplitudes.from_vector(self.as_tuple(), normalize=False)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c_m1, self.c_0, self.c_p1)

    def populations(self) -> tuple[float, float, float]:
        return (self.c_m1**2, self.c_0**2, self.c_p1**2)

    def __neg__(self) -> "SpinorAmplitudes":
        return SpinorAmplitudes(-self.c_m1, -self.c_0, -self.c_p1)


@dataclass(frozen=True)
class ChannelSpec:
    """Total-spin channel |F, m_F=0> of two f=1 atoms and its CG row.

    g_00 = <1,0;1,0|F,0>, g_pm = <1,+1;1,-1|F,0>, g_mp = <1,-1;1,+1|F,0>.
    """

    total_f: int
    g_00: float
    g_pm: float
    g_mp: float

    @property
    def label(self) -> str:
        return f"F{self.total_f}"


@dataclass(frozen=True)
class RatioResult:
    """Rate ratio k_sup/k_00 with and without the interference cross-term."""

    with_interference: float
    without_interference: float
    cross_term: float

    def as_dict(self) -> dict[str, float]:
        return {
            "with": self.with_interference,
            "without": self.without_interference,
            "cross": self.cross_term,
        }


SERIES_KINDS = ("omega_sweep", "delta_sweep", "theta_sweep", "band_scan", "populations")


@dataclass(frozen=True)
class SweepSeries:
    """Ordered 1-D series: x values with a fixed set of named columns."""

    kind: str
    columns: tuple[str, ...]
    records: tuple[tuple[float, tuple[float, ...]], ...]

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise ValidationError(f"unknown series kind {self.kind!r}")
        width = len(self.columns)
        prev = -math.inf
        for x, values in self.records:
            if not x > prev:
                raise ValidationError("series x values must be strictly increasing")
            if len(values) != width:
                raise ValidationError("every record must carry the same columns")
            prev = x

    @classmethod
    def from_rows(cls, kind, columns, rows) -> "SweepSeries":
        """Build from ``(x, {column: value})`` pairs."""
        columns = tuple(columns)
        records = tuple((float(x), tuple(float(vals[c]) for c in columns)) for x, vals in rows)
        return cls(kind, columns, records)

    def __len__(self):
        return len(self.records)

    @property
    def x(self) -> list[float]:
        return [x for x, _ in self.records]

    def column(self, name: str) -> list[float]:
        j = self.columns.index(name)
        return [values[j] for _, values in self.records]

    def without_columns(self, names) -> "SweepSeries":
        keep = [j for j, c in enumerate(self.columns) if c not in set(names)]
        return SweepSeries(
            self.kind,
            tuple(self.columns[j] for j in keep),
            tuple((x, tuple(v[j] for j in keep)) for x, v in self.records),
        )
