"""Coherent control of photoassociation in Raman- and RF-dressed spin-1 condensates.

All energies are in recoil units E_r and momenta in recoil momenta k_r.
"""

from ._backend import BACKEND
from .band import BandPoint, find_band_minimum, scan_band
from .channels import cg_table, rate_ratio, rate_ratio_f0, rate_ratio_f2
from .core import (
    BadGrid,
    ChannelSpec,
    Degenerate,
    DressedParams,
    IoError,
    NegativeOmega,
    NonFinite,
    NotNormalized,
    PAError,
    RatioResult,
    SpinorAmplitudes,
    SweepSeries,
    UnsupportedChannel,
    ValidationError,
    ZeroBareChannel,
    validate_params,
)
from .dressed import EigenSolution, build_hamiltonian, eigensolve, ground_state
from .rf import RfState, rf_amplitudes, rf_rate_curve
from .sweep import emit_csv, sweep_delta, sweep_omega, sweep_theta

__all__ = [
    "BACKEND",
    "BadGrid",
    "BandPoint",
    "ChannelSpec",
    "Degenerate",
    "DressedParams",
    "EigenSolution",
    "IoError",
    "NegativeOmega",
    "NonFinite",
    "NotNormalized",
    "PAError",
    "RatioResult",
    "RfState",
    "SpinorAmplitudes",
    "SweepSeries",
    "UnsupportedChannel",
    "ValidationError",
    "ZeroBareChannel",
    "build_hamiltonian",
    "cg_table",
    "eigensolve",
    "emit_csv",
    "find_band_minimum",
    "ground_state",
    "rate_ratio",
    "rate_ratio_f0",
    "rate_ratio_f2",
    "rf_amplitudes",
    "rf_rate_curve",
    "scan_band",
    "sweep_delta",
    "sweep_omega",
    "sweep_theta",
    "validate_params",
]
