import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pa_interference import oracle
from pa_interference.channels import (
    cg_table,
    channel_from_label,
    projection,
    rate_ratio,
    rate_ratio_f0,
    rate_ratio_f2,
)
from pa_interference.core import SpinorAmplitudes, UnsupportedChannel, ZeroBareChannel

from .conftest import SUPERPOSITION

S3, S6, S2 = math.sqrt(3), math.sqrt(6), math.sqrt(2)

unit = st.tuples(*[st.floats(-1, 1, allow_nan=False)] * 3).filter(lambda v: sum(x * x for x in v) > 1e-6)


def amps_of(v):
    return SpinorAmplitudes.from_vector(v)


@pytest.mark.parametrize(
    "f, row",
    [(0, (-1 / S3, 1 / S3, 1 / S3)), (2, (2 / S6, 1 / S6, 1 / S6)), (1, (0.0, 1 / S2, -1 / S2))],
)
def test_cg_table(f, row):
    ch = cg_table(f)
    assert (ch.g_00, ch.g_pm, ch.g_mp) == pytest.approx(row, abs=1e-15)


@pytest.mark.parametrize("f", [0, 1, 2])
def test_cg_table_matches_ladder_construction(f):
    ch, lad = cg_table(f), oracle.ladder_channel(f)
    assert (ch.g_00, ch.g_pm, ch.g_mp) == pytest.approx((lad.g_00, lad.g_pm, lad.g_mp), abs=1e-14)


def test_cg_f1_antisymmetric():
    ch = cg_table(1)
    assert ch.g_00 == 0.0 and ch.g_pm == -ch.g_mp


@pytest.mark.parametrize("f", [-1, 3, 0.5, "2", True])
def test_cg_table_unsupported(f):
    with pytest.raises(UnsupportedChannel):
        cg_table(f)


def test_channel_labels():
    assert channel_from_label("F0").total_f == 0
    assert channel_from_label("f2").total_f == 2
    with pytest.raises(UnsupportedChannel):
        channel_from_label("F7")


def test_projection_reduces_to_bare():
    for f in (0, 2):
        bare, dressed = projection(SpinorAmplitudes(0.0, 1.0, 0.0), cg_table(f))
        assert bare == dressed


def test_destructive_limit():
    r = rate_ratio(SpinorAmplitudes(*SUPERPOSITION), cg_table(0))
    assert abs(r.with_interference) <= 1e-12


@pytest.mark.parametrize("f", [0, 2])
def test_bare_identity(f):
    r = rate_ratio(SpinorAmplitudes(0.0, 1.0, 0.0), cg_table(f))
    assert r.with_interference == pytest.approx(1.0, abs=1e-12)
    assert r.without_interference == pytest.approx(1.0, abs=1e-12)


def test_constructive_superposition():
    r = rate_ratio(SpinorAmplitudes(*SUPERPOSITION), cg_table(2))
    assert r.with_interference == pytest.approx(9 / 16, abs=1e-14)
    assert r.without_interference == pytest.approx(5 / 16, abs=1e-14)
    o = oracle.expand_ratio(SpinorAmplitudes(*SUPERPOSITION), oracle.ladder_channel(2))
    assert o.with_interference == pytest.approx(9 / 16, abs=1e-14)


def test_f1_has_no_bare_projection():
    with pytest.raises(ZeroBareChannel):
        rate_ratio(SpinorAmplitudes(*SUPERPOSITION), cg_table(1))


def test_convenience_forms():
    a = SpinorAmplitudes(*SUPERPOSITION)
    assert rate_ratio_f0(a) == rate_ratio(a, cg_table(0))
    assert rate_ratio_f2(a) == rate_ratio(a, cg_table(2))
    assert rate_ratio_f2(SpinorAmplitudes(0.0, 1.0, 0.0)).with_interference == pytest.approx(1.0, abs=1e-15)


def test_f0_pure_pair():
    a = SpinorAmplitudes(1 / S2, 0.0, 1 / S2)
    r = rate_ratio_f0(a)
    assert r.with_interference == pytest.approx(1.0, abs=1e-14)
    assert r.cross_term == 0.0
    assert oracle.expand_ratio(a, oracle.ladder_channel(0)).with_interference == pytest.approx(1.0, abs=1e-14)


@given(unit)
def test_three_term_expansions(v):
    a = amps_of(v)
    c0, c1, cm = a.c_0, a.c_p1, a.c_m1
    f0 = c0**4 + 4 * (cm * c1) ** 2 - 4 * c0**2 * cm * c1
    f2 = c0**4 + (c1 * cm) ** 2 + 2 * c0**2 * c1 * cm
    assert abs(rate_ratio_f0(a).with_interference - f0) <= 1e-14
    assert abs(rate_ratio_f2(a).with_interference - f2) <= 1e-14
    assert abs(rate_ratio_f0(a).with_interference - (c0**2 - 2 * c1 * cm) ** 2) <= 1e-14
    assert abs(rate_ratio_f2(a).with_interference - (c0**2 + c1 * cm) ** 2) <= 1e-14


@given(unit)
def test_bounds_and_decomposition(v):
    a = amps_of(v)
    for f in (0, 2):
        r = rate_ratio(a, cg_table(f))
        assert -1e-15 <= r.with_interference <= 1 + 1e-12
        assert -1e-15 <= r.without_interference <= 1 + 1e-12
        assert abs(r.with_interference - r.without_interference - r.cross_term) <= 1e-12


@given(unit)
def test_gauge_invariance(v):
    a = amps_of(v)
    flipped = SpinorAmplitudes(-a.c_m1, a.c_0, -a.c_p1)
    for f in (0, 2):
        ch = cg_table(f)
        r = rate_ratio(a, ch)
        assert rate_ratio(-a, ch) == r
        assert rate_ratio(flipped, ch) == r


@given(unit)
def test_matches_expansion_oracle(v):
    a = amps_of(v)
    for f in (0, 2):
        r = rate_ratio(a, cg_table(f))
        o = oracle.expand_ratio(a, oracle.ladder_channel(f))
        np.testing.assert_allclose(
            [r.with_interference, r.without_interference, r.cross_term],
            [o.with_interference, o.without_interference, o.cross_term],
            rtol=0,
            atol=1e-12,
        )


@given(st.floats(0, 1), st.floats(0, 1))
def test_interference_direction_for_sign_structured_states(x, y):
    # amplitudes with C_0^2 C_1 C_-1 >= 0, as for dressed ground states
    v = (x, math.sqrt(max(0.0, 1 - x * x)) * 0.8 + 0.01, y)
    a = SpinorAmplitudes.from_vector(v)
    if a.c_0**2 * a.c_p1 * a.c_m1 < 0:
        return
    assert rate_ratio_f0(a).cross_term <= 0
    assert rate_ratio_f2(a).cross_term >= 0
