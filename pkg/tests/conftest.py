import math

import numpy as np
import pytest

from pa_interference import _purepy

try:
    from pa_interference import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [pytest.param(_purepy, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="compiled"))

SQRT2 = math.sqrt(2.0)
SUPERPOSITION = (0.5, 1 / SQRT2, 0.5)


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE = {
    "test_zero_coupling_identity": "zero-coupling identity",
    "test_destructive_limit": "destructive limit",
    "test_constructive_ordering": "constructive ordering",
    "test_resonance_maximizes_contrast": "resonance maximizes contrast",
    "test_rf_closed_forms": "RF closed forms",
    "test_rf_periodicity": "RF periodicity",
    "test_oracle_equivalence": "oracle equivalence",
    "test_structural_invariants": "structural invariants",
    "test_determinism": "determinism",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for status in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "").rpartition("::")[2]
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and name in ACCEPTANCE:
                if rep.when == "call" or status != "passed":
                    outcomes[name] = "PASS" if status == "passed" else status.upper().replace("FAILED", "FAIL")
    if not outcomes:
        return
    terminalreporter.section("acceptance")
    for name, label in ACCEPTANCE.items():
        if name in outcomes:
            terminalreporter.write_line(f"{outcomes[name]:<5} {label}")
