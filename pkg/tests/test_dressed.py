import math

import numpy as np
import pytest

from pa_interference import oracle
from pa_interference.core import Degenerate, DressedParams, NegativeOmega, ValidationError
from pa_interference.dressed import build_hamiltonian, closed_form_eigenvalues, eigensolve, ground_state

# Omega=5.4, delta=0, q=0: the symmetric block [[4, Omega/sqrt2], [Omega/sqrt2, -0.65]]
# gives the ground energy analytically; frozen Jacobi result agrees.
E_GROUND_54 = (3.35 - math.sqrt(4.65**2 + 2 * 5.4**2)) / 2
JACOBI_GROUND_54 = -2.7955284922478696
JACOBI_VECTOR_54 = (-0.3463839129111894, 0.8718006479423305, -0.3463839129111894)


@pytest.mark.parametrize(
    "p, diag, off",
    [
        (DressedParams(0.0, 0.0, 0.65, 0.0), (4.0, -0.65, 4.0), 0.0),
        (DressedParams(5.4, 0.0, 0.65, 0.0), (4.0, -0.65, 4.0), 2.7),
        (DressedParams(2.0, 1.0, 0.65, 0.5), (6.25 - 1, 0.25 - 0.65, 2.25 + 1), 1.0),
    ],
)
def test_build_hamiltonian(p, diag, off):
    h = build_hamiltonian(p)
    np.testing.assert_allclose(np.diag(h), diag, rtol=0, atol=1e-15)
    assert h[0, 1] == h[1, 0] == h[1, 2] == h[2, 1] == off
    assert h[0, 2] == h[2, 0] == 0.0
    assert np.array_equal(h, h.T)


def test_build_hamiltonian_validates():
    with pytest.raises(NegativeOmega):
        build_hamiltonian(DressedParams(-1.0))


def test_eigensolve_diagonal():
    sol = eigensolve(np.diag([4.0, -0.65, 4.0]))
    np.testing.assert_array_equal(sol.energies, [-0.65, 4.0, 4.0])
    np.testing.assert_array_equal(sol.vectors[:, 0], [0, 1, 0])


def test_eigensolve_identity():
    sol = eigensolve(np.eye(3))
    np.testing.assert_array_equal(sol.energies, [1, 1, 1])
    np.testing.assert_allclose(sol.vectors.T @ sol.vectors, np.eye(3), atol=1e-15)


def test_eigensolve_rejects_asymmetric():
    h = np.eye(3)
    h[0, 1] = np.nextafter(1.0, 2.0)
    h[1, 0] = 1.0
    with pytest.raises(ValidationError):
        eigensolve(h)


def test_ground_energy_matches_oracle_and_analytic():
    h = build_hamiltonian(DressedParams(5.4))
    sol = eigensolve(h)
    assert abs(sol.energies[0] - JACOBI_GROUND_54) <= 1e-10
    assert abs(sol.energies[0] - E_GROUND_54) <= 1e-12
    jac = oracle.jacobi_eigensolve(h)
    np.testing.assert_allclose(sol.energies, jac.energies, atol=1e-10)


def test_eigensolve_random_invariants(rng):
    for _ in range(500):
        a = rng.normal(size=(3, 3)) * rng.choice([1e-3, 1.0, 50.0])
        a = a + a.T
        sol = eigensolve(a)
        scale = max(1.0, np.abs(a).max())
        assert np.all(np.diff(sol.energies) >= 0)
        for j in range(3):
            v = sol.vectors[:, j]
            assert np.linalg.norm(a @ v - sol.energies[j] * v) <= 1e-10 * scale
        np.testing.assert_allclose(sol.vectors.T @ sol.vectors, np.eye(3), atol=1e-10)


def test_eigensolve_near_degenerate(rng):
    for gap in (0.0, 1e-14, 1e-9, 1e-5):
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        a = q @ np.diag([1.0, 1.0 + gap, 3.0]) @ q.T
        a = (a + a.T) / 2
        sol = eigensolve(a)
        np.testing.assert_allclose(sol.energies, [1.0, 1.0 + gap, 3.0], atol=1e-12)
        np.testing.assert_allclose(sol.vectors.T @ sol.vectors, np.eye(3), atol=1e-10)
        for j in range(3):
            v = sol.vectors[:, j]
            assert np.linalg.norm(a @ v - sol.energies[j] * v) <= 1e-10


def test_closed_form_eigenvalues_sorted():
    lo, mid, hi = closed_form_eigenvalues(np.diag([3.0, 1.0, 2.0]))
    assert (lo, mid, hi) == pytest.approx((1.0, 2.0, 3.0), abs=1e-14)


def test_ground_state_uncoupled():
    e, amps = ground_state(DressedParams(0.0, 0.0, 0.65, 0.0))
    assert e == pytest.approx(-0.65, abs=1e-15)
    assert amps.as_tuple() == (0.0, 1.0, 0.0)


def test_ground_state_strong_coupling_limit():
    _, amps = ground_state(DressedParams(200.0))
    # gauge: flip the m_f=+-1 signs to compare with the all-positive limit
    got = (abs(amps.c_m1), abs(amps.c_0), abs(amps.c_p1))
    np.testing.assert_allclose(got, (0.5, 1 / math.sqrt(2), 0.5), atol=1e-2)


def test_ground_state_matches_oracle_vector():
    _, amps = ground_state(DressedParams(5.4))
    np.testing.assert_allclose(amps.as_tuple(), JACOBI_VECTOR_54, atol=1e-10)


def test_ground_state_degenerate():
    # Omega=0 crossing of the m_f=0 and m_f=-1 parabolas: (q+2)^2 = q^2 - 0.65
    q = (-0.65 - 4.0) / 4.0
    with pytest.raises(Degenerate):
        ground_state(DressedParams(0.0, 0.0, 0.65, q))


def test_swap_symmetry_at_zero_detuning(rng):
    for _ in range(200):
        omega, eps, q = rng.uniform(0.1, 15), rng.uniform(-1, 1.5), rng.uniform(-3, 3)
        e1, a1 = ground_state(DressedParams(omega, 0.0, eps, q))
        e2, a2 = ground_state(DressedParams(omega, 0.0, eps, -q))
        assert abs(e1 - e2) <= 1e-12
        assert abs(a1.c_m1 - a2.c_p1) <= 1e-10
        assert abs(a1.c_0 - a2.c_0) <= 1e-10


def test_ground_sign_structure(rng):
    for _ in range(500):
        p = DressedParams(rng.uniform(1e-3, 20), rng.uniform(-3, 3), rng.uniform(-1, 1.5), rng.uniform(-3, 3))
        _, a = ground_state(p)
        # alternating signs (s, -s, s) up to zero components
        assert a.c_m1 * a.c_0 <= 0 and a.c_p1 * a.c_0 <= 0
        assert a.c_p1 * a.c_m1 >= 0
        assert a.c_0**2 * a.c_p1 * a.c_m1 >= 0


def test_ground_energy_non_increasing_in_omega():
    omegas = np.linspace(0, 30, 301)
    energies = [ground_state(DressedParams(w))[0] for w in omegas]
    assert np.all(np.diff(energies) <= 1e-14)
