import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavity_eit import presets, solve_steady_state
from cavity_eit.diffusion import (ATOMIC_FORCE_MAP, diffusion_matrix,
                                  single_atom_diffusion, squeezing_moments)
from cavity_eit.liouvillian import BASIS, AtomGenerator, mean_field_hamiltonian, sigma
from cavity_eit.semiclassics import MeanState

rates = st.floats(0.0, 2.0)


def _random_rho(rng):
    X = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = X @ X.conj().T
    return rho / np.trace(rho)


@given(rates, rates, rates)
def test_identity_is_conserved(G1, G2, G12):
    gen = AtomGenerator(G1, G2, G12)
    assert np.allclose(gen.adjoint(np.eye(3)), 0, atol=1e-14)


def test_ground_coherence_decays_at_dephasing_rate():
    gen = AtomGenerator(1.0, 1.0, 0.37)
    assert np.allclose(gen.adjoint(sigma(2, 1)), -0.37 * sigma(2, 1))
    # optical coherence: (Gamma1+Gamma2)/2 plus a quarter of the dephasing
    assert np.allclose(gen.adjoint(sigma(1, 0)), -(1.0 + 0.37 / 4) * sigma(1, 0))


def test_no_dissipation_no_noise():
    rng = np.random.default_rng(1)
    D = single_atom_diffusion(AtomGenerator(0, 0, 0), _random_rho(rng))
    assert np.allclose(D, 0, atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_hamiltonian_drops_out(seed):
    rng = np.random.default_rng(seed)
    gen = AtomGenerator(0.7, 1.3, 0.05)
    rho = _random_rho(rng)
    H = mean_field_hamiltonian(0.8, -0.005, -0.005, 150 - 30j, -200)
    assert np.allclose(single_atom_diffusion(gen, rho),
                       single_atom_diffusion(gen, rho, H), atol=1e-12)


def test_trace_noise_vanishes():
    rng = np.random.default_rng(7)
    D = single_atom_diffusion(AtomGenerator(1.0, 0.6, 0.1), _random_rho(rng))
    diag = [0, 4, 8]
    assert np.allclose(D[diag].sum(axis=0), 0, atol=1e-14)
    assert np.allclose(D[:, diag].sum(axis=1), 0, atol=1e-14)


def test_optical_noise_hand_value():
    # <F10 F01> = Gamma1 p00 + (Gamma1 + Gamma2) p11 without dephasing
    rng = np.random.default_rng(3)
    rho = _random_rho(rng)
    G1, G2 = 0.8, 1.4
    D = single_atom_diffusion(AtomGenerator(G1, G2, 0.0), rho)
    k, l = 3 * 1 + 0, 3 * 0 + 1
    expected = G1 * rho[0, 0].real + (G1 + G2) * rho[1, 1].real
    assert D[k, l] == pytest.approx(expected, abs=1e-13)


def test_collective_optical_noise_at_dark_state():
    p = presets.driven_probe()
    ss = solve_steady_state(p)
    D = diffusion_matrix(p, ss)
    # rows/cols of the atomic block: F10 is 0, F01 is 5
    assert D[0, 5] / p.N == pytest.approx(p.Gamma1, rel=1e-6)


def test_force_map_shape_and_entries():
    assert ATOMIC_FORCE_MAP.shape == (8, 9)
    assert ATOMIC_FORCE_MAP[3, 0] == 1 and ATOMIC_FORCE_MAP[3, 4] == -1
    assert len(BASIS) == 9


def test_density_matrix_roundtrip():
    m = MeanState(0j, 0j, 0.1 + 0.02j, -0.03j, 0.2 - 0.1j, -0.3, -0.5)
    assert MeanState.from_density_matrix(m.density_matrix()) == m


def test_squeezing_moments_values():
    n, m = squeezing_moments(2.0)
    assert n == pytest.approx(13.15411, abs=1e-5)
    assert m.real == pytest.approx(-13.64496, abs=1e-5)
    assert 1 + 2 * n + 2 * m.real == pytest.approx(0.018308, abs=1e-5)  # from 5-digit n, m
    assert 1 + 2 * n + 2 * m.real == pytest.approx(np.exp(-4), rel=1e-12)
    assert 1 + 2 * n - 2 * m.real == pytest.approx(np.exp(4), rel=1e-12)
    assert 1 + 2 * n - 2 * m.real == pytest.approx(54.59815, abs=1e-5)


@settings(max_examples=50)
@given(st.floats(0, 3), st.floats(-np.pi, np.pi))
def test_squeezed_state_is_pure(r, phi):
    n, m = squeezing_moments(r, phi)
    assert (1 + 2 * n) ** 2 - 4 * abs(m) ** 2 == pytest.approx(1.0, abs=1e-9 * (1 + n) ** 2)
