import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cavity_eit import closedform as cf, presets
from cavity_eit.errors import DomainError


def test_upper_peak_examples():
    assert cf.omega_gt_max(0, 1, 25) == pytest.approx(np.sqrt(26))
    assert cf.omega_gt_max(0, 1, 25) == pytest.approx(5.0990, abs=1e-4)
    assert cf.omega_gt_max(4, 1, 25) == pytest.approx(7.4772, abs=1e-4)
    assert cf.omega_gt_max(0, 1, 25, driven=True) == pytest.approx(5.1962, abs=1e-4)


@given(st.floats(0, 50), st.floats(0.1, 5), st.floats(1, 100))
def test_upper_peak_beyond_detuning(delta, Omega, Ng2):
    assert cf.omega_gt_max(delta, Omega, Ng2) > delta


def test_lower_peak_examples():
    assert cf.omega_lt_max(0.24, 0.06) == pytest.approx(0.24819, abs=1e-5)
    assert cf.omega_lt_max(2.0, 0.06) == 0.0
    assert cf.omega_lt_max(3.0, 0.06) == 0.0
    with pytest.raises(DomainError):
        cf.omega_lt_max(0.0, 0.06)


def test_lower_peak_decreasing():
    dc = np.linspace(0.05, 2, 40)
    assert np.all(np.diff(cf.omega_lt_max(dc, 0.06)) < 0)


def test_vacuum_limit_without_squeezing_is_shot_noise():
    for wg in (0.0, 0.3, 2.0):
        for dc in (0.1, 0.24, 1.5):
            for th in (0.0, 0.7):
                assert cf.limit_spectrum_vacuum(wg, dc, 0.0, th) == pytest.approx(1.0)


def test_vacuum_limit_far_away_returns_input():
    assert cf.limit_spectrum_vacuum(1e4, 0.24, 2.0, 0.0) == pytest.approx(np.exp(-4), rel=1e-6)


def test_driven_limit_examples():
    dc = 0.24
    wg = np.sqrt((4 - dc ** 2) / (4 * dc ** 2))
    assert cf.limit_spectrum_driven_theta0(wg, dc, 2.0) == pytest.approx(np.cosh(2) ** 2, rel=1e-9)
    assert cf.limit_spectrum_driven_theta0(wg, dc, 2.0) == pytest.approx(14.154, abs=1e-3)
    assert cf.limit_spectrum_driven_theta0(1.0, dc, 2.0) == pytest.approx(1.1028, abs=1e-4)
    assert cf.limit_spectrum_driven_theta0(0.7, dc, 0.0) == pytest.approx(1.0)


def test_quadrature_at_lower_peak():
    probe, pump = cf.quadrature_at_ltmax(0.0, 2.0, 0.24)
    assert probe == pytest.approx(14.154, abs=1e-3)
    assert pump == pytest.approx(probe)
    probe, _ = cf.quadrature_at_ltmax(np.pi / 4, 2.0, 0.24)
    assert probe == pytest.approx(15.792, abs=1e-3)
    with pytest.raises(DomainError):
        cf.quadrature_at_ltmax(0.0, 2.0, 2.5)


def test_exchange_frequency():
    assert cf.omega_sq(0.06, 1.0, 1.0, 25) == pytest.approx(0.008165, abs=1e-6)
    assert cf.omega_sq(0.12, 1.0, 1.0, 25) == pytest.approx(2 * cf.omega_sq(0.06, 1.0, 1.0, 25))


def test_decoherence_at_zero_frequency():
    C = 25 / 0.06
    val = cf.decoherence_w0(2.0, 0.0, 1.0, 1.0, 1e-4, 0.0, C)
    assert val == pytest.approx(0.2971, abs=1e-4)
    assert cf.decoherence_w0(2.0, 0.0, 1.0, 1.0, 0.0, 0.0, C) == pytest.approx(np.exp(-4))
    assert cf.decoherence_w0(0.0, 0.0, 1.0, 1.0, 1e-4, 0.0, C) == pytest.approx(1.0, abs=1e-12)
    assert (cf.decoherence_w0(2.0, np.pi / 2, 1.0, 1.0, 1e-4, 3.0, C)
            == pytest.approx(cf.decoherence_w0(-2.0, 0.0, 1.0, 1.0, 1e-4, 3.0, C)))
    with pytest.raises(DomainError):
        cf.decoherence_w0(2.0, 0.3, 1.0, 1.0, 1e-4, 0.0, C)


def test_input_quadrature():
    assert cf.input_quadrature(2.0, 0.0) == pytest.approx(np.exp(-4))
    assert cf.input_quadrature(2.0, np.pi / 2) == pytest.approx(np.exp(4))


def test_inputs_from_params():
    ci = cf.ClosedFormInput.from_params(presets.vacuum_probe(delta=100.0, r=2.0))
    assert ci.delta_c == pytest.approx(0.24)
    assert ci.Omega == pytest.approx(1.0)
    with pytest.raises(DomainError):
        cf.ClosedFormInput(delta=100.0, C=25 / 0.06, delta_c=0.3)
