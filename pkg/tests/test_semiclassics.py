import warnings

import numpy as np
import pytest

from cavity_eit import (MeanState, ModelParams, dark_state_seed, mean_drift, presets,
                        required_drive, solve_steady_state)
from cavity_eit.errors import ZeroDrive


def test_seed_single_field_pumps_into_other_ground_level():
    s = dark_state_seed(ModelParams(alpha1=-200, alpha2=0))
    p00, p11, p22 = s.populations
    assert s.w2 == pytest.approx(-1.0)
    assert (p00, p11, p22) == pytest.approx((0.0, 0.0, 1.0))


def test_seed_equal_fields():
    s = dark_state_seed(presets.driven_probe())
    assert s.populations == pytest.approx((0.0, 0.5, 0.5))
    assert s.s21 == pytest.approx(-0.5)


def test_seed_unequal_fields():
    s = dark_state_seed(presets.driven_probe(alpha1=-400, alpha2=-200))
    assert s.populations[1] == pytest.approx(1 / 5)
    assert s.populations[2] == pytest.approx(4 / 5)


def test_seed_needs_a_field():
    with pytest.raises(ZeroDrive):
        dark_state_seed(ModelParams(alpha1=0, alpha2=0))


@pytest.mark.parametrize("a1,a2", [(-200, 0), (-200, -200), (-400, -200), (150j, -80)])
def test_dark_state_is_stationary_without_dephasing(a1, a2):
    p = ModelParams(alpha1=a1, alpha2=a2, delta=3.0)
    d = mean_drift(p, dark_state_seed(p))
    assert d.norm() < 1e-13


def test_bare_cavity_relaxes_at_half_linewidth():
    p = ModelParams(g1=0.0, g2=0.0, alpha1=1.0, alpha2=0.0)
    m = MeanState(0j, 0j, 0j, 0j, 0j, 0.0, -1.0)
    d = mean_drift(p, m, drive=(0.0, 0.0))
    assert d.a1 == 0
    m = MeanState(1 + 0j, 0j, 0j, 0j, 0j, 0.0, -1.0)
    assert mean_drift(p, m, drive=(0.0, 0.0)).a1 == pytest.approx(-p.gamma1 / 2)


def test_empty_cavity_drive():
    p = ModelParams(g1=0.0, g2=0.0, alpha1=1.0)
    d1, d2 = required_drive(p, dark_state_seed(p))
    assert d1 == pytest.approx(0.03 / np.sqrt(0.06))
    assert abs(d1) == pytest.approx(0.12247, abs=1e-5)


def test_ground_coherence_equation_by_hand():
    p = ModelParams(Gamma12=0.02, delta=1.7, alpha1=-150 + 20j, alpha2=-90)
    m = MeanState(p.alpha1, p.alpha2, 0.03 - 0.01j, -0.02 + 0.04j,
                  -0.3 + 0.1j, -0.4, -0.5)
    expected = (-p.Gamma12 * m.s21 - 1j * p.g1 * np.conj(m.a1) * m.s20
                + 1j * p.g2 * m.a2 * np.conj(m.s10))
    assert mean_drift(p, m).s21 == pytest.approx(expected, abs=1e-14)


def test_dephased_steady_state():
    p = presets.driven_probe(Gamma12=5e-4)
    ss = solve_steady_state(p)
    assert ss.residual < 1e-10
    assert ss.p00 > 0
    assert ss.mean.check_bounds()


def test_excited_population_grows_with_dephasing():
    p00 = [solve_steady_state(presets.driven_probe(Gamma12=g)).p00
           for g in (0.0, 1e-4, 5e-4, 2e-3)]
    assert p00[0] == pytest.approx(0.0, abs=1e-15)
    assert np.all(np.diff(p00) > 0)


def test_phase_covariance():
    p = presets.driven_probe(Gamma12=3e-4, delta=2.0)
    ph = np.exp(0.7j)
    q = p.replace(alpha1=p.alpha1 * ph, alpha2=p.alpha2 * ph)
    a, b = solve_steady_state(p).mean, solve_steady_state(q).mean
    assert b.s10 == pytest.approx(a.s10 * ph, abs=1e-12)
    assert b.s20 == pytest.approx(a.s20 * ph, abs=1e-12)
    assert b.s21 == pytest.approx(a.s21, abs=1e-12)
    assert (b.w1, b.w2) == pytest.approx((a.w1, a.w2), abs=1e-12)


def test_literal_mode_changes_only_optical_decay():
    p = presets.driven_probe(Gamma12=1e-3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a = solve_steady_state(p)
        b = solve_steady_state(p.replace(literal_mode=True))
    assert b.residual < 1e-10
    assert a.p00 != b.p00
