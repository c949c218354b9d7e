import warnings

import numpy as np
import pytest

from cavity_eit import ORDER, drift_jacobian, presets, solve_steady_state, stability_check
from cavity_eit.errors import Unstable
from cavity_eit.validation import finite_difference_jacobian


def _lm(p):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return drift_jacobian(p, solve_steady_state(p))


def test_uncoupled_cavity_spectrum():
    lm = _lm(presets.vacuum_probe(g1=0.0, g2=0.0, alpha1=-200.0))
    ev = lm.eigenvalues
    assert np.sum(np.isclose(ev, -0.03)) == 4
    rep = stability_check(lm)
    assert rep.max_real == pytest.approx(0.0, abs=1e-12)
    assert rep.marginal  # ground coherence without dephasing


def test_probe_coupling_entry():
    p = presets.driven_probe()
    lm = _lm(p)
    i, j = ORDER.index("S20"), ORDER.index("a2")
    # d S20 / d a2 at the dark state: -i g2 N times the ground population difference
    m = lm.ss.mean
    p00, p11, p22 = m.populations
    assert lm.A[i, j] == pytest.approx(-1j * p.g2 * p.N * (p22 - p00))
    assert lm.A[ORDER.index("a2"), ORDER.index("S20")] == pytest.approx(-1j * p.g2)


@pytest.mark.parametrize("p", [
    presets.vacuum_probe(delta=4.0),
    presets.driven_probe(delta=2.0, Gamma12=1e-4),
    presets.driven_probe(delta=-1.0, Gamma12=3e-4, alpha1=-120 + 40j),
])
def test_drift_matches_finite_differences(p):
    lm = _lm(p)
    J = finite_difference_jacobian(p, lm.ss.mean)
    assert np.max(np.abs(J - lm.A)) <= 1e-6 * np.max(np.abs(lm.A))


def test_conjugate_symmetry():
    lm = _lm(presets.driven_probe(delta=2.0, Gamma12=1e-4))
    assert lm.conjugate_symmetry_error() < 1e-12


def test_reference_vacuum_probe_is_stable():
    rep = stability_check(_lm(presets.vacuum_probe()))
    assert rep.max_real < 0
    assert not rep.marginal


def test_strong_dephasing_is_unstable():
    lm = _lm(presets.driven_probe(Gamma12=1 / 100))
    with pytest.raises(Unstable) as exc:
        stability_check(lm)
    assert exc.value.max_real > 0
    assert stability_check(lm, raise_on_unstable=False).max_real > 0


def test_weak_dephasing_driven_is_stable():
    rep = stability_check(_lm(presets.driven_probe(Gamma12=1 / 400)))
    assert rep.max_real < 0
