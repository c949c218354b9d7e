import warnings

import numpy as np
import pytest

from cavity_eit import ORDER, ModelParams, derived_quantities, presets, validate_params
from cavity_eit.errors import AsymmetricCoupling, NegativeRate, ZeroAtoms
from cavity_eit.params import SmallNoiseWarning


def test_reference_set_derived():
    p = validate_params(presets.vacuum_probe(delta=100.0))
    d = derived_quantities(p)
    assert d.C == pytest.approx(25 / 0.06, rel=1e-12)
    assert d.delta_c == pytest.approx(0.24, rel=1e-12)
    assert abs(d.Omega1) == pytest.approx(1.0)
    assert d.Omega2 == 0


@pytest.mark.parametrize("field", ["Gamma1", "Gamma12", "gamma2"])
def test_negative_rate_rejected(field):
    with pytest.raises(NegativeRate):
        validate_params(ModelParams(**{field: -1e-3}))


def test_zero_atoms_rejected():
    with pytest.raises(ZeroAtoms):
        validate_params(ModelParams(N=0))


def test_asymmetric_coupling_has_no_closed_form():
    with pytest.raises(AsymmetricCoupling):
        derived_quantities(ModelParams(g2=-0.004))


def test_small_field_warns():
    with pytest.warns(SmallNoiseWarning):
        validate_params(ModelParams(alpha1=3.0))


def test_unequal_decay_warns():
    with pytest.warns(SmallNoiseWarning):
        validate_params(ModelParams(Gamma2=0.5))


def test_reference_set_is_quiet():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        validate_params(presets.driven_probe())


def test_adjoint_permutations_are_involutions():
    P = np.array(ORDER.adjoint_permutation())
    Q = np.array(ORDER.noise_adjoint_permutation())
    assert np.array_equal(P[P], np.arange(12))
    assert np.array_equal(Q[Q], np.arange(12))
    assert P[ORDER.index("a1")] == ORDER.index("a1+")


def test_cooperativity_scales_with_N():
    d1 = derived_quantities(ModelParams(N=1_000_000, delta=10.0))
    d2 = derived_quantities(ModelParams(N=2_000_000, delta=20.0))
    assert d2.C == pytest.approx(2 * d1.C)
    assert d2.delta_c == pytest.approx(d1.delta_c)
