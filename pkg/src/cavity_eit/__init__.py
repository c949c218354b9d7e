"""Squeezed-light noise spectra of a two-mode cavity filled with Lambda atoms.

Typical use::

    from cavity_eit import presets, build, quadrature_spectrum
    lm, C = build(presets.vacuum_probe(delta=4.0))
    quadrature_spectrum(lm, C, omega=3.0, mode=2, theta=0.0)
"""

from . import closedform, presets
from .diffusion import CorrelationMatrix, diffusion_matrix, input_correlations
from .errors import (AsymmetricCoupling, CavityEITError, DomainError,
                     NearSingular, NegativeRate, NoConvergence, NoPeak,
                     SingularJacobian, Unstable, ZeroAtoms, ZeroDrive)
from .fluctuations import LinearModel, StabilityReport, drift_jacobian, stability_check
from .params import (ORDER, DerivedQuantities, ModelParams, VariableOrder,
                     derived_quantities, validate_params)
from .pipeline import build
from .semiclassics import (MeanState, SteadyState, dark_state_seed, mean_drift,
                           required_drive, solve_steady_state)
from .spectra import (PeakReport, SpectrumTable, find_peaks, quadrature_spectrum,
                      spectrum_sweep)

__version__ = "0.1.0"
