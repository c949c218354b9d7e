"""One-call assembly of the linear noise model for a parameter set."""

from __future__ import annotations

from .diffusion import diffusion_matrix, input_correlations
from .fluctuations import drift_jacobian
from .params import ModelParams, validate_params
from .semiclassics import solve_steady_state

__all__ = ["build"]


def build(p: ModelParams):
    """Validate, solve the steady state and linearize.

    Returns ``(LinearModel, CorrelationMatrix)`` ready for the spectrum
    functions.
    """
    p = validate_params(p)
    ss = solve_steady_state(p)
    lm = drift_jacobian(p, ss)
    C = input_correlations(p, diffusion_matrix(p, ss))
    return lm, C
