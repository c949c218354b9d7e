"""Model parameters, derived quantities and variable orderings.

All rates, couplings and detunings are plain floats in whatever frequency
unit the caller picks; the library never rescales them.  Atomic operators
follow ``sigma_ij = |i><j|`` with ``|0>`` the excited level, and the
population differences are ``W_i = Sigma_00 - Sigma_ii``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import AsymmetricCoupling, NegativeRate, ZeroAtoms

__all__ = [
    "ModelParams",
    "VariableOrder",
    "ORDER",
    "DerivedQuantities",
    "SmallNoiseWarning",
    "validate_params",
    "derived_quantities",
]


class SmallNoiseWarning(UserWarning):
    """Parameters stretch the assumptions of the linearized treatment."""


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the two-mode cavity with N Lambda atoms.

    Parameters
    ----------
    Gamma1, Gamma2 : float
        Radiative decay rates of the excited level into ``|1>`` and ``|2>``.
    Gamma12 : float
        Ground-level dephasing rate.
    gamma1, gamma2 : float
        Cavity field decay rates (pump and probe mode).
    g1, g2 : float
        Atom-mode couplings; may be negative.
    delta : float
        Two-photon detuning, common to both transitions.
    N : int
        Number of atoms.
    alpha1, alpha2 : complex
        Target intracavity mean amplitudes.
    r, phi : float
        Squeeze parameter and squeeze phase of the probe input.
    literal_mode : bool
        Drop the dephasing contribution ``Gamma12/4`` to the optical
        coherence decay (simplified equations of motion).
    """

    Gamma1: float = 1.0
    Gamma2: float = 1.0
    Gamma12: float = 0.0
    gamma1: float = 0.06
    gamma2: float = 0.06
    g1: float = -0.005
    g2: float = -0.005
    delta: float = 0.0
    N: int = 1_000_000
    alpha1: complex = -200.0
    alpha2: complex = 0.0
    r: float = 0.0
    phi: float = 0.0
    literal_mode: bool = False

    def replace(self, **changes) -> "ModelParams":
        return replace(self, **changes)

    @property
    def max_rate(self) -> float:
        """Largest rate magnitude, used to scale absolute tolerances."""
        vals = [self.Gamma1, self.Gamma2, self.Gamma12, self.gamma1,
                self.gamma2, abs(self.delta),
                abs(self.g1 * self.alpha1), abs(self.g2 * self.alpha2),
                math.sqrt(self.N) * max(abs(self.g1), abs(self.g2))]
        return max(max(vals), 1e-300)


@dataclass(frozen=True)
class VariableOrder:
    """Canonical ordering of fluctuation and noise vectors.

    ``adj[i]`` is the index of the Hermitian-adjoint partner of variable
    ``i``; ``noise_adj`` is the same map for the noise vector.
    """

    variables: tuple = ("a1", "a2", "S10", "S20", "S21", "W1", "W2",
                        "a1+", "a2+", "S01", "S02", "S12")
    noises: tuple = ("a1in", "a2in", "a1in+", "a2in+", "F10", "F20", "F21",
                     "FW1", "FW2", "F01", "F02", "F12")
    adj: tuple = (7, 8, 9, 10, 11, 5, 6, 0, 1, 2, 3, 4)
    noise_adj: tuple = (2, 3, 0, 1, 9, 10, 11, 7, 8, 4, 5, 6)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def noise_index(self, name: str) -> int:
        return self.noises.index(name)

    def adjoint_permutation(self) -> np.ndarray:
        return np.asarray(self.adj)

    def noise_adjoint_permutation(self) -> np.ndarray:
        return np.asarray(self.noise_adj)


ORDER = VariableOrder()

# cavity variable indices per mode (1-based mode -> index)
A_IDX = {1: 0, 2: 1}
ADAG_IDX = {1: 7, 2: 8}
AIN_IDX = {1: 0, 2: 1}
AINDAG_IDX = {1: 2, 2: 3}


@dataclass(frozen=True)
class DerivedQuantities:
    C: float
    delta_c: float
    Omega1: complex
    Omega2: complex
    gamma: float = field(default=float("nan"))

    def omega_gamma(self, omega):
        """Frequency in units of the cavity decay rate."""
        return np.asarray(omega) / self.gamma


def validate_params(p: ModelParams) -> ModelParams:
    """Check sign and range constraints and normalize types.

    Returns a new :class:`ModelParams` with float rates, an integer atom
    number and complex amplitudes.  Departures from the symmetric
    configuration and weak mean fields only produce a
    :class:`SmallNoiseWarning`.
    """
    rates = {"Gamma1": p.Gamma1, "Gamma2": p.Gamma2, "Gamma12": p.Gamma12,
             "gamma1": p.gamma1, "gamma2": p.gamma2, "r": p.r}
    for name, val in rates.items():
        if not np.isfinite(val):
            raise NegativeRate(f"{name} must be finite, got {val!r}")
        if val < 0:
            raise NegativeRate(f"{name} must be >= 0, got {val!r}")
    if p.N < 1 or int(p.N) != p.N:
        raise ZeroAtoms(f"N must be a positive integer, got {p.N!r}")

    q = replace(
        p,
        Gamma1=float(p.Gamma1), Gamma2=float(p.Gamma2),
        Gamma12=float(p.Gamma12), gamma1=float(p.gamma1),
        gamma2=float(p.gamma2), g1=float(p.g1), g2=float(p.g2),
        delta=float(p.delta), N=int(p.N),
        alpha1=complex(p.alpha1), alpha2=complex(p.alpha2),
        r=float(p.r), phi=float(p.phi), literal_mode=bool(p.literal_mode),
    )

    if q.Gamma1 != q.Gamma2:
        warnings.warn("Gamma1 != Gamma2: closed-form comparisons assume "
                      "equal radiative rates", SmallNoiseWarning, stacklevel=2)
    if q.gamma1 != q.gamma2:
        warnings.warn("gamma1 != gamma2: closed-form comparisons assume "
                      "equal cavity decay rates", SmallNoiseWarning,
                      stacklevel=2)
    for name, a in (("alpha1", q.alpha1), ("alpha2", q.alpha2)):
        if 0 < abs(a) < 10:
            warnings.warn(f"|{name}| = {abs(a):.3g} is not >> 1; the "
                          "small-noise approximation may be poor",
                          SmallNoiseWarning, stacklevel=2)
    return q


def derived_quantities(p: ModelParams) -> DerivedQuantities:
    """Cooperativity, normalized detuning and effective Rabi amplitudes.

    ``delta_c`` is the dimensionless ratio ``delta / C``.
    """
    if p.g1 != p.g2 or p.gamma1 != p.gamma2:
        raise AsymmetricCoupling(
            "cooperativity needs g1 == g2 and gamma1 == gamma2 "
            f"(got g=({p.g1}, {p.g2}), gamma=({p.gamma1}, {p.gamma2}))")
    gamma = p.gamma1
    C = p.g1 ** 2 * p.N / gamma if gamma > 0 else math.inf
    if C == 0:
        delta_c = 0.0 if p.delta == 0 else math.copysign(math.inf, p.delta)
    else:
        delta_c = p.delta / C
    return DerivedQuantities(C=C, delta_c=delta_c,
                             Omega1=p.g1 * complex(p.alpha1),
                             Omega2=p.g2 * complex(p.alpha2), gamma=gamma)
