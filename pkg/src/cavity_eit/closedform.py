"""Analytic limits used as independent checks on the numerical engine.

Each function transcribes one closed-form result for the symmetric
configuration (``Gamma1 == Gamma2 == Gamma``, ``gamma1 == gamma2 == gamma``,
``g1 == g2 == g``).  Notation: ``C = g**2 N / gamma`` is the cooperativity,
``delta_c = delta / C`` the normalized detuning, ``omega_gamma = omega /
gamma`` and ``Ng2 = N g**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "ClosedFormInput",
    "omega_gt_max",
    "omega_lt_max",
    "limit_spectrum_vacuum",
    "limit_spectrum_driven_theta0",
    "quadrature_at_ltmax",
    "omega_sq",
    "decoherence_w0",
    "input_quadrature",
]


@dataclass(frozen=True)
class ClosedFormInput:
    r: float = 0.0
    theta: float = 0.0
    delta_c: float | None = None
    omega_gamma: float | None = None
    C: float | None = None
    Omega: float = 1.0
    Ng2: float | None = None
    delta: float = 0.0
    Gamma: float = 1.0
    Gamma12: float = 0.0
    gamma: float | None = None

    def __post_init__(self):
        if self.delta_c is not None and self.C:
            expected = self.delta / self.C
            if not np.isclose(self.delta_c, expected, rtol=1e-12, atol=0):
                raise DomainError(f"delta_c={self.delta_c} inconsistent with "
                                  f"delta/C={expected}")

    @classmethod
    def from_params(cls, p, theta: float = 0.0, omega: float | None = None):
        from .params import derived_quantities
        d = derived_quantities(p)
        return cls(r=p.r, theta=theta, delta_c=d.delta_c,
                   omega_gamma=None if omega is None else omega / d.gamma,
                   C=d.C, Omega=abs(d.Omega1), Ng2=p.N * p.g1 ** 2,
                   delta=p.delta, Gamma=p.Gamma1, Gamma12=p.Gamma12,
                   gamma=d.gamma)


def input_quadrature(r, theta):
    """Noise of the ``theta`` quadrature of the squeezed input."""
    return np.exp(-2 * r) * np.cos(theta) ** 2 + np.exp(2 * r) * np.sin(theta) ** 2


def omega_gt_max(delta, Omega, Ng2, driven: bool = False):
    """Upper (normal-mode) peak position ``(delta + sqrt(k Omega^2 + 4 Ng2 + delta^2))/2``.

    ``k`` is 4 for an undriven probe and 8 when both modes are driven.
    """
    k = 8.0 if driven else 4.0
    return 0.5 * (delta + np.sqrt(k * Omega ** 2 + 4 * Ng2 + delta ** 2))


def omega_lt_max(delta_c, gamma):
    """Lower peak position ``gamma sqrt(4 - delta_c^2) / (2 delta_c)``; zero past ``delta_c = 2``."""
    delta_c = np.asarray(delta_c, dtype=float)
    if np.any(delta_c <= 0):
        raise DomainError("omega_lt_max needs delta_c > 0")
    inside = np.clip(4 - delta_c ** 2, 0, None)
    out = np.where(delta_c <= 2, gamma * np.sqrt(inside) / (2 * delta_c), 0.0)
    return out[()] if out.ndim == 0 else out


def _M(omega_gamma, delta_c):
    w2 = omega_gamma ** 2
    return (16 + (4 * w2 + 1) ** 2 * delta_c ** 4
            + 8 * (1 - 4 * w2) * delta_c ** 2)


def limit_spectrum_vacuum(omega_gamma, delta_c, r, theta):
    """Large-N probe spectrum for an undriven (squeezed vacuum) probe."""
    if np.any(np.asarray(delta_c) < 0):
        raise DomainError("delta_c must be >= 0")
    c, s = np.cos(theta), np.sin(theta)
    q = delta_c ** 2 * (4 * omega_gamma ** 2 + 1) - 4
    num = (np.exp(-2 * r) * (c * q - 4 * s * delta_c) ** 2
           + np.exp(2 * r) * (4 * c * delta_c + s * q) ** 2)
    return num / _M(omega_gamma, delta_c)


def limit_spectrum_driven_theta0(omega_gamma, delta_c, r):
    """Large-N probe spectrum, ``theta = 0``, both modes driven."""
    if np.any(np.asarray(delta_c) < 0):
        raise DomainError("delta_c must be >= 0")
    w2 = omega_gamma ** 2
    x = 4 * w2 + 1
    num = (4 * np.exp(2 * r) * x * delta_c ** 2
           + 4 * (x * delta_c ** 2 + 4)
           + np.exp(-2 * r) * (x ** 3 * delta_c ** 4
                               - 32 * (4 * w2 ** 2 + w2) * delta_c ** 2
                               + 64 * w2))
    R = x * _M(omega_gamma, delta_c)
    return num / R


def quadrature_at_ltmax(theta, r, delta_c):
    """Probe and pump quadrature noise at the lower peak, both modes driven.

    Returns ``(probe(theta), pump(theta))`` where the pump value is the
    probe expression at ``theta + pi/2``.
    """
    if np.any(np.asarray(delta_c) > 2):
        raise DomainError("quadrature_at_ltmax needs delta_c <= 2")

    def probe(th):
        return 0.25 * ((np.exp(-r) + np.exp(r)) ** 2
                       + (np.exp(2 * r) - np.exp(-2 * r))
                       * np.cos(th) * np.sin(th) * delta_c)

    return probe(theta), probe(theta + np.pi / 2)


def omega_sq(gamma, g, alpha, Ng2_over_Gamma):
    """Frequency of maximal squeezing exchange, ``gamma g alpha / sqrt(2 (Ng2/Gamma + 2 g^2 alpha^2))``.

    The radicand mixes units; evaluate with ``Gamma = 1``.
    """
    ga = g * alpha
    return gamma * ga / (np.sqrt(2) * np.sqrt(Ng2_over_Gamma + 2 * ga ** 2))


def decoherence_w0(r, theta_sel, Omega, Gamma, Gamma12, delta, C):
    """Probe quadrature noise at ``omega = 0`` with ground-state dephasing.

    Undriven probe.  ``theta_sel`` is ``0`` or ``pi/2``; the latter is the
    same expression with ``r -> -r``.
    """
    if np.isclose(theta_sel, np.pi / 2):
        r = -r
    elif not np.isclose(theta_sel, 0.0):
        raise DomainError("theta_sel must be 0 or pi/2")
    O2 = Omega ** 2
    G12 = Gamma12
    B = delta ** 2 * G12 ** 2 + (O2 + 2 * C * G12 + Gamma * G12) ** 2
    inner = (O2 ** 2 - 4 * C ** 2 * G12 ** 2 + 2 * O2 * Gamma * G12
             + (Gamma ** 2 + delta ** 2) * G12 ** 2)
    return ((16 * np.exp(2 * r) * C ** 2 * delta ** 2 * G12 ** 4
             + np.exp(-2 * r) * inner ** 2) / B ** 2
            + 8 * C * G12 * (O2 + Gamma * G12) / B)
