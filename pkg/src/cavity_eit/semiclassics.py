"""Stationary mean values of the atom-cavity system.

Mean values are stored per atom; collective expectation values are ``N``
times larger.  The intracavity amplitudes are fixed at their targets
``alpha1``, ``alpha2`` and the drives that sustain them are derived
afterwards, so for given fields the atomic problem is the steady state of a
driven single-atom Lindblad equation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, SingularJacobian, ZeroDrive
from .liouvillian import AtomGenerator, mean_field_hamiltonian
from .params import ModelParams

__all__ = [
    "MeanState",
    "SteadyState",
    "dark_state_seed",
    "mean_drift",
    "solve_steady_state",
    "required_drive",
]

log = logging.getLogger(__name__)

_POP_TOL = 1e-9


@dataclass(frozen=True)
class MeanState:
    """Per-atom mean values plus the two intracavity amplitudes.

    ``s_ij`` is ``<sigma_ij>`` for one atom and ``w_i = p00 - p_ii``.
    """

    a1: complex
    a2: complex
    s10: complex
    s20: complex
    s21: complex
    w1: float
    w2: float

    @property
    def populations(self) -> tuple:
        p00 = (1.0 + self.w1 + self.w2) / 3.0
        return p00, p00 - self.w1, p00 - self.w2

    def density_matrix(self) -> np.ndarray:
        """Single-atom density matrix with ``rho[j, i] = <sigma_ij>``."""
        p00, p11, p22 = self.populations
        rho = np.array([
            [p00, self.s10, self.s20],
            [np.conj(self.s10), p11, self.s21],
            [np.conj(self.s20), np.conj(self.s21), p22],
        ], dtype=complex)
        return rho

    @classmethod
    def from_density_matrix(cls, rho, a1=0j, a2=0j) -> "MeanState":
        rho = np.asarray(rho)
        return cls(
            a1=complex(a1), a2=complex(a2),
            s10=complex(rho[0, 1]), s20=complex(rho[0, 2]),
            s21=complex(rho[1, 2]),
            w1=float((rho[0, 0] - rho[1, 1]).real),
            w2=float((rho[0, 0] - rho[2, 2]).real),
        )

    def as_real_vector(self) -> np.ndarray:
        return np.array([
            self.a1.real, self.a1.imag, self.a2.real, self.a2.imag,
            self.s10.real, self.s10.imag, self.s20.real, self.s20.imag,
            self.s21.real, self.s21.imag, self.w1, self.w2,
        ])

    @classmethod
    def from_real_vector(cls, x) -> "MeanState":
        x = np.asarray(x, dtype=float)
        return cls(complex(x[0], x[1]), complex(x[2], x[3]),
                   complex(x[4], x[5]), complex(x[6], x[7]),
                   complex(x[8], x[9]), float(x[10]), float(x[11]))

    def norm(self) -> float:
        """Max norm over all components."""
        return float(np.max(np.abs(self.as_real_vector())))

    def check_bounds(self, tol: float = _POP_TOL) -> bool:
        """Populations in [0, 1] and Cauchy-Schwarz bounds on coherences."""
        p = self.populations
        if any(pi < -tol or pi > 1 + tol for pi in p):
            return False
        pairs = ((self.s10, p[1], p[0]), (self.s20, p[2], p[0]),
                 (self.s21, p[2], p[1]))
        return all(abs(s) ** 2 <= max(pi, 0) * max(pj, 0) + tol
                   for s, pi, pj in pairs)


@dataclass(frozen=True)
class SteadyState:
    mean: MeanState
    drive1: complex
    drive2: complex
    residual: float
    iterations: int = 0

    @property
    def p00(self) -> float:
        return self.mean.populations[0]


def dark_state_seed(p: ModelParams) -> MeanState:
    """Dark state of the mean-field Hamiltonian at the target fields.

    The ground superposition ``c1|1> + c2|2>`` with
    ``(c1, c2) ~ (g2 alpha2, -g1 alpha1)`` is annihilated by the coupling,
    so it carries no excited population and no optical coherence.
    """
    a1, a2 = complex(p.alpha1), complex(p.alpha2)
    if a1 == 0 and a2 == 0:
        raise ZeroDrive("dark state needs at least one nonzero field")
    c1, c2 = p.g2 * a2, -p.g1 * a1
    if c1 == 0 and c2 == 0:
        # uncoupled atoms; fall back on the field ratio alone
        c1, c2 = a2, -a1
    norm = np.sqrt(abs(c1) ** 2 + abs(c2) ** 2)
    c1, c2 = c1 / norm, c2 / norm
    p11, p22 = abs(c1) ** 2, abs(c2) ** 2
    return MeanState(a1=a1, a2=a2, s10=0j, s20=0j,
                     s21=complex(c1 * np.conj(c2)),
                     w1=float(-p11), w2=float(-p22))


def required_drive(p: ModelParams, s: MeanState) -> tuple:
    """Input amplitudes that hold the intracavity fields at their targets."""
    out = []
    for gamma, g, alpha, s_i0 in ((p.gamma1, p.g1, p.alpha1, s.s10),
                                  (p.gamma2, p.g2, p.alpha2, s.s20)):
        num = gamma / 2 * complex(alpha) + 1j * g * p.N * s_i0
        if gamma > 0:
            out.append(complex(num / np.sqrt(gamma)))
        else:
            out.append(0j if num == 0 else complex("nan"))
    return tuple(out)


def _atomic_drift(p: ModelParams, m: MeanState, gen: AtomGenerator):
    """Per-atom derivatives ``(ds10, ds20, ds21, dw1, dw2)``."""
    H = mean_field_hamiltonian(p.delta, p.g1, p.g2, m.a1, m.a2)
    drho = gen.schrodinger(m.density_matrix(), H)
    ds10, ds20, ds21 = drho[0, 1], drho[0, 2], drho[1, 2]
    if p.literal_mode:
        # simplified equations: no dephasing on the optical coherences
        ds10 = ds10 + p.Gamma12 / 4 * m.s10
        ds20 = ds20 + p.Gamma12 / 4 * m.s20
    dw1 = (drho[0, 0] - drho[1, 1]).real
    dw2 = (drho[0, 0] - drho[2, 2]).real
    return complex(ds10), complex(ds20), complex(ds21), float(dw1), float(dw2)


def mean_drift(p: ModelParams, m: MeanState, drive=None) -> MeanState:
    """Time derivative of every mean variable, returned as a MeanState.

    ``drive`` is the pair of input amplitudes.  When omitted, the drives
    that keep the target ``alpha`` stationary for the current atomic state
    are used, which reduces the cavity equations to ``gamma/2 (alpha - a)``.
    """
    gen = AtomGenerator.from_params(p)
    ds10, ds20, ds21, dw1, dw2 = _atomic_drift(p, m, gen)
    if drive is None:
        drive = required_drive(p, m)
    d1, d2 = drive
    da1 = (-1j * p.g1 * p.N * m.s10 - p.gamma1 / 2 * m.a1
           + np.sqrt(p.gamma1) * d1)
    da2 = (-1j * p.g2 * p.N * m.s20 - p.gamma2 / 2 * m.a2
           + np.sqrt(p.gamma2) * d2)
    return MeanState(complex(da1), complex(da2), ds10, ds20, ds21, dw1, dw2)


def _atomic_vector(m: MeanState) -> np.ndarray:
    return m.as_real_vector()[4:]


def _with_atomic(m: MeanState, x) -> MeanState:
    full = m.as_real_vector()
    full[4:] = x
    return MeanState.from_real_vector(full)


def solve_steady_state(p: ModelParams, max_iter: int = 200,
                       tol: float = 1e-10, reg: float = 1e-12) -> SteadyState:
    """Newton iteration for the stationary mean state, seeded by the dark state.

    The unknowns are the eight real atomic components.  With the fields
    fixed the atomic drift is affine in them, so the Jacobian columns are
    obtained exactly as ``F(x + e_k) - F(x)``.  Steps are regularized
    (Tikhonov, relative weight ``reg``) and halved until the residual drops
    and the populations stay physical.
    """
    gen = AtomGenerator.from_params(p)
    scale = p.max_rate
    m = dark_state_seed(p)

    def F(x):
        return _real(_atomic_drift(p, _with_atomic(m, x), gen))

    x = _atomic_vector(m)
    f = F(x)
    res = np.max(np.abs(f))
    it = 0
    while res >= tol * scale:
        if it >= max_iter:
            raise NoConvergence(
                f"Newton did not converge in {max_iter} iterations "
                f"(residual {res:.3e})")
        it += 1
        J = np.column_stack([F(x + e) - f for e in np.eye(8)])
        lam = reg * max(np.linalg.norm(J), 1e-300)
        aug = np.vstack([J, lam * np.eye(8)])
        rhs = np.concatenate([-f, np.zeros(8)])
        try:
            step = np.linalg.lstsq(aug, rhs, rcond=None)[0]
        except np.linalg.LinAlgError as exc:
            raise SingularJacobian(str(exc)) from exc
        if not np.all(np.isfinite(step)):
            raise SingularJacobian("non-finite Newton step")
        t = 1.0
        while True:
            xn = x + t * step
            fn = F(xn)
            rn = np.max(np.abs(fn))
            if rn < res and _with_atomic(m, xn).check_bounds():
                break
            t *= 0.5
            if t < 1e-12:
                raise SingularJacobian(
                    f"step halving failed at iteration {it} "
                    f"(residual {res:.3e})")
        x, f, res = xn, fn, rn
        log.debug("newton it=%d residual=%.3e t=%g", it, res, t)

    mean = _with_atomic(m, x)
    d1, d2 = required_drive(p, mean)
    full = mean_drift(p, mean, (d1, d2))
    return SteadyState(mean=mean, drive1=d1, drive2=d2,
                       residual=full.norm(), iterations=it)


def _real(parts) -> np.ndarray:
    ds10, ds20, ds21, dw1, dw2 = parts
    return np.array([ds10.real, ds10.imag, ds20.real, ds20.imag,
                     ds21.real, ds21.imag, dw1, dw2])
