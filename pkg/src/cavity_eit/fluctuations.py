"""Linear fluctuation model around the stationary state.

Operator products in the Heisenberg-Langevin equations are linearized as
``X Y -> <X> dY + dX <Y>`` with collective means ``N * (per-atom mean)``.
Fluctuations live in the doubled space of ``VariableOrder`` (each operator
together with its adjoint), so the drift matrix satisfies
``A[adj i, adj j] = conj(A[i, j])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import Unstable
from .params import ORDER, ModelParams, VariableOrder
from .semiclassics import SteadyState

__all__ = ["LinearModel", "StabilityReport", "drift_jacobian",
           "drift_matrix", "stability_check", "MARGINAL_TOL"]

MARGINAL_TOL = 1e-10
UNSTABLE_REL_TOL = 1e-8

# variable indices
a1, a2, S10, S20, S21, W1, W2, a1d, a2d, S01, S02, S12 = range(12)


def drift_matrix(p: ModelParams, mean) -> np.ndarray:
    """12x12 drift matrix for the given per-atom mean state."""
    N = p.N
    g1, g2 = p.g1, p.g2
    al1, al2 = complex(mean.a1), complex(mean.a2)
    cal1, cal2 = np.conj(al1), np.conj(al2)
    # collective means
    W1b, W2b = N * mean.w1, N * mean.w2
    S10b, S20b, S21b = N * mean.s10, N * mean.s20, N * mean.s21
    S01b, S02b, S12b = np.conj(S10b), np.conj(S20b), np.conj(S21b)

    opt_decay = (p.Gamma1 + p.Gamma2) / 2
    if not p.literal_mode:
        opt_decay += p.Gamma12 / 4
    diag = 1j * p.delta - opt_decay
    k1 = (2 * p.Gamma1 + p.Gamma2) / 3
    k2 = (p.Gamma1 + 2 * p.Gamma2) / 3

    A = np.zeros((12, 12), dtype=complex)

    A[a1, a1] = -p.gamma1 / 2
    A[a1, S10] = -1j * g1
    A[a2, a2] = -p.gamma2 / 2
    A[a2, S20] = -1j * g2

    # dS10 = (i delta - G) S10 + i g1 W1 a1 - i g2 S12 a2
    A[S10, S10] = diag
    A[S10, a1] = 1j * g1 * W1b
    A[S10, W1] = 1j * g1 * al1
    A[S10, a2] = -1j * g2 * S12b
    A[S10, S12] = -1j * g2 * al2

    # dS20 = (i delta - G) S20 + i g2 W2 a2 - i g1 S21 a1
    A[S20, S20] = diag
    A[S20, a2] = 1j * g2 * W2b
    A[S20, W2] = 1j * g2 * al2
    A[S20, a1] = -1j * g1 * S21b
    A[S20, S21] = -1j * g1 * al1

    # dS21 = -G12 S21 - i g1 a1+ S20 + i g2 S01 a2
    A[S21, S21] = -p.Gamma12
    A[S21, a1d] = -1j * g1 * S20b
    A[S21, S20] = -1j * g1 * cal1
    A[S21, S01] = 1j * g2 * al2
    A[S21, a2] = 1j * g2 * S01b

    # dW1 = -k1 (N + W1 + W2) - 2i g1 S01 a1 + 2i g1 a1+ S10
    #       - i g2 S02 a2 + i g2 a2+ S20
    A[W1, W1] = A[W1, W2] = -k1
    A[W1, S01] = -2j * g1 * al1
    A[W1, a1] = -2j * g1 * S01b
    A[W1, a1d] = 2j * g1 * S10b
    A[W1, S10] = 2j * g1 * cal1
    A[W1, S02] = -1j * g2 * al2
    A[W1, a2] = -1j * g2 * S02b
    A[W1, a2d] = 1j * g2 * S20b
    A[W1, S20] = 1j * g2 * cal2

    # dW2: same with the factors of two swapped
    A[W2, W1] = A[W2, W2] = -k2
    A[W2, S01] = -1j * g1 * al1
    A[W2, a1] = -1j * g1 * S01b
    A[W2, a1d] = 1j * g1 * S10b
    A[W2, S10] = 1j * g1 * cal1
    A[W2, S02] = -2j * g2 * al2
    A[W2, a2] = -2j * g2 * S02b
    A[W2, a2d] = 2j * g2 * S20b
    A[W2, S20] = 2j * g2 * cal2

    # adjoint rows by conjugate symmetry
    P = ORDER.adjoint_permutation()
    for i in (a1, a2, S10, S20, S21):
        A[P[i], P] = np.conj(A[i, :])
    return A


def input_matrix(p: ModelParams) -> np.ndarray:
    """12x12 coupling of the noise vector into the fluctuation equations."""
    B = np.zeros((12, 12), dtype=complex)
    B[a1, 0] = B[a1d, 2] = np.sqrt(p.gamma1)
    B[a2, 1] = B[a2d, 3] = np.sqrt(p.gamma2)
    for var, noise in zip((S10, S20, S21, W1, W2, S01, S02, S12), range(4, 12)):
        B[var, noise] = 1.0
    return B


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: np.ndarray
    max_real: float
    marginal: list = field(default_factory=list)


@dataclass(frozen=True)
class LinearModel:
    A: np.ndarray
    B: np.ndarray
    ss: SteadyState
    params: ModelParams
    order: VariableOrder = ORDER

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.A)

    def conjugate_symmetry_error(self) -> float:
        P = ORDER.adjoint_permutation()
        Q = ORDER.noise_adjoint_permutation()
        eA = np.max(np.abs(self.A[np.ix_(P, P)] - np.conj(self.A)))
        eB = np.max(np.abs(self.B[np.ix_(P, Q)] - np.conj(self.B)))
        return float(max(eA, eB))


def drift_jacobian(p: ModelParams, ss: SteadyState) -> LinearModel:
    """Linearize the joint atom-cavity equations at ``ss``."""
    return LinearModel(A=drift_matrix(p, ss.mean), B=input_matrix(p),
                       ss=ss, params=p)


def stability_check(lm: LinearModel, raise_on_unstable: bool = True) -> StabilityReport:
    """Eigen-analysis of the drift matrix.

    Raises :class:`Unstable` when the largest real part exceeds
    ``1e-8`` times the largest rate, unless ``raise_on_unstable`` is false.
    Eigenvalues with ``|Re| < 1e-10`` are reported as marginal.
    """
    ev = lm.eigenvalues
    max_real = float(np.max(ev.real))
    marginal = [complex(z) for z in ev if abs(z.real) < MARGINAL_TOL]
    report = StabilityReport(eigenvalues=ev, max_real=max_real,
                             marginal=marginal)
    if raise_on_unstable and max_real > UNSTABLE_REL_TOL * lm.params.max_rate:
        raise Unstable(f"drift matrix unstable: max Re(lambda) = "
                       f"{max_real:.3e}", max_real=max_real)
    return report
