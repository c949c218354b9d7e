"""Single-atom Lindblad generator for a Lambda atom.

Levels are indexed ``0`` (excited), ``1`` and ``2`` (ground).  Operators are
plain 3x3 complex arrays and ``sigma(i, j)`` is ``|i><j|``.  The generator is
used in two pictures: Schrodinger (density matrix, for mean values) and
Heisenberg/adjoint (operators, for the Einstein relations).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["sigma", "BASIS", "AtomGenerator", "mean_field_hamiltonian"]


def sigma(i: int, j: int) -> np.ndarray:
    op = np.zeros((3, 3), dtype=complex)
    op[i, j] = 1.0
    return op


# basis operator sigma_ij sits at flat index 3*i + j
BASIS = tuple(sigma(i, j) for i in range(3) for j in range(3))


def mean_field_hamiltonian(delta, g1, g2, a1, a2) -> np.ndarray:
    """Per-atom Hamiltonian with the cavity fields replaced by c-numbers.

    ``H = -delta |0><0| + sum_i g_i (a_i^* |i><0| + a_i |0><i|)`` in the
    frame rotating with the cavity carriers.
    """
    H = -delta * sigma(0, 0)
    H = H + g1 * (np.conj(a1) * sigma(1, 0) + a1 * sigma(0, 1))
    H = H + g2 * (np.conj(a2) * sigma(2, 0) + a2 * sigma(0, 2))
    return H


@dataclass(frozen=True)
class AtomGenerator:
    """Dissipative part of the single-atom dynamics.

    Jump operators are ``sqrt(Gamma1)|1><0|``, ``sqrt(Gamma2)|2><0|`` and
    ``sqrt(Gamma12/2)(|1><1| - |2><2|)``.  The dephasing jump damps the
    ground coherence at exactly ``Gamma12`` and each optical coherence at an
    extra ``Gamma12/4``.
    """

    Gamma1: float
    Gamma2: float
    Gamma12: float

    @classmethod
    def from_params(cls, p) -> "AtomGenerator":
        return cls(p.Gamma1, p.Gamma2, p.Gamma12)

    @property
    def jumps(self) -> tuple:
        return (
            np.sqrt(self.Gamma1) * sigma(1, 0),
            np.sqrt(self.Gamma2) * sigma(2, 0),
            np.sqrt(self.Gamma12 / 2) * (sigma(1, 1) - sigma(2, 2)),
        )

    def adjoint_dissipator(self, X: np.ndarray) -> np.ndarray:
        """Heisenberg-picture dissipator ``sum L^+ X L - {L^+ L, X}/2``."""
        out = np.zeros((3, 3), dtype=complex)
        for L in self.jumps:
            Ld = L.conj().T
            LdL = Ld @ L
            out += Ld @ X @ L - 0.5 * (LdL @ X + X @ LdL)
        return out

    def adjoint(self, X: np.ndarray, H: np.ndarray | None = None) -> np.ndarray:
        """Full Heisenberg generator ``i[H, X] + D^+(X)``."""
        out = self.adjoint_dissipator(X)
        if H is not None:
            out = out + 1j * (H @ X - X @ H)
        return out

    def schrodinger(self, rho: np.ndarray, H: np.ndarray | None = None) -> np.ndarray:
        """Density-matrix time derivative under the Lindblad equation."""
        out = np.zeros((3, 3), dtype=complex)
        if H is not None:
            out += -1j * (H @ rho - rho @ H)
        for L in self.jumps:
            Ld = L.conj().T
            LdL = Ld @ L
            out += L @ rho @ Ld - 0.5 * (LdL @ rho + rho @ LdL)
        return out

    def adjoint_superoperator(self, H: np.ndarray | None = None) -> np.ndarray:
        """9x9 matrix of the adjoint generator on the ``sigma_ij`` basis.

        Column ``k`` holds the expansion coefficients of
        ``L(BASIS[k])``; since ``BASIS`` is the matrix-unit basis these are
        just the flattened entries.
        """
        return np.stack([self.adjoint(b, H).ravel() for b in BASIS], axis=1)
