"""Langevin noise correlations.

Atomic diffusion coefficients follow from the generalized Einstein relation

    D_xy = <L(x y)> - <L(x) y> - <x L(y)>,

evaluated with the single-atom generator in the stationary state.  Atoms
couple to independent reservoirs, so the collective coefficients are ``N``
times the single-atom ones.  The field inputs are vacuum (pump) and
broadband squeezed vacuum (probe).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .liouvillian import BASIS, AtomGenerator, mean_field_hamiltonian
from .params import ORDER, ModelParams

__all__ = [
    "ATOMIC_FORCE_MAP",
    "single_atom_diffusion",
    "diffusion_matrix",
    "squeezing_moments",
    "CorrelationMatrix",
    "input_correlations",
]

# Rows: forces F10, F20, F21, FW1, FW2, F01, F02, F12 (noise vector slots
# 4..11).  Columns: sigma_ij at flat index 3*i + j.
ATOMIC_FORCE_MAP = np.zeros((8, 9))
for _row, _terms in enumerate((
        {(1, 0): 1}, {(2, 0): 1}, {(2, 1): 1},
        {(0, 0): 1, (1, 1): -1}, {(0, 0): 1, (2, 2): -1},
        {(0, 1): 1}, {(0, 2): 1}, {(1, 2): 1})):
    for (_i, _j), _c in _terms.items():
        ATOMIC_FORCE_MAP[_row, 3 * _i + _j] = _c


def single_atom_diffusion(gen: AtomGenerator, rho: np.ndarray,
                          H: np.ndarray | None = None) -> np.ndarray:
    """9x9 Einstein-relation table over the ``sigma_ij`` basis.

    Entry ``[k, l]`` is the coefficient of ``<F_k F_l>`` for the basis
    operators ``BASIS[k]``, ``BASIS[l]``.  Passing a Hamiltonian must not
    change the result; it is accepted so that this can be checked.
    """
    L = [gen.adjoint(b, H) for b in BASIS]
    D = np.empty((9, 9), dtype=complex)
    for k, x in enumerate(BASIS):
        for l, y in enumerate(BASIS):
            op = gen.adjoint(x @ y, H) - L[k] @ y - x @ L[l]
            D[k, l] = np.trace(rho @ op)
    return D


def diffusion_matrix(p: ModelParams, ss, include_hamiltonian: bool = False) -> np.ndarray:
    """Collective 8x8 atomic diffusion block in noise-vector order."""
    gen = AtomGenerator.from_params(p)
    m = ss.mean
    H = None
    if include_hamiltonian:
        H = mean_field_hamiltonian(p.delta, p.g1, p.g2, m.a1, m.a2)
    D9 = single_atom_diffusion(gen, m.density_matrix(), H)
    T = ATOMIC_FORCE_MAP
    return p.N * (T @ D9 @ T.T)


def squeezing_moments(r: float, phi: float = 0.0) -> tuple:
    """Photon number ``n`` and anomalous moment ``m`` of squeezed vacuum.

    With ``m = -exp(2 i phi) sinh r cosh r`` the ``theta = 0`` quadrature
    carries ``exp(-2r)`` noise when ``phi = 0``.
    """
    n = np.sinh(r) ** 2
    m = -np.exp(2j * phi) * np.sinh(r) * np.cosh(r)
    return float(n), complex(m)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Delta-correlated input moments ``<xi_k(t) xi_l(t')> = C[k, l] delta``."""

    C: np.ndarray

    @property
    def field_block(self) -> np.ndarray:
        return self.C[:4, :4]

    @property
    def atomic_block(self) -> np.ndarray:
        return self.C[4:, 4:]

    def hermiticity_error(self) -> float:
        """max |C[x, y] - conj(C[adj y, adj x])|."""
        P = ORDER.noise_adjoint_permutation()
        mirrored = np.conj(self.C[np.ix_(P, P)]).T
        return float(np.max(np.abs(self.C - mirrored)))


def input_correlations(p: ModelParams, D: np.ndarray) -> CorrelationMatrix:
    """Assemble field and atomic noise moments in noise-vector order."""
    C = np.zeros((12, 12), dtype=complex)
    C[0, 2] = 1.0  # <a1in a1in+>
    n, m = squeezing_moments(p.r, p.phi)
    C[1, 3] = n + 1.0
    C[3, 1] = n
    C[1, 1] = m
    C[3, 3] = np.conj(m)
    C[4:, 4:] = D
    return CorrelationMatrix(C)
