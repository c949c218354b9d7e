"""Stationary quadrature noise spectra of the output fields.

Fourier convention ``x(w) = (2 pi)^(-1/2) int dt exp(i w t) x(t)``, so the
linear system ``dx/dt = A x + B xi`` becomes
``x(w) = (-i w - A)^(-1) B xi(w)``.  The output field follows from
``a_out = sqrt(gamma) a - a_in`` and the quadrature
``Y = exp(i theta) a_out + exp(-i theta) a_out+`` has spectrum

    S(w) = u(w) . C_in . u(-w)^T,

with ``u`` the row of input coefficients of ``Y``.  Vacuum gives ``S = 1``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .errors import NearSingular, NoPeak
from .fluctuations import MARGINAL_TOL, LinearModel, stability_check
from .params import A_IDX, ADAG_IDX, AIN_IDX, AINDAG_IDX

__all__ = [
    "SpectrumTable",
    "PeakReport",
    "output_row",
    "quadrature_spectrum",
    "spectrum_sweep",
    "find_extrema",
    "find_peaks",
    "peak_grid",
]


def _observable_block(A: np.ndarray, seeds) -> np.ndarray:
    """Indices the output rows depend on, closed under ``A[i, j] != 0``.

    Solving on this block is exact and keeps decoupled marginal modes
    (e.g. ground populations of uncoupled atoms) out of the resolvent.
    """
    keep = set(seeds)
    frontier = list(seeds)
    while frontier:
        i = frontier.pop()
        for j in np.flatnonzero(A[i]):
            if j not in keep:
                keep.add(int(j))
                frontier.append(int(j))
    return np.array(sorted(keep))


def output_row(lm: LinearModel, omega: float, mode: int) -> tuple:
    """Input coefficients of ``a_out`` and ``a_out+`` at frequency ``omega``.

    Returns two length-12 arrays over the noise vector.
    """
    A, B = lm.A, lm.B
    ia, iad = A_IDX[mode], ADAG_IDX[mode]
    K = _observable_block(A, (ia, iad))
    AK = A[np.ix_(K, K)]
    _check_near_singular(AK, omega)
    M = -1j * omega * np.eye(len(K)) - AK
    rhs = np.zeros((len(K), 2), dtype=complex)
    rhs[np.searchsorted(K, ia), 0] = 1.0
    rhs[np.searchsorted(K, iad), 1] = 1.0
    W = np.linalg.solve(M.T, rhs)  # rows of M^{-1} for the two outputs
    rows = W.T @ B[K]
    sg = np.sqrt(lm.params.gamma1 if mode == 1 else lm.params.gamma2)
    v_a = sg * rows[0]
    v_ad = sg * rows[1]
    v_a[AIN_IDX[mode]] -= 1.0
    v_ad[AINDAG_IDX[mode]] -= 1.0
    return v_a, v_ad


def _check_near_singular(AK: np.ndarray, omega: float) -> None:
    ev = np.linalg.eigvals(AK)
    eps = 10 * np.finfo(float).eps * max(1.0, abs(omega))
    for z in ev:
        if abs(z.real) < MARGINAL_TOL and abs(z.imag + omega) < eps:
            raise NearSingular(
                f"omega={omega!r} hits marginal eigenvalue {complex(z)!r}")


def quadrature_spectrum(lm: LinearModel, C, omega: float, mode: int,
                        theta: float, check_stability: bool = True) -> float:
    """Noise spectrum of the ``theta`` quadrature of output ``mode``.

    ``C`` is a :class:`~cavity_eit.diffusion.CorrelationMatrix` (or the raw
    12x12 array).  Raises :class:`~cavity_eit.errors.Unstable` for an
    unstable drift and :class:`~cavity_eit.errors.NearSingular` when
    ``omega`` collides with a marginal mode.
    """
    if check_stability:
        stability_check(lm)
    Cm = getattr(C, "C", C)
    ph = np.exp(1j * theta)
    va_p, vad_p = output_row(lm, omega, mode)
    va_m, vad_m = output_row(lm, -omega, mode)
    u_p = ph * va_p + np.conj(ph) * vad_p
    u_m = ph * va_m + np.conj(ph) * vad_m
    S = u_p @ Cm @ u_m
    return float(S.real)


def quadrature_spectrum_complex(lm: LinearModel, C, omega, mode, theta) -> complex:
    """Same as :func:`quadrature_spectrum` but without dropping ``Im S``."""
    Cm = getattr(C, "C", C)
    ph = np.exp(1j * theta)
    va_p, vad_p = output_row(lm, omega, mode)
    va_m, vad_m = output_row(lm, -omega, mode)
    return complex((ph * va_p + np.conj(ph) * vad_p) @ Cm
                   @ (ph * va_m + np.conj(ph) * vad_m))


@dataclass
class SpectrumTable:
    """Long-format table of spectrum values.

    Points where the resolvent was refused are listed in ``gaps`` as
    ``(omega, mode, theta)`` and carry ``nan`` in ``value``.
    """

    omega: np.ndarray
    mode: np.ndarray
    theta: np.ndarray
    value: np.ndarray
    gaps: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.value)

    def select(self, mode: int, theta: float) -> tuple:
        """``(omega, value)`` arrays for one curve."""
        mask = (self.mode == mode) & np.isclose(self.theta, theta, rtol=0,
                                                atol=1e-15)
        return self.omega[mask], self.value[mask]

    def rows(self):
        for w, m, t, v in zip(self.omega, self.mode, self.theta, self.value):
            yield float(w), int(m), float(t), float(v)

    def to_csv(self, path, omega_scale: float = 1.0) -> int:
        """Write ``omega,mode,theta,value`` with 9 significant digits.

        Gap rows are omitted; returns the number of data rows written.
        ``omega_scale`` divides the frequencies on output.
        """
        n = 0
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["omega", "mode", "theta", "value"])
            for om, mode, th, val in self.rows():
                if not np.isfinite(val):
                    continue
                w.writerow([f"{om / omega_scale:.9g}", mode, f"{th:.9g}",
                            f"{val:.9g}"])
                n += 1
        return n


def spectrum_sweep(lm: LinearModel, C, omega_grid, modes=(1, 2),
                   thetas=(0.0,)) -> SpectrumTable:
    """Evaluate every ``(omega, mode, theta)`` combination, omega slowest."""
    stability_check(lm)
    omega_grid = np.asarray(omega_grid, dtype=float)
    rows = [(w, m, t) for w in omega_grid for m in modes for t in thetas]
    values = np.empty(len(rows))
    gaps = []
    for k, (w, m, t) in enumerate(rows):
        try:
            values[k] = quadrature_spectrum(lm, C, w, m, t,
                                            check_stability=False)
        except NearSingular:
            values[k] = np.nan
            gaps.append((float(w), int(m), float(t)))
    return SpectrumTable(
        omega=np.array([r[0] for r in rows], dtype=float),
        mode=np.array([r[1] for r in rows], dtype=int),
        theta=np.array([r[2] for r in rows], dtype=float),
        value=values, gaps=gaps)


@dataclass(frozen=True)
class PeakReport:
    omega_peak: float
    height: float
    second_derivative: float
    bracket: tuple
    iterations: int
    kind: str = "max"


def peak_grid(window, points: int = 2000) -> np.ndarray:
    """Half-linear, half-logarithmic grid over ``window``.

    The logarithmic half resolves structure close to ``omega = 0``.
    """
    lo, hi = map(float, window)
    if not hi > lo:
        raise ValueError(f"empty window {window!r}")
    n_lin = points // 2
    lin = np.linspace(lo, hi, n_lin)
    log_lo = lo if lo > 0 else hi * 1e-6
    logg = np.geomspace(log_lo, hi, points - n_lin)
    return np.unique(np.concatenate([lin, logg]))


def find_extrema(func, window, kind: str = "max", points: int = 2000,
                 xtol: float = 1e-10) -> list:
    """Locate interior local extrema of a scalar function.

    Scans ``func`` on :func:`peak_grid` and refines every discrete extremum
    with a golden-section search on the neighbouring grid bracket.
    """
    sign = 1.0 if kind == "max" else -1.0
    grid = peak_grid(window, points)
    vals = sign * np.array([func(w) for w in grid])
    span = np.ptp(vals)
    tol = 1e-13 * max(np.max(np.abs(vals)), 1e-300)
    if not np.all(np.isfinite(vals)) or span <= tol:
        raise NoPeak(f"no interior extremum in {tuple(window)}")

    reports = []
    for k in range(1, len(grid) - 1):
        if vals[k] > vals[k - 1] + tol and vals[k] >= vals[k + 1] + tol:
            a, b, c = grid[k - 1], grid[k], grid[k + 1]
            res = optimize.minimize_scalar(
                lambda w: -sign * func(w), bracket=(a, b, c), method="golden",
                tol=xtol)
            w0 = float(np.clip(res.x, a, c))
            h = max(1e-4 * (c - a), 1e-7 * max(abs(w0), 1e-300))
            f0 = func(w0)
            d2 = (func(w0 + h) - 2 * f0 + func(w0 - h)) / h ** 2
            reports.append(PeakReport(omega_peak=w0, height=float(f0),
                                      second_derivative=float(d2),
                                      bracket=(float(a), float(c)),
                                      iterations=int(res.nit), kind=kind))
    if not reports:
        raise NoPeak(f"no interior extremum in {tuple(window)}")
    return reports


def find_peaks(lm: LinearModel, C, mode: int, theta: float, window,
               kind: str = "max", points: int = 2000) -> list:
    """Local maxima (or minima) of one quadrature spectrum inside ``window``."""
    stability_check(lm)

    def S(w):
        return quadrature_spectrum(lm, C, w, mode, theta,
                                   check_stability=False)

    return find_extrema(S, window, kind=kind, points=points)
