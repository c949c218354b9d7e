"""Squeezed vacuum through an EIT cavity.

Only the pump mode is driven; the probe input is squeezed vacuum with
r = 2.  The normal-mode doublet appears near
(delta +- sqrt(4 Omega^2 + 4 N g^2 + delta^2)) / 2 and the input squeezing
survives far from it.
"""
# %%
import warnings

import numpy as np

from cavity_eit import build, closedform as cf, find_peaks, presets, quadrature_spectrum

warnings.simplefilter("ignore")

# %% spectra for a few detunings
grid = np.linspace(0.1, 12, 12)
for delta in (0.0, 2.0, 4.0):
    lm, C = build(presets.vacuum_probe(delta=delta))
    s = [quadrature_spectrum(lm, C, w, 2, 0.0) for w in grid]
    print(f"delta={delta:g}:", " ".join(f"{v:.3f}" for v in s))

# %% upper peak against the normal-mode formula
for delta in (2.0, 4.0, 8.0):
    lm, C = build(presets.vacuum_probe(delta=delta))
    top = max(find_peaks(lm, C, 2, 0.0, (0.1, 15.0)), key=lambda r: r.omega_peak)
    print(f"delta={delta:g}: peak {top.omega_peak:.3f}, "
          f"formula {cf.omega_gt_max(delta, 1.0, 25.0):.3f}")
