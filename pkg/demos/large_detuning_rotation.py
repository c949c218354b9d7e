"""Quadrature rotation near the lower EIT peak at large detuning.

At delta = 100 the transparency window turns the squeezed quadrature by
about pi/2 around omega_<max.  The rotation becomes complete only when
delta^2 >> 4 C Gamma, which this script shows by growing N at fixed
delta_c = delta / C.
"""
# %%
import warnings

import numpy as np

from cavity_eit import build, closedform as cf, derived_quantities, presets, quadrature_spectrum

warnings.simplefilter("ignore")

# %%
for scale in (1, 4, 16, 64):
    p = presets.vacuum_probe(delta=100.0 * scale, N=1_000_000 * scale)
    lm, C = build(p)
    d = derived_quantities(p)
    w = cf.omega_lt_max(d.delta_c, d.gamma)
    s0 = quadrature_spectrum(lm, C, w, 2, 0.0)
    s90 = quadrature_spectrum(lm, C, w, 2, np.pi / 2)
    lim0 = cf.limit_spectrum_vacuum(w / d.gamma, d.delta_c, p.r, 0.0)
    lim90 = cf.limit_spectrum_vacuum(w / d.gamma, d.delta_c, p.r, np.pi / 2)
    ratio = p.delta ** 2 / (4 * d.C * p.Gamma1)
    print(f"N={p.N:.1e} delta^2/(4C Gamma)={ratio:6.1f}  "
          f"theta=0: {s0:7.3f} (limit {lim0:.3f})  "
          f"theta=pi/2: {s90:.4f} (limit {lim90:.4f})")
