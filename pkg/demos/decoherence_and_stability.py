"""Ground-state dephasing: noise at omega = 0 and the stability edge.

The zero-frequency probe noise is compared with its closed form, then the
dephasing rate at which the driven system turns unstable is bracketed.
"""
# %%
import warnings

import numpy as np

from cavity_eit import build, closedform as cf, derived_quantities, presets, quadrature_spectrum
from cavity_eit.validation import instability_threshold, max_real_eigenvalue

warnings.simplefilter("ignore")

# %% noise at omega = 0
for G12 in (0.0, 1e-5, 1e-4, 1e-3):
    p = presets.vacuum_probe(Gamma12=G12)
    lm, C = build(p)
    d = derived_quantities(p)
    num = quadrature_spectrum(lm, C, 0.0, 2, 0.0)
    ref = cf.decoherence_w0(p.r, 0.0, 1.0, p.Gamma1, G12, p.delta, d.C)
    print(f"Gamma12={G12:g}: S(0)={num:.5f} closed form {ref:.5f}")

# %% stability edge of the driven system
base = presets.driven_probe()
for G12 in (1 / 400, 1 / 210, 1 / 100):
    print(f"Gamma12=1/{1 / G12:.0f}: max Re = {max_real_eigenvalue(base.replace(Gamma12=G12)):+.3e}")
thr = instability_threshold(base, 1 / 400, 1 / 10)
print(f"threshold Gamma12 = Gamma/{1 / thr:.1f}")
