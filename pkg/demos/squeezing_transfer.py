"""Transfer of squeezing from the probe to the pump.

Both modes are driven with Omega = Gamma.  At low frequency the pump
output picks up the probe squeezing around omega_sq; a small ground-state
dephasing removes the effect.
"""
# %%
import warnings

import numpy as np

from cavity_eit import build, closedform as cf, presets, quadrature_spectrum

warnings.simplefilter("ignore")

w_sq = cf.omega_sq(0.06, 1.0, 1.0, 25.0)
thetas = np.linspace(0, np.pi, 36, endpoint=False)
print(f"omega_sq = {w_sq:.6f}")

# %%
for G12 in (0.0, 1e-4, 5e-4):
    lm, C = build(presets.driven_probe(Gamma12=G12))
    pump = [quadrature_spectrum(lm, C, w_sq, 1, t) for t in thetas]
    k = int(np.argmin(pump))
    print(f"Gamma12={G12:g}: min pump noise {pump[k]:.4f} at theta={thetas[k]:.3f}")
