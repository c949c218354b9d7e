"""Reference parameter sets (all rates in units of Gamma = Gamma1 = 1).

``vacuum_probe`` drives only the pump mode (``Omega1 = Gamma``,
``Omega2 = 0``); ``driven_probe`` drives both (``Omega1 = Omega2 = Gamma``).
Common values: ``g = -0.005``, ``gamma = 0.06``, ``N = 10**6``, ``r = 2``.
"""

from __future__ import annotations

from .params import ModelParams

__all__ = ["vacuum_probe", "driven_probe", "REFERENCE"]

REFERENCE = dict(Gamma1=1.0, Gamma2=1.0, gamma1=0.06, gamma2=0.06,
                 g1=-0.005, g2=-0.005, N=1_000_000, r=2.0)


def _alpha(Omega, g):
    return Omega / g if g else 0.0


def vacuum_probe(delta=0.0, Gamma12=0.0, **overrides) -> ModelParams:
    kw = dict(REFERENCE, delta=delta, Gamma12=Gamma12, **overrides)
    kw.setdefault("alpha1", _alpha(1.0, kw["g1"]))
    kw.setdefault("alpha2", 0.0)
    return ModelParams(**kw)


def driven_probe(delta=0.0, Gamma12=0.0, **overrides) -> ModelParams:
    kw = dict(REFERENCE, delta=delta, Gamma12=Gamma12, **overrides)
    kw.setdefault("alpha1", _alpha(1.0, kw["g1"]))
    kw.setdefault("alpha2", _alpha(1.0, kw["g2"]))
    return ModelParams(**kw)
