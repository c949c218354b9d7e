"""Command-line scenario runner.

Usage::

    cavity-eit {spectrum,peaks,steady,validate} --config run.json
               [--out-csv PATH] [--out-json PATH] [--gamma-units]

The config is a flat JSON object.  Accepted keys are the fields of
:class:`~cavity_eit.params.ModelParams` (complex amplitudes as numbers or
``[re, im]`` pairs) plus ``command``, ``omega_start``, ``omega_stop``,
``omega_points``, ``omega_scale`` (``linear``/``log``), ``modes``,
``thetas``, ``csv_path`` and ``json_path``.  Unknown keys are rejected.
With ``--gamma-units`` the frequency grid (and the frequencies written out)
are in units of ``Gamma1``.

Exit codes: 0 success, 1 validation failure, 2 bad config, 3 unstable
drift, 4 steady state not converged.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from dataclasses import dataclass, field, fields

import numpy as np

from .errors import NoConvergence, NoPeak, ParameterError, SingularJacobian, Unstable
from .params import ModelParams, validate_params
from .pipeline import build
from .semiclassics import solve_steady_state
from .spectra import find_peaks, spectrum_sweep

__all__ = ["ScenarioConfig", "ConfigError", "load_config", "run", "main"]

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
COMMANDS = ("spectrum", "peaks", "steady", "validate")
EXIT_OK, EXIT_VALIDATION, EXIT_CONFIG, EXIT_UNSTABLE, EXIT_NOCONV = 0, 1, 2, 3, 4

_PARAM_KEYS = {f.name for f in fields(ModelParams)}
_GRID_KEYS = {"omega_start", "omega_stop", "omega_points", "omega_scale"}
_OTHER_KEYS = {"command", "modes", "thetas", "csv_path", "json_path"}


class ConfigError(ValueError):
    pass


@dataclass
class ScenarioConfig:
    params: ModelParams
    command: str | None = None
    omega_start: float = 0.0
    omega_stop: float = 10.0
    omega_points: int = 200
    omega_scale: str = "linear"
    modes: tuple = (1, 2)
    thetas: tuple = (0.0,)
    csv_path: str | None = None
    json_path: str | None = None
    extra: dict = field(default_factory=dict)

    def omega_grid(self, unit: float = 1.0) -> np.ndarray:
        lo, hi = self.omega_start * unit, self.omega_stop * unit
        if self.omega_scale == "log":
            return np.geomspace(lo, hi, self.omega_points)
        return np.linspace(lo, hi, self.omega_points)


def _complex(v, key):
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    raise ConfigError(f"{key}: expected a number or [re, im], got {v!r}")


def load_config(path) -> ScenarioConfig:
    """Parse and check a JSON scenario file; raises :class:`ConfigError`."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(raw) - _PARAM_KEYS - _GRID_KEYS - _OTHER_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    pkw = {}
    for k in _PARAM_KEYS & set(raw):
        v = raw[k]
        if k in ("alpha1", "alpha2"):
            pkw[k] = _complex(v, k)
        elif k == "literal_mode":
            if not isinstance(v, bool):
                raise ConfigError("literal_mode must be true/false")
            pkw[k] = v
        elif k == "N":
            if not isinstance(v, int) or isinstance(v, bool):
                raise ConfigError(f"N must be an integer, got {v!r}")
            pkw[k] = v
        else:
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ConfigError(f"{k} must be a number, got {v!r}")
            pkw[k] = float(v)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            params = validate_params(ModelParams(**pkw))
    except ParameterError as exc:
        raise ConfigError(str(exc)) from exc

    cfg = ScenarioConfig(params=params)
    cmd = raw.get("command")
    if cmd is not None and cmd not in COMMANDS:
        raise ConfigError(f"command must be one of {COMMANDS}, got {cmd!r}")
    cfg.command = cmd
    try:
        cfg.omega_start = float(raw.get("omega_start", cfg.omega_start))
        cfg.omega_stop = float(raw.get("omega_stop", cfg.omega_stop))
        cfg.omega_points = int(raw.get("omega_points", cfg.omega_points))
        cfg.omega_scale = str(raw.get("omega_scale", cfg.omega_scale))
        cfg.modes = tuple(int(m) for m in raw.get("modes", cfg.modes))
        cfg.thetas = tuple(float(t) for t in raw.get("thetas", cfg.thetas))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad grid settings: {exc}") from exc
    cfg.csv_path = raw.get("csv_path")
    cfg.json_path = raw.get("json_path")

    if cfg.omega_points < 2:
        raise ConfigError("omega_points must be >= 2")
    if not cfg.omega_start < cfg.omega_stop:
        raise ConfigError("omega_start must be < omega_stop")
    if cfg.omega_scale not in ("linear", "log"):
        raise ConfigError("omega_scale must be 'linear' or 'log'")
    if cfg.omega_scale == "log" and cfg.omega_start <= 0:
        raise ConfigError("log grid needs omega_start > 0")
    if not cfg.modes or any(m not in (1, 2) for m in cfg.modes):
        raise ConfigError("modes must be a non-empty subset of [1, 2]")
    if not cfg.thetas:
        raise ConfigError("thetas must not be empty")
    return cfg


def _params_dict(p: ModelParams) -> dict:
    out = {}
    for f in fields(p):
        v = getattr(p, f.name)
        out[f.name] = [v.real, v.imag] if isinstance(v, complex) else v
    return out


def _c(z) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def _write_json(path, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cmd_spectrum(cfg, unit, out_csv, out_json) -> int:
    lm, C = build(cfg.params)
    table = spectrum_sweep(lm, C, cfg.omega_grid(unit), cfg.modes, cfg.thetas)
    if out_csv:
        table.to_csv(out_csv, omega_scale=unit)
    else:
        sys.stdout.write("omega,mode,theta,value\n")
        for w, m, t, v in table.rows():
            if np.isfinite(v):
                sys.stdout.write(f"{w / unit:.9g},{m},{t:.9g},{v:.9g}\n")
    if out_json:
        _write_json(out_json, {
            "schema_version": SCHEMA_VERSION,
            "params": _params_dict(cfg.params),
            "rows": len(table) - len(table.gaps),
            "gaps": [[w / unit, m, t] for w, m, t in table.gaps],
        })
    return EXIT_OK


def _cmd_peaks(cfg, unit, out_csv, out_json) -> int:
    lm, C = build(cfg.params)
    window = (cfg.omega_start * unit, cfg.omega_stop * unit)
    results = []
    for mode in cfg.modes:
        for theta in cfg.thetas:
            try:
                peaks = find_peaks(lm, C, mode, theta, window)
            except NoPeak:
                peaks = []
            for pk in peaks:
                results.append({
                    "mode": mode, "theta": theta,
                    "omega_peak": pk.omega_peak / unit, "height": pk.height,
                    "second_derivative": pk.second_derivative * unit ** 2,
                    "bracket": [b / unit for b in pk.bracket],
                    "iterations": pk.iterations, "method": "grid+golden",
                })
    payload = {"schema_version": SCHEMA_VERSION,
               "params": _params_dict(cfg.params), "peaks": results}
    if out_json:
        _write_json(out_json, payload)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_steady(cfg, unit, out_csv, out_json) -> int:
    ss = solve_steady_state(cfg.params)
    m = ss.mean
    p00, p11, p22 = m.populations
    payload = {
        "schema_version": SCHEMA_VERSION,
        "params": _params_dict(cfg.params),
        "mean": {"a1": _c(m.a1), "a2": _c(m.a2), "s10": _c(m.s10),
                 "s20": _c(m.s20), "s21": _c(m.s21), "w1": m.w1, "w2": m.w2,
                 "populations": [p00, p11, p22]},
        "drive1": _c(ss.drive1), "drive2": _c(ss.drive2),
        "residual": ss.residual, "iterations": ss.iterations,
    }
    if out_json:
        _write_json(out_json, payload)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_validate(cfg, unit, out_csv, out_json) -> int:
    from .validation import run_suite

    report = run_suite()
    for rec in report.records:
        print(rec.line())
    print("OVERALL:", "PASS" if report.passed else "FAIL")
    if out_json:
        _write_json(out_json, report.to_dict())
    return EXIT_OK if report.passed else EXIT_VALIDATION


_DISPATCH = {"spectrum": _cmd_spectrum, "peaks": _cmd_peaks,
             "steady": _cmd_steady, "validate": _cmd_validate}


def run(command: str, config_path, out_csv=None, out_json=None,
        gamma_units: bool = False) -> int:
    """Execute one command; returns the process exit code."""
    try:
        cfg = load_config(config_path)
        if cfg.command is not None and cfg.command != command:
            raise ConfigError(f"config command {cfg.command!r} does not match "
                              f"requested {command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    unit = cfg.params.Gamma1 if gamma_units else 1.0
    out_csv = out_csv or cfg.csv_path
    out_json = out_json or cfg.json_path
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return _DISPATCH[command](cfg, unit, out_csv, out_json)
    except Unstable as exc:
        print(f"unstable: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (NoConvergence, SingularJacobian) as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cavity-eit",
        description="Quadrature noise spectra of a two-mode cavity with "
                    "Lambda atoms.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True)
    parser.add_argument("--out-csv")
    parser.add_argument("--out-json")
    parser.add_argument("--gamma-units", action="store_true",
                        help="frequency grid and output in units of Gamma1")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    return run(args.command, args.config, args.out_csv, args.out_json,
               args.gamma_units)


if __name__ == "__main__":
    sys.exit(main())
