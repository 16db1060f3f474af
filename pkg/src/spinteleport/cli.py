"""Command-line interface.

Every subcommand prints a JSON document to stdout.  Parameters may come from
``--config file.json`` (same keys as the flags, e.g. ``{"J": 1, "T": 0.5}``);
flags given on the command line win.

Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys

import numpy as np

from . import __version__
from .critical import critical_field_entanglement, critical_field_fidelity
from .errors import ConfigurationError, DatasetFileError, NumericalDomainError
from .holevo import mutual_information
from .sweep import FIGURES, SweepSpec, run_sweep, write_dataset
from .teleportation import (
    DEFAULT_QUADRATURE_ORDER,
    average_fidelity_closed,
    average_fidelity_quadrature,
    input_entanglement,
    output_negativity_closed,
    teleport,
    weak_coupling_fidelity,
)
from .thermal import (
    ChainParams,
    log_partition_function,
    negativity,
    pauli_probabilities,
    thermal_negativity_closed,
    thermal_state,
)

EXIT_CONFIG = 2
EXIT_DOMAIN = 3

log = logging.getLogger("spinteleport")

_DEFAULTS = {"quadrature_order": DEFAULT_QUADRATURE_ORDER, "resolution": 64, "format": "csv", "overrides": {}}


def _matrix_json(m: np.ndarray) -> dict:
    m = np.asarray(m)
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def _real(opts, key) -> float:
    value = opts[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationError(key, f"expected a number, got {value!r}")
    return float(value)


def _params(opts) -> ChainParams:
    return ChainParams(_real(opts, "J"), _real(opts, "B"), _real(opts, "T"))


def cmd_thermal(opts):
    params = _params(opts)
    rho = thermal_state(params)
    log_z = log_partition_function(params)
    probs = pauli_probabilities(rho)
    return {
        "params": {"J": params.J, "B": params.B, "T": params.T},
        "rho": _matrix_json(rho),
        "partition_function": math.exp(log_z) if log_z < 700 else None,
        "log_partition_function": log_z,
        "negativity": negativity(rho),
        "negativity_closed_form": thermal_negativity_closed(params),
        "pauli_probabilities": dict(zip(("p0", "px", "py", "pz"), probs.as_array().tolist())),
    }


def cmd_teleport(opts):
    params = _params(opts)
    theta, phi = _real(opts, "theta"), _real(opts, "phi")
    outcome = teleport(params, theta, phi)
    e_in = input_entanglement(theta)
    return {
        "params": {"J": params.J, "B": params.B, "T": params.T, "theta": theta, "phi": phi},
        "rho_out": _matrix_json(outcome.rho_out),
        "fidelity": outcome.fidelity,
        "e_in": e_in,
        "e_out_simulated": outcome.e_out,
        "e_out_closed_form": output_negativity_closed(e_in, params),
    }


def cmd_fidelity(opts):
    params = _params(opts)
    order = opts["quadrature_order"]
    return {
        "params": {"J": params.J, "B": params.B, "T": params.T},
        "average_fidelity_closed_form": average_fidelity_closed(params),
        "average_fidelity_quadrature": average_fidelity_quadrature(params, order),
        "quadrature_order": order,
        "weak_coupling_approximation": weak_coupling_fidelity(params.B, params.T),
    }


def cmd_mutual_info(opts):
    params = _params(opts)
    res = mutual_information(params, _real(opts, "gamma"), _real(opts, "beta"))
    return {
        "params": {"J": params.J, "B": params.B, "T": params.T, "gamma": opts["gamma"], "beta": opts["beta"]},
        "value": res.value,
        "holevo_chi": res.holevo_chi,
        "per_signal_entropies": list(res.per_signal_entropies),
        "average_state_entropy": res.average_state_entropy,
    }


def cmd_critical(opts):
    kind = opts["kind"]
    solver = {"entanglement": critical_field_entanglement, "fidelity": critical_field_fidelity}.get(kind)
    if solver is None:
        raise ConfigurationError("kind", f"expected 'entanglement' or 'fidelity', got {kind!r}")
    b = solver(_real(opts, "J"), _real(opts, "T"))
    return {"kind": kind, "J": opts["J"], "T": opts["T"], "B": "none" if b is None else b}


def cmd_figure(opts):
    overrides = opts.get("overrides") or {}
    if not isinstance(overrides, dict):
        raise ConfigurationError("overrides", "must be a JSON object")
    spec = SweepSpec(opts["id"], opts["resolution"], overrides)
    fmt = opts["format"]
    if fmt not in ("csv", "json"):
        raise ConfigurationError("format", f"expected 'csv' or 'json', got {fmt!r}")
    ds = run_sweep(spec)
    write_dataset(ds, fmt, opts["out"])
    return {"figure_id": spec.figure_id, "path": str(opts["out"]), "format": fmt, "rows": len(ds.rows),
            "columns": ds.columns}


_REQUIRED = {
    "thermal": ("J", "B", "T"),
    "teleport": ("J", "B", "T", "theta", "phi"),
    "fidelity": ("J", "B", "T", "quadrature_order"),
    "mutual-info": ("J", "B", "T", "gamma", "beta"),
    "critical": ("kind", "J", "T"),
    "figure": ("id", "out", "resolution", "format"),
}
_HANDLERS = {
    "thermal": cmd_thermal,
    "teleport": cmd_teleport,
    "fidelity": cmd_fidelity,
    "mutual-info": cmd_mutual_info,
    "critical": cmd_critical,
    "figure": cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinteleport", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="JSON file supplying any of the flag values")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def chain(p, with_b=True):
        p.add_argument("--J", type=float)
        if with_b:
            p.add_argument("--B", type=float)
        p.add_argument("--T", type=float)

    p = sub.add_parser("thermal", help="thermal state, partition function, negativity, Pauli weights")
    chain(p)
    p = sub.add_parser("teleport", help="teleport cos(t/2)|00> + sin(t/2)e^{ip}|11>")
    chain(p)
    p.add_argument("--theta", type=float)
    p.add_argument("--phi", type=float)
    p = sub.add_parser("fidelity", help="average fidelity: closed form, quadrature, weak coupling")
    chain(p)
    p.add_argument("--quadrature-order", dest="quadrature_order", type=int)
    p = sub.add_parser("mutual-info", help="mutual information of the four-signal ensemble")
    chain(p)
    p.add_argument("--gamma", type=float)
    p.add_argument("--beta", type=float)
    p = sub.add_parser("critical", help="critical field for E_out = 0 or F_A = 2/3")
    p.add_argument("--kind", choices=("entanglement", "fidelity"))
    chain(p, with_b=False)
    p = sub.add_parser("figure", help="write a figure dataset")
    p.add_argument("--id", choices=sorted(FIGURES))
    p.add_argument("--resolution", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    return parser


def _load_config(path) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigurationError("config", f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigurationError("config", f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigurationError("config", "top level must be a JSON object")
    return data


def resolve_options(args: argparse.Namespace) -> dict:
    """Merge defaults < config file < command-line flags."""
    opts = dict(_DEFAULTS)
    opts.update(_load_config(args.config))
    opts.update({k: v for k, v in vars(args).items() if v is not None})
    for key in _REQUIRED[args.command]:
        if opts.get(key) is None:
            raise ConfigurationError(key, "required (flag or config file)")
    return opts


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    logging.captureWarnings(True)
    try:
        opts = resolve_options(args)
        result = _HANDLERS[args.command](opts)
    except (ConfigurationError, DatasetFileError) as exc:
        print(f"spinteleport: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalDomainError as exc:
        print(f"spinteleport: numerical-domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
