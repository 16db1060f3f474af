"""Figure datasets: parameter grids, evaluation and CSV/JSON output.

Each figure id names a grid over one or two axes plus fixed parameters.
Rows are always produced in grid order (first axis outermost), so a given
:class:`SweepSpec` always yields byte-identical files.
"""
from __future__ import annotations

import csv
import io
import json
import math
import numbers
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np

from . import __version__
from .critical import critical_field_entanglement, critical_field_fidelity
from .errors import ConfigurationError, DatasetFileError
from .holevo import mutual_information_from_probs
from .teleportation import DEFAULT_QUADRATURE_ORDER, average_fidelity_closed, output_negativity_closed
from .thermal import LN3, T_FLOOR, ChainParams, thermal_pauli_probabilities

REFERENCE_T = 1.0 / (2.0 * LN3)
ENTANGLED_ANGLE = math.pi / 4
PRODUCT_ANGLE = 0.0
MIN_RESOLUTION, MAX_RESOLUTION = 2, 4096

AXIS_RANGES = {
    "e_in": (0.0, 1.0),
    "B": (0.0, 3.0),
    "T": (T_FLOOR, 3.0),
    "J": (0.05, 3.0),
    "gamma": (0.0, math.pi),
    "beta": (0.0, math.pi),
}
PERIODIC_AXES = {"gamma", "beta"}


@dataclass(frozen=True)
class FigureDef:
    axes: tuple
    columns: tuple
    fixed: dict
    evaluate: Callable[[dict], tuple]
    has_holes: bool = False


def _e_out(p):
    return (output_negativity_closed(p["e_in"], ChainParams(p["J"], p["B"], p["T"])),)


def _fidelity(p):
    return (average_fidelity_closed(ChainParams(p["J"], p["B"], p["T"])),)


def _mi(p, gamma, beta):
    probs = thermal_pauli_probabilities(ChainParams(p["J"], p["B"], p["T"]))
    return mutual_information_from_probs(probs, gamma, beta).value


def _mi_pair(p):
    return (_mi(p, ENTANGLED_ANGLE, ENTANGLED_ANGLE), _mi(p, PRODUCT_ANGLE, PRODUCT_ANGLE))


FIGURES = {
    "fig1a": FigureDef(("e_in", "B"), ("e_out",), {"J": 1.0, "T": REFERENCE_T}, _e_out),
    "fig1b": FigureDef(("e_in", "T"), ("e_out",), {"J": 1.0, "B": 0.0}, _e_out),
    "fig1c": FigureDef(("e_in", "J"), ("e_out",), {"T": REFERENCE_T, "B": 0.0}, _e_out),
    "fig1d": FigureDef(
        ("T", "J"), ("B_c",), {}, lambda p: (critical_field_entanglement(p["J"], p["T"]),), has_holes=True
    ),
    "fig2a": FigureDef(("B", "J"), ("F_A",), {"T": REFERENCE_T}, _fidelity),
    "fig2b": FigureDef(
        ("T", "J"), ("B_cf",), {}, lambda p: (critical_field_fidelity(p["J"], p["T"]),), has_holes=True
    ),
    "fig3a": FigureDef(
        ("gamma", "beta"), ("I",), {"J": 1.0, "T": REFERENCE_T, "B": 0.0}, lambda p: (_mi(p, p["gamma"], p["beta"]),)
    ),
    "fig3b": FigureDef(
        ("B", "T"), ("I",), {"J": 1.0, "gamma": ENTANGLED_ANGLE, "beta": ENTANGLED_ANGLE},
        lambda p: (_mi(p, p["gamma"], p["beta"]),),
    ),
    "fig4a": FigureDef(("B",), ("I_entangled", "I_product"), {"J": 1.0, "T": REFERENCE_T}, _mi_pair),
    "fig4b": FigureDef(("T",), ("I_entangled", "I_product"), {"J": 1.0, "B": 0.0}, _mi_pair),
}


@dataclass(frozen=True)
class SweepSpec:
    """What to compute: a figure id, grid resolution per axis, and overrides.

    ``overrides`` may replace any fixed parameter of the figure (``J``,
    ``B``, ``T``, ``gamma``, ``beta``) or an axis range via ``<axis>_range``
    as a two-element ``[lo, hi]`` list.
    """

    figure_id: str
    resolution: int = 64
    overrides: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.figure_id not in FIGURES:
            raise ConfigurationError("figure_id", f"unknown figure {self.figure_id!r}; choose from {sorted(FIGURES)}")
        if isinstance(self.resolution, bool) or not isinstance(self.resolution, numbers.Integral):
            raise ConfigurationError("resolution", f"must be an integer, got {self.resolution!r}")
        if not MIN_RESOLUTION <= self.resolution <= MAX_RESOLUTION:
            raise ConfigurationError(
                "resolution", f"must lie in [{MIN_RESOLUTION}, {MAX_RESOLUTION}], got {self.resolution}"
            )
        fig = FIGURES[self.figure_id]
        allowed = set(fig.fixed) | {f"{a}_range" for a in fig.axes}
        for key, value in self.overrides.items():
            if key not in allowed:
                raise ConfigurationError(f"overrides.{key}", f"not adjustable for {self.figure_id}; allowed {sorted(allowed)}")
            if key.endswith("_range"):
                if not (isinstance(value, (list, tuple)) and len(value) == 2 and all(_is_real(v) for v in value)):
                    raise ConfigurationError(f"overrides.{key}", "expected [lo, hi]")
                if not value[0] < value[1]:
                    raise ConfigurationError(f"overrides.{key}", "lo must be < hi")
            elif not _is_real(value):
                raise ConfigurationError(f"overrides.{key}", f"expected a real number, got {value!r}")

    def fixed_parameters(self) -> dict:
        fig = FIGURES[self.figure_id]
        return {k: float(self.overrides.get(k, v)) for k, v in fig.fixed.items()}

    def axis_ranges(self) -> dict:
        fig = FIGURES[self.figure_id]
        return {a: tuple(float(v) for v in self.overrides.get(f"{a}_range", AXIS_RANGES[a])) for a in fig.axes}


def _is_real(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def axis_values(name: str, lo: float, hi: float, n: int) -> np.ndarray:
    if name in PERIODIC_AXES:
        return lo + (hi - lo) * np.arange(n) / n
    return np.linspace(lo, hi, n)


@dataclass
class SweepDataset:
    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def run_sweep(spec: SweepSpec) -> SweepDataset:
    fig = FIGURES[spec.figure_id]
    fixed = spec.fixed_parameters()
    ranges = spec.axis_ranges()
    grids = [axis_values(a, *ranges[a], spec.resolution) for a in fig.axes]
    rows = []
    for point in _grid_points(grids):
        params = dict(fixed)
        params.update({a: float(v) for a, v in zip(fig.axes, point)})
        values = fig.evaluate(params)
        rows.append(tuple(float(v) for v in point) + tuple(values))
    metadata = {
        "tool": "spinteleport",
        "version": __version__,
        "figure_id": spec.figure_id,
        "resolution": spec.resolution,
        "fixed": fixed,
        "axes": {
            a: {"range": list(ranges[a]), "spacing": "periodic" if a in PERIODIC_AXES else "linear"}
            for a in fig.axes
        },
        "quadrature_order": DEFAULT_QUADRATURE_ORDER,
        "temperature_floor": T_FLOOR,
        "holes": "empty field = no boundary at this point" if fig.has_holes else None,
    }
    return SweepDataset(list(fig.axes) + list(fig.columns), rows, metadata)


def _grid_points(grids):
    if len(grids) == 1:
        for v in grids[0]:
            yield (v,)
        return
    for u in grids[0]:
        for v in grids[1]:
            yield (u, v)


def _format_real(value: Optional[float]) -> str:
    if value is None:
        return ""
    return format(value, ".15g")


def dataset_to_csv(ds: SweepDataset) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ds.columns)
    for row in ds.rows:
        writer.writerow([_format_real(v) for v in row])
    return buf.getvalue()


def dataset_to_json(ds: SweepDataset) -> str:
    payload = {"metadata": ds.metadata, "columns": ds.columns, "rows": [list(r) for r in ds.rows]}
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def write_dataset(ds: SweepDataset, format: str, path) -> None:
    if format == "csv":
        text = dataset_to_csv(ds)
    elif format == "json":
        text = dataset_to_json(ds)
    else:
        raise ConfigurationError("format", f"expected 'csv' or 'json', got {format!r}")
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise DatasetFileError(path, exc.strerror or exc) from exc


def read_dataset_json(path) -> SweepDataset:
    with open(path, encoding="utf-8") as fh:
        payload: dict[str, Any] = json.load(fh)
    return SweepDataset(payload["columns"], [tuple(r) for r in payload["rows"]], payload["metadata"])
