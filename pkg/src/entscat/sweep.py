"""Deterministic parameter sweeps with CSV/JSON serialization.

Axes are linear grids over either the physical flags (k, gA, gB, with d
fixed) or the dimensionless ones (omegaA, omegaB, phase or sin2kd); the two
unit systems never mix in one sweep.  Rows are emitted in row-major axis
order and floats are written with their shortest round-trip representation,
so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import __version__
from .closedform import amplitudes, truncated_amplitudes
from .core import (
    DimensionlessPoint,
    DomainError,
    ModelKind,
    PhysicalPoint,
    Side,
    to_dimensionless,
)
from .observables import concurrence_and_ratio, observables_at, post_selected_state, probability

PHYSICAL_NAMES = ("k", "gA", "gB", "d")
DIMENSIONLESS_NAMES = ("omegaA", "omegaB", "phase", "sin2kd")

DEFAULT_COLUMNS = ("C_t", "P_t", "C_r", "P_r")
KNOWN_COLUMNS = ("C_t", "P_t", "C_r", "P_r", "a_t", "a_r")


@dataclass(frozen=True)
class Axis:
    """One linear sweep axis; ``count`` >= 2 grid points including both ends."""

    name: str
    start: float
    stop: float
    count: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.spacing != "linear":
            raise DomainError(f"unsupported spacing {self.spacing!r}")
        if self.count < 2:
            raise DomainError(f"axis {self.name!r} needs count >= 2, got {self.count}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError(f"axis {self.name!r} range must be finite")

    def values(self) -> list[float]:
        step = (self.stop - self.start) / (self.count - 1)
        vals = [self.start + i * step for i in range(self.count)]
        vals[-1] = self.stop  # endpoint exact regardless of rounding
        return vals


@dataclass(frozen=True)
class SweepGrid:
    """Axis definitions, observable columns, and the row-major value table.
    Undefined entries (nothing detectable, P = 0) are None, never 0."""

    axes: tuple[Axis, ...]
    columns: tuple[str, ...]
    rows: tuple[tuple[float | None, ...], ...]
    meta: dict[str, str]


def _point_from_params(params: dict[str, float], model: ModelKind) -> DimensionlessPoint:
    names = set(params)
    physical = names & set(PHYSICAL_NAMES)
    dimensionless = names & set(DIMENSIONLESS_NAMES)
    if physical and dimensionless:
        raise DomainError(f"mixed unit systems: {sorted(physical)} with {sorted(dimensionless)}")
    if physical:
        missing = {"k", "gA", "gB"} - names
        if missing:
            raise DomainError(f"physical sweep needs k, gA, gB; missing {sorted(missing)}")
        p = PhysicalPoint(params["gA"], params["gB"], params["k"], params.get("d", 1.0))
        return to_dimensionless(p, model)
    missing = {"omegaA", "omegaB"} - names
    if missing:
        raise DomainError(f"dimensionless sweep needs omegaA, omegaB; missing {sorted(missing)}")
    has_phase = "phase" in names
    has_sin2 = "sin2kd" in names
    if has_phase == has_sin2:
        raise DomainError("give exactly one of phase or sin2kd")
    if has_phase:
        phase = params["phase"]
    else:
        s = params["sin2kd"]
        if not 0.0 <= s <= 1.0:
            raise DomainError(f"sin2kd must lie in [0, 1], got {s!r}")
        phase = math.asin(math.sqrt(s))
    return DimensionlessPoint(params["omegaA"], params["omegaB"], phase, model)


def _cells(axes: tuple[Axis, ...]):
    if len(axes) == 1:
        for v in axes[0].values():
            yield {axes[0].name: v}
    else:
        outer, inner = axes
        inner_vals = inner.values()
        for u in outer.values():
            for v in inner_vals:
                yield {outer.name: u, inner.name: v}


def _meta(model: ModelKind, fixed: dict[str, float], axes: tuple[Axis, ...], kind: str) -> dict[str, str]:
    meta = {
        "tool": f"entscat {__version__}",
        "kind": kind,
        "model": model.value,
        "units": "g in hbar^2*pi/(m*d), k in pi/d",
        "axes": "|".join(f"{ax.name}:{ax.start!r}:{ax.stop!r}:{ax.count}" for ax in axes),
    }
    for name in sorted(fixed):
        meta[name] = repr(fixed[name])
    return meta


def run_scan(
    axes: tuple[Axis, ...],
    fixed: dict[str, float],
    model: ModelKind,
    columns: tuple[str, ...] = DEFAULT_COLUMNS,
) -> SweepGrid:
    """Evaluate the observables on a 1D or 2D grid."""
    if not 1 <= len(axes) <= 2:
        raise DomainError(f"need 1 or 2 axes, got {len(axes)}")
    seen = [ax.name for ax in axes] + list(fixed)
    if len(set(seen)) != len(seen):
        raise DomainError(f"parameter given twice in {seen}")
    for name in seen:
        if name not in PHYSICAL_NAMES + DIMENSIONLESS_NAMES:
            raise DomainError(f"unknown parameter {name!r}")
    for col in columns:
        if col not in KNOWN_COLUMNS:
            raise DomainError(f"unknown column {col!r}; known: {KNOWN_COLUMNS}")
    rows = []
    for cell in _cells(axes):
        obs = observables_at(_point_from_params({**fixed, **cell}, model))
        by_name = {
            "C_t": obs.concurrence_t,
            "P_t": obs.probability_t,
            "C_r": obs.concurrence_r,
            "P_r": obs.probability_r,
            "a_t": obs.ratio_a_t,
            "a_r": obs.ratio_a_r,
        }
        rows.append(tuple(by_name[c] for c in columns))
    return SweepGrid(tuple(axes), tuple(columns), tuple(rows), _meta(model, fixed, tuple(axes), "scan"))


def run_truncation(
    axis: Axis,
    fixed: dict[str, float],
    bounce_orders: tuple[int, ...],
) -> SweepGrid:
    """Concurrence and probability with the bounce series cut at each order,
    next to the exact values (exchange model, transmitted side)."""
    model = ModelKind.SPIN_EXCHANGE
    if axis.name in fixed:
        raise DomainError(f"parameter given twice: {axis.name}")
    columns = []
    for n in bounce_orders:
        columns += [f"C_n{n}", f"P_n{n}"]
    columns += ["C_exact", "P_exact"]
    rows = []
    for cell in _cells((axis,)):
        pt = _point_from_params({**fixed, **cell}, model)
        row = []
        for n in bounce_orders:
            state = post_selected_state(truncated_amplitudes(pt, n), Side.TRANSMITTED)
            c, _ = concurrence_and_ratio(state)
            row += [c, probability(state)]
        state = post_selected_state(amplitudes(pt), Side.TRANSMITTED)
        c, _ = concurrence_and_ratio(state)
        row += [c, probability(state)]
        rows.append(tuple(row))
    meta = _meta(model, fixed, (axis,), "truncate")
    meta["bounce_orders"] = ",".join(str(n) for n in bounce_orders)
    return SweepGrid((axis,), tuple(columns), tuple(rows), meta)


def _format_cell(value: float | None) -> str:
    if value is None:
        return ""
    return repr(float(value))


def write_csv(grid: SweepGrid, path) -> None:
    meta_line = "# meta: " + ";".join(f"{k}={v}" for k, v in sorted(grid.meta.items()))
    header = ",".join([ax.name for ax in grid.axes] + list(grid.columns))
    lines = [meta_line, header]
    for coords, row in zip(_cells(grid.axes), grid.rows):
        cells = [repr(float(coords[ax.name])) for ax in grid.axes]
        cells += [_format_cell(v) for v in row]
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _json_safe(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    return float(value)


def write_json(grid: SweepGrid, path) -> None:
    document = {
        "meta": dict(sorted(grid.meta.items())),
        "axes": [
            {"name": ax.name, "start": ax.start, "stop": ax.stop, "count": ax.count, "spacing": ax.spacing}
            for ax in grid.axes
        ],
        "columns": list(grid.columns),
        "rows": [[_json_safe(v) for v in row] for row in grid.rows],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(document, fh, indent=1, sort_keys=True, allow_nan=False)
        fh.write("\n")


def write_grid(grid: SweepGrid, path, fmt: str) -> None:
    if fmt == "csv":
        write_csv(grid, path)
    elif fmt == "json":
        write_json(grid, path)
    else:
        raise DomainError(f"unknown format {fmt!r}")
