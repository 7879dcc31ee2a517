"""Density formulas, asymptotic ratios, and the figure-table sweeps.

All series here come from the closed forms; nothing is sampled.  Axis ranges
for the sweeps are tool defaults (the source material fixes none), so the CSV
meta line marks them as implementer-chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .benchmark import benchmark_count
from .deployment import total_count

_DENOM = 3.0 * math.sqrt(3.0)

FIGURE_IDS = ("fig4", "fig5", "fig6", "fig7", "fig8")


def density_proposed(k: int, r: float) -> float:
    """Sensors per unit area of the proposed scheme: 2(3k-2) / (3 sqrt(3) r^2)."""
    return 2.0 * (3 * k - 2) / (_DENOM * r * r)


def density_benchmark(k: int, r: float) -> float:
    """Sensors per unit area of the comparison scheme: 8k / (3 sqrt(3) r^2)."""
    return 8.0 * k / (_DENOM * r * r)


def density_gain(k: int, r: float) -> float:
    """How much denser the comparison scheme is: (2k+4) / (3 sqrt(3) r^2)."""
    return (2.0 * k + 4.0) / (_DENOM * r * r)


def density_ratio_limit(k_probe: int) -> float:
    """proposed/benchmark density ratio at a probe coverage: (3k-2)/(4k) -> 3/4."""
    return (3.0 * k_probe - 2.0) / (4.0 * k_probe)


def count_ratio(layers: int, k: int) -> float:
    """proposed/benchmark sensor-count ratio for a finite patch (-> 3/5)."""
    return total_count(layers, k) / benchmark_count(layers, k)


@dataclass(frozen=True)
class SweepSpec:
    """One swept variable over an inclusive range, with fixed companions."""

    variable: str  # radius | coverage_k | layers | joint
    start: float
    stop: float
    step: float
    fixed: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ValueError(f"sweep step must be positive, got {self.step}")
        if self.stop < self.start:
            raise ValueError("empty sweep range")

    def values(self) -> list[float]:
        out = []
        value = self.start
        while value <= self.stop + 1e-9 * self.step:
            out.append(value)
            value += self.step
        return out

    def int_values(self) -> list[int]:
        return [int(round(v)) for v in self.values()]


@dataclass(frozen=True)
class FigureTable:
    """Named numeric columns behind one figure."""

    figure_id: str
    columns: dict[str, list]
    notes: str

    def __post_init__(self) -> None:
        lengths = {len(series) for series in self.columns.values()}
        if len(lengths) > 1:
            raise ValueError("figure columns must have equal length")
        for series in self.columns.values():
            for value in series:
                if not math.isfinite(value):
                    raise ValueError("figure values must be finite")


DEFAULT_SWEEPS = {
    "fig4": SweepSpec("radius", 1, 30, 1, {"k": (2, 7)}),
    "fig5": SweepSpec("coverage_k", 1, 10, 1, {"r": (10.0, 20.0)}),
    "fig6": SweepSpec("layers", 1, 10, 1, {"k": (3, 10)}),
    "fig7": SweepSpec("coverage_k", 1, 10, 1, {"l": (3, 5)}),
    "fig8": SweepSpec("joint", 1, 10, 1, {}),
}


def emit_figure_table(figure_id: str, spec: SweepSpec | None = None) -> FigureTable:
    """Evaluate the closed forms behind one figure.

    fig4: density vs sensing radius, both schemes, k in {2, 7}.
    fig5: density vs coverage target, both schemes, r in {10, 20} m.
    fig6: sensor counts vs layer count, both schemes, k in {3, 10}.
    fig7: sensor counts vs coverage target, both schemes, l in {3, 5}.
    fig8: count gap (benchmark - proposed) over the (k, l) grid.
    """
    if figure_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {figure_id!r}, expected one of {FIGURE_IDS}")
    if spec is None:
        spec = DEFAULT_SWEEPS[figure_id]

    notes = "axis ranges are tool defaults, not normative"
    if figure_id == "fig4":
        radii = spec.values()
        columns: dict[str, list] = {"r": radii}
        for k in spec.fixed.get("k", (2, 7)):
            columns[f"proposed_k{k}"] = [density_proposed(k, r) for r in radii]
            columns[f"cga_k{k}"] = [density_benchmark(k, r) for r in radii]
        return FigureTable(figure_id, columns, notes)

    if figure_id == "fig5":
        ks = spec.int_values()
        columns = {"k": ks}
        for r in spec.fixed.get("r", (10.0, 20.0)):
            tag = f"r{int(r) if float(r).is_integer() else r}"
            columns[f"proposed_{tag}"] = [density_proposed(k, r) for k in ks]
            columns[f"cga_{tag}"] = [density_benchmark(k, r) for k in ks]
        return FigureTable(figure_id, columns, notes)

    if figure_id == "fig6":
        layers = spec.int_values()
        columns = {"l": layers}
        for k in spec.fixed.get("k", (3, 10)):
            columns[f"proposed_k{k}"] = [total_count(l, k) for l in layers]
            columns[f"cga_k{k}"] = [benchmark_count(l, k) for l in layers]
        return FigureTable(figure_id, columns, notes)

    if figure_id == "fig7":
        ks = spec.int_values()
        columns = {"k": ks}
        for l in spec.fixed.get("l", (3, 5)):
            columns[f"proposed_l{l}"] = [total_count(l, k) for k in ks]
            columns[f"cga_l{l}"] = [benchmark_count(l, k) for k in ks]
        return FigureTable(figure_id, columns, notes)

    ks = spec.int_values()
    layers = spec.fixed.get("l_values") or ks
    rows_k: list[int] = []
    rows_l: list[int] = []
    proposed: list[int] = []
    cga: list[int] = []
    gap: list[int] = []
    for k in ks:
        for l in layers:
            rows_k.append(k)
            rows_l.append(l)
            n = total_count(l, k)
            n_ex = benchmark_count(l, k)
            proposed.append(n)
            cga.append(n_ex)
            gap.append(n_ex - n)
    return FigureTable(
        "fig8",
        {"k": rows_k, "l": rows_l, "proposed": proposed, "cga": cga, "gap": gap},
        notes,
    )


def format_value(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean in figure column")
    if isinstance(value, int):
        return str(value)
    return format(value, ".6g")


def figure_csv_lines(table: FigureTable, version: str) -> list[str]:
    lines = [f"# meta: tool=hexcover version={version} figure={table.figure_id} note={table.notes}"]
    names = list(table.columns)
    lines.append(",".join(names))
    length = len(next(iter(table.columns.values()), []))
    for row in range(length):
        lines.append(",".join(format_value(table.columns[name][row]) for name in names))
    return lines


def write_figure_csv(table: FigureTable, path, version: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(figure_csv_lines(table, version)) + "\n")
