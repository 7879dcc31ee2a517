"""Empirical k-coverage certification by deterministic sampling.

Three point families are evaluated against the sensing disks:

* structured points: the vertices, edge midpoints and centroid of every
  center-vertex-vertex triangle of every patch hexagon (exact lattice points,
  deduplicated).  Triangle vertices are the worst-case points under the
  placement strategy, so a failure cannot hide from this family;
* a square grid of pitch ``grid_step`` clipped to the patch;
* seeded uniform samples over the patch.

The disk test compares squared distances with a 1e-9 relative tolerance so
exact boundary contacts survive the float conversion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .geometry import SQRT3, centroid, midpoint
from .tiling import SolarModel

DISK_TOL = 1e-9  # relative, on squared distances
REGION_TOL = 1e-12  # relative, for clipping grid points to the patch
MAX_FAILING_POINTS = 100


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of sampling a deployment against a target coverage."""

    target_k: int
    samples: int
    min_coverage: int
    failing_points: tuple[tuple[float, float], ...]
    coverage_histogram: dict[int, int]
    region: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "target_k": self.target_k,
            "samples": self.samples,
            "min_coverage": self.min_coverage,
            "passed": self.passed,
            "failing_points": [list(p) for p in self.failing_points],
            "coverage_histogram": {str(k): v for k, v in sorted(self.coverage_histogram.items())},
            "region": self.region,
        }


def structured_points(model: SolarModel) -> np.ndarray:
    """Exact per-triangle probe points (vertices, edge midpoints, centroids)."""
    seen = set()
    for hexagon in model.hexagons:
        for triangle in hexagon.triangles():
            a, b, c = triangle.vertices
            seen.update(
                (a, b, c, midpoint(a, b), midpoint(b, c), midpoint(c, a), centroid(a, b, c))
            )
    ordered = sorted(seen, key=lambda p: p.sort_key())
    return np.array([p.to_xy(model.side) for p in ordered])


def region_contains(model: SolarModel, points: np.ndarray, tol: float = REGION_TOL) -> np.ndarray:
    """Closed membership of each point in the union of patch hexagons."""
    scale = model.side
    bound = SQRT3 * 0.5 * scale + tol * scale
    inside = np.zeros(len(points), dtype=bool)
    for hexagon in model.hexagons:
        cx, cy = hexagon.center.to_xy(scale)
        dx = points[:, 0] - cx
        dy = points[:, 1] - cy
        inside |= (
            (np.abs(dy) <= bound)
            & (np.abs(SQRT3 * dx + dy) * 0.5 <= bound)
            & (np.abs(SQRT3 * dx - dy) * 0.5 <= bound)
        )
        if inside.all():
            break
    return inside


def grid_points(model: SolarModel, step: float) -> np.ndarray:
    """Square grid of pitch ``step`` clipped to the patch.

    The grid is anchored at the bounding-box corner, so halving the step keeps
    every existing point and refinement can only lower the observed minimum.
    """
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    min_x, min_y, max_x, max_y = model.bounding_box()
    xs = np.arange(min_x, max_x + step * 0.5, step)
    ys = np.arange(min_y, max_y + step * 0.5, step)
    gx, gy = np.meshgrid(xs, ys)
    points = np.column_stack([gx.ravel(), gy.ravel()])
    return points[region_contains(model, points)]


def monte_carlo_points(model: SolarModel, count: int, seed: int) -> np.ndarray:
    """Seeded uniform samples over the patch (hexagons have equal area)."""
    if count <= 0:
        return np.zeros((0, 2))
    rng = np.random.default_rng(seed)
    scale = model.side
    centers = np.array([h.center.to_xy(scale) for h in model.hexagons])
    verts = np.array(
        [[v.to_xy(scale) for v in h.vertices()] for h in model.hexagons]
    )  # (H, 6, 2)
    hex_idx = rng.integers(0, len(centers), size=count)
    tri_idx = rng.integers(0, 6, size=count)
    u = rng.random(count)
    v = rng.random(count)
    fold = u + v > 1.0
    u[fold] = 1.0 - u[fold]
    v[fold] = 1.0 - v[fold]
    origin = centers[hex_idx]
    a = verts[hex_idx, tri_idx]
    b = verts[hex_idx, (tri_idx + 1) % 6]
    return origin + u[:, None] * (a - origin) + v[:, None] * (b - origin)


def coverage_counts(points: np.ndarray, sensors: np.ndarray, radius: float) -> np.ndarray:
    """Number of sensors whose closed disk of ``radius`` holds each point."""
    if len(points) == 0:
        return np.zeros(0, dtype=int)
    if len(sensors) == 0:
        return np.zeros(len(points), dtype=int)
    effective = radius * np.sqrt(1.0 + DISK_TOL)
    tree = cKDTree(sensors)
    return np.asarray(tree.query_ball_point(points, effective, return_length=True))


def verify_coverage(
    deployment,
    target_k: int | None = None,
    grid_step: float | None = None,
    seed: int = 0,
    mc_samples: int = 50_000,
    fail_fast: bool = False,
) -> CoverageReport:
    """Sample the patch and report the minimum observed coverage.

    ``deployment`` needs ``model``, ``r``, ``k`` and ``positions_xy()``.  With
    ``fail_fast`` the stages (structured, grid, random) stop at the first one
    that contains a failing point.
    """
    model: SolarModel = deployment.model
    radius = deployment.r
    target = deployment.k if target_k is None else target_k
    step = radius / 20.0 if grid_step is None else grid_step
    sensors = deployment.positions_xy()

    stages = [structured_points(model), grid_points(model, step)]
    if mc_samples > 0:
        stages.append(monte_carlo_points(model, mc_samples, seed))

    histogram: dict[int, int] = {}
    failing: list[tuple[float, float]] = []
    min_coverage: int | None = None
    samples = 0
    for stage in stages:
        counts = coverage_counts(stage, sensors, radius)
        samples += len(stage)
        if len(counts):
            stage_min = int(counts.min())
            min_coverage = stage_min if min_coverage is None else min(min_coverage, stage_min)
            values, freqs = np.unique(counts, return_counts=True)
            for value, freq in zip(values.tolist(), freqs.tolist()):
                histogram[int(value)] = histogram.get(int(value), 0) + int(freq)
            bad = np.nonzero(counts < target)[0]
            for index in bad[: MAX_FAILING_POINTS - len(failing)]:
                failing.append((float(stage[index, 0]), float(stage[index, 1])))
            if fail_fast and len(bad):
                break

    if min_coverage is None:
        min_coverage = 0
    if len(sensors) == 0:
        min_coverage = 0

    region = (
        f"solar-model patch: layers={model.layers}, "
        f"hexagons={len(model.hexagons)}, side={model.side}"
    )
    return CoverageReport(
        target_k=target,
        samples=samples,
        min_coverage=min_coverage,
        failing_points=tuple(failing),
        coverage_histogram=histogram,
        region=region,
        passed=min_coverage >= target,
    )


def residual_coverage(deployment, failures: list[int], **verify_kwargs) -> CoverageReport:
    """Coverage report after removing the sensors at ``failures`` (target = k)."""
    from .deployment import remove_sensors

    reduced = remove_sensors(deployment, failures)
    return verify_coverage(reduced, target_k=deployment.k, **verify_kwargs)
