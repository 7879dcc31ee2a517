"""Sensor placement on a solar-model patch, with closed-form count formulas.

The strategy is cumulative in the coverage target k:

* k = 1: one sensor at every hexagon center.
* k = 2: additionally every vertex of one parity class ("alternate vertices").
* k = 3: additionally the other parity class (all vertices occupied).
* k > 3: each further step adds, per hexagon, three sensors on the
  center-to-vertex segments; steps alternate between the odd-indexed and the
  even-indexed segments, and the j-th sensor ever placed on a given segment
  sits at parameter 1/(j+1) from the center so positions never collide.

Sharing matters: a vertex sensor serves up to three hexagons but is placed
once, while segment sensors are strictly interior and owned by one hexagon.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .geometry import LatticePoint
from .tiling import EVEN, ODD, PARITY_NAMES, SolarModel


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (not a user error)."""


_KIND_RANK = {"center": 0, "vertex": 1, "segment": 3}


@dataclass(frozen=True)
class SensorRecord:
    """A placed sensor with its provenance.

    ``hexagon`` is the owning hexagon index for center and segment sensors and
    None for (shared) vertex sensors.  ``segment`` is the 1-based index of the
    center-to-vertex segment, ``step`` the 1-based extra-coverage round that
    placed it.
    """

    position: LatticePoint
    kind: str
    parity: str | None = None
    hexagon: int | None = None
    segment: int | None = None
    step: int | None = None

    def provenance(self) -> str:
        if self.kind == "center":
            return "center"
        if self.kind == "vertex":
            return f"vertex:{self.parity}"
        return f"segment:{self.segment}:{self.step}"

    def rank(self) -> int:
        rank = _KIND_RANK[self.kind]
        if self.kind == "vertex" and self.parity == ODD:
            rank += 1
        return rank


@dataclass(frozen=True)
class Deployment:
    """A full sensor placement for ``model`` at coverage target ``k``."""

    model: SolarModel
    k: int
    sensors: tuple[SensorRecord, ...]
    strategy: str = "proposed"
    parity: str = EVEN

    @property
    def r(self) -> float:
        return self.model.side

    def positions_xy(self) -> np.ndarray:
        """Sensor coordinates in meters, shape (n, 2)."""
        if not self.sensors:
            return np.zeros((0, 2))
        return np.array([s.position.to_xy(self.model.side) for s in self.sensors])


def per_hexagon_count(k: int) -> int:
    """Sensors needed for k-coverage of one hexagon on its own: 3k - 2."""
    return 3 * k - 2


def total_count(layers: int, k: int) -> int:
    """Closed-form sensor count for the whole patch."""
    if k == 1:
        return 1 + 3 * layers * (layers - 1)
    if k == 2:
        return 6 * layers * layers - 3 * layers + 1
    return (
        9 * (k - 2) * layers * layers
        - 3 * (3 * k - 8) * layers
        + (3 * k - 8)
    )


def _segment_vertex_indices(target_coverage: int) -> tuple[int, int, int]:
    # Segments are numbered 1..6 toward vertices 0..5; an even target uses the
    # odd-numbered segments (vertices 0, 2, 4) and an odd target the rest.
    return (0, 2, 4) if target_coverage % 2 == 0 else (1, 3, 5)


def place_proposed(model: SolarModel, k: int, parity: str = EVEN) -> Deployment:
    """Place sensors for k-coverage of the patch; deterministic and exact.

    ``parity`` selects which alternate-vertex class is used first at k = 2.
    """
    if k < 1:
        raise ValueError(f"coverage target must be >= 1, got {k}")
    if parity not in PARITY_NAMES:
        raise ValueError(f"parity must be one of {PARITY_NAMES}, got {parity!r}")
    other = ODD if parity == EVEN else EVEN

    sensors: list[SensorRecord] = []
    for index, hexagon in enumerate(model.hexagons):
        sensors.append(SensorRecord(hexagon.center, "center", hexagon=index))
    if k >= 2:
        for position in model.vertex_class(parity):
            sensors.append(SensorRecord(position, "vertex", parity=parity))
    if k >= 3:
        for position in model.vertex_class(other):
            sensors.append(SensorRecord(position, "vertex", parity=other))

    for step in range(1, k - 2):  # extra-coverage rounds 1 .. k-3
        target = step + 3
        vertex_indices = _segment_vertex_indices(target)
        # Rounds of equal parity reuse the same segments; this round places the
        # ordinal-th sensor on each, at parameter 1/(ordinal+1) from the center.
        ordinal = (step + 1) // 2
        t = Fraction(1, ordinal + 1)
        for index, hexagon in enumerate(model.hexagons):
            vertices = hexagon.vertices()
            for vi in vertex_indices:
                position = hexagon.center + (vertices[vi] - hexagon.center) * t
                sensors.append(
                    SensorRecord(
                        position,
                        "segment",
                        hexagon=index,
                        segment=vi + 1,
                        step=step,
                    )
                )

    positions = {s.position for s in sensors}
    if len(positions) != len(sensors):
        raise InvariantViolation("duplicate sensor positions after placement")
    expected = total_count(model.layers, k)
    if len(sensors) != expected:
        raise InvariantViolation(
            f"placed {len(sensors)} sensors, closed form expects {expected}"
        )

    sensors.sort(key=lambda s: (s.rank(),) + s.position.sort_key())
    return Deployment(model=model, k=k, sensors=tuple(sensors), parity=parity)


def fully_covered_triangles(
    model_hexagon, x: float, y: float, radius: float, scale: float = 1.0
) -> int:
    """How many of the hexagon's six triangles lie entirely in the sensing disk.

    A disk is convex, so a triangle is inside iff its three vertices are.
    """
    count = 0
    for triangle in model_hexagon.triangles():
        inside = True
        for vertex in triangle.vertices:
            vx, vy = vertex.to_xy(scale)
            if (vx - x) ** 2 + (vy - y) ** 2 > radius * radius * (1.0 + 1e-12):
                inside = False
                break
        if inside:
            count += 1
    return count


def minimum_sensors_lower_bound(grid_n: int = 24) -> int:
    """Sensors needed to cover one hexagon when the center is off limits: 3.

    Verified by a grid search: every candidate position other than the exact
    center fully covers at most 2 of the six triangles, so two sensors reach
    at most 4 < 6 and a third is unavoidable.
    """
    from .geometry import Hexagon, ORIGIN

    hexagon = Hexagon(ORIGIN)
    radius = 1.0
    best_off_center = 0
    for triangle in hexagon.triangles():
        (ax, ay), (bx, by), (cx, cy) = triangle.vertices_xy(1.0)
        for i in range(grid_n + 1):
            for j in range(grid_n + 1 - i):
                u = i / grid_n
                v = j / grid_n
                w = 1.0 - u - v
                x = u * ax + v * bx + w * cx
                y = u * ay + v * by + w * cy
                if x == 0.0 and y == 0.0:
                    continue
                covered = fully_covered_triangles(hexagon, x, y, radius)
                best_off_center = max(best_off_center, covered)
    if best_off_center > 2:
        raise InvariantViolation(
            f"off-center candidate covers {best_off_center} triangles"
        )
    if fully_covered_triangles(hexagon, 0.0, 0.0, radius) != 6:
        raise InvariantViolation("center candidate must cover all six triangles")
    return 3


def triangle_coverage_certificate(deployment: Deployment) -> int:
    """Minimum, over all triangles of all hexagons, of full-coverage multiplicity.

    Counts sensors whose closed sensing disk (radius = patch side) contains an
    entire triangle; the deployment provides at least k for every triangle.
    """
    scale = deployment.model.side
    radius_sq = scale * scale * (1.0 + 1e-12)
    positions = deployment.positions_xy()
    minimum = None
    for hexagon in deployment.model.hexagons:
        for triangle in hexagon.triangles():
            corners = np.array(triangle.vertices_xy(scale))
            dist_sq = ((positions[:, None, :] - corners[None, :, :]) ** 2).sum(axis=2)
            covered = int((dist_sq.max(axis=1) <= radius_sq).sum())
            minimum = covered if minimum is None else min(minimum, covered)
    return 0 if minimum is None else minimum


def remove_sensors(deployment: Deployment, indices: list[int]) -> Deployment:
    """Deployment without the sensors at the given indices (for failure studies)."""
    if len(set(indices)) != len(indices):
        raise ValueError("duplicate sensor indices")
    for index in indices:
        if not 0 <= index < len(deployment.sensors):
            raise ValueError(f"sensor index {index} out of range")
    doomed = set(indices)
    kept = tuple(s for i, s in enumerate(deployment.sensors) if i not in doomed)
    return replace(deployment, sensors=kept)
