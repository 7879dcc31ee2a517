"""The comparison scheme: half-side hexagon tiling with k random sensors per tile.

The small honeycomb shares the big tiling's orientation and is anchored at the
origin (a small hexagon centered there); an exact rational offset can shift
it.  A small hexagon belongs to the benchmark iff all six of its vertices lie
in the closed union of the patch hexagons, and each such hexagon receives k
uniformly sampled sensors from its own deterministic RNG stream.

The closed-form count ``benchmark_count`` reports k*(15 l^2 - 27 l + 18) for
k >= 2 as printed in the source scheme; the geometric enumeration is exposed
separately because the two do not agree for small patches (at l = 1 the
formula says 6 small hexagons while only one aligned tile fits, and no
packing can exceed 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import SQRT3, Hexagon, LatticePoint, lattice_point
from .tiling import SolarModel

SMALL_SIDE = Fraction(1, 2)


def benchmark_count(layers: int, k: int) -> int:
    """Closed-form sensor count of the comparison scheme."""
    if k == 1:
        return 1 + 3 * layers * (layers - 1)
    return k * small_hexagon_formula_count(layers)


def small_hexagon_formula_count(layers: int) -> int:
    """The printed tile count for the comparison scheme: 15 l^2 - 27 l + 18."""
    return 15 * layers * layers - 27 * layers + 18


def count_gap(layers: int, k: int) -> int:
    """benchmark_count minus the proposed strategy's total_count (never negative)."""
    from .deployment import InvariantViolation, total_count

    gap = benchmark_count(layers, k) - total_count(layers, k)
    if gap < 0:
        raise InvariantViolation(
            f"benchmark count fell below the proposed count at l={layers}, k={k}"
        )
    return gap


def small_hexagon_centers(
    model: SolarModel, offset: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))
) -> list[LatticePoint]:
    """Centers of half-side hexagons fully inside the patch, in scan order.

    ``offset`` shifts the small tiling by rational multiples of the side
    length along x and y.  Containment uses a float test with a 1e-9 band:
    candidate margins are either exactly zero (boundary contact, which counts
    as inside) or bounded away from zero by the quarter-integer lattice, so
    the band never misclassifies.
    """
    base = lattice_point(x_rat=2 * Fraction(offset[0]), y_rat=2 * Fraction(offset[1]))
    step_q = lattice_point(x_rat=3 * SMALL_SIDE, y_root3=SMALL_SIDE)
    step_w = lattice_point(y_root3=2 * SMALL_SIDE)

    centers_xy = np.array([h.center.to_xy(1.0) for h in model.hexagons])
    apothem = SQRT3 * 0.5
    bound = apothem + 1e-9

    def inside_patch(x: float, y: float) -> bool:
        dx = x - centers_xy[:, 0]
        dy = y - centers_xy[:, 1]
        hit = (
            (np.abs(dy) <= bound)
            & (np.abs(SQRT3 * dx + dy) * 0.5 <= bound)
            & (np.abs(SQRT3 * dx - dy) * 0.5 <= bound)
        )
        return bool(hit.any())

    reach = 4 * model.layers + 4
    kept: list[LatticePoint] = []
    for q in range(-reach, reach + 1):
        for w in range(-reach, reach + 1):
            center = base + step_q * q + step_w * w
            small = Hexagon(center, SMALL_SIDE)
            if all(inside_patch(*v.to_xy(1.0)) for v in small.vertices()):
                kept.append(center)
    return kept


@dataclass(frozen=True)
class BenchmarkDeployment:
    """k random sensors inside every fully contained half-side hexagon."""

    model: SolarModel
    k: int
    seed: int
    offset: tuple[Fraction, Fraction]
    small_hexagons: tuple[Hexagon, ...]
    positions: np.ndarray  # (n, 2) meters
    hexagon_index: np.ndarray  # (n,) owning small hexagon
    strategy: str = "benchmark"

    @property
    def r(self) -> float:
        return self.model.side

    def positions_xy(self) -> np.ndarray:
        return self.positions

    def sensor_count(self) -> int:
        return len(self.positions)


def place_benchmark(
    model: SolarModel,
    k: int,
    seed: int = 0,
    offset: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0)),
) -> BenchmarkDeployment:
    """Sample k sensors per contained small hexagon, reproducibly from ``seed``.

    Sampling decomposes each hexagon into its six triangles and draws folded
    barycentric coordinates, so it is uniform over the hexagon with no
    rejection loop.  Each small hexagon uses the stream (seed, index).
    """
    if k < 1:
        raise ValueError(f"coverage target must be >= 1, got {k}")
    centers = small_hexagon_centers(model, offset)
    smalls = tuple(Hexagon(c, SMALL_SIDE) for c in centers)

    scale = model.side
    all_points: list[np.ndarray] = []
    owners: list[int] = []
    for index, small in enumerate(smalls):
        rng = np.random.default_rng([seed, index])
        origin = np.array(small.center.to_xy(scale))
        verts = np.array([v.to_xy(scale) for v in small.vertices()])
        tri = rng.integers(0, 6, size=k)
        u = rng.random(k)
        v = rng.random(k)
        fold = u + v > 1.0
        u[fold] = 1.0 - u[fold]
        v[fold] = 1.0 - v[fold]
        a = verts[tri]
        b = verts[(tri + 1) % 6]
        points = origin + u[:, None] * (a - origin) + v[:, None] * (b - origin)
        all_points.append(points)
        owners.extend([index] * k)

    if all_points:
        positions = np.concatenate(all_points)
    else:
        positions = np.zeros((0, 2))
    return BenchmarkDeployment(
        model=model,
        k=k,
        seed=seed,
        offset=(Fraction(offset[0]), Fraction(offset[1])),
        small_hexagons=smalls,
        positions=positions,
        hexagon_index=np.array(owners, dtype=int),
    )
