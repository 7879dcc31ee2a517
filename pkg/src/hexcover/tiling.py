"""Layered honeycomb patches with an exact, deduplicated vertex registry.

A patch of ``layers`` rings of side-r hexagons: one central hexagon counts as
layer 1, and layer j >= 2 holds the 6*(j-1) hexagons at honeycomb graph
distance j-1 from the center.  Hexagon centers are indexed by axial integer
coordinates so neighbor arithmetic stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import Hexagon, LatticePoint, lattice_point

EVEN = "even"
ODD = "odd"
PARITY_NAMES = (EVEN, ODD)

# Axial basis: unit steps toward the 30- and 90-degree neighbors of a side-1
# hexagon, in lattice units.
_A1 = lattice_point(x_rat=3, y_root3=1)
_A2 = lattice_point(y_root3=2)

# Axial neighbor steps, counterclockwise from 30 degrees.
AXIAL_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def axial_center(q: int, w: int) -> LatticePoint:
    """Lattice position of the hexagon center at axial coordinates (q, w)."""
    return lattice_point(x_rat=3 * q, y_root3=q + 2 * w)


def axial_distance(q: int, w: int) -> int:
    return (abs(q) + abs(w) + abs(q + w)) // 2


def axial_ring(radius: int) -> list[tuple[int, int]]:
    """The 6*radius axial coordinates at graph distance ``radius`` (>= 1)."""
    cells = []
    q, w = radius, 0
    walk = (2, 3, 4, 5, 0, 1)
    for direction in walk:
        dq, dw = AXIAL_DIRECTIONS[direction]
        for _ in range(radius):
            cells.append((q, w))
            q, w = q + dq, w + dw
    return cells


@dataclass
class VertexRecord:
    """One deduplicated honeycomb vertex.

    ``parity`` is the angle-index parity (vertex i of any incident hexagon has
    i even or i odd consistently; the honeycomb vertex graph is bipartite).
    """

    position: LatticePoint
    parity: str
    incident_hexagons: list[int] = field(default_factory=list)


@dataclass
class SolarModel:
    """A ``layers``-ring patch of side-``side`` hexagons with its vertex registry."""

    layers: int
    side: float
    hexagons: tuple[Hexagon, ...]
    axial: tuple[tuple[int, int], ...]
    layer_of: tuple[int, ...]
    vertex_registry: dict[LatticePoint, VertexRecord]

    def hexagon_count(self) -> int:
        return len(self.hexagons)

    def vertex_count(self) -> int:
        return len(self.vertex_registry)

    def vertex_class(self, parity: str) -> list[LatticePoint]:
        """All registry vertices of one parity class, in registry order."""
        if parity not in PARITY_NAMES:
            raise ValueError(f"parity must be one of {PARITY_NAMES}, got {parity!r}")
        return [
            record.position
            for record in self.vertex_registry.values()
            if record.parity == parity
        ]

    def neighbors_present(self, index: int) -> int:
        """How many of the six axial neighbors of hexagon ``index`` are in the patch."""
        q, w = self.axial[index]
        cells = set(self.axial)
        return sum((q + dq, w + dw) in cells for dq, dw in AXIAL_DIRECTIONS)

    def patch_area(self) -> float:
        from .geometry import hexagon_area

        return len(self.hexagons) * hexagon_area(self.side)

    def bounding_box(self) -> tuple[float, float, float, float]:
        xs: list[float] = []
        ys: list[float] = []
        for hexagon in self.hexagons:
            for vertex in hexagon.vertices():
                x, y = vertex.to_xy(self.side)
                xs.append(x)
                ys.append(y)
        return min(xs), min(ys), max(xs), max(ys)


def hexagon_count(layers: int) -> int:
    """Closed-form hexagon count of a ``layers``-ring patch: 1 + 3l(l-1)."""
    return 1 + 3 * layers * (layers - 1)


def vertex_count(layers: int) -> int:
    """Closed-form distinct-vertex count: 6*l^2."""
    return 6 * layers * layers


def build_solar_model(layers: int, side: float = 1.0) -> SolarModel:
    """Build the patch: central hexagon plus rings, vertices deduplicated exactly."""
    if layers < 1:
        raise ValueError(f"layer count must be >= 1, got {layers}")
    if side <= 0:
        raise ValueError(f"side length must be positive, got {side}")

    axial: list[tuple[int, int]] = [(0, 0)]
    layer_of: list[int] = [1]
    for ring in range(1, layers):
        for cell in axial_ring(ring):
            axial.append(cell)
            layer_of.append(ring + 1)

    hexagons = tuple(Hexagon(axial_center(q, w), Fraction(1)) for q, w in axial)

    registry: dict[LatticePoint, VertexRecord] = {}
    for index, hexagon in enumerate(hexagons):
        for angle_index, vertex in enumerate(hexagon.vertices()):
            parity = PARITY_NAMES[angle_index % 2]
            record = registry.get(vertex)
            if record is None:
                registry[vertex] = VertexRecord(vertex, parity, [index])
            else:
                if record.parity != parity:
                    raise AssertionError(
                        "vertex parity disagrees between incident hexagons"
                    )
                record.incident_hexagons.append(index)

    return SolarModel(
        layers=layers,
        side=side,
        hexagons=hexagons,
        axial=tuple(axial),
        layer_of=tuple(layer_of),
        vertex_registry=registry,
    )


def vertex_class_members(model: SolarModel, parity: str) -> list[LatticePoint]:
    return model.vertex_class(parity)


def model_to_dict(model: SolarModel) -> dict:
    """JSON-ready description of the patch (centers, vertices, classes)."""
    centers = [h.center.to_xy(model.side) for h in model.hexagons]
    vertices = [
        {
            "x": record.position.to_xy(model.side)[0],
            "y": record.position.to_xy(model.side)[1],
            "class": record.parity,
            "hexagons": list(record.incident_hexagons),
        }
        for record in model.vertex_registry.values()
    ]
    return {
        "layers": model.layers,
        "side": model.side,
        "hexagon_count": len(model.hexagons),
        "hexagon_centers": [[x, y] for x, y in centers],
        "vertices": vertices,
    }
