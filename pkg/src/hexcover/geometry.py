"""Exact plane geometry for regular hexagons and equilateral triangles.

Every point the planner produces lives in the field Q(sqrt(3)): per axis it
has the form (p + q*sqrt(3)) * scale/2 with rational p, q.  Storing the
rational pairs directly means shared vertices compare equal with no epsilon,
so deduplication and the counting identities can be tested as exact
equalities.  Floats appear only when distances or exported coordinates are
needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

SQRT3 = math.sqrt(3.0)

Rational = Fraction | int


def _fr(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def root3_sign(p: Fraction, q: Fraction) -> int:
    """Sign of p + q*sqrt(3), computed without floating point.

    Relies on sqrt(3) being irrational: p + q*sqrt(3) is zero only when both
    coefficients are zero.
    """
    if q == 0:
        return _sign(p)
    if p == 0:
        return _sign(q)
    sp, sq = _sign(p), _sign(q)
    if sp == sq:
        return sp
    # Opposite signs: the term with larger squared magnitude wins.
    return sp if p * p > 3 * q * q else sq


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Point ((x_rat + x_root3*sqrt3)*scale/2, (y_rat + y_root3*sqrt3)*scale/2).

    The four rationals identify the point uniquely, so equality and hashing
    need no tolerance.  Ordering is lexicographic over the coefficients and
    is used only to make exports byte-stable.
    """

    x_rat: Fraction
    x_root3: Fraction
    y_rat: Fraction
    y_root3: Fraction

    def __post_init__(self) -> None:
        for name in ("x_rat", "x_root3", "y_rat", "y_root3"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(
            self.x_rat + other.x_rat,
            self.x_root3 + other.x_root3,
            self.y_rat + other.y_rat,
            self.y_root3 + other.y_root3,
        )

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(
            self.x_rat - other.x_rat,
            self.x_root3 - other.x_root3,
            self.y_rat - other.y_rat,
            self.y_root3 - other.y_root3,
        )

    def __mul__(self, factor: Rational) -> "LatticePoint":
        f = _fr(factor)
        return LatticePoint(
            self.x_rat * f, self.x_root3 * f, self.y_rat * f, self.y_root3 * f
        )

    __rmul__ = __mul__

    def to_xy(self, scale: float = 1.0) -> tuple[float, float]:
        """Float coordinates for a given scale (deterministic for fixed scale)."""
        half = 0.5 * scale
        return (
            (float(self.x_rat) + float(self.x_root3) * SQRT3) * half,
            (float(self.y_rat) + float(self.y_root3) * SQRT3) * half,
        )

    def sort_key(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x_rat, self.x_root3, self.y_rat, self.y_root3)


ORIGIN = LatticePoint(Fraction(0), Fraction(0), Fraction(0), Fraction(0))


def lattice_point(
    x_rat: Rational = 0,
    x_root3: Rational = 0,
    y_rat: Rational = 0,
    y_root3: Rational = 0,
) -> LatticePoint:
    return LatticePoint(_fr(x_rat), _fr(x_root3), _fr(y_rat), _fr(y_root3))


def sq_dist_units(a: LatticePoint, b: LatticePoint) -> tuple[Fraction, Fraction]:
    """Exact squared distance as (p, q) meaning p + q*sqrt(3), in (scale/2)^2 units."""
    dxr = a.x_rat - b.x_rat
    dx3 = a.x_root3 - b.x_root3
    dyr = a.y_rat - b.y_rat
    dy3 = a.y_root3 - b.y_root3
    p = dxr * dxr + 3 * dx3 * dx3 + dyr * dyr + 3 * dy3 * dy3
    q = 2 * (dxr * dx3 + dyr * dy3)
    return p, q


def distance(a: LatticePoint, b: LatticePoint, scale: float = 1.0) -> float:
    p, q = sq_dist_units(a, b)
    return math.sqrt(float(p) + float(q) * SQRT3) * 0.5 * scale


def midpoint(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return (a + b) * Fraction(1, 2)


def centroid(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> LatticePoint:
    return (a + b + c) * Fraction(1, 3)


# Vertex i sits at angle 60*i degrees from the center.  Offsets are exact in
# (scale/2) units for a unit side; scaling by the side keeps them rational.
_VERTEX_UNITS = (
    (2, 0),   # 0 degrees
    (1, 1),   # 60
    (-1, 1),  # 120
    (-2, 0),  # 180
    (-1, -1),  # 240
    (1, -1),  # 300
)


@dataclass(frozen=True)
class Hexagon:
    """Regular hexagon with a fixed orientation: vertex i at angle 60*i degrees.

    ``side`` is a rational multiple of the reference radius; the physical side
    length is side * scale meters.  Edge-adjacent neighbors of equal side s sit
    at distance sqrt(3)*s*scale, at angles 30 + 60*i degrees.
    """

    center: LatticePoint
    side: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not isinstance(self.side, Fraction):
            object.__setattr__(self, "side", Fraction(self.side))
        if self.side <= 0:
            raise ValueError(f"hexagon side must be positive, got {self.side}")

    def vertices(self) -> tuple[LatticePoint, ...]:
        """The six vertices in counterclockwise order starting at angle 0."""
        s = self.side
        return tuple(
            self.center + lattice_point(x_rat=s * ux, y_root3=s * uy)
            for ux, uy in _VERTEX_UNITS
        )

    def triangles(self) -> tuple["EquilateralTriangle", ...]:
        """Six center-vertex-vertex triangles that partition the hexagon."""
        verts = self.vertices()
        return tuple(
            EquilateralTriangle((self.center, verts[i], verts[(i + 1) % 6]))
            for i in range(6)
        )

    def contains(self, point: LatticePoint) -> bool:
        """Exact closed-hexagon membership (boundary counts as inside)."""
        return self._within(point - self.center, strict=False)

    def strictly_contains(self, point: LatticePoint) -> bool:
        return self._within(point - self.center, strict=True)

    def _within(self, delta: LatticePoint, strict: bool) -> bool:
        # Projections onto the three edge-normal axes (30, 90, 150 degrees),
        # each expressed as p + q*sqrt(3); the apothem is side*sqrt(3) units.
        a, b = delta.x_rat, delta.x_root3
        c, d = delta.y_rat, delta.y_root3
        projections = (
            (c, d),
            ((3 * b + c) / 2, (a + d) / 2),
            ((-3 * b + c) / 2, (d - a) / 2),
        )
        s = self.side
        limit = 0 if strict else -1
        for p, q in projections:
            if root3_sign(-p, s - q) <= limit:
                return False
            if root3_sign(p, s + q) <= limit:
                return False
        return True

    def contains_xy(self, x: float, y: float, scale: float = 1.0, tol: float = 1e-12) -> bool:
        """Float membership test; ``tol`` is relative to the scale."""
        cx, cy = self.center.to_xy(scale)
        dx, dy = x - cx, y - cy
        apothem = float(self.side) * SQRT3 * 0.5 * scale
        bound = apothem + tol * scale
        return (
            abs(dy) <= bound
            and abs(SQRT3 * dx + dy) * 0.5 <= bound
            and abs(SQRT3 * dx - dy) * 0.5 <= bound
        )


@dataclass(frozen=True)
class EquilateralTriangle:
    """Triangle whose three side lengths agree exactly in lattice coordinates."""

    vertices: tuple[LatticePoint, LatticePoint, LatticePoint]

    def __post_init__(self) -> None:
        a, b, c = self.vertices
        sides = {sq_dist_units(a, b), sq_dist_units(b, c), sq_dist_units(c, a)}
        if len(sides) != 1:
            raise ValueError("vertices do not form an equilateral triangle")

    def side_sq_units(self) -> tuple[Fraction, Fraction]:
        a, b, _ = self.vertices
        return sq_dist_units(a, b)

    def side_length(self, scale: float = 1.0) -> float:
        p, q = self.side_sq_units()
        return math.sqrt(float(p) + float(q) * SQRT3) * 0.5 * scale

    def area(self, scale: float = 1.0) -> float:
        side = self.side_length(scale)
        return SQRT3 / 4.0 * side * side

    def vertices_xy(self, scale: float = 1.0) -> tuple[tuple[float, float], ...]:
        return tuple(v.to_xy(scale) for v in self.vertices)

    def contains_xy(self, x: float, y: float, scale: float = 1.0, tol: float = 1e-12) -> bool:
        """Closed membership via barycentric coordinates."""
        bary = self.barycentric_xy(x, y, scale)
        return all(component >= -tol for component in bary)

    def barycentric_xy(self, x: float, y: float, scale: float = 1.0) -> tuple[float, float, float]:
        (ax, ay), (bx, by), (cx, cy) = self.vertices_xy(scale)
        det = (by - cy) * (ax - cx) + (cx - bx) * (ay - cy)
        u = ((by - cy) * (x - cx) + (cx - bx) * (y - cy)) / det
        v = ((cy - ay) * (x - cx) + (ax - cx) * (y - cy)) / det
        return u, v, 1.0 - u - v


def hexagon_area(side: float) -> float:
    """Area of a regular hexagon: six equilateral triangles of the same side."""
    return 1.5 * SQRT3 * side * side


def vertex_covers_triangle(
    triangle: EquilateralTriangle,
    sensing_radius: float,
    scale: float = 1.0,
    anchor: int = 0,
) -> bool:
    """True if a disk of ``sensing_radius`` at the anchor vertex holds the triangle.

    A disk is convex, so it contains the triangle iff it contains all three
    vertices; from a vertex the farthest points are the other two vertices.
    The comparison is done on squared lengths with zero tolerance.
    """
    here = triangle.vertices[anchor]
    radius_units_sq = (2.0 * sensing_radius / scale) ** 2
    for j, other in enumerate(triangle.vertices):
        if j == anchor:
            continue
        p, q = sq_dist_units(here, other)
        if float(p) + float(q) * SQRT3 > radius_units_sq:
            return False
    return True


def packing_diameter(config: list[Hexagon] | tuple[Hexagon, ...], scale: float = 1.0) -> float:
    """Largest pairwise distance over all vertices of the configuration.

    For a union of convex pieces the diameter is attained at vertices, so this
    equals the diameter of the union.
    """
    if not config:
        raise ValueError("packing_diameter of an empty configuration")
    points = [v.to_xy(scale) for h in config for v in h.vertices()]
    best = 0.0
    for (ax, ay), (bx, by) in combinations(points, 2):
        best = max(best, math.hypot(ax - bx, ay - by))
    return best


def hexagons_overlap(a: Hexagon, b: Hexagon) -> bool:
    """Exact test for shared interior points between two same-orientation hexagons.

    Interiors intersect iff the center difference lies strictly inside the
    Minkowski sum, which for equal-orientation regular hexagons is the hexagon
    of side a.side + b.side.
    """
    probe = Hexagon(ORIGIN, a.side + b.side)
    return probe.strictly_contains(b.center - a.center)


def packed_hexagon_pair(
    small_side: Rational = Fraction(1, 2), center: LatticePoint = ORIGIN
) -> tuple[Hexagon, Hexagon]:
    """Two edge-adjacent hexagons split symmetrically about ``center``.

    Centers sit at distance sqrt(3)*side apart along the 90-degree axis; the
    union's farthest vertex pair realizes sqrt(13)*side.
    """
    s = _fr(small_side)
    offset = lattice_point(y_root3=s)
    return (
        Hexagon(center + offset, s),
        Hexagon(center - offset, s),
    )


def packed_hexagon_triple(
    small_side: Rational = Fraction(1, 2), center: LatticePoint = ORIGIN
) -> tuple[Hexagon, Hexagon, Hexagon]:
    """Three mutually edge-adjacent hexagons sharing the vertex at ``center``.

    Each center lies one circumradius from the shared vertex, at 60, 180 and
    300 degrees, which is exactly how three honeycomb cells meet.
    """
    s = _fr(small_side)
    offsets = (
        lattice_point(x_rat=s, y_root3=s),
        lattice_point(x_rat=-2 * s),
        lattice_point(x_rat=s, y_root3=-s),
    )
    return tuple(Hexagon(center + off, s) for off in offsets)


def packed_hexagon_rhombus(
    small_side: Rational = Fraction(1, 2), center: LatticePoint = ORIGIN
) -> tuple[Hexagon, Hexagon, Hexagon, Hexagon]:
    """Four mutually non-overlapping hexagons in a rhombic cluster.

    The two extreme vertices are collinear with the first and last centers and
    sit 5*side apart, which is what rules the cluster out of any hexagon whose
    largest diagonal is below that.
    """
    s = _fr(small_side)
    offsets = (
        lattice_point(),
        lattice_point(x_rat=3 * s, y_root3=s),
        lattice_point(x_rat=3 * s, y_root3=-s),
        lattice_point(x_rat=6 * s),
    )
    return tuple(Hexagon(center + off, s) for off in offsets)


@dataclass(frozen=True)
class PackingWitness:
    """Certified packing: how many half-side hexagons fit, and a configuration."""

    count: int
    hexagons: tuple[Hexagon, ...]
    diameter: float


def count_packed_small_hexagons(big: Hexagon) -> PackingWitness:
    """Maximum number of non-overlapping half-side hexagons inside ``big``.

    Returns 3 with an explicit witness; containment is checked vertex by
    vertex with the exact closed-hexagon test, mutual non-overlap with the
    exact interior test, and the witness diameter is certified to stay below
    the largest diagonal of ``big``.
    """
    witness = packed_hexagon_triple(big.side / 2, big.center)
    for small in witness:
        for vertex in small.vertices():
            if not big.contains(vertex):
                raise AssertionError("witness hexagon escapes the container")
    for first, second in combinations(witness, 2):
        if hexagons_overlap(first, second):
            raise AssertionError("witness hexagons overlap")
    diameter = packing_diameter(witness)
    if diameter >= 2.0 * float(big.side):
        raise AssertionError("witness diameter reaches the container diagonal")
    return PackingWitness(count=3, hexagons=witness, diameter=diameter)
