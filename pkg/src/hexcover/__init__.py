"""hexcover: plan and verify k-coverage sensor deployments on hexagonal tilings."""

__version__ = "0.1.0"

from .geometry import (
    EquilateralTriangle,
    Hexagon,
    LatticePoint,
    PackingWitness,
    count_packed_small_hexagons,
    lattice_point,
    packing_diameter,
    vertex_covers_triangle,
)
from .tiling import SolarModel, VertexRecord, build_solar_model, hexagon_count
from .deployment import (
    Deployment,
    SensorRecord,
    minimum_sensors_lower_bound,
    per_hexagon_count,
    place_proposed,
    total_count,
)
from .benchmark import (
    BenchmarkDeployment,
    benchmark_count,
    count_gap,
    place_benchmark,
)
from .verifier import CoverageReport, residual_coverage, verify_coverage
from .analytics import (
    density_benchmark,
    density_gain,
    density_proposed,
    density_ratio_limit,
    emit_figure_table,
)

__all__ = [
    "__version__",
    "BenchmarkDeployment",
    "CoverageReport",
    "Deployment",
    "EquilateralTriangle",
    "Hexagon",
    "LatticePoint",
    "PackingWitness",
    "SensorRecord",
    "SolarModel",
    "VertexRecord",
    "benchmark_count",
    "build_solar_model",
    "count_gap",
    "count_packed_small_hexagons",
    "density_benchmark",
    "density_gain",
    "density_proposed",
    "density_ratio_limit",
    "emit_figure_table",
    "hexagon_count",
    "lattice_point",
    "minimum_sensors_lower_bound",
    "packing_diameter",
    "per_hexagon_count",
    "place_benchmark",
    "place_proposed",
    "residual_coverage",
    "total_count",
    "vertex_covers_triangle",
    "verify_coverage",
]
