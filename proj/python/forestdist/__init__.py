"""Logarithmic forest distances and their limiting graph metrics."""

from forestdist._core import (
    ConvergenceReport,
    ConvergenceRow,
    Edge,
    FamilyConfig,
    ForestCheckReport,
    ForestTally,
    GammaRule,
    GeodeticMismatch,
    GeodeticReport,
    HVariant,
    NumericalError,
    ParseError,
    WeightTransform,
    WeightedMultigraph,
    connected_components,
    convergence_report,
    elementwise_log,
    enumerate_rooted_forests,
    format_sig9,
    geodetic_tolerance,
    invert_spd,
    kernel_matrix,
    laplacian,
    laplacian_pseudoinverse,
    log_forest_distance_matrix,
    matrix_forest_check,
    matrix_to_csv,
    ordinary_forest_distance_matrix,
    parse_edge_list,
    remove_vertex,
    resistance_matrix,
    resistance_via_forests,
    separates,
    shortest_path_family,
    shortest_path_matrix,
    total_weight_matrix,
    transform_admissible,
    transform_weights,
    unified_family,
    verify_geodetic,
    weighted_shortest_path_matrix,
    wsp_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
