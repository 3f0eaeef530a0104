"""Exact and spectral resistance-distance computations on resistor networks.

The package models weighted resistor networks (including a negative-edge
gadget used by one substitution rule), solves for effective resistances
either exactly over rationals or through Laplacian spectra, rewrites
networks by series/parallel/star steps with replayable traces, evaluates
closed forms for structured families, and runs the convergence scans that
track how tower-shaped products approach their limiting growth rate.
"""

from .analysis import (
    DiameterReport,
    FanBounds,
    ScanReport,
    ScanRow,
    conjecture_scan,
    diameter_delta_scan,
    diameter_to_csv,
    diameter_to_json,
    fan_bounds,
    product_resistance,
    resistance_diameter,
    scan_to_csv,
    scan_to_json,
)
from .errors import (
    BudgetExceededError,
    DisconnectedNetworkError,
    MalformedNetworkError,
    ParseError,
    ReductionError,
    SingularSystemError,
)
from .exact import (
    GroundedSystem,
    ResistanceTable,
    resistance_exact,
    resistance_matrix_exact,
)
from .formulas import (
    LADDER,
    DecompositionReport,
    LadderConstants,
    block_tower_decomposition,
    cone_resistance,
    hypercube_diameter,
    join_resistance,
    kmn_resistance,
    ladder_endpoint_resistance,
    ladder_gap,
)
from .network import (
    Edge,
    ResistorNetwork,
    block_tower,
    build_laplacian,
    cartesian_product,
    clique2,
    complete_bipartite,
    cone,
    cycle,
    empty_network,
    fan,
    hypercube,
    join,
    ladder,
    parse_network,
    path,
    render_network,
)
from .reduction import (
    FanChainReduction,
    ReductionStep,
    ReductionTrace,
    apply_step,
    delta_y,
    eliminate_block,
    fan_chain_reduce,
    greedy_reduce,
    parallel_reduce,
    series_reduce,
    substitute_bipartite_star,
    terminal_table,
    trace_to_json,
    trace_to_text,
)
from .spectra import (
    Spectrum,
    cycle_spectrum,
    generic_spectrum,
    hypercube_spectrum,
    network_spectrum,
    path_spectrum,
    product_spectrum,
    resistance_spectral,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Edge",
    "ResistorNetwork",
    "parse_network",
    "render_network",
    "build_laplacian",
    "path",
    "cycle",
    "clique2",
    "empty_network",
    "complete_bipartite",
    "cartesian_product",
    "cone",
    "join",
    "hypercube",
    "ladder",
    "block_tower",
    "fan",
    "GroundedSystem",
    "ResistanceTable",
    "resistance_exact",
    "resistance_matrix_exact",
    "Spectrum",
    "path_spectrum",
    "cycle_spectrum",
    "product_spectrum",
    "hypercube_spectrum",
    "generic_spectrum",
    "network_spectrum",
    "resistance_spectral",
    "ReductionStep",
    "ReductionTrace",
    "FanChainReduction",
    "apply_step",
    "series_reduce",
    "parallel_reduce",
    "delta_y",
    "eliminate_block",
    "substitute_bipartite_star",
    "greedy_reduce",
    "fan_chain_reduce",
    "terminal_table",
    "trace_to_json",
    "trace_to_text",
    "LadderConstants",
    "LADDER",
    "kmn_resistance",
    "join_resistance",
    "cone_resistance",
    "ladder_endpoint_resistance",
    "ladder_gap",
    "hypercube_diameter",
    "block_tower_decomposition",
    "DecompositionReport",
    "product_resistance",
    "DiameterReport",
    "resistance_diameter",
    "ScanRow",
    "ScanReport",
    "conjecture_scan",
    "diameter_delta_scan",
    "FanBounds",
    "fan_bounds",
    "scan_to_csv",
    "scan_to_json",
    "diameter_to_csv",
    "diameter_to_json",
    "MalformedNetworkError",
    "ParseError",
    "DisconnectedNetworkError",
    "SingularSystemError",
    "ReductionError",
    "BudgetExceededError",
]
