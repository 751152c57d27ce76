"""Cotransversal matroids (strict gammoids) from planted graphs."""
from .equivalence import SwapGraph, SwapSequence, isomorphism_classes, same_matroid, swap_graph, swap_path
from .errors import (
    CotransversalError,
    InvalidInputError,
    InvariantViolation,
    NoTransversalError,
    ParseError,
    PartialResultError,
    SizeLimitError,
    SwapNotApplicable,
)
from .oracle import BasisSet
from .planted import (
    PlantedGraph,
    Routing,
    enumerate_bases,
    find_routing,
    is_basis,
    loops,
    rank,
    swap,
    valid_swaps,
    validate,
)
from .saturation import (
    can_add_edge,
    claw,
    contract_presentation,
    is_saturated,
    maximal_transversal_presentation,
    saturate,
)
from .transversal import (
    TransversalPresentation,
    dragon_condition,
    dualize,
    enumerate_transversals,
    find_sdr,
    sdr_exchange_path,
    sdr_exchange_step,
    undualize,
)

__version__ = "0.1.0"
