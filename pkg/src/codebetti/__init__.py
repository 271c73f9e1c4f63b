"""Neural codes, canonical forms, piercing structure, and multigraded Betti numbers."""

from .betti import (
    BettiTable,
    betti_recursive,
    binom,
    graded_betti_closed,
    invert_graded,
    invert_multigraded,
    multigraded_betti_closed,
    pdim_from_profile,
)
from .codes import (
    CodeDiagnostics,
    CodeFormatWarning,
    CodeParseError,
    MAX_NEURONS,
    NeuralCode,
    delete_neuron,
    enumerate_interval,
    indices_of,
    mask_of,
    parse_code,
    serialize_code,
    validate_code,
)
from .graphs import (
    EliminationOrdering,
    Graph,
    all_elimination_orderings,
    chordality,
    chordless_cycle_witness,
    parse_graph,
    relationship_graph,
    render_dot,
    render_graph,
    simplicial_degree_profile,
)
from .oracle import (
    CharacterizationVerdict,
    GuardExceeded,
    HomologyResult,
    HypothesisViolation,
    betti_table_oracle,
    pdim,
    regularity,
    regularity_characterization,
    restricted_homology,
    variable_mask,
)
from .piercing import (
    DiagnosticsError,
    FastVerdict,
    PiercingOrder,
    PiercingProfile,
    build_code,
    detect_piercing,
    enumerate_pierced_codes,
    is_inductively_pierced,
    is_inductively_pierced_fast,
    iter_piercing_orders,
    piercing_profile,
    random_pierced_code,
    steps_for_order,
)
from .polarization import (
    IdealParseError,
    PiercingStep,
    SquarefreeIdeal,
    SquarefreeMonomial,
    depolarize,
    extend_ideal,
    ideal_from_steps,
    parse_ideal,
    piercing_ideal,
    piercing_variables,
    polarize,
    polarized_ideal,
    render_ideal,
)
from .pseudomonomials import PseudoMonomial, canonical_form

__all__ = [
    "BettiTable",
    "CharacterizationVerdict",
    "CodeDiagnostics",
    "CodeFormatWarning",
    "CodeParseError",
    "DiagnosticsError",
    "EliminationOrdering",
    "FastVerdict",
    "Graph",
    "GuardExceeded",
    "HomologyResult",
    "HypothesisViolation",
    "IdealParseError",
    "MAX_NEURONS",
    "NeuralCode",
    "PiercingOrder",
    "PiercingProfile",
    "PiercingStep",
    "PseudoMonomial",
    "SquarefreeIdeal",
    "SquarefreeMonomial",
    "all_elimination_orderings",
    "betti_recursive",
    "betti_table_oracle",
    "binom",
    "build_code",
    "canonical_form",
    "chordality",
    "chordless_cycle_witness",
    "delete_neuron",
    "depolarize",
    "detect_piercing",
    "enumerate_interval",
    "enumerate_pierced_codes",
    "extend_ideal",
    "graded_betti_closed",
    "ideal_from_steps",
    "indices_of",
    "invert_graded",
    "invert_multigraded",
    "is_inductively_pierced",
    "is_inductively_pierced_fast",
    "iter_piercing_orders",
    "mask_of",
    "multigraded_betti_closed",
    "parse_code",
    "parse_graph",
    "parse_ideal",
    "pdim",
    "pdim_from_profile",
    "piercing_ideal",
    "piercing_profile",
    "piercing_variables",
    "polarize",
    "polarized_ideal",
    "random_pierced_code",
    "regularity",
    "regularity_characterization",
    "relationship_graph",
    "render_dot",
    "render_graph",
    "render_ideal",
    "restricted_homology",
    "serialize_code",
    "simplicial_degree_profile",
    "steps_for_order",
    "validate_code",
]
