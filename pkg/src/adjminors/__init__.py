"""Ideals of adjacent 2-minors: classification, witness graphs, exact certification."""

from .binomials import (
    Binomial,
    BudgetExceeded,
    DEFAULT_BUDGET,
    GroebnerBasis,
    TermOrder,
    VariableSpace,
    buchberger,
    contains,
    ideal_equals,
    is_groebner,
    normal_form,
    span_membership,
)
from .census import CensusRecord, census_records, gamma_cycle_sets, iter_minor_sets, iter_tree_sets
from .gamma import (
    Classification,
    CompanionGraph,
    ComponentSummary,
    build_gamma,
    classify,
    component_summaries,
    components,
    free_minors,
    gamma_dot,
    has_4cycle,
)
from .graphs import SimpleGraph, graph_dot, has_chord, incidence_matrix, simple_cycles
from .grid import (
    AdjacentMinor,
    GridDims,
    GridVariable,
    InputError,
    MinorSet,
    binomial_of,
    is_chessboard,
    minor_generators,
    minor_set_from_json,
    minor_set_to_json,
    used_variables,
    variable_space,
    variables_of,
)
from .realizer import (
    NotRealizable,
    Realization,
    disjoint_union,
    realization_dot,
    realization_from_json,
    realization_json,
    realize,
    realize_tree_component,
    realize_unicyclic_component,
)
from .toric import (
    Certificate,
    ChordReport,
    EdgeRingPresentation,
    certify_realization,
    chord_diagnostics,
    codimension,
    cycle_binomial,
    edge_space,
    even_closed_walk_binomials,
    integer_rank,
    presentation,
    quadratic_generation_check,
    toric_ideal,
    verify_realization,
)

__version__ = "0.1.0"
