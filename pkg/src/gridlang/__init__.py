"""Two-dimensional automata on bordered grids: simulation, projection NFAs,
closure constructions, LBA computation tables and state-complexity tools."""

from .grid import (
    BOUNDARY,
    EMPTY_GRID,
    FormatError,
    Grid,
    GridError,
    border_lookup,
    col_projection,
    format_grid,
    parse_grid,
    row_projection,
    subgrid,
    transpose,
    unary_grid,
)
from .automaton import (
    AcceptTransitionError,
    Automaton2D,
    AutomatonError,
    DeterminismError,
    DirectionError,
    IBRError,
    Transition,
    Variant,
    VariantError,
    as_nondeterministic,
    format_automaton,
    ibr_convert,
    make_automaton,
    parse_automaton,
    state_count,
    transpose_automaton,
    validate,
)
from .simulator import (
    Configuration,
    InputError,
    ResourceLimitError,
    Trace,
    accepting_trace,
    accepts,
    accepts_some_completion,
    default_max_rows,
)
from .nfa import (
    Edge,
    Nfa,
    bounded_equivalent,
    enumerate_language,
    epsilon_removal,
    find_counterexample,
    format_nfa,
    nfa_accepts,
    nfa_from_predicate,
    parse_nfa,
    trim,
)
from .projection import extract_projection_nfa
from .constructions import (
    diag_concat_member,
    diag_concat_projection_nfa,
    union_automaton,
    union_projection_nfa,
    witness_l1l2,
)
from .lba import (
    LbaConfiguration,
    LbaMachine,
    LbaRule,
    build_checker_automaton,
    find_accepting_history,
    format_lba,
    m_even,
    parse_lba,
    table_of,
    validate_table,
)
from .complexity import (
    FoolingFailure,
    FoolingSet,
    colp_member_3w,
    column_bound,
    column_signature,
    compress_columns,
    compress_fully,
    fooling_set_lpr,
    fooling_set_union,
    format_fooling_set,
    lpr_member,
    parse_fooling_set,
    run_length_bound,
    union_lpr_member,
    unary_cycle_member,
    verify_extended_fooling_set,
    witness_an,
    witness_bm,
    witness_unary_cycle,
)

__version__ = "0.1.0"
