"""Binary codes from annihilation games and lexicodes."""

from ._core import (
    GAMMA_PRIME_BASIS,
    GAMMA_PRIME_WIDTH,
    AnncodeError,
    GroundGraph,
    ParseError,
    PreconditionError,
    ScaleCapError,
    Solution,
    analyze,
    anncode_of,
    disjoint_sum,
    example2_graph,
    gamma_t,
    greedy,
    hamming,
    is_acyclic,
    lexi_anncode,
    lexicode,
    lexigraph_g,
    nim_heap,
    ordering,
    parse_graph,
    reference_checks,
    serialize_graph,
    solve,
    span,
    star_into_leaf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
