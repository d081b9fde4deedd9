"""Variable elimination for Boolean networks under asynchronous dynamics."""

__version__ = "0.1.0"

from .errors import BNError, CapExceeded, EliminationForbidden, NetworkError, ParseError
from .netcore import (
    BooleanNetwork,
    State,
    UpdateFunction,
    evaluate,
    format_expr,
    parse_expr,
    parse_network,
    render_network,
)
from .dynamics import (
    Attractor,
    AttractorCensus,
    TransitionGraph,
    async_successors,
    attractors,
    build_stg,
    census,
    fixed_points,
    is_trap_set,
    reachable,
)
from .igraph import (
    SignedCycle,
    SignedDigraph,
    elementary_cycles,
    global_interaction_graph,
    has_signed_path,
    is_pfvs,
    local_interaction_graph,
    minimum_pfvs,
)
from .reduction import (
    AttractorBound,
    ReductionResult,
    attractor_bound,
    can_eliminate,
    eliminate,
    eliminate_sequence,
    representative,
    section,
)
from .verify import (
    CheckReport,
    ShapePartition,
    attractors_preserved,
    chain_counterexample,
    check_all,
    check_blocked_paths,
    find_shape_partition,
    matches_shape,
    random_network,
)

__all__ = [name for name in dir() if not name.startswith("_")]
