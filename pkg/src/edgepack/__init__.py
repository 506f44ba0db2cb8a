"""Maximum edge open packing for proper interval, block and split graphs."""

from .block import solve_block
from .dispatch import NotInClass, solve
from .errors import BudgetExceeded, EOPError, InputError, InternalError
from .graph import (
    EOPSolution,
    Graph,
    build_graph,
    connected_components,
    eop_upper_bound,
    induced_subgraph,
    is_eop_set,
)
from .oracle import SearchBudget, brute_force_eop
from .pig import solve_pig
from .recognition import (
    build_cut_tree,
    classify,
    compute_bco,
    compute_peo,
    split_partition,
    validate_bco,
)
from .split import solve_split

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "EOPError",
    "EOPSolution",
    "Graph",
    "InputError",
    "InternalError",
    "NotInClass",
    "SearchBudget",
    "brute_force_eop",
    "build_cut_tree",
    "build_graph",
    "classify",
    "compute_bco",
    "compute_peo",
    "connected_components",
    "eop_upper_bound",
    "induced_subgraph",
    "is_eop_set",
    "solve",
    "solve_block",
    "solve_pig",
    "solve_split",
    "split_partition",
    "validate_bco",
]
