"""Exact multi-item vendor selection with fixed vendor handling costs.

Pick a vendor subset and a per-item assignment minimizing item prices plus
one fixed handling cost per selected vendor. The solution space has
2^n - 1 subsets, each completed greedily (cheapest selected bidder per
item), and the solver enumerates it exhaustively, so results are exact.
"""

from .assign import ItemPriceIndex, build_price_index, build_solution
from .codec import decode_subset, encode_subset
from .errors import MivsError
from .io import generate_instance, parse_bid_csv, write_bid_csv
from .model import (
    Constraints,
    CoverageMode,
    Instance,
    Money,
    Solution,
    VendorSubset,
    cost_accounting,
    validate_instance,
)
from .money import format_money, parse_money
from .policies import policy_cheapest_per_item, policy_single_vendor
from .solver import (
    SolveReport,
    SolverOptions,
    lower_bound,
    solve_exhaustive,
    tabulate_cardinality_minima,
)
from .whatif import CostCurve, SolutionDelta, compare_solutions, cost_curve

__version__ = "1.0.0"

__all__ = [
    "Constraints",
    "CostCurve",
    "CoverageMode",
    "Instance",
    "ItemPriceIndex",
    "MivsError",
    "Money",
    "SolutionDelta",
    "Solution",
    "SolveReport",
    "SolverOptions",
    "VendorSubset",
    "build_price_index",
    "build_solution",
    "compare_solutions",
    "cost_accounting",
    "cost_curve",
    "decode_subset",
    "encode_subset",
    "format_money",
    "generate_instance",
    "lower_bound",
    "parse_bid_csv",
    "parse_money",
    "policy_cheapest_per_item",
    "policy_single_vendor",
    "solve_exhaustive",
    "tabulate_cardinality_minima",
    "validate_instance",
    "write_bid_csv",
]
