__version__ = "0.1.0"

FORMAT_MAGIC = "MRN1"

# Color classes G^1 (no K_m allowed) and G^2 (no nK_2 allowed).
COLOR_ONE = 1
COLOR_TWO = 2

DEFAULT_NODE_BUDGET = 5_000_000
DEFAULT_TIME_BUDGET = 60.0
DEFAULT_T_MAX = 4

# decide_colorable_naive refuses hosts with more cross-part edges than this.
NAIVE_EDGE_LIMIT = 24

EXIT_OK = 0
EXIT_BAD = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
