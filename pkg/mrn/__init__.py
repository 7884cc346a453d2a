from mrn.cli import main as main
from mrn.core.constants import __version__ as __version__
from mrn.domain.formulas import RamseyQuery, RamseyValue, classify_regime, mrn_value
from mrn.domain.search import compute_value_by_search, decide_colorable
from mrn.domain.witness import build_extremal, verify_good

__all__ = [
    "RamseyQuery",
    "RamseyValue",
    "__version__",
    "build_extremal",
    "classify_regime",
    "compute_value_by_search",
    "decide_colorable",
    "main",
    "mrn_value",
    "verify_good",
]
