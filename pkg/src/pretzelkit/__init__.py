"""Alexander polynomials, fiberedness and L-space obstructions for pretzel knots."""

from .core import (
    NotAKnotError,
    PretzelCode,
    PretzelSyntaxError,
    TorusKnot,
    Unknot,
    ZeroTangleError,
    component_count,
    mirror,
    normalize,
    orient,
    parse_pretzel,
)
from .fibered import PretzelType, auxiliary_link, is_fibered, pretzel_type
from .graphs import build_graphs, spanning_tree_count
from .invariants import determinant_formula, det_obstruction, seifert_genus
from .laurent import LaurentPolynomial
from .lspace import classify_lspace, coefficient_obstruction, match_family, verify_theorem1
from .oracle import alexander_oracle
from .statesum import alexander, minimal_states, trades_of

__version__ = "0.1.0"
