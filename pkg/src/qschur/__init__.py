"""qschur: exact computations for quantum supergroups gl(m|n) and osp(m|2n).

Explicit R-matrices and braidings over Q(q), ribbon-graph evaluation to
matrices, framed link invariants from braid closures, and desk-scale
verification that diagram-algebra images span the full centralizer of the
(quantum) supergroup action on tensor powers.
"""

from .scalar import ONE, Q, ZERO, PoleError, RatFunc, parse, qint, qpow
from .rootdata import RootDatum, admissible_orderings, distinguished, sdim_q
from .superspace import SparseMat, SuperSpace, graded_kron, tau
from .qgl import braiding, duality_maps, k2rho, natural_rep, rmatrix_vv, twist_scalar
from .diagrams import BraidWord, BrauerDiagram, RibbonWord, parse_braid
from .functor import evaluate, invariant, make_context
from .centralizer import fft_report, relation_check

__version__ = "0.1.0"

__all__ = [
    "RatFunc", "PoleError", "qint", "qpow", "parse", "ZERO", "ONE", "Q",
    "RootDatum", "distinguished", "admissible_orderings", "sdim_q",
    "SuperSpace", "SparseMat", "graded_kron", "tau",
    "natural_rep", "rmatrix_vv", "braiding", "k2rho", "duality_maps",
    "twist_scalar",
    "BraidWord", "BrauerDiagram", "RibbonWord", "parse_braid",
    "make_context", "evaluate", "invariant",
    "fft_report", "relation_check",
    "__version__",
]
