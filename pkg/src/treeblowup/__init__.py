"""Edge blow-ups of trees: Turan-number formulas, extremal constructions,
and the exact search machinery used to check them."""

from .graph import Graph
from .graph6 import decode as from_graph6, encode as to_graph6

__all__ = ["Graph", "from_graph6", "to_graph6"]
__version__ = "0.1.0"
