"""Chain theorems for 3-connected, 4-connected, weakly and quasi 4-connected graphs."""

from .graph import Graph, GraphError, make_graph
from .graph6 import decode, encode
from .canon import canonical_form, is_isomorphic
from .chains import Chain, ChainStep, TheoremId, find_chain, verify_chain

__version__ = "0.1.0"
