from .coloring import EdgeColoring, edge_colorable
from .hamilton import HamiltonResult, hamiltonian
from .mis import IndependenceResult, has_independent_set, independence_number, max_independent_set
from .matching import max_matching

__all__ = [
    "EdgeColoring",
    "HamiltonResult",
    "IndependenceResult",
    "edge_colorable",
    "hamiltonian",
    "has_independent_set",
    "independence_number",
    "max_independent_set",
    "max_matching",
]
