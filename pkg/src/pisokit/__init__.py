"""Exact symbolic workbench for inverse categories of partial isomorphisms."""
from .prefix import PrefixArrow, compose, dagger, join, tensor
from .selfsim import SelfSimilarStructure, standard, swap
from .trees import S

__all__ = ["PrefixArrow", "SelfSimilarStructure", "S", "compose", "dagger", "join", "standard", "swap", "tensor"]
__version__ = "0.1.0"
