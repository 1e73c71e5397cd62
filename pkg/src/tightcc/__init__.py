"""Tight components of 4-graphs, their colouring reformulation, and the
finite objects around the codegree threshold for spanning tight components."""

from tightcc.errors import (
    DegenerateInstance,
    InputError,
    PreconditionViolated,
    TightccError,
    UncoveredTriple,
    UnsupportedSearch,
)
from tightcc.hypercore import (
    Hypergraph,
    TightPartition,
    has_spanning_component,
    min_codegree,
    tight_components,
)
from tightcc.colouring import EdgeColouring

__version__ = "0.1.0"

__all__ = [
    "DegenerateInstance",
    "EdgeColouring",
    "Hypergraph",
    "InputError",
    "PreconditionViolated",
    "TightPartition",
    "TightccError",
    "UncoveredTriple",
    "UnsupportedSearch",
    "has_spanning_component",
    "min_codegree",
    "tight_components",
]
