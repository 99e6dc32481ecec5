"""Constructive Berge paths and cycles in covering hypergraphs.

A hypergraph is *covering* when every pair of vertices lies in some
hyperedge.  Covering hypergraphs with edges of size at most 3 contain a
Hamiltonian Berge path (n >= 4) and Berge cycles of every length 3..n
(n >= 6); this package finds them with certificates, checks small cases
exhaustively, and explores the related Lagrangian bounds.
"""

from .berge import BergeCycle, BergePath, lift, verify, verify_cycle, verify_path
from .cyclefinder import find_all_cycles, find_cycle_of_length, find_hamiltonian_cycle, find_triangle
from .errors import HypergraphError, InternalInvariantViolation, PreconditionError
from .hypergraph import Hypergraph, is_covering, load, shadow, trace, validate
from .lagrangian import lambda_complete, maximize, minimal_support, polynomial_form, verify_bound
from .oracle import enumerate_covering, exists_cycle, exists_path
from .pathfinder import find_hamiltonian_path
from .rainbow import boundedness, rainbow_to_berge, to_coloring

__version__ = "0.1.0"

__all__ = [
    "BergeCycle",
    "BergePath",
    "Hypergraph",
    "HypergraphError",
    "InternalInvariantViolation",
    "PreconditionError",
    "boundedness",
    "enumerate_covering",
    "exists_cycle",
    "exists_path",
    "find_all_cycles",
    "find_cycle_of_length",
    "find_hamiltonian_cycle",
    "find_hamiltonian_path",
    "find_triangle",
    "is_covering",
    "lambda_complete",
    "lift",
    "load",
    "maximize",
    "minimal_support",
    "polynomial_form",
    "rainbow_to_berge",
    "shadow",
    "to_coloring",
    "trace",
    "validate",
    "verify",
    "verify_bound",
    "verify_cycle",
    "verify_path",
]
