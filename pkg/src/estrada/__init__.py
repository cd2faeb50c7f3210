"""Estrada index, graph energy and the signless Laplacian analogues, with
numerical checks of their lower and upper bounds."""

from .bounds import BoundOutcome, BoundReport, evaluate_all, evaluate_matrix
from .eigen import Spectrum, jacobi_eigen
from .graph import FamilySpec, Graph, from_edge_list, generate
from .graph6 import encode_graph6, parse_graph6
from .invariants import InvariantSet, compute_invariants

__version__ = "0.1.0"
