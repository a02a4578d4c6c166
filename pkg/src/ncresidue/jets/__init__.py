"""Symbols as expression trees, their jet tables, and boundary evaluation."""

from .boundary import BoundaryValue
from .evaluate import Evaluator, evaluate_at_boundary
from .expr import jet_derivative
from .tables import JetTables, MissingJetEntry, TableConfig

__all__ = [
    "BoundaryValue",
    "Evaluator",
    "JetTables",
    "MissingJetEntry",
    "TableConfig",
    "evaluate_at_boundary",
    "jet_derivative",
]
