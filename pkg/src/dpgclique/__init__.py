"""Exact and scripted analysis of the degree-preserving Builder-Chooser clique game."""

from .errors import (
    BudgetExceeded,
    CriterionNotEvaluated,
    InvalidInput,
    InvariantViolation,
    NotApplicable,
    ParseError,
)
from .graph import Graph, complete_graph, parse_edgelist, to_dot, to_edgelist
from .game import BuilderMove, GameState, dpg_step, play_round
from .criteria import bounds_report, kappa, lower_bound, one_round_forcing, sigma
from .solver import Solver, SurvivesCap, WinsIn, solve

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CriterionNotEvaluated", "InvalidInput", "InvariantViolation", "NotApplicable",
    "ParseError", "Graph", "complete_graph", "parse_edgelist", "to_dot", "to_edgelist", "BuilderMove",
    "GameState", "dpg_step", "play_round", "bounds_report", "kappa", "lower_bound", "one_round_forcing",
    "sigma", "Solver", "SurvivesCap", "WinsIn", "solve",
]
