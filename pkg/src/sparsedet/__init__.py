"""Exact determinants, closed-form bounds and exhaustive search for sparse zero-one matrices."""

from .bounds import (
    BoundParams,
    BoundReport,
    alpha,
    beta,
    c_pair,
    c_q,
    greedy_closed_bound,
    hadamard_bound,
    optimal_q,
    pair_bound,
    q_row_bound,
    ryser_bound,
    ryser_gen_bound,
)
from .constructions import biplane_11, fano, paper_matrix, projective_plane, s_matrix
from .linalg import IntMatrix, ZeroOneMatrix, det_exact, gram, vol_squared
from .logmag import LogMagnitude
from .schedule import RemovalSchedule, make_schedule, schedule_bound
from .search import MatrixClass, SearchResult, search_max_det

__all__ = [
    "BoundParams", "BoundReport", "IntMatrix", "LogMagnitude", "MatrixClass",
    "RemovalSchedule", "SearchResult", "ZeroOneMatrix", "alpha", "beta",
    "biplane_11", "c_pair", "c_q", "det_exact", "fano", "gram",
    "greedy_closed_bound", "hadamard_bound", "make_schedule", "optimal_q",
    "pair_bound", "paper_matrix", "projective_plane", "q_row_bound",
    "ryser_bound", "ryser_gen_bound", "s_matrix", "schedule_bound",
    "search_max_det", "vol_squared",
]
