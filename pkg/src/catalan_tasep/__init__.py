"""Exact TASEP steady states from Catalan tableaux, lattice paths and determinants."""

from .closedforms import n_mk, n_prime, narayana_number, q_table, z_n, z_n_derrida
from .determinants import det, genfun, narayana_matrix, weighted_matrix
from .paths import WeightedPath, enumerate_paths, path_to_tableau, tableau_to_path
from .polyring import ALPHA, BETA, BivarPoly, QPoly, parse, parse_rat
from .shapes import Shape, boundary_weight, parse_shape, shape_to_state, state_to_shape
from .tableaux import CondensedTableau, StaircaseTableau, enumerate_staircase, enumerate_tableaux, validate
from .tasep import RateSpec, prob_k_particles, prob_locations, prob_state, simulate, stationary

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "BivarPoly", "QPoly", "parse", "parse_rat",
    "Shape", "boundary_weight", "parse_shape", "shape_to_state", "state_to_shape",
    "CondensedTableau", "StaircaseTableau", "enumerate_staircase", "enumerate_tableaux", "validate",
    "WeightedPath", "enumerate_paths", "path_to_tableau", "tableau_to_path",
    "det", "genfun", "narayana_matrix", "weighted_matrix",
    "n_mk", "n_prime", "narayana_number", "q_table", "z_n", "z_n_derrida",
    "RateSpec", "prob_k_particles", "prob_locations", "prob_state", "simulate", "stationary",
]
