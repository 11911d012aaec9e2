"""Isogeny classes of elliptic curves over Q from explicit curve families."""
from .arith import UniPoly, MultiPoly, rational_roots, squarefree_part, poly_gcd, factor_integer
from .curves import WeierstrassModel, short, parse_curve, is_isomorphic, quadratic_twist, minimal_model
from .fricke import fricke_eval, fricke_solve, exceptional_params
from .families import family_curve, sporadic_curve, special_curve, family_j, k_indices, graph_data
from .classify import isogeny_class, isogenies_genus_0, semistable_twist, bfs_cross_oracle, emit_graph
from .semistable import f_model, alpha_gamma, verify_lemma41, gcd_bound_check, derive_bezout

__version__ = "0.1.0"
