"""Cubature rules from Weyl-group orbit functions for A1, A2, C2 and G2."""
from .approx import coeffs_u, coeffs_v, error_L2K, eval_approx
from .cubature import build_rule, integrate, integrate_pullback
from .grids import build_grid
from .liealg import build_algebra, enumerate_dominant, m_degree
from .orbitfuncs import c_function, eval_C, eval_S, s_function
from .refquad import ref_integral_F, ref_integral_Omega_weighted
from .xmap import eval_K, eval_X, in_omega

__version__ = "0.1.0"

__all__ = [
    "build_algebra",
    "build_grid",
    "build_rule",
    "c_function",
    "coeffs_u",
    "coeffs_v",
    "enumerate_dominant",
    "error_L2K",
    "eval_C",
    "eval_K",
    "eval_S",
    "eval_X",
    "eval_approx",
    "in_omega",
    "integrate",
    "integrate_pullback",
    "m_degree",
    "ref_integral_F",
    "ref_integral_Omega_weighted",
    "s_function",
]
