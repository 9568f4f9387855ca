"""Exact implicitization of rational surfaces by moving planes and quadrics.

Modules: ``polycore`` (sparse rational polynomials), ``exactla`` (exact
linear algebra), ``movmat`` (moving-surface matrices), ``resultant``
(Koszul, Dixon and Macaulay resultants), ``implicitize``, ``identities``
and ``cli``.
"""
from .exactla import ExactMatrix, PolyMatrix, det, nullspace, poly_det, rank
from .implicitize import implicit_direct_resultant, implicit_moving_quadrics, validate_on_surface
from .movmat import build_MP, build_MP_I, build_MQd, build_MSd, build_MTd, moving_space_basis
from .polycore import CUBIC_ONTO_PLANE, BILINEAR_QUADRIC, ParamSurface, SparsePoly, parse_poly
from .resultant import macaulay_res, res_bihom, res_dixon, res_koszul, res_tri

__all__ = [
    "CUBIC_ONTO_PLANE", "BILINEAR_QUADRIC", "ExactMatrix", "ParamSurface", "PolyMatrix", "SparsePoly",
    "build_MP", "build_MP_I", "build_MQd", "build_MSd", "build_MTd", "det",
    "implicit_direct_resultant", "implicit_moving_quadrics", "macaulay_res",
    "moving_space_basis", "nullspace", "parse_poly", "poly_det", "rank", "res_bihom",
    "res_dixon", "res_koszul", "res_tri", "validate_on_surface",
]
