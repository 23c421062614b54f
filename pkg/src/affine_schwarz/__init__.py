"""Exact series checks for affine Schwarz maps of hypergeometric equations
with finite monodromy."""

from .catalog import PolyhedralCase, catalog, get_case
from .dihedral import ProductParams, degree_check, f_st
from .exact import PuiseuxSeries
from .hypergeom import HGParams, gauss_series, kummer_pair, pfq
from .invariants import HomogeneousBivariatePoly, fit_invariant
from .verify import CaseVerifier, verify_row

__all__ = [
    "CaseVerifier", "HGParams", "HomogeneousBivariatePoly", "PolyhedralCase", "ProductParams",
    "PuiseuxSeries", "catalog", "degree_check", "f_st", "fit_invariant", "gauss_series",
    "get_case", "kummer_pair", "pfq", "verify_row",
]
