"""Exact computations with the Gaudin Bethe algebra, the rational Cherednik
algebra of type A and the Calogero-Moser space."""
from .calogero import CMPoint, cm_psi, cm_universal_poly, generic_cm_point, is_cm_point
from .cherednik import HElement, central_coeffs, is_central, spherical_poly, symmetrizer, universal_central_poly
from .gaudin import V1Element, bethe_poly_apply, extract_bethe_coeffs, iota, iota_inv, verify_ZB
from .linalg import det_exact, rdet
from .multisym import power_sum, universal_multisym
from .oracle import rdet_oracle
from .poly import MultiPoly
from .polyrep import dunkl_apply, polyrep_check
from .quasiexp import QExpSpace, classify, kernel_operator, qexp_psi, verify_wilson, wronskian
from .series import BiPoly, TruncSeries, expand_rational, series_invert
from .symgroup import Perm, act, is_multisymmetric

__all__ = [
    "CMPoint",
    "cm_psi",
    "cm_universal_poly",
    "generic_cm_point",
    "is_cm_point",
    "HElement",
    "central_coeffs",
    "is_central",
    "spherical_poly",
    "symmetrizer",
    "universal_central_poly",
    "V1Element",
    "bethe_poly_apply",
    "extract_bethe_coeffs",
    "iota",
    "iota_inv",
    "verify_ZB",
    "det_exact",
    "rdet",
    "power_sum",
    "universal_multisym",
    "rdet_oracle",
    "MultiPoly",
    "dunkl_apply",
    "polyrep_check",
    "QExpSpace",
    "classify",
    "kernel_operator",
    "qexp_psi",
    "verify_wilson",
    "wronskian",
    "BiPoly",
    "TruncSeries",
    "expand_rational",
    "series_invert",
    "Perm",
    "act",
    "is_multisymmetric",
]

__version__ = "0.1.0"
