"""Exact divisor classes of Brill-Noether incidence loci in projectivized Hodge bundles.

Rational values are returned as fractions.Fraction. Classes are dicts with keys
g, k, eta, lambda, delta (and psi for classes on the pointed space).
"""

from ._core import (
    BnclassError,
    bn_class,
    class_text,
    classes_equal,
    count_special,
    enumerate_divisorial,
    incidence_class,
    mu_nu,
    rho,
    stratum_h22,
    teich_intersections,
    teich_threshold,
    verify,
    weierstrass_class,
)

__all__ = [
    "BnclassError",
    "bn_class",
    "class_text",
    "classes_equal",
    "count_special",
    "enumerate_divisorial",
    "incidence_class",
    "mu_nu",
    "rho",
    "stratum_h22",
    "teich_intersections",
    "teich_threshold",
    "verify",
    "weierstrass_class",
]
