"""qhecke: exact multiplicative and additive Hecke operators on
q-expansions and infinite-product (Borcherds-exponent) modular forms.

All arithmetic is over the rationals via fractions.Fraction; nothing is
floating point.  The central objects are QSeries (truncated Laurent
series in q), ProductForm (q^h prod (1-q^n)^{c(n)}), and the operators
mult_hecke / hecke_add / hecke_half acting on them.
"""

from .borcherds import borcherds_lift, equivariance_check, hurwitz, \
    hurwitz_series, hurwitz_table, pairing_order, plus_space_from_product
from .classical import EtaQuotient, delta, delta_product, eisenstein, \
    eta_quotient, j_invariant, newman_check, sigma
from .errors import BadLeadingTerm, InsufficientPrecision, \
    NonIntegralExponents, NonIntegralOrder, NotNormalized, NotOddPrime, \
    NotPrime, QheckeError, UnsupportedWeight, ZeroSeries
from .heckeadd import PlusSpaceSeq, hecke_add, hecke_add_relation_check, \
    hecke_half, hecke_half_composite, legendre
from .heckemult import MultHeckeResult, congruence_check, mult_hecke, \
    mult_hecke_prime_power, verify_algebra_relation
from .prodform import ProductForm, fourier_to_product, \
    fourier_to_product_recursive, product_to_fourier
from .qseries import FormMeta, QSeries, exp_series, log_series
from .structure import EigenReport, eta_recognize, is_mult_eigenform, \
    log_derivative, logderiv_equivariance, theta_quotient

__version__ = "0.1.0"

__all__ = [
    "QSeries", "FormMeta", "ProductForm", "EtaQuotient", "PlusSpaceSeq",
    "MultHeckeResult", "EigenReport",
    "fourier_to_product", "fourier_to_product_recursive",
    "product_to_fourier", "log_series", "exp_series",
    "eisenstein", "delta", "delta_product", "j_invariant", "sigma",
    "eta_quotient", "newman_check",
    "mult_hecke", "mult_hecke_prime_power", "verify_algebra_relation",
    "congruence_check",
    "hecke_add", "hecke_add_relation_check", "hecke_half",
    "hecke_half_composite", "legendre",
    "hurwitz", "hurwitz_table", "hurwitz_series", "pairing_order",
    "borcherds_lift", "equivariance_check", "plus_space_from_product",
    "theta_quotient", "log_derivative", "logderiv_equivariance",
    "is_mult_eigenform", "eta_recognize",
    "QheckeError", "ZeroSeries", "BadLeadingTerm", "NotNormalized",
    "InsufficientPrecision", "NonIntegralOrder", "NonIntegralExponents",
    "NotPrime", "NotOddPrime", "UnsupportedWeight",
]
