"""Groebner bases and first syzygies of monomial curves defined by arithmetic sequences."""

from ._core import (
    CurveParams,
    GcdError,
    HypothesisError,
    NotMinimalError,
    ParamError,
    build_G_hat,
    build_G_prime,
    make_params,
    min_multiple_of_m0,
    min_multiple_of_mp,
    semigroup_contains,
    verify_all,
    verify_cardinalities,
    verify_excluded_leading_forms,
    verify_groebner_G_hat,
    verify_groebner_G_prime,
    verify_ideal_equality,
    verify_minimality,
    verify_semigroup_relations,
    verify_standard_monomials,
    verify_varpi_leading_monomial,
)

__all__ = [
    "CurveParams",
    "GcdError",
    "HypothesisError",
    "NotMinimalError",
    "ParamError",
    "build_G_hat",
    "build_G_prime",
    "make_params",
    "min_multiple_of_m0",
    "min_multiple_of_mp",
    "semigroup_contains",
    "verify_all",
    "verify_cardinalities",
    "verify_excluded_leading_forms",
    "verify_groebner_G_hat",
    "verify_groebner_G_prime",
    "verify_ideal_equality",
    "verify_minimality",
    "verify_semigroup_relations",
    "verify_standard_monomials",
    "verify_varpi_leading_monomial",
]
