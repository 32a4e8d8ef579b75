"""Reducibility and explicit factorization in Z[[x]] for quadratic-headed
series with prime-power constant term, driven by p-adic square tests."""

from .classify import (
    BETA_ZERO,
    QuadInput,
    RULE_INFO,
    Verdict,
    VerdictKind,
    classify_general,
    classify_quadratic,
    discriminant,
)
from .factor import (
    EngineInvariantError,
    factor_2m_lt_n,
    factor_beta_zero,
    factor_coprime_constant,
    factor_m_eq_nu,
    factor_m_gt_nu,
    factor_p2_m_eq_nu1,
    factor_p2_m_gt_nu1,
    factor_reducible_quadratic,
    factor_simple_root_tail,
    factor_tail,
    solve_unit_step,
)
from .oracle import (
    brute_roots_mod,
    brute_square_mod,
    exhaustive_irreducibility_probe,
    verify_factorization,
)
from .padics import (
    RootCertificate,
    SquareClass,
    Valuation,
    is_prime,
    is_qr_mod_p,
    is_square_zp,
    lift_roots_mod_pk,
    prime_power_decompose,
    root_certificate,
    valuation,
)
from .series import (
    TruncSeries,
    add_trunc,
    from_decimal_strings,
    invert_unit,
    mul_trunc,
    normalize_head,
    poly_mul,
    to_decimal_strings,
)

__version__ = "0.1.0"

__all__ = [
    "BETA_ZERO",
    "EngineInvariantError",
    "QuadInput",
    "RULE_INFO",
    "RootCertificate",
    "SquareClass",
    "TruncSeries",
    "Valuation",
    "Verdict",
    "VerdictKind",
    "add_trunc",
    "brute_roots_mod",
    "brute_square_mod",
    "classify_general",
    "classify_quadratic",
    "discriminant",
    "exhaustive_irreducibility_probe",
    "factor_2m_lt_n",
    "factor_beta_zero",
    "factor_coprime_constant",
    "factor_m_eq_nu",
    "factor_m_gt_nu",
    "factor_p2_m_eq_nu1",
    "factor_p2_m_gt_nu1",
    "factor_reducible_quadratic",
    "factor_simple_root_tail",
    "factor_tail",
    "from_decimal_strings",
    "invert_unit",
    "is_prime",
    "is_qr_mod_p",
    "is_square_zp",
    "lift_roots_mod_pk",
    "mul_trunc",
    "normalize_head",
    "poly_mul",
    "prime_power_decompose",
    "root_certificate",
    "solve_unit_step",
    "to_decimal_strings",
    "valuation",
    "verify_factorization",
]
