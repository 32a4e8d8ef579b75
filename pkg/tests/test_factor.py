import random

import pytest

from zxfactor.classify import QuadInput
from zxfactor.factor import (
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
from zxfactor.oracle import verify_factorization
from zxfactor.padics import is_qr_mod_p, is_square_zp
from zxfactor.series import TruncSeries

RNG_SEED = 42


def check_pair(q: QuadInput, pair, n: int) -> None:
    report = verify_factorization(q.head_series(n), *pair)
    assert report.passed, report
    a, b = pair
    # seed identity: the head coefficients are reproduced exactly
    assert a.coeffs[0] * b.coeffs[0] == q.p**q.n
    assert abs(a.coeffs[0]) >= 2 and abs(b.coeffs[0]) >= 2


def test_solve_unit_step_examples():
    assert solve_unit_step(5, 3, 0, 0) == (0, 0)
    assert solve_unit_step(5, -4, 2, 0) == (3, 2)
    assert solve_unit_step(3, 1, 3, 0) == (0, -1)


def test_solve_unit_step_rejects_non_unit():
    with pytest.raises(EngineInvariantError):
        solve_unit_step(9, 3, 1, 0)


def test_2m_lt_n_walkthrough():
    q = QuadInput(5, 3, 1, 1, 1)
    a, b = factor_2m_lt_n(q, 2)
    assert a.coeffs == (5, 1, 4)
    assert b.coeffs == (25, -4, -19)
    check_pair(q, (a, b), 2)


def test_2m_lt_n_deeper():
    for q in (QuadInput(2, 3, 1, 1, 1), QuadInput(3, 5, 2, 2, 1)):
        n = 16
        pair = factor_2m_lt_n(q, n)
        check_pair(q, pair, n)


def test_2m_lt_n_with_tail():
    q = QuadInput(5, 3, 1, 1, 1, tail=(7, -2, 0, 11))
    pair = factor_2m_lt_n(q, 10)
    check_pair(q, pair, 10)


def test_m_gt_nu_degenerate_polynomial():
    q = QuadInput(3, 2, 2, 1, 2)
    a, b = factor_m_gt_nu(q, 4)
    assert a.coeffs[:2] == (3, 1) and b.coeffs[:2] == (3, 2)
    assert set(a.coeffs[2:]) == {0} and set(b.coeffs[2:]) == {0}


def test_m_gt_nu_walkthrough():
    q = QuadInput(3, 2, 2, 1, 11)
    a, b = factor_m_gt_nu(q, 3)
    assert a.coeffs == (3, 1, 0, 1)
    assert b.coeffs == (3, 2, 3, -2)
    check_pair(q, (a, b), 3)


def test_m_gt_nu_deeper():
    # disc = 7^4 * 37 with 37 = 2 a residue mod 7, so this is reducible
    q = QuadInput(7, 4, 3, 1, 3)
    assert is_square_zp(7**6 - 4 * 3 * 7**4, 7).is_square
    pair = factor_m_gt_nu(q, 16)
    check_pair(q, pair, 16)


def test_m_eq_nu_degenerate():
    q = QuadInput(7, 2, 1, 3, 2)
    a, b = factor_m_eq_nu(q, 3)
    assert a.coeffs == (7, 1, 0, 0) and b.coeffs == (7, 2, 0, 0)


def test_m_eq_nu_certificate_case():
    q = QuadInput(7, 2, 1, 3, 51)
    pair = factor_m_eq_nu(q, 32)
    check_pair(q, pair, 32)


def test_m_eq_nu_rejects_nonsquare_disc():
    # beta^2 - 4*alpha = 8 = 3 mod 5 is a non-residue: the engine must refuse
    with pytest.raises(ValueError):
        factor_m_eq_nu(QuadInput(5, 2, 1, 2, -1), 8)


def test_m_eq_nu_scaled_subcases():
    # nu > l >= 1
    q = QuadInput(3, 4, 2, 1, -29)  # disc 117 = 9 * 13, 13 a residue mod 3
    check_pair(q, factor_m_eq_nu(q, 24), 24)
    q = QuadInput(3, 6, 3, 1, -29)  # nu = 3 > l = 1
    check_pair(q, factor_m_eq_nu(q, 24), 24)
    # nu <= l
    q = QuadInput(3, 2, 1, 1, -29)  # l = 1 >= nu = 1
    check_pair(q, factor_m_eq_nu(q, 24), 24)
    q = QuadInput(3, 2, 1, 1, -263)  # disc 1053 = 81 * 13: l = 2 > nu = 1
    check_pair(q, factor_m_eq_nu(q, 24), 24)


def test_beta_zero_difference_of_squares():
    q = QuadInput(5, 2, None, None, -1)
    a, b = factor_beta_zero(q, 4)
    assert a.coeffs[:2] == (5, -1) and b.coeffs[:2] == (5, 1)


def test_beta_zero_walkthrough():
    q = QuadInput(5, 2, None, None, 1)
    a, b = factor_beta_zero(q, 3)
    assert a.coeffs == (5, 2, 3, 2)
    assert b.coeffs == (5, -2, -2, 0)
    check_pair(q, (a, b), 3)


def test_beta_zero_p2():
    q = QuadInput(2, 4, None, None, 7)  # -7 = 1 mod 8
    pair = factor_beta_zero(q, 16)
    check_pair(q, pair, 16)


def test_beta_zero_rejects_nonresidue():
    with pytest.raises(ValueError):
        factor_beta_zero(QuadInput(3, 2, None, None, 1), 8)  # -1 = 2 mod 3


def test_p2_m_gt_nu1_shortcut_matches_expansion():
    q = QuadInput(2, 2, 3, 1, 3)  # 4 + 8x + 3x^2 = (2 + x)(2 + 3x)
    a, b = factor_p2_m_gt_nu1(q, 8)
    assert a.coeffs[:2] == (2, 1) and b.coeffs[:2] == (2, 3)
    check_pair(q, (a, b), 8)


def test_p2_m_gt_nu1_both_mod8_branches():
    q = QuadInput(2, 2, 4, 1, 7)  # gap >= 2 needs alpha = 7 mod 8
    check_pair(q, factor_p2_m_gt_nu1(q, 16), 16)
    q = QuadInput(2, 4, 4, 3, 3)  # gap = 1 needs alpha = 3 mod 8
    check_pair(q, factor_p2_m_gt_nu1(q, 16), 16)


def test_p2_m_gt_nu1_rejects_wrong_residue():
    with pytest.raises(ValueError):
        factor_p2_m_gt_nu1(QuadInput(2, 2, 4, 1, 3), 8)


def test_p2_m_eq_nu1_degenerate():
    q = QuadInput(2, 2, 2, 1, -3)  # (2 + 3x)(2 - x) up to ordering
    a, b = factor_p2_m_eq_nu1(q, 8)
    assert {(a.coeffs[0], a.coeffs[1]), (b.coeffs[0], b.coeffs[1])} == {(2, -1), (2, 3)}
    check_pair(q, (a, b), 8)


def test_p2_m_eq_nu1_perfect_square_core():
    q = QuadInput(2, 4, 3, 3, -7)  # beta^2 - alpha = 16
    pair = factor_p2_m_eq_nu1(q, 16)
    check_pair(q, pair, 16)


def test_p2_m_eq_nu1_nondegenerate():
    q = QuadInput(2, 2, 2, 1, -67)  # beta^2 - alpha = 68 = 4 * 17
    pair = factor_p2_m_eq_nu1(q, 24)
    check_pair(q, pair, 24)


def test_p2_m_eq_nu1_rejects_odd_valuation():
    # beta^2 - alpha = 8 = 2^3: no 2^(2l) * (1 mod 8) shape
    with pytest.raises(ValueError):
        factor_p2_m_eq_nu1(QuadInput(2, 2, 2, 3, 1), 8)


def test_coprime_constant_walkthrough():
    f = TruncSeries((6, 2, 1))
    a, b = factor_coprime_constant(f, 2, 3, 2)
    assert a.coeffs == (2, 0, 1)
    assert b.coeffs == (3, 1, -1)


def test_coprime_constant_more():
    a, b = factor_coprime_constant(TruncSeries((15, 0, 0)), 3, 5, 2)
    assert a.coeffs == (3, 0, 0) and b.coeffs == (5, 0, 0)
    f = TruncSeries((10, 1, 0, 0, 0))
    pair = factor_coprime_constant(f, 2, 5, 4)
    assert verify_factorization(f, *pair).passed


def test_coprime_constant_rejects_bad_split():
    with pytest.raises(ValueError):
        factor_coprime_constant(TruncSeries((12, 0)), 2, 6, 1)


def test_tail_engine_walkthrough():
    f = TruncSeries((9, 3, -2, 9, 0, 0))
    a, b = factor_tail(f, 5)
    assert a.coeffs[:3] == (3, 29, 6)
    assert b.coeffs[:3] == (3, -28, 264)
    assert verify_factorization(f, a, b).passed


def test_tail_engine_rejects_underdivisible_tail():
    with pytest.raises(ValueError, match="not divisible"):
        factor_tail(TruncSeries((9, 3, -2, 3, 0)), 4)


def test_tail_engine_deeper():
    # p = 5: beta = 1, alpha = -6 gives disc 25 with q = 1
    f = TruncSeries((25, 5, -6, 25) + (0,) * 5)
    pair = factor_tail(f, 8)
    assert verify_factorization(f, *pair).passed


def test_simple_root_tail():
    f = TruncSeries((49, 21, 2, 7) + (0,) * 5)
    pair = factor_simple_root_tail(f, 8)
    assert verify_factorization(f, *pair).passed


def test_simple_root_tail_rejects_double_roots():
    with pytest.raises(ValueError, match="simple root"):
        factor_simple_root_tail(TruncSeries((9, 3, -2, 0, 0)), 4)
    with pytest.raises(ValueError, match="simple root"):
        factor_simple_root_tail(TruncSeries((625, 50, 1, 0, 0)), 4)


def test_refuses_to_factor_beyond_input_order():
    with pytest.raises(ValueError, match="refused"):
        factor_tail(TruncSeries((9, 3, -2, 9)), 5)
    with pytest.raises(ValueError, match="refused"):
        factor_simple_root_tail(TruncSeries((49, 21, 2)), 5)
    with pytest.raises(ValueError, match="refused"):
        factor_coprime_constant(TruncSeries((6, 2, 1)), 2, 3, 3)


def _random_reducible_inputs(count):
    rng = random.Random(RNG_SEED)
    out = []
    while len(out) < count:
        p = rng.choice((2, 3, 5, 7, 11))
        n, m = rng.randint(1, 8), rng.randint(1, 8)
        beta = rng.choice([b for b in range(-30, 31) if b and b % p])
        alpha = rng.choice([a for a in range(-30, 31) if a and a % p])
        q = QuadInput(p, n, m, beta, alpha)
        delta = p ** (2 * m) * beta**2 - 4 * alpha * p**n
        if is_square_zp(delta, p).is_square:
            out.append(q)
    return out


def test_randomized_engines_verify_and_are_deterministic():
    for q in _random_reducible_inputs(120):
        first = factor_reducible_quadratic(q, 40)
        again = factor_reducible_quadratic(q, 40)
        assert first == again
        check_pair(q, first, 40)


def test_beta_zero_randomized():
    rng = random.Random(RNG_SEED + 1)
    done = 0
    while done < 40:
        p = rng.choice((2, 3, 5, 7))
        nu = rng.randint(1, 4)
        alpha = rng.choice([a for a in range(-30, 31) if a and a % p])
        if p == 2 and alpha % 8 != 7:
            continue
        if p != 2 and not is_qr_mod_p(-alpha, p):
            continue
        q = QuadInput(p, 2 * nu, None, None, alpha)
        check_pair(q, factor_beta_zero(q, 24), 24)
        done += 1
