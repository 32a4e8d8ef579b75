"""Exact p-adic arithmetic over the integers.

Everything here works with ordinary (arbitrary-precision) integers viewed
as elements of Z_p: valuations and unit parts, quadratic-residue tests,
classification of squares in Z_p, and root lifting for quadratic
congruences modulo prime powers.  Negative integers are handled exactly;
no residue is taken until one is explicitly requested.

All functions are pure and all returned values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "Valuation",
    "SquareClass",
    "RootCertificate",
    "is_prime",
    "valuation",
    "is_qr_mod_p",
    "is_square_zp",
    "lift_roots_mod_pk",
    "root_certificate",
    "prime_power_decompose",
    "smallest_prime_power_split",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    if n in _MR_BASES:
        return True
    if any(n % q == 0 for q in _MR_BASES):
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class Valuation:
    """Exact decomposition d = p^t * u with gcd(p, u) = 1."""

    t: int
    u: int


def valuation(d: int, p: int) -> Valuation:
    """Split a nonzero integer as d = p^t * u with u coprime to p."""
    if d == 0:
        raise ValueError("valuation undefined for zero")
    _require_prime(p)
    t = 0
    while d % p == 0:
        d //= p
        t += 1
    return Valuation(t, d)


def is_qr_mod_p(u: int, p: int) -> bool:
    """Euler's criterion: is u a square modulo the odd prime p?"""
    _require_prime(p)
    if p == 2:
        raise ValueError("use the mod-8 unit rule for p = 2, not Euler's criterion")
    if gcd(u, p) != 1:
        raise ValueError(f"u = {u} is not coprime to p = {p}")
    return pow(u, (p - 1) // 2, p) == 1


@dataclass(frozen=True)
class SquareClass:
    """Whether an integer is a square in Z_p, with the deciding evidence.

    For nonzero d = p^t * u the decision is: t even and u a quadratic
    residue mod p (odd p), or t even and u = 1 mod 8 (p = 2).  Zero is a
    square and is flagged separately via ``is_zero``.
    """

    is_square: bool
    is_zero: bool
    valuation: int | None = None
    unit_residue: int | None = None


def is_square_zp(d: int, p: int) -> SquareClass:
    """Classify d as a square or non-square in the ring Z_p."""
    _require_prime(p)
    if d == 0:
        return SquareClass(is_square=True, is_zero=True)
    v = valuation(d, p)
    if p == 2:
        residue = v.u % 8
        square = v.t % 2 == 0 and residue == 1
    else:
        residue = v.u % p
        square = v.t % 2 == 0 and is_qr_mod_p(v.u, p)
    return SquareClass(is_square=square, is_zero=False, valuation=v.t, unit_residue=residue)


def lift_roots_mod_pk(A: int, B: int, C: int, p: int, K: int) -> list[int]:
    """All y in [0, p^K) with A*y^2 + B*y + C = 0 mod p^K.

    Roots are grown one base-p digit at a time: a root mod p^(j+1) must
    reduce to a root mod p^j, so each level keeps the surviving
    extensions of the previous level.  Unlike Newton iteration this is
    correct for p = 2 and for multiple roots.
    """
    _require_prime(p)
    if K < 1:
        raise ValueError("K must be a positive integer")
    pK = p**K
    if A % pK == 0 and B % pK == 0 and C % pK == 0:
        raise ValueError("all coefficients vanish mod p^K; every residue is a root")
    roots = [y for y in range(p) if (A * y * y + B * y + C) % p == 0]
    mod = p
    for _ in range(K - 1):
        step = mod
        mod *= p
        roots = [
            y
            for r in roots
            for y in (r + d * step for d in range(p))
            if (A * y * y + B * y + C) % mod == 0
        ]
    return sorted(roots)


@dataclass(frozen=True)
class RootCertificate:
    """A lifted root a of y^2 - beta*y + alpha modulo p^K, with evidence.

    ``mu`` is the exact valuation of g(a) and ``r`` its cofactor, so that
    g(a) = p^mu * r with gcd(p, r) = 1; ``mu is None`` is the infinite
    sentinel for an exact integer root (then r = 0).  ``ell``/``t_unit``
    decompose beta - 2a = p^ell * t_unit the same way (``ell is None``
    when beta - 2a = 0).
    """

    a: int
    K: int
    mu: int | None
    r: int
    ell: int | None
    t_unit: int


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    import random

    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def _smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return q
    if is_prime(n):
        return n
    q = 41
    while q * q <= n and q < 10**6:
        if n % q == 0:
            return q
        q += 2
    if q * q > n:
        return n
    d = _pollard_rho(n)
    return min(_smallest_prime_factor(d), _smallest_prime_factor(n // d))


def prime_power_decompose(x: int) -> tuple[int, int] | None:
    """(p, n) with x = p^n and n >= 1, or None if x is not a prime power."""
    if x < 2:
        return None
    p = _smallest_prime_factor(x)
    n = 0
    while x % p == 0:
        x //= p
        n += 1
    return (p, n) if x == 1 else None


def smallest_prime_power_split(f0: int) -> tuple[int, int]:
    """Split f0 = u * v with u the smallest full prime-power block of |f0|.

    Requires |f0| to have at least two distinct prime factors; the sign
    of f0 travels with the cofactor v.
    """
    mag = abs(f0)
    if mag < 2 or prime_power_decompose(mag) is not None:
        raise ValueError("constant term must be composite with two distinct primes")
    blocks = []
    rest = mag
    while rest > 1:
        p = _smallest_prime_factor(rest)
        block = 1
        while rest % p == 0:
            rest //= p
            block *= p
        blocks.append(block)
    u = min(blocks)
    return u, f0 // u


def root_certificate(beta: int, alpha: int, p: int, K: int) -> RootCertificate | None:
    """Certificate for a root of g(y) = y^2 - beta*y + alpha mod p^K.

    Returns None when g has no root mod p^K.  Otherwise picks the
    smallest non-negative lifted root whose value g(a) is nonzero (so the
    valuation data is finite); only when every lifted root is an exact
    integer root of g does the certificate carry the infinite-mu
    sentinel.
    """
    roots = lift_roots_mod_pk(1, -beta, alpha, p, K)
    if not roots:
        return None

    def g(y: int) -> int:
        return y * y - beta * y + alpha

    a = next((y for y in roots if g(y) != 0), None)
    if a is None:
        a = roots[0]
        mu: int | None = None
        r = 0
    else:
        val = valuation(g(a), p)
        mu, r = val.t, val.u
    d = beta - 2 * a
    if d == 0:
        ell: int | None = None
        t_unit = 0
    else:
        dv = valuation(d, p)
        ell, t_unit = dv.t, dv.u
    return RootCertificate(a=a, K=K, mu=mu, r=r, ell=ell, t_unit=t_unit)
