"""Brute-force verifiers, kept independent of the fast paths.

These deliberately re-derive everything by exhaustive scan so that
agreement with the padics/factor modules is meaningful evidence.  The
only concessions to speed are a cached square table per modulus and,
in the irreducibility probe, enumeration over the coarsest residue
modulus through which the checked congruences factor (provably the same
boolean as the full-range enumeration).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from .series import TruncSeries

if TYPE_CHECKING:  # pragma: no cover
    from .classify import QuadInput

__all__ = [
    "brute_square_mod",
    "brute_roots_mod",
    "VerificationReport",
    "verify_factorization",
    "exhaustive_irreducibility_probe",
]

_SQUARE_CAP = 10**7
_ROOTS_CAP = 10**6


@lru_cache(maxsize=8)
def _square_table(modulus: int) -> bytes:
    table = bytearray(modulus)
    for y in range(modulus):
        table[y * y % modulus] = 1
    return bytes(table)


def brute_square_mod(d: int, p: int, k: int) -> bool:
    """Is there y in [0, p^k) with y^2 = d mod p^k?  Exhaustive."""
    modulus = p**k
    if modulus > _SQUARE_CAP:
        raise ValueError(f"modulus {modulus} exceeds the brute-force cap {_SQUARE_CAP}")
    return _square_table(modulus)[d % modulus] == 1


def brute_roots_mod(A: int, B: int, C: int, p: int, k: int) -> list[int]:
    """All roots of A*y^2 + B*y + C mod p^k by full scan."""
    modulus = p**k
    if modulus > _ROOTS_CAP:
        raise ValueError(f"modulus {modulus} exceeds the brute-force cap {_ROOTS_CAP}")
    return [y for y in range(modulus) if (A * y * y + B * y + C) % modulus == 0]


@dataclass(frozen=True)
class VerificationReport:
    residuals: tuple[int, ...]
    a0_proper: bool
    b0_proper: bool

    @property
    def passed(self) -> bool:
        return self.a0_proper and self.b0_proper and not any(self.residuals)


def verify_factorization(f: TruncSeries, a: TruncSeries, b: TruncSeries) -> VerificationReport:
    """Per-order residuals of f - a*b plus non-unit checks on the heads."""
    if not (f.order == a.order == b.order):
        raise ValueError(
            f"order mismatch: f through {f.order}, a through {a.order}, b through {b.order}"
        )
    residuals = tuple(
        sum(a.coeffs[j] * b.coeffs[k - j] for j in range(k + 1)) - f.coeffs[k]
        for k in range(f.order + 1)
    )
    return VerificationReport(
        residuals=residuals,
        a0_proper=abs(a.coeffs[0]) != 1,
        b0_proper=abs(b.coeffs[0]) != 1,
    )


def exhaustive_irreducibility_probe(q: "QuadInput", depth: int = 2, bound: int | None = None) -> bool:
    """One-sided finite search for a factorization obstruction.

    Enumerates head splits a_0 = +-p^s, b_0 = +-p^t (s + t = n, matching
    signs) and coefficient residues a_1..a_depth, b_1..b_depth, checking
    the product congruences through order ``depth`` modulo
    p^(min(s,t)+1).  True means no assignment satisfies them, which
    corroborates irreducibility; False is inconclusive (a real
    factorization reduces to a passing assignment, but not conversely).
    """
    p, n = q.p, q.n
    if p**n > 10**4:
        raise ValueError("probe bound exceeded: need p^n <= 10^4")
    if not 1 <= depth <= 4:
        raise ValueError("probe depth must be between 1 and 4")
    f = [p**n, 0 if q.beta is None else p**q.m * q.beta, q.alpha]
    f += [q.tail[i] if i < len(q.tail) else 0 for i in range(depth - 2)]

    for s in range(1, n):
        t = n - s
        mn = min(s, t)
        check_mod = p ** (mn + 1)
        # every checked congruence factors through residues mod p^(mn+1)
        width = min(p ** max(s, t), check_mod)
        if bound is not None:
            width = min(width, bound)
        for sign in (1, -1):
            a0, b0 = sign * p**s, sign * p**t
            if _probe_assignment_exists(a0, b0, f, depth, width, check_mod, p, mn):
                return False
    return True


def _probe_assignment_exists(a0, b0, f, depth, width, check_mod, p, mn) -> bool:
    a = [a0]
    b = [b0]

    def rec(level: int) -> bool:
        if level == depth:
            # a_d, b_d enter only through a0*b_d + b0*a_d, which ranges over
            # exactly the multiples of p^mn mod check_mod
            rest = sum(a[j] * b[level - j] for j in range(1, level)) - f[level]
            return rest % p**mn == 0
        for ai in range(width):
            a.append(ai)
            for bi in range(width):
                b.append(bi)
                lhs = a0 * bi + b0 * ai + sum(a[j] * b[level - j] for j in range(1, level))
                if (lhs - f[level]) % check_mod == 0 and rec(level + 1):
                    return True
                b.pop()
            a.pop()
        return False

    return rec(1)
