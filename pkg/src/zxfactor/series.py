"""Truncated formal power series over exact integers.

A :class:`TruncSeries` stores coefficients 0..N of a power series; the
coefficients beyond N are unknown, not zero.  Arithmetic is exact Cauchy
convolution, always truncated to an explicitly requested order.

``normalize_head`` implements the associate-replacement step used by the
factorization engines: given a series with constant term a prime p and a
unit linear coefficient, it produces a unit multiplier u(x) that zeroes
the coefficients 2..t of the product while only moving the linear
coefficient within its class mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .padics import is_prime

__all__ = [
    "TruncSeries",
    "NormalizeState",
    "mul_trunc",
    "add_trunc",
    "poly_mul",
    "invert_unit",
    "normalize_head",
    "solve_head_system",
    "to_decimal_strings",
    "from_decimal_strings",
]


@dataclass(frozen=True)
class TruncSeries:
    """A power series known through order ``len(coeffs) - 1``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs) -> None:
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, n: int) -> "TruncSeries":
        if n > self.order:
            raise ValueError(f"series only known through order {self.order}")
        return TruncSeries(self.coeffs[: n + 1])

    def pad(self, n: int) -> "TruncSeries":
        """Extend with explicit zero coefficients up to order n."""
        if n <= self.order:
            return self
        return TruncSeries(self.coeffs + (0,) * (n - self.order))

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if j == 0:
                parts.append(str(c))
            else:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                term = "x" if j == 1 else f"x^{j}"
                coef = "" if mag == 1 else f"{mag}*"
                parts.append(f"{sign} {coef}{term}")
        return " ".join(parts)


def _require_order(s: TruncSeries, n: int, who: str) -> None:
    if s.order < n:
        raise ValueError(f"{who}: input known only through order {s.order}, need {n}")


def mul_trunc(a: TruncSeries, b: TruncSeries, n: int) -> TruncSeries:
    """Cauchy product through order n; both inputs must reach order n."""
    _require_order(a, n, "mul_trunc")
    _require_order(b, n, "mul_trunc")
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncSeries(out)


def add_trunc(a: TruncSeries, b: TruncSeries, n: int) -> TruncSeries:
    _require_order(a, n, "add_trunc")
    _require_order(b, n, "add_trunc")
    return TruncSeries([a.coeffs[j] + b.coeffs[j] for j in range(n + 1)])


def poly_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Full product of two finite coefficient lists (polynomial view)."""
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return TruncSeries(out)


def invert_unit(a: TruncSeries, n: int) -> TruncSeries:
    """Inverse through order n of a series with constant term +-1."""
    if a.coeffs[0] not in (1, -1):
        raise ValueError("not a unit in Z[[x]]: constant term must be +1 or -1")
    _require_order(a, n, "invert_unit")
    a0 = a.coeffs[0]
    out = [a0]
    for k in range(1, n + 1):
        acc = sum(a.coeffs[i] * out[k - i] for i in range(1, k + 1))
        out.append(-a0 * acc)
    return TruncSeries(out)


@dataclass(frozen=True)
class NormalizeState:
    """Snapshot of the head-normalization system at stage ``stage``.

    ``lam`` is the current target linear coefficient (it only ever moves
    by multiples of p within the class of a1 mod p); ``u`` holds the
    integer solution u_1..u_stage of the triangular system for that lam.
    """

    lam: int
    u: tuple[int, ...]
    stage: int


def solve_head_system(a: TruncSeries, p: int, lam: int, t: int) -> list[int] | None:
    """Forward-substitute the t x t triangular head system for a given lam.

    Returns [u_1, ..., u_t], or None as soon as a division by p is not
    exact (the system has no integer solution for this lam).
    """
    _require_order(a, t, "solve_head_system")
    us: list[int] = []
    for i in range(1, t + 1):
        rhs = lam if i == 1 else 0
        acc = a.coeffs[i] + sum(a.coeffs[j] * us[i - 1 - j] for j in range(1, i))
        num = rhs - acc
        if num % p != 0:
            return None
        us.append(num // p)
    return us


def _balanced(x: int, p: int) -> int:
    r = x % p
    return r - p if r > p // 2 else r


def normalize_head(a: TruncSeries, p: int, t: int) -> tuple[TruncSeries, TruncSeries]:
    """Zero the coefficients 2..t of an associate of ``a``.

    Requires a_0 = p and gcd(p, a_1) = 1.  Returns (u, q) where u is a
    unit polynomial (u_0 = 1, degree at most t) and q = u * a satisfies
    q_0 = p, q_1 = a_1 (mod p) and q_2 = ... = q_t = 0.

    The target lam starts at the representative of a_1 mod p in [0, p).
    At each stage the next equation either already divides out, or lam is
    shifted by k * p^j for the unique class of k mod p that repairs it;
    k is taken as the balanced representative and the triangular system
    is re-solved exactly.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    _require_order(a, t, "normalize_head")
    if a.coeffs[0] != p:
        raise ValueError(f"constant term must equal p = {p}")
    a1 = a.coeffs[1]
    if gcd(a1, p) != 1 or not is_prime(p):
        raise ValueError("need gcd(p, a_1) = 1 with p prime")

    lam = a1 % p
    us = [(lam - a1) // p]
    for j in range(1, t):
        residual = a.coeffs[j + 1] + sum(a.coeffs[i] * us[j - i] for i in range(1, j + 1))
        if residual % p != 0:
            # Shifting lam by k*p^j moves this residual by (-1)^(j+1) * k * a1^j mod p.
            coef = (-1) ** (j + 1) * pow(a1, j, p)
            k = _balanced(-residual * pow(coef, -1, p), p)
            lam += k * p**j
            solved = solve_head_system(a, p, lam, j)
            if solved is None:
                raise AssertionError("refined head system lost integrality")
            us = solved
            residual = a.coeffs[j + 1] + sum(a.coeffs[i] * us[j - i] for i in range(1, j + 1))
            if residual % p != 0:
                raise AssertionError("lam refinement failed to clear the residual")
        us.append(-residual // p)

    while us and us[-1] == 0:
        us.pop()
    u = TruncSeries([1] + us)
    q = poly_mul(u, a)
    if q.coeffs[0] != p or (q.coeffs[1] - a1) % p != 0 or any(q.coeffs[2 : t + 1]):
        raise AssertionError("head normalization postcondition failed")
    return u, q



def to_decimal_strings(s: TruncSeries) -> list[str]:
    """Serialize as decimal strings, index 0 first (arbitrary-precision safe)."""
    return [str(c) for c in s.coeffs]


def from_decimal_strings(items) -> TruncSeries:
    return TruncSeries([int(x, 10) for x in items])
