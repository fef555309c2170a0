"""Multiplicative orders and repunit entry orders.

For a prime p not in {2, 5}, repunit_order(p, alpha, L) is the order of
10**L in the unit group modulo p**(alpha + c) with c the p-adic valuation of
10**L - 1. Equivalently (and this is how the rest of the package uses it):
the least k >= 1 such that p**alpha divides repunit(k, L). It is always >= 2.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .factor import Budget, Factorization, factorize, valuation

# Threshold under which ord_p(10**L - 1) is taken on the explicit integer;
# above it the lifting-the-exponent route avoids materializing 10**L - 1.
_EXPLICIT_VALUATION_LIMIT = 64


def _carmichael(f: Factorization) -> int:
    """Carmichael function (group exponent of the units) from a factorization."""
    lam = 1
    for p, e in f:
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            part = p ** (e - 1) * (p - 1)
        lam = math.lcm(lam, part)
    return lam


def multiplicative_order(g: int, modulus: int, budget: Budget | None = None) -> int:
    """Least e >= 1 with g**e == 1 (mod modulus); g must be a unit."""
    if modulus < 2:
        raise ValueError(f"expected modulus >= 2, got {modulus}")
    g %= modulus
    if math.gcd(g, modulus) != 1:
        raise ValueError(f"{g} is not a unit modulo {modulus}")
    if g == 1:
        return 1
    exponent = _carmichael(factorize(modulus, budget))
    order = exponent
    for q, _ in factorize(exponent, budget):
        while order % q == 0 and pow(g, order // q, modulus) == 1:
            order //= q
    return order


def _require_coprime_to_ten(p: int) -> None:
    if p in (2, 5):
        raise ValueError(f"undefined for p = {p} (not coprime to 10)")
    if p < 2:
        raise ValueError(f"expected a prime, got {p}")


@lru_cache(maxsize=None)
def ten_power_valuation(p: int, L: int) -> int:
    """ord_p(10**L - 1) for p not in {2, 5}, without huge intermediates for large L."""
    _require_coprime_to_ten(p)
    if L < 1:
        raise ValueError(f"expected L >= 1, got {L}")
    if L <= _EXPLICIT_VALUATION_LIMIT:
        return valuation(p, 10**L - 1)
    d = multiplicative_order(10, p)
    if L % d != 0:
        return 0
    # Lifting the exponent: ord_p((10**d)**m - 1) = ord_p(10**d - 1) + ord_p(m).
    return valuation(p, 10**d - 1) + valuation(p, L // d)


@lru_cache(maxsize=None)
def repunit_order(p: int, alpha: int, L: int) -> int:
    """Least k with p**alpha dividing repunit(k, L); order of 10**L as described above."""
    _require_coprime_to_ten(p)
    if alpha < 1 or L < 1:
        raise ValueError(f"expected alpha, L >= 1, got alpha={alpha}, L={L}")
    modulus = p ** (alpha + ten_power_valuation(p, L))
    return multiplicative_order(pow(10, L, modulus), modulus)


def repunit_valuation(p: int, k: int, block_len: int = 1) -> int:
    """ord_p(repunit(k, block_len)), via the entry-order divisibility criterion.

    Zero for p in {2, 5}: repunits end in 1.
    """
    if k < 1 or block_len < 1:
        raise ValueError(f"expected k, block_len >= 1, got k={k}, block_len={block_len}")
    if p in (2, 5):
        return 0
    a = 0
    while k % repunit_order(p, a + 1, block_len) == 0:
        a += 1
    return a


def repunit_order_rescaled(p: int, alpha: int, k: int, L: int) -> int:
    """repunit_order at block length L*k, computed from values at block length L.

    Uses the rescaling identity: with x = ord_p(repunit(k, L)) and
    H = repunit_order(p, alpha + x, L), the order at block length L*k is
    H / gcd(k, H). Must agree with repunit_order(p, alpha, L*k).
    """
    _require_coprime_to_ten(p)
    if alpha < 1 or k < 1 or L < 1:
        raise ValueError("expected alpha, k, L >= 1")
    x = repunit_valuation(p, k, L)
    big = repunit_order(p, alpha + x, L)
    return big // math.gcd(k, big)
