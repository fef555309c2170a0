"""Budgeted integer factorization, p-adic valuation, and the arithmetic function v.

v(n) sums p + a over prime-power divisors p**a with a >= 2 and p over primes
of exponent 1; v(1) = 0. Every factorization this module returns is certified:
each recorded prime passes primality testing and the product reconstructs the
input exactly.

Factorization pipeline: staged trial division, Miller-Rabin certification
(deterministic below ~3.3e24, fixed-base strong probable-prime beyond), then
Pollard-Brent rho with deterministic parameter restarts under a wall-clock
plus iteration budget.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .digits import repunit

_TRIAL_LIMIT = 10_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def primes_up_to(limit: int) -> list[int]:
    """Primes <= limit (limit capped by the trial-division sieve)."""
    if limit > _TRIAL_LIMIT:
        raise ValueError(f"limit {limit} exceeds the sieve bound {_TRIAL_LIMIT}")
    return [p for p in _SMALL_PRIMES if p <= limit]


# Below this bound the 12-base Miller-Rabin test is a primality proof.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class BudgetExhausted(Exception):
    """Raised when a factorization budget runs out.

    ``cofactor`` is the composite left unfactored; callers that scan corpora
    should record a skip rather than guess.
    """

    def __init__(self, cofactor: int, message: str | None = None):
        self.cofactor = cofactor
        super().__init__(message or f"budget exhausted on composite cofactor {cofactor}")


@dataclass(frozen=True)
class Budget:
    """Wall-clock and iteration cap applied to one factorize() call."""

    seconds: float = 10.0
    iterations: int = 20_000_000

    def __post_init__(self):
        if self.seconds <= 0 or self.iterations <= 0:
            raise ValueError("budget must be positive")


DEFAULT_BUDGET = Budget()


class _Clock:
    def __init__(self, budget: Budget):
        self.deadline = time.monotonic() + budget.seconds
        self.remaining = budget.iterations

    def spend(self, cost: int, cofactor: int) -> None:
        self.remaining -= cost
        if self.remaining <= 0 or time.monotonic() > self.deadline:
            raise BudgetExhausted(cofactor)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin: deterministic below ~3.3e24, fixed-base SPRP beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    if n < 2:
        return n
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(root, exponent>=2) if n is a perfect power, else None."""
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            return r, k
    return None


def _pollard_brent(n: int, c: int, clock: _Clock) -> int | None:
    """One Brent-cycle attempt with increment c; None if the cycle degenerates."""
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    while g == 1:
        x = y
        done = 0
        while done < r:
            step = min(1024, r - done)
            for _ in range(step):
                y = (y * y + c) % n
            done += step
            clock.spend(step, n)
        k = 0
        while k < r and g == 1:
            ys = y
            chunk = min(128, r - k)
            for _ in range(chunk):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += chunk
            clock.spend(chunk, n)
        r *= 2
    if g == n:
        # The batched gcd collapsed; replay one step at a time.
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            clock.spend(1, n)
    return g if g != n else None


@dataclass(frozen=True)
class Factorization:
    """Certified prime factorization: ((p1, e1), ...) with primes ascending."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.entries]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.entries):
            raise ValueError("exponents must be >= 1")

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.entries:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def merge(self, other: "Factorization") -> "Factorization":
        """Factorization of the product: exponent-wise sum."""
        counts = dict(self.entries)
        for p, e in other.entries:
            counts[p] = counts.get(p, 0) + e
        return Factorization(tuple(sorted(counts.items())))

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.entries)


def factorize(n: int, budget: Budget | None = None) -> Factorization:
    """Complete certified factorization of n >= 1, or BudgetExhausted."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    clock = _Clock(budget or DEFAULT_BUDGET)
    counts: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1:
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # Survived trial division past sqrt(m), hence prime.
            counts[m] = counts.get(m, 0) + 1
        else:
            stack = [m]
            while stack:
                m = stack.pop()
                if is_probable_prime(m):
                    counts[m] = counts.get(m, 0) + 1
                    continue
                power = _perfect_power(m)
                if power is not None:
                    root, exp = power
                    stack.extend([root] * exp)
                    continue
                d = None
                c = 1
                while d is None:
                    d = _pollard_brent(m, c, clock)  # raises BudgetExhausted
                    c += 1
                stack.append(d)
                stack.append(m // d)
    return Factorization(tuple(sorted(counts.items())))


def valuation(p: int, n: int) -> int:
    """p-adic valuation: the greatest a with p**a dividing n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"expected p >= 2, got {p}")
    n = abs(n)
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def v_of_factorization(f: Factorization) -> int:
    """v of the factored integer: sum of p + e over entries with e >= 2, p otherwise."""
    return sum(p + e if e >= 2 else p for p, e in f.entries)


def v_value(n: int, budget: Budget | None = None) -> int:
    """The arithmetic function v; v(1) = 0."""
    return v_of_factorization(factorize(n, budget))


# --- generalized-repunit factorization via cyclotomic splitting ---------------
#
# 10**(L*k) - 1 factors as the product of Phi_d(10) over divisors d of L*k, so
# repunit(k, L) = (10**(L*k) - 1)/(10**L - 1) is the product of Phi_d(10) over
# d | L*k with d not dividing L. Each piece is far smaller than the repunit
# itself and is factored once, process-wide.

_phi10_done: dict[int, Factorization] = {}
_phi10_failed: dict[int, tuple[float, int]] = {}  # d -> (budget seconds tried, cofactor)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


def _mobius(n: int) -> int:
    mu = 1
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
    if n > 1:
        mu = -mu
    return mu


def _cyclotomic_at_ten(d: int) -> int:
    """Phi_d evaluated at 10, via the Moebius product over divisors."""
    num = den = 1
    for e in _divisors(d):
        mu = _mobius(d // e)
        if mu == 1:
            num *= 10**e - 1
        elif mu == -1:
            den *= 10**e - 1
    return num // den


def _phi10_factorization(d: int, budget: Budget) -> Factorization:
    cached = _phi10_done.get(d)
    if cached is not None:
        return cached
    failed = _phi10_failed.get(d)
    if failed is not None and budget.seconds <= failed[0]:
        raise BudgetExhausted(failed[1])
    try:
        f = factorize(_cyclotomic_at_ten(d), budget)
    except BudgetExhausted as exc:
        _phi10_failed[d] = (budget.seconds, exc.cofactor)
        raise
    _phi10_done[d] = f
    return f


def factor_repunit(k: int, block_len: int = 1, budget: Budget | None = None) -> Factorization:
    """Factorization of repunit(k, block_len) through its cyclotomic pieces."""
    if k < 1 or block_len < 1:
        raise ValueError(f"expected k, block_len >= 1, got k={k}, block_len={block_len}")
    budget = budget or DEFAULT_BUDGET
    out = Factorization(())
    for d in _divisors(block_len * k):
        if block_len % d != 0:
            out = out.merge(_phi10_factorization(d, budget))
    assert out.value == repunit(k, block_len)
    return out
