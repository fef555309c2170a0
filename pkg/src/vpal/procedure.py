"""The v-palindrome classification of repeated concatenations.

Given an eligible n (not divisible by 10, not equal to its digit reversal),
the classification decides for every k >= 1 whether the k-fold concatenation
n(k) is a v-palindrome, by pure divisibility arithmetic:

1. factor n and its reversal; the primes whose exponents differ are the
   crucial primes, each carrying delta (exponent difference) and mu (shared
   exponent part);
2. solve the signed-sum equation over the per-prime ranges of possible
   v-increments; each solution is one way the v values can balance;
3. classify every (prime, solution-entry) pair into one of seven cases and
   translate cases into divisibility constraints on k;
4. a solution's column accepts exactly the k in S(A, B) = {x : every a in A
   divides x, no b in B divides x}; the accepted sets are pairwise disjoint,
   and the accepting solution is the type of the v-palindrome n(k).

run_procedure(n, copies=k) produces the same tables for the base number n(k)
without ever factoring n(k): crucial primes and deltas carry over, mu shifts
by the repunit valuation, and entry orders are taken at digit length L*k.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property

from .digits import decimal_string, digit_count, reverse_digits
from .factor import Budget, factorize
from .order import repunit_order, repunit_valuation

DEFAULT_MINIMAL_PERIOD_CAP = 1_000_000


class InvalidInput(ValueError):
    """The number is outside the procedure's domain (10 | n or n equals its reversal)."""


class NotAVPalindrome(LookupError):
    """Asked for the type of a concatenation count that no solution accepts."""


class AmbiguousType(RuntimeError):
    """Two solution columns accepted the same k; disjointness is violated."""


Solution = tuple[int, ...]


def v_increment(p: int, delta: int, alpha: int) -> int:
    """Increase of v when the exponent of prime p grows from alpha to alpha + delta."""
    if delta < 1:
        raise ValueError(f"expected delta >= 1, got {delta}")
    if alpha < 0:
        raise ValueError(f"expected alpha >= 0, got {alpha}")
    if p == 2 and delta == 1:
        return 2 if alpha <= 1 else 1
    if delta == 1:
        return p if alpha == 0 else 2 if alpha == 1 else 1
    return p + delta if alpha == 0 else 1 + delta if alpha == 1 else delta


def v_increment_range(p: int, delta: int) -> frozenset[int]:
    """All values v_increment(p, delta, .) attains; size 2 for (2, 1), else 3."""
    return frozenset(v_increment(p, delta, alpha) for alpha in (0, 1, 2))


class _Preimage(enum.Enum):
    # Structural preimage of a value under v_increment(p, delta, .): which
    # alpha produce it. TWO_UP is every alpha >= 2.
    ZERO = "{0}"
    ONE = "{1}"
    ZERO_ONE = "{0,1}"
    TWO_UP = "{2,3,...}"


def _preimage(p: int, delta: int, u: int) -> _Preimage:
    if p == 2 and delta == 1:
        if u == 2:
            return _Preimage.ZERO_ONE
        if u == 1:
            return _Preimage.TWO_UP
    elif delta == 1:
        if u == p:
            return _Preimage.ZERO
        if u == 2:
            return _Preimage.ONE
        if u == 1:
            return _Preimage.TWO_UP
    else:
        if u == p + delta:
            return _Preimage.ZERO
        if u == 1 + delta:
            return _Preimage.ONE
        if u == delta:
            return _Preimage.TWO_UP
    raise ValueError(f"{u} is not a possible v-increment for p={p}, delta={delta}")


class CaseLabel(str, enum.Enum):
    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"
    VII = "vii"


_CASE_BY_PREIMAGE_AND_MU = {
    (_Preimage.ZERO, 0): CaseLabel.I,
    (_Preimage.ONE, 1): CaseLabel.I,
    (_Preimage.ZERO_ONE, 1): CaseLabel.I,
    (_Preimage.ONE, 0): CaseLabel.II,
    (_Preimage.ZERO_ONE, 0): CaseLabel.III,
}


def classify_case(p: int, delta_abs: int, u: int, mu: int) -> CaseLabel:
    """Which of the seven cases the quadruple falls into; exactly one always holds."""
    if mu < 0:
        raise ValueError(f"expected mu >= 0, got {mu}")
    pre = _preimage(p, delta_abs, u)
    if pre is _Preimage.TWO_UP:
        return {0: CaseLabel.V, 1: CaseLabel.IV}.get(mu, CaseLabel.VI)
    return _CASE_BY_PREIMAGE_AND_MU.get((pre, mu), CaseLabel.VII)


@dataclass(frozen=True)
class ConstraintPair:
    """The set S(A, B) of integers divisible by every a in A and by no b in B."""

    A: frozenset[int]
    B: frozenset[int]

    def __init__(self, A=(), B=()):
        object.__setattr__(self, "A", frozenset(A))
        object.__setattr__(self, "B", frozenset(B))
        if any(x < 1 for x in self.A | self.B):
            raise ValueError("constraint elements must be positive")

    def accepts(self, x: int) -> bool:
        return all(x % a == 0 for a in self.A) and all(x % b != 0 for b in self.B)

    def union(self, other: "ConstraintPair") -> "ConstraintPair":
        return ConstraintPair(self.A | other.A, self.B | other.B)

    @property
    def period(self) -> int:
        """lcm of all constraint elements; membership depends only on x mod period."""
        return math.lcm(*self.A, *self.B) if self.A | self.B else 1

    def member_count(self) -> int:
        """Exact count of members in one full period, by inclusion-exclusion over B."""
        base = math.lcm(*self.A) if self.A else 1
        period = self.period
        bs = list(self.B)
        total = 0
        for r in range(len(bs) + 1):
            sign = -1 if r % 2 else 1
            for combo in itertools.combinations(bs, r):
                total += sign * (period // math.lcm(base, *combo))
        return total

    def is_empty(self) -> bool:
        return self.member_count() == 0

    def first_member(self) -> int | None:
        """Least positive member, or None if the set is empty."""
        if self.is_empty():
            return None
        base = math.lcm(*self.A) if self.A else 1
        x = base
        while not self.accepts(x):
            x += base
        return x

    def to_dict(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B)}

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        return f"({fmt(self.A)},{fmt(self.B)})"


def constraint_entry(p: int, label: CaseLabel, digit_len: int) -> ConstraintPair:
    """Divisibility constraints contributed by prime p under the given case.

    Entry orders are taken at the digit length of the analyzed number; they
    are needed only for p outside {2, 5} in cases i through v.
    """
    if p in (2, 5):
        if label in (CaseLabel.I, CaseLabel.III, CaseLabel.VI):
            return ConstraintPair()
        return ConstraintPair((), (1,))
    if label is CaseLabel.VI:
        return ConstraintPair()
    if label is CaseLabel.VII:
        return ConstraintPair((), (1,))
    h = lambda alpha: repunit_order(p, alpha, digit_len)
    if label is CaseLabel.I:
        return ConstraintPair((), (h(1),))
    if label is CaseLabel.II:
        return ConstraintPair((h(1),), (h(2),))
    if label is CaseLabel.III:
        return ConstraintPair((), (h(2),))
    if label is CaseLabel.IV:
        return ConstraintPair((h(1),), ())
    return ConstraintPair((h(2),), ())  # case v


@dataclass(frozen=True)
class CrucialPrime:
    """A prime whose exponents in n and in the reversal of n differ."""

    p: int
    a: int  # exponent in n
    b: int  # exponent in reverse_digits(n)

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a == self.b:
            raise ValueError(f"need distinct nonnegative exponents, got a={self.a}, b={self.b}")

    @property
    def delta(self) -> int:
        return self.a - self.b

    @property
    def mu(self) -> int:
        return min(self.a, self.b)

    def shifted(self, x: int) -> "CrucialPrime":
        """Both exponents raised by x (the repunit valuation shift)."""
        return CrucialPrime(self.p, self.a + x, self.b + x)

    def to_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "b": self.b, "delta": self.delta, "mu": self.mu}


def crucial_primes(n: int, budget: Budget | None = None) -> tuple[CrucialPrime, ...]:
    """Primes dividing n and its reversal to different powers, ascending."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n % 10 == 0:
        raise InvalidInput(f"{n} is divisible by 10")
    r = reverse_digits(n)
    if n == r:
        raise InvalidInput(f"{n} equals its own digit reversal")
    fn = factorize(n, budget)
    fr = factorize(r, budget)
    out = []
    for p in sorted(set(fn.primes()) | set(fr.primes())):
        a, b = fn.exponent(p), fr.exponent(p)
        if a != b:
            out.append(CrucialPrime(p, a, b))
    return tuple(out)


def solve_characteristic(crucial: tuple[CrucialPrime, ...]) -> tuple[Solution, ...]:
    """All sign-balanced increment vectors, in lexicographic order.

    Entry i ranges over v_increment_range(p_i, |delta_i|); a vector solves the
    equation when the delta-signed sum of its entries is zero.
    """
    if not crucial:
        raise ValueError("need at least one crucial prime")
    signs = [1 if cp.delta > 0 else -1 for cp in crucial]
    ranges = [sorted(v_increment_range(cp.p, abs(cp.delta))) for cp in crucial]
    return tuple(
        u for u in itertools.product(*ranges) if sum(s * x for s, x in zip(signs, u)) == 0
    )


@dataclass(frozen=True)
class ProcedureResult:
    """Everything the classification produces for one analyzed number.

    The analyzed number is the copies-fold concatenation of n (copies == 1
    means n itself). Tables are indexed [prime][solution]. ``columns[l]`` is
    the merged constraint pair of solution l; solution l accepts exactly the
    k in its column's S(A, B). ``omega`` is the lcm of every constraint
    element and is a period of the acceptance pattern.
    """

    n: int
    copies: int
    digit_len: int
    crucial: tuple[CrucialPrime, ...]
    solutions: tuple[Solution, ...]
    case_table: tuple[tuple[CaseLabel, ...], ...]
    constraint_table: tuple[tuple[ConstraintPair, ...], ...]
    columns: tuple[ConstraintPair, ...]
    omega: int

    def accepts(self, k: int) -> bool:
        """Whether the k-fold concatenation of the analyzed number is a v-palindrome."""
        if k < 1:
            raise ValueError(f"expected k >= 1, got {k}")
        return any(col.accepts(k) for col in self.columns)

    def type_of(self, k: int) -> Solution:
        """The unique solution whose column accepts k."""
        if k < 1:
            raise ValueError(f"expected k >= 1, got {k}")
        matches = [sol for sol, col in zip(self.solutions, self.columns) if col.accepts(k)]
        if not matches:
            raise NotAVPalindrome(f"concatenation count {k} gives no v-palindrome")
        if len(matches) > 1:
            raise AmbiguousType(f"k={k} accepted by {len(matches)} columns: {matches}")
        return matches[0]

    def first_member(self) -> int | None:
        """Least accepted k (the onset c), or None when no k is ever accepted."""
        firsts = [f for col in self.columns if (f := col.first_member()) is not None]
        return min(firsts) if firsts else None

    def minimal_period(self, cap: int = DEFAULT_MINIMAL_PERIOD_CAP) -> int | None:
        """Least divisor of omega that is a period of the acceptance pattern.

        Verified over a full period window, which is exact. Returns None when
        omega exceeds ``cap`` (the scan would be quadratic in omega).
        """
        if self.omega > cap:
            return None
        pattern = bytes(self.accepts(k) for k in range(1, 2 * self.omega + 1))
        for d in sorted(_divisors(self.omega)):
            if all(pattern[k] == pattern[k + d] for k in range(self.omega)):
                return d
        return self.omega

    def nondegenerate_solutions(self, horizon: int | None = None) -> tuple[Solution, ...]:
        """Solutions whose accepted set meets [1, horizon]; default horizon is omega.

        The accepted set of a column is periodic with period dividing omega,
        so the default decides plain nonemptiness exactly.
        """
        if horizon is None:
            horizon = self.omega
        out = []
        for sol, col in zip(self.solutions, self.columns):
            first = col.first_member()
            if first is not None and first <= horizon:
                out.append(sol)
        return tuple(out)

    @cached_property
    def case_vii_count(self) -> int:
        """Occurrences of the catch-all case in the table (expected never to accept)."""
        return sum(row.count(CaseLabel.VII) for row in self.case_table)

    def to_dict(self, period_cap: int = DEFAULT_MINIMAL_PERIOD_CAP) -> dict:
        return {
            "n": decimal_string(self.n),
            "copies": self.copies,
            "digit_length": self.digit_len,
            "crucial_primes": [cp.to_dict() for cp in self.crucial],
            "solutions": [list(sol) for sol in self.solutions],
            "case_table": [[label.value for label in row] for row in self.case_table],
            "constraint_table": [[pair.to_dict() for pair in row] for row in self.constraint_table],
            "columns": [
                {
                    "solution": list(sol),
                    "A": sorted(col.A),
                    "B": sorted(col.B),
                    "first_member": col.first_member(),
                }
                for sol, col in zip(self.solutions, self.columns)
            ],
            "omega": self.omega,
            "omega0": self.minimal_period(period_cap),
            "c": self.first_member(),
            "nondegenerate": [list(sol) for sol in self.nondegenerate_solutions()],
            "case_vii_count": self.case_vii_count,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "ProcedureResult":
        return cls(
            n=int(d["n"]),
            copies=d["copies"],
            digit_len=d["digit_length"],
            crucial=tuple(CrucialPrime(c["p"], c["a"], c["b"]) for c in d["crucial_primes"]),
            solutions=tuple(tuple(sol) for sol in d["solutions"]),
            case_table=tuple(tuple(CaseLabel(v) for v in row) for row in d["case_table"]),
            constraint_table=tuple(
                tuple(ConstraintPair(e["A"], e["B"]) for e in row) for row in d["constraint_table"]
            ),
            columns=tuple(ConstraintPair(c["A"], c["B"]) for c in d["columns"]),
            omega=d["omega"],
        )


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


def run_procedure(n: int, copies: int = 1, budget: Budget | None = None) -> ProcedureResult:
    """Classify the copies-fold concatenation of n without factoring it.

    With copies == 1 this is the plain classification of n. With copies == k
    the result describes n(k): crucial primes and deltas are reused, mu is
    shifted by the repunit valuation at each prime, and entry orders are taken
    at the concatenation's digit length.
    """
    if copies < 1:
        raise ValueError(f"expected copies >= 1, got {copies}")
    base = crucial_primes(n, budget)
    block = digit_count(n)
    digit_len = block * copies
    if copies == 1:
        crucial = base
    else:
        crucial = tuple(cp.shifted(repunit_valuation(cp.p, copies, block)) for cp in base)
    solutions = solve_characteristic(crucial)
    case_table = tuple(
        tuple(classify_case(cp.p, abs(cp.delta), sol[i], cp.mu) for sol in solutions)
        for i, cp in enumerate(crucial)
    )
    constraint_table = tuple(
        tuple(constraint_entry(crucial[i].p, label, digit_len) for label in row)
        for i, row in enumerate(case_table)
    )
    columns = tuple(
        ConstraintPair(
            frozenset().union(*(row[l].A for row in constraint_table)),
            frozenset().union(*(row[l].B for row in constraint_table)),
        )
        for l in range(len(solutions))
    )
    elements = [x for col in columns for x in col.A | col.B]
    omega = math.lcm(*elements) if elements else 1
    return ProcedureResult(
        n=n,
        copies=copies,
        digit_len=digit_len,
        crucial=crucial,
        solutions=solutions,
        case_table=case_table,
        constraint_table=constraint_table,
        columns=columns,
        omega=omega,
    )
