"""Brute-force verification: the literal v-palindrome test and corpus harnesses.

Everything here checks the classification tables against direct computation.
The literal test factors a number and its reversal and compares v values; the
harnesses sweep corpora and produce mergeable reports. Factorization misses
under the budget are recorded as skips, never guessed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool

from .digits import digit_count, repeat_concat, repunit, reverse_digits
from .factor import (
    Budget,
    BudgetExhausted,
    factor_repunit,
    factorize,
    primes_up_to,
    v_of_factorization,
    valuation,
)
from .order import repunit_order, repunit_order_rescaled
from .procedure import NotAVPalindrome, run_procedure

# Corpus defaults: small enough that worst-case factorizations stay tractable,
# large enough to exercise nontrivial entry orders.
DEFAULT_NMAX = 2000
DEFAULT_KMAX = 8
DEFAULT_JMAX = 6
DEFAULT_DIGIT_CAP = 48
DEFAULT_OMEGA_CAP = 60


@dataclass
class VerificationReport:
    """Counts plus exact reproduction inputs for every failure and skip."""

    corpus: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    skips: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, **inputs) -> None:
        self.checked += 1
        if passed:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(inputs)

    def record_skip(self, **inputs) -> None:
        self.checked += 1
        self.skipped += 1
        self.skips.append(inputs)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        self.skips.extend(other.skips)
        self.elapsed += other.elapsed
        return self

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "failures": self.failures,
            "skips": self.skips,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def to_text(self) -> str:
        lines = [
            f"corpus: {self.corpus}",
            f"checked {self.checked}: {self.passed} passed, "
            f"{self.failed} failed, {self.skipped} skipped "
            f"({self.elapsed:.1f}s)",
        ]
        for f in self.failures[:50]:
            lines.append(f"  FAIL {f}")
        if len(self.failures) > 50:
            lines.append(f"  ... and {len(self.failures) - 50} more failures")
        return "\n".join(lines)


def eligible(n: int) -> bool:
    """In the procedure's domain: positive, not divisible by 10, not self-reversed."""
    return n >= 1 and n % 10 != 0 and n != reverse_digits(n)


def corpus(nmax: int) -> list[int]:
    return [n for n in range(1, nmax + 1) if eligible(n)]


def oracle_is_vpal(n: int, budget: Budget | None = None) -> bool:
    """The literal test: 10 does not divide n, n differs from its reversal,
    and v(n) equals v of the reversal, both via complete factorization."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n % 10 == 0:
        return False
    r = reverse_digits(n)
    if n == r:
        return False
    return v_of_factorization(factorize(n, budget)) == v_of_factorization(factorize(r, budget))


def oracle_is_vpal_concat(n: int, k: int, budget: Budget | None = None) -> bool:
    """oracle_is_vpal(repeat_concat(n, k)) computed through the product structure.

    n(k) is n times a generalized repunit, so its factorization is the
    exponent-wise merge of the two; same for the reversal (which is the
    concatenation of the reversal). Identical to the literal test, but the
    repunit pieces are factored once per (k, digit length) process-wide.
    """
    if not eligible(n):
        return False
    rho = factor_repunit(k, digit_count(n), budget)
    vn = v_of_factorization(factorize(n, budget).merge(rho))
    vr = v_of_factorization(factorize(reverse_digits(n), budget).merge(rho))
    return vn == vr


def compare_procedure_oracle(
    n: int,
    kmax: int = DEFAULT_KMAX,
    budget: Budget | None = None,
    digit_cap: int = DEFAULT_DIGIT_CAP,
) -> VerificationReport:
    """Procedure verdicts against the factorization oracle for k = 1..kmax."""
    t0 = time.monotonic()
    report = VerificationReport(corpus=f"procedure vs oracle: n={n}, k<={kmax}, cap {digit_cap} digits")
    result = run_procedure(n, budget=budget)
    block = digit_count(n)
    for k in range(1, kmax + 1):
        if block * k > digit_cap:
            break
        predicted = result.accepts(k)
        try:
            actual = oracle_is_vpal_concat(n, k, budget)
        except BudgetExhausted as exc:
            report.record_skip(n=n, k=k, cofactor=str(exc.cofactor))
            continue
        report.record(predicted == actual, n=n, k=k, predicted=predicted, actual=actual)
    report.elapsed = time.monotonic() - t0
    return report


def verify_invariance(
    n: int,
    kmax: int = DEFAULT_JMAX,
    jmax: int = DEFAULT_JMAX,
    budget: Budget | None = None,
) -> VerificationReport:
    """Type of n(k*j) with respect to n versus with respect to n(k).

    Whenever the classification of n accepts k*j, three computations must
    name the same solution: the column of n accepting k*j, the column of the
    shift-parametrized result for n(k) accepting j, and the column of the
    from-scratch classification of the integer n(k) accepting j.
    """
    t0 = time.monotonic()
    report = VerificationReport(corpus=f"type invariance: n={n}, k<={kmax}, j<={jmax}")
    base = run_procedure(n, budget=budget)
    for k in range(1, kmax + 1):
        shifted = run_procedure(n, copies=k, budget=budget)
        try:
            scratch = run_procedure(repeat_concat(n, k), budget=budget)
        except BudgetExhausted as exc:
            report.record_skip(n=n, k=k, cofactor=str(exc.cofactor))
            continue
        for j in range(1, jmax + 1):
            if not base.accepts(k * j):
                # The shifted and scratch views must reject j as well.
                agree = not shifted.accepts(j) and not scratch.accepts(j)
                report.record(agree, n=n, k=k, j=j, kind="rejection mismatch")
                continue
            try:
                t_base = base.type_of(k * j)
                t_shift = shifted.type_of(j)
                t_scratch = scratch.type_of(j)
            except NotAVPalindrome:
                report.record(False, n=n, k=k, j=j, kind="acceptance mismatch")
                continue
            report.record(
                t_base == t_shift == t_scratch,
                n=n, k=k, j=j,
                types=[list(t_base), list(t_shift), list(t_scratch)],
            )
    report.elapsed = time.monotonic() - t0
    return report


def verify_shift_parametrization(
    n: int,
    kmax: int = DEFAULT_JMAX,
    budget: Budget | None = None,
) -> VerificationReport:
    """Shift-parametrized tables versus from-scratch classification of n(k).

    Checks, for each k: same crucial primes (with exponents shifted by the
    independently computed valuation of the repunit), same deltas, same
    solutions, identical tables and columns, equal omega.
    """
    t0 = time.monotonic()
    report = VerificationReport(corpus=f"shift parametrization: n={n}, k<={kmax}")
    base = run_procedure(n, budget=budget)
    block = digit_count(n)
    for k in range(1, kmax + 1):
        shifted = run_procedure(n, copies=k, budget=budget)
        try:
            scratch = run_procedure(repeat_concat(n, k), budget=budget)
        except BudgetExhausted as exc:
            report.record_skip(n=n, k=k, cofactor=str(exc.cofactor))
            continue
        same_primes = [cp.p for cp in scratch.crucial] == [cp.p for cp in base.crucial]
        same_delta = [cp.delta for cp in scratch.crucial] == [cp.delta for cp in base.crucial]
        # Independent shift check: materialize the repunit and take valuations.
        rho = repunit(k, block)
        mu_shift_ok = all(
            sc.mu == bc.mu + valuation(bc.p, rho)
            for sc, bc in zip(scratch.crucial, base.crucial)
        ) if same_primes else False
        tables_equal = (
            scratch.crucial == shifted.crucial
            and scratch.solutions == shifted.solutions
            and scratch.case_table == shifted.case_table
            and scratch.constraint_table == shifted.constraint_table
            and scratch.columns == shifted.columns
            and scratch.omega == shifted.omega
        )
        report.record(
            same_primes and same_delta and mu_shift_ok and tables_equal,
            n=n, k=k,
            same_primes=same_primes, same_delta=same_delta,
            mu_shift_ok=mu_shift_ok, tables_equal=tables_equal,
        )
    report.elapsed = time.monotonic() - t0
    return report


def verify_periodicity(
    n: int,
    periods: int = 2,
    budget: Budget | None = None,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> VerificationReport:
    """Oracle membership over [1, periods*omega] must be omega-periodic.

    omega comes from the classification; the membership pattern comes from the
    factorization oracle alone. Numbers whose omega exceeds the cap are
    reported as skipped (their window is too wide to factor exhaustively).
    """
    t0 = time.monotonic()
    report = VerificationReport(corpus=f"periodicity: n={n}, periods={periods}, omega cap {omega_cap}")
    result = run_procedure(n, budget=budget)
    omega = result.omega
    if omega > omega_cap:
        report.record_skip(n=n, omega=omega, reason="omega exceeds cap")
        report.elapsed = time.monotonic() - t0
        return report
    pattern: dict[int, bool | None] = {}
    for k in range(1, periods * omega + 1):
        try:
            pattern[k] = oracle_is_vpal_concat(n, k, budget)
        except BudgetExhausted as exc:
            pattern[k] = None
            report.record_skip(n=n, k=k, cofactor=str(exc.cofactor))
    for k in range(1, (periods - 1) * omega + 1):
        a, b = pattern[k], pattern[k + omega]
        if a is None or b is None:
            continue
        report.record(a == b, n=n, k=k, omega=omega, at_k=a, at_k_plus_omega=b)
    report.elapsed = time.monotonic() - t0
    return report


def verify_disjointness(n: int, budget: Budget | None = None, window: int = 500) -> VerificationReport:
    """No k may be accepted by two solution columns.

    Decided exactly over a full period by inclusion-exclusion on each column
    pair (the intersection of two columns is itself a divisibility constraint
    set), plus a direct scan of an initial window as a cross-check.
    """
    t0 = time.monotonic()
    report = VerificationReport(corpus=f"column disjointness: n={n}")
    result = run_procedure(n, budget=budget)
    cols = result.columns
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            inter = cols[i].union(cols[j])
            report.record(inter.is_empty(), n=n, columns=[i, j], kind="pairwise intersection")
    for k in range(1, min(result.omega, window) + 1):
        hits = sum(col.accepts(k) for col in cols)
        report.record(hits <= 1, n=n, k=k, hits=hits, kind="window scan")
    report.elapsed = time.monotonic() - t0
    return report


def verify_lemmas(
    p_max: int = 100,
    alpha_max: int = 3,
    k_max: int = 60,
    L_max: int = 6,
    checks: tuple[str, ...] = ("divisibility", "rescale"),
) -> VerificationReport:
    """Exhaustive grid checks of the two entry-order facts.

    divisibility: p**alpha divides repunit(k, L) exactly when the entry order
    divides k, and the entry order is always >= 2.
    rescale: the block-length rescaling identity against the direct order at
    block length L*k.
    """
    t0 = time.monotonic()
    report = VerificationReport(
        corpus=f"entry orders: p<={p_max}, alpha<={alpha_max}, k<={k_max}, L<={L_max}, checks={','.join(checks)}"
    )
    for p in primes_up_to(p_max):
        if p in (2, 5):
            continue
        for alpha in range(1, alpha_max + 1):
            for L in range(1, L_max + 1):
                h = repunit_order(p, alpha, L)
                report.record(h >= 2, p=p, alpha=alpha, L=L, h=h, kind="h lower bound")
                if "divisibility" in checks:
                    m = p**alpha
                    t = pow(10, L, m)
                    acc = 0
                    for k in range(1, k_max + 1):
                        acc = (acc * t + 1) % m
                        divides = acc == 0
                        report.record(
                            divides == (k % h == 0),
                            p=p, alpha=alpha, L=L, k=k, h=h, kind="divisibility",
                        )
                if "rescale" in checks:
                    for k in range(1, k_max + 1):
                        lhs = repunit_order_rescaled(p, alpha, k, L)
                        rhs = repunit_order(p, alpha, L * k)
                        report.record(
                            lhs == rhs, p=p, alpha=alpha, L=L, k=k, lhs=lhs, rhs=rhs, kind="rescale",
                        )
    report.elapsed = time.monotonic() - t0
    return report


def enumerate_vpals(
    limit: int,
    budget: Budget | None = None,
    report: VerificationReport | None = None,
) -> list[int]:
    """All v-palindromes up to limit, ascending, by the literal oracle."""
    if limit < 1:
        raise ValueError(f"expected limit >= 1, got {limit}")
    out = []
    for n in range(1, limit + 1):
        try:
            if oracle_is_vpal(n, budget):
                out.append(n)
        except BudgetExhausted as exc:
            if report is None:
                raise
            report.record_skip(n=n, cofactor=str(exc.cofactor))
    return out


# --- corpus drivers (parallelizable) -----------------------------------------


def _oracle_item(args) -> VerificationReport:
    n, kmax, budget, digit_cap = args
    return compare_procedure_oracle(n, kmax, budget, digit_cap)


def _invariance_item(args) -> VerificationReport:
    n, kmax, jmax, budget = args
    return verify_invariance(n, kmax, jmax, budget)


def _shift_item(args) -> VerificationReport:
    n, kmax, budget = args
    return verify_shift_parametrization(n, kmax, budget)


def _periodicity_item(args) -> VerificationReport:
    n, periods, budget, omega_cap = args
    return verify_periodicity(n, periods, budget, omega_cap)


def _disjointness_item(args) -> VerificationReport:
    n, budget, window = args
    return verify_disjointness(n, budget, window)


def _sweep(item_fn, items, jobs: int, label: str) -> VerificationReport:
    t0 = time.monotonic()
    merged = VerificationReport(corpus=label)
    if jobs > 1:
        with Pool(jobs) as pool:
            for rep in pool.imap(item_fn, items, chunksize=8):
                merged.merge(rep)
    else:
        for item in items:
            merged.merge(item_fn(item))
    merged.elapsed = time.monotonic() - t0
    return merged


def run_oracle_sweep(
    nmax: int = DEFAULT_NMAX,
    kmax: int = DEFAULT_KMAX,
    budget: Budget | None = None,
    digit_cap: int = DEFAULT_DIGIT_CAP,
    jobs: int = 1,
) -> VerificationReport:
    items = [(n, kmax, budget, digit_cap) for n in corpus(nmax)]
    return _sweep(_oracle_item, items, jobs, f"procedure vs oracle: n<={nmax}, k<={kmax}, cap {digit_cap} digits")


def run_invariance_sweep(
    nmax: int = 500,
    kmax: int = DEFAULT_JMAX,
    jmax: int = DEFAULT_JMAX,
    budget: Budget | None = None,
    jobs: int = 1,
) -> VerificationReport:
    items = [(n, kmax, jmax, budget) for n in corpus(nmax)]
    return _sweep(_invariance_item, items, jobs, f"type invariance: n<={nmax}, k<={kmax}, j<={jmax}")


def run_shift_sweep(
    nmax: int = 500,
    kmax: int = DEFAULT_JMAX,
    budget: Budget | None = None,
    jobs: int = 1,
) -> VerificationReport:
    items = [(n, kmax, budget) for n in corpus(nmax)]
    return _sweep(_shift_item, items, jobs, f"shift parametrization: n<={nmax}, k<={kmax}")


def run_periodicity_sweep(
    nmax: int = 1000,
    periods: int = 2,
    budget: Budget | None = None,
    omega_cap: int = DEFAULT_OMEGA_CAP,
    jobs: int = 1,
) -> VerificationReport:
    items = [(n, periods, budget, omega_cap) for n in corpus(nmax)]
    return _sweep(
        _periodicity_item, items, jobs,
        f"periodicity: n<={nmax}, periods={periods}, omega cap {omega_cap}",
    )


def run_disjointness_sweep(
    nmax: int = DEFAULT_NMAX,
    budget: Budget | None = None,
    window: int = 500,
    jobs: int = 1,
) -> VerificationReport:
    items = [(n, budget, window) for n in corpus(nmax)]
    return _sweep(_disjointness_item, items, jobs, f"column disjointness: n<={nmax}")
