"""Acceptance suite: each criterion at its stated bounds, one printed line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Every criterion demands zero failures; criterion 1 additionally bounds budget
skips below 1% of checks. Reported skips elsewhere are corpus entries whose
factorizations exceed the budget (recorded, never guessed).
"""

import json
from pathlib import Path

from vpal.digits import repeat_concat, reverse_digits
from vpal.factor import Budget, v_value
from vpal.oracle import (
    enumerate_vpals,
    oracle_is_vpal,
    run_disjointness_sweep,
    run_invariance_sweep,
    run_oracle_sweep,
    run_periodicity_sweep,
    run_shift_sweep,
    verify_lemmas,
)
from vpal.procedure import CaseLabel, run_procedure

GOLDEN_TRACES = json.loads(
    (Path(__file__).parent / "data" / "golden_procedures.json").read_text()
)

# Hard cyclotomic pieces (40-digit semiprimes) fail under any realistic budget;
# a short one keeps the periodicity sweep quick without losing winnable pieces.
SCAN_BUDGET = Budget(seconds=1.5)


def _report_line(cid, name, rep, skip_cap=None):
    ok = rep.failed == 0 and (skip_cap is None or rep.skipped <= skip_cap * rep.checked)
    status = "PASS" if ok else "FAIL"
    print(
        f"\nACCEPTANCE {cid} ({name}): {status} - "
        f"checked {rep.checked}, passed {rep.passed}, failed {rep.failed}, "
        f"skipped {rep.skipped}, {rep.elapsed:.1f}s"
    )
    return ok


def test_criterion_1_oracle_equivalence():
    rep = run_oracle_sweep(nmax=2000, kmax=8, digit_cap=48)
    ok = _report_line(1, "procedure vs factorization oracle, n<=2000 k<=8", rep, skip_cap=0.01)
    assert ok, rep.failures[:5] or rep.skips[:5]


def test_criterion_2_type_invariance():
    rep = run_invariance_sweep(nmax=500, kmax=6, jmax=6)
    ok = _report_line(2, "type invariance across bases, n<=500 k,j<=6", rep)
    assert ok, rep.failures[:5]
    assert rep.skipped == 0


def test_criterion_3_entry_order_divisibility():
    rep = verify_lemmas(p_max=100, alpha_max=3, k_max=60, L_max=6, checks=("divisibility",))
    ok = _report_line(3, "entry-order divisibility + lower bound, p<=100 a<=3 L<=6 k<=60", rep)
    assert ok, rep.failures[:5]
    assert rep.skipped == 0


def test_criterion_4_rescaling_identity():
    rep = verify_lemmas(p_max=50, alpha_max=2, k_max=12, L_max=4, checks=("rescale",))
    ok = _report_line(4, "block-length rescaling identity, p<=50 a<=2 k<=12 L<=4", rep)
    assert ok, rep.failures[:5]
    assert rep.skipped == 0


def test_criterion_5_periodicity():
    rep = run_periodicity_sweep(nmax=1000, periods=2, budget=SCAN_BUDGET, omega_cap=60)
    ok = _report_line(5, "oracle pattern is omega-periodic, n<=1000 omega<=60", rep)
    assert ok, rep.failures[:5]
    assert rep.passed > 500  # the comparable corpus must stay substantial


def test_criterion_6_golden_traces():
    checks = 0
    for n in (18, 12, 13):
        assert run_procedure(n).to_dict() == GOLDEN_TRACES[str(n)], n
        checks += 1

    r18 = run_procedure(18)
    assert r18.solutions == ((2, 2),)
    assert r18.case_table == ((CaseLabel.III,), (CaseLabel.VI,))
    for k in range(1, 9):
        nk = repeat_concat(18, k)
        rk = reverse_digits(nk)
        assert rk == repeat_concat(81, k)
        assert v_value(nk) == v_value(rk), k  # both sides by direct factorization
        assert r18.accepts(k)
        checks += 1

    r12 = run_procedure(12)
    assert r12.first_member() is None
    for k in range(1, 9):
        assert not r12.accepts(k)
        assert not oracle_is_vpal(repeat_concat(12, k)), k
        checks += 1

    r13 = run_procedure(13)
    assert r13.first_member() == 15
    assert oracle_is_vpal(repeat_concat(13, 15))  # direct 30-digit factorization
    for k in range(1, 15):
        assert not oracle_is_vpal(repeat_concat(13, k)), k
        checks += 1

    print(f"\nACCEPTANCE 6 (golden traces 18/12/13): PASS - checked {checks}, failed 0")


def test_criterion_7_shift_invariances():
    rep = run_shift_sweep(nmax=500, kmax=6)
    ok = _report_line(7, "crucial primes/solutions/delta invariant, mu shifts, n<=500 k<=6", rep)
    assert ok, rep.failures[:5]
    assert rep.skipped == 0


def test_criterion_8_disjointness():
    rep = run_disjointness_sweep(nmax=2000)
    ok = _report_line(8, "no k accepted by two columns, full corpus", rep)
    assert ok, rep.failures[:5]
    assert rep.skipped == 0


def test_enumeration_golden_file():
    # companion check: the shipped enumeration golden matches a fresh scan
    from importlib import resources

    golden = [
        int(line)
        for line in resources.files("vpal").joinpath("data/vpalindromes_1e4.txt").read_text().split()
    ]
    fresh = enumerate_vpals(10_000)
    assert fresh == golden
    assert fresh[:3] == [18, 81, 198]
    print(f"\nACCEPTANCE + (enumeration golden, limit 10^4): PASS - {len(fresh)} values")
