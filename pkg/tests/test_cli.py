import json

import pytest

from vpal.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_v(capsys):
    assert run(capsys, "v", "18") == (EXIT_OK, "7\n", "")
    assert run(capsys, "v", "1") == (EXIT_OK, "0\n", "")
    assert run(capsys, "v", "81") == (EXIT_OK, "7\n", "")


def test_check(capsys):
    code, out, _ = run(capsys, "check", "18")
    assert code == EXIT_OK and out == "yes: v(18) = 7 = v(81)\n"
    code, out, _ = run(capsys, "check", "12")
    assert code == EXIT_OK and "7" in out and "10" in out and out.startswith("no")
    code, out, _ = run(capsys, "check", "22")
    assert code == EXIT_OK and out.startswith("no")
    code, out, _ = run(capsys, "check", "20")
    assert code == EXIT_OK and "10" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "18", "--json")
    d = json.loads(out)
    assert d == {
        "n": "18", "vpalindrome": True, "v": 7, "reversal": "81", "v_of_reversal": 7,
    }


def test_type(capsys):
    assert run(capsys, "type", "18", "4")[1] == "(2, 2)\n"
    assert run(capsys, "type", "12", "3")[1] == "not a v-palindrome\n"
    assert run(capsys, "type", "13", "15")[1] == "(2, 2)\n"


def test_procedure_text(capsys):
    code, out, _ = run(capsys, "procedure", "18")
    assert code == EXIT_OK
    assert "p=2" in out and "p=3" in out
    assert "(2, 2)" in out
    assert "omega = 1" in out


def test_procedure_json_schema_and_verdict_parity(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    schema = json.loads(
        (Path(__file__).parent.parent / "docs" / "procedure-result.schema.json").read_text()
    )
    code, out, _ = run(capsys, "procedure", "13", "--json")
    assert code == EXIT_OK
    d = json.loads(out)
    jsonschema.validate(d, schema)
    assert d["c"] == 15
    assert [c["A"] for c in d["columns"]] == [[39, 465], [3, 15]]
    # text mode reports the same verdict values
    _, text, _ = run(capsys, "procedure", "13")
    assert "c = 15" in text and "omega = 6045" in text


def test_procedure_copies(capsys):
    code, out, _ = run(capsys, "procedure", "18", "--copies", "3", "--json")
    d = json.loads(out)
    assert d["copies"] == 3 and d["digit_length"] == 6


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["procedure"])  # missing argument
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["v", "-5"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["v", "abc"])
    assert exc.value.code == EXIT_USAGE


def test_domain_errors_exit_64(capsys):
    code, _, err = run(capsys, "procedure", "20")
    assert code == EXIT_USAGE and "divisible by 10" in err
    code, _, err = run(capsys, "procedure", "18", "--copies", "0")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "type", "22", "3")
    assert code == EXIT_USAGE and "reversal" in err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("VPAL_BUDGET", "0.1")
    n = str(100000000000000000000000000319 * 100000000000000000000000000379)
    code, _, err = run(capsys, "v", n)
    assert code == EXIT_BUDGET


def test_budget_exhaustion_exit_2(capsys):
    # product of two 30-digit primes; tiny budget cannot split it
    n = str(100000000000000000000000000319 * 100000000000000000000000000379)
    code, _, err = run(capsys, "--budget", "0.1", "v", n)
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_verify_lemmas_cli(capsys):
    code, out, _ = run(
        capsys, "verify", "lemmas", "--pmax", "20", "--alphamax", "1",
        "--kmax", "6", "--lmax", "2", "--check", "divisibility",
    )
    assert code == EXIT_OK
    assert "0 failed" in out


def test_verify_periodicity_cli(capsys):
    # small budget: the unwinnable cyclotomic pieces fail fast and are skipped
    code, out, _ = run(
        capsys, "--budget", "0.3", "verify", "--json", "periodicity", "--nmax", "18",
    )
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["failed"] == 0 and d["passed"] > 0


def test_verify_disjointness_cli(capsys):
    code, out, _ = run(capsys, "verify", "disjointness", "--nmax", "60", "--window", "50")
    assert code == EXIT_OK and "0 failed" in out


def test_verify_oracle_cli_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--json", "oracle", "--nmax", "30", "--kmax", "3",
    )
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["failed"] == 0 and d["checked"] > 0


def test_verify_enumerate_cli(capsys):
    code, out, _ = run(capsys, "verify", "enumerate", "--limit", "100", "--print")
    assert code == EXIT_OK
    assert "18" in out and "81" in out


def test_verify_parallel_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "--json", "oracle", "--nmax", "40", "--kmax", "2")
    code2, out2, _ = run(
        capsys, "verify", "--json", "--jobs", "2", "oracle", "--nmax", "40", "--kmax", "2"
    )
    assert code1 == code2 == EXIT_OK
    d1, d2 = json.loads(out1), json.loads(out2)
    for key in ("checked", "passed", "failed", "skipped"):
        assert d1[key] == d2[key]


def test_unbounded_decimal_input(capsys):
    n = "1" * 5001  # 5001 digits, past any int/str conversion cap
    code, out, _ = run(capsys, "check", n)
    assert code == EXIT_OK  # palindrome: verdict needs no factorization
    assert out.startswith("no")
