import json
import os
import subprocess

import pytest

import cofull

TWO_LINES = (
    "ring S = F2[x,y,z];"
    "ideal I = (x*y, x*z);"
    "invariants I; fullness I;"
)


def test_invariants_and_fullness():
    reports = cofull.run(TWO_LINES)
    assert len(reports) == 2
    inv, ful = reports
    assert inv["command"] == "invariants"
    assert inv["result"]["depth"] == 1
    assert inv["result"]["pd"] == 2
    assert inv["result"]["reg"] == 1
    assert inv["result"]["cd"] == {"kind": "exact", "value": 2}
    assert ful["result"]["aggregate"] is True
    assert inv["engine_version"] == cofull.version()


def test_parse_error():
    with pytest.raises(cofull.ParseError, match="unknown variable w"):
        cofull.run("ideal I = (w);")


def test_precondition_error():
    with pytest.raises(cofull.PreconditionError, match="E_UNIT_IDEAL"):
        cofull.run("ring S = F5[x,y]; ideal I = (x+1, x); fullness I;")


def test_parse_check_round_trip():
    once = cofull.parse_check(TWO_LINES)
    assert cofull.parse_check(once) == once


def test_sweep_verdicts():
    reports = cofull.run("ring S = F5[x,y,z]; sweep primes [5,7,11,13] segre 3;")
    per = reports[0]["result"]["per_prime"]
    assert {p: per[p]["result"]["full"] for p in per} == {
        "5": False,
        "7": True,
        "11": False,
        "13": True,
    }


def test_reports_stable_up_to_timing():
    def stripped():
        out = []
        for r in cofull.run_session(TWO_LINES):
            d = json.loads(r)
            d.pop("timing_ms")
            out.append(json.dumps(d, sort_keys=True))
        return out

    assert stripped() == stripped()


def test_cache_dir(tmp_path):
    cofull.run(TWO_LINES, cache_dir=str(tmp_path))
    assert any(p.suffix == ".gb" for p in tmp_path.iterdir())
    cofull.set_cache_dir("")


CLI = os.environ.get("COFULL_CLI")


@pytest.mark.skipif(not CLI, reason="COFULL_CLI not set")
def test_cli_round_trip(tmp_path):
    f = tmp_path / "s.cfl"
    f.write_text(TWO_LINES + "\n")
    out = subprocess.run([CLI, "run", str(f), "--json"], capture_output=True, text=True)
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert lines[0]["result"]["depth"] == 1

    bad = tmp_path / "bad.cfl"
    bad.write_text("ideal I = (w);\n")
    out = subprocess.run([CLI, "run", str(bad)], capture_output=True, text=True)
    assert out.returncode == 2
    assert "E_UNKNOWN_VARIABLE" in out.stderr
