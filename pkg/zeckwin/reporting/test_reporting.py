import json

import pytest

from zeckwin.automata import build_avoidance_dfa, parse_family
from zeckwin.errors import DomainError, FormatError
from zeckwin.orbit import OrbitSummary
from zeckwin.reporting import Report, claim, export_dot, published, render, verify_paper
from zeckwin.transducer import theta_synthesize


def two_cycle_summary():
    windows = ["1####", "01###", "101##", "01###", "101##", "01###"]
    return OrbitSummary(
        u=1, q=2, M=5, family="101", n_max=5, mode="theta", exponent_set=[0, 1, 3, 5],
        n0=1, p=2, verified_horizon=5, finiteness_verdict="infinite",
        windows=windows, members=[w != "101##" for w in windows],
    )


def test_orbit_dot_marks_cycle():
    source = export_dot("orbit", two_cycle_summary())
    assert source.count("group=cycle") == 2
    assert "n2 -> n1" in source
    assert "cycle length 2" in source


def test_dfa_dot_marks_dead_state():
    source = export_dot("dfa", build_avoidance_dfa(parse_family("101")))
    assert source.count("doublecircle") == 1
    assert "init ->" in source


def test_theta_dot_lists_witnesses():
    source = export_dot("theta", theta_synthesize(2, 1, 10))
    lines = source.splitlines()
    assert lines[0] == "// 2 conflict witnesses"
    assert lines[1] == "// 0: N=2 -> 1, N=5 -> 0"
    assert lines[2] == "// 1: N=1 -> 0, N=6 -> 1"
    assert "color=red" in source


def test_dot_is_stable():
    theta = theta_synthesize(2, 3, 1_000)
    assert export_dot("theta", theta) == export_dot("theta", theta_synthesize(2, 3, 1_000))


def test_unknown_dot_kind():
    with pytest.raises(DomainError):
        export_dot("graph", None)


def test_claim_verdicts():
    assert claim("x", 1, 1).verdict == "match"
    mismatch = claim("y", [0, 1], [0])
    assert mismatch.verdict == "mismatch"
    assert mismatch.observed == [0]


def test_runtime_is_not_serialized():
    report = Report(command="encode", results={"zeck": "10"}, runtime_ms=12.5, text="10")
    payload = json.loads(report.to_json())
    assert "runtime_ms" not in payload and "text" not in payload
    assert render(report, "text") == "10\n"
    with pytest.raises(FormatError):
        render(report, "csv")
    with pytest.raises(FormatError):
        render(report, "dot")


@pytest.fixture(scope="module")
def example_report():
    return verify_paper("example-3")


def claims_by_id(report):
    return {c.claim_id: c for c in report.paper_claims}


def test_example_table_rows(example_report):
    claims = claims_by_id(example_report)
    for n in (0, 1, 2, 3, 5):
        assert claims[f"table1.row{n}.window"].verdict == "match"
        assert claims[f"table1.row{n}.member"].verdict == "match"
    row4 = claims["table1.row4.window"]
    assert row4.verdict == "mismatch"
    assert (row4.expected, row4.observed) == ("10100", "00100")
    for n in (30, 31, 32):
        assert "11" in claims[f"table1.row{n}.window"].note


def test_example_narrative_and_set(example_report):
    claims = claims_by_id(example_report)
    assert claims["narrative.members.n0_3"].verdict == "match"
    diff = claims["example3.exponent_set"].diff
    observed = claims["example3.exponent_set"].observed
    assert set(diff["missing"]) == set(claims["example3.exponent_set"].expected) - set(observed)
    assert set(diff["extra"]) == set(observed) - set(claims["example3.exponent_set"].expected)
    assert all(n <= 200 for n in observed)


def test_example_locality_witness(example_report):
    locality = claims_by_id(example_report)["locality.q2_m1"]
    assert locality.verdict == "mismatch"
    assert {"window": "0", "n1": 2, "n2": 5, "out1": "1", "out2": "0"} in locality.diff["witnesses"]


def test_example_every_claim_has_verdict(example_report):
    assert example_report.mismatches
    for c in example_report.paper_claims:
        assert c.verdict == ("match" if c.expected == c.observed else "mismatch")


def test_unknown_example():
    with pytest.raises(DomainError):
        verify_paper("example-9")


def test_example_preperiod_and_period(example_report):
    claims = claims_by_id(example_report)
    summary = example_report.results["summary"]
    preperiod, period = claims["example3.preperiod"], claims["example3.period"]
    assert (preperiod.expected, period.expected) == (29, 4)
    assert (preperiod.observed, period.observed) == (summary["n0"], summary["p"])
    assert f"horizon {summary['n_max']}" in preperiod.note
    assert f"verified to {summary['verified_horizon']}" in period.note


def test_verifier_errors_are_not_relabelled(monkeypatch):
    def broken():
        raise KeyError("summary")

    monkeypatch.setitem(published.EXAMPLES, "example-3", broken)
    with pytest.raises(KeyError):
        verify_paper("example-3")
