import json

import pytest

from zeckwin.main import run


def output_of(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["encode", "16"], "100100"),
        (["window", "8", "--M", "5"], "00001"),
        (["decode", "10101"], "12"),
        (["normalize", "1,1,1,1"], "10100"),
        (["mul", "5", "--q", "2"], "10010"),
        (["mul", "7", "--q", "3", "--method", "chain"], "1000000"),
        (["avoid", "00101", "--family", "101"], "no"),
        (["check-locality", "--q", "2", "--M", "1", "--n-cap", "10", "--d-max", "0"], "NotFound"),
    ],
)
def test_text_output(capsys, argv, expected):
    code, out = output_of(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_decode_inverts_encode(capsys):
    for n in (1, 99, 123456789):
        _, word = output_of(capsys, "encode", str(n))
        _, value = output_of(capsys, "decode", word.strip())
        assert int(value) == n


@pytest.mark.parametrize(
    "argv",
    [
        ["encode", "0"],
        ["decode", "0110"],
        ["window", "8", "--M", "0"],
        ["orbit", "--M", "2", "--family", "101"],
        ["orbit", "--q", "1"],
        ["encode", "5", "--format", "dot"],
        ["export-dot", "graph"],
    ],
)
def test_invalid_input_exits_1(capsys, argv):
    code, out = output_of(capsys, *argv)
    assert code == 1
    assert out == ""


def test_usage_error_is_nonzero(capsys):
    assert run(["frobnicate"]) != 0
    assert run([]) != 0


def test_stream_failure_is_reported(capsys):
    code, out = output_of(capsys, "mul", "3", "--method", "stream", "--carry-bound", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"]["failure"]["reason"] == "carry_bound"


def test_json_is_byte_identical(capsys):
    argv = ["orbit", "--n-max", "60", "--format", "json"]
    _, first = output_of(capsys, *argv)
    _, second = output_of(capsys, *argv)
    assert first == second
    payload = json.loads(first)
    assert payload["command"] == "orbit"
    assert "runtime_ms" not in payload
    assert payload["results"]["exponent_set"][:4] == [0, 1, 3, 4]


def test_orbit_csv(capsys):
    code, out = output_of(capsys, "orbit", "--n-max", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,w_n,member"
    assert lines[4] == "3,00001,yes"
    assert len(lines) == 7


def test_synthesize_theta_json(capsys):
    code, out = output_of(capsys, "synthesize-theta", "--q", "2", "--M", "1", "--n-cap", "10", "--no-cache", "--format", "json")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["conflicts"][0] == {"window": "0", "n1": 2, "n2": 5, "out1": "1", "out2": "0"}


def test_theta_orbit_conflict_exits_1(capsys):
    code, _ = output_of(capsys, "orbit", "--mode", "theta", "--M", "1", "--family", "1", "--n-cap", "10", "--no-cache")
    assert code == 1


def test_export_dot_to_file(tmp_path, capsys):
    target = tmp_path / "dfa.dot"
    code, out = output_of(capsys, "export-dot", "dfa", "--family", "11,101", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("digraph avoidance {")


def test_unwritable_out_exits_1(tmp_path, capsys):
    target = tmp_path / "missing" / "dfa.dot"
    code, out = output_of(capsys, "export-dot", "dfa", "--family", "101", "--out", str(target))
    assert code == 1
    assert out == ""
    assert not target.exists()


def test_published_mismatches_exit_2(capsys):
    code, out = output_of(capsys, "verify-paper", "example-3", "--format", "json")
    assert code == 2
    claims = {c["claim_id"]: c for c in json.loads(out)["paper_claims"]}
    assert claims["table1.row3.window"]["verdict"] == "match"
    assert claims["table1.row4.window"]["verdict"] == "mismatch"
