import logging

import pytest

from zeckwin.errors import DomainError, ThetaConflicted, ThetaIncomplete
from zeckwin.numeration import lsd_prefix
from zeckwin.orbit import (
    OrbitConfig,
    OrbitSummary,
    candidate_period,
    confirm_candidate,
    exponent_set,
    membership_table,
    theta_orbit,
    window_sequence,
)
from zeckwin.orbit import engine
from zeckwin.orbit.engine import _holds
from zeckwin.transducer import ThetaMap, theta_synthesize


def example(n_max=40, **overrides):
    params = dict(u=1, q=2, M=5, family="101", n_max=n_max)
    params.update(overrides)
    return OrbitConfig.create(**params)


def test_window_evolution_rows():
    summary = exponent_set(example())
    assert summary.windows[:6] == ["1####", "01###", "101##", "00001", "00100", "00101"]
    assert summary.members[:6] == [True, True, False, True, True, False]
    assert summary.exponent_set[:4] == [0, 1, 3, 4]


def test_windows_match_direct_prefixes():
    cfg = example(n_max=120, u=3, q=5, M=7, family="11,101")
    for n, w in enumerate(window_sequence(cfg)):
        assert w == lsd_prefix(3 * 5**n, 7)


def test_shift_by_one_step():
    a = window_sequence(example(n_max=60))
    b = window_sequence(example(n_max=59, u=2))
    assert b == a[1:]


def test_config_preconditions():
    with pytest.raises(DomainError):
        example(q=1)
    with pytest.raises(DomainError):
        example(u=0)
    with pytest.raises(DomainError):
        example(M=2)
    assert example(M=2, override_ml_check=True).M == 2
    with pytest.raises(DomainError):
        example(n_max=10**9)


def test_candidate_period():
    assert candidate_period(["A", "B", "C", "B", "C", "B", "C"]) == (1, 2)
    assert candidate_period(["A", "A", "A"]) == (0, 1)
    assert candidate_period(["A", "B", "C", "D"]) is None
    with pytest.raises(DomainError):
        candidate_period([])


def test_candidate_needs_two_periods():
    assert candidate_period(["A", "B", "A"]) is None
    assert candidate_period(["A", "B", "A", "B"]) == (0, 2)


def test_exponent_set_is_deterministic():
    first = exponent_set(example(n_max=200))
    second = exponent_set(example(n_max=200))
    assert first.export() == second.export()
    assert first.finiteness_verdict == "undetermined"
    assert first.verified_horizon in (200, 400)
    if first.p is not None:
        assert first.verified_horizon == 400
    else:
        assert first.verified_horizon == 200


def test_holds():
    assert _holds(["A", "B", "C", "B", "C"], 1, 2)
    assert not _holds(["A", "B", "C", "B", "D"], 1, 2)
    assert _holds(["A", "B"], 0, 5)


def test_candidate_dropped_when_tail_breaks_period(caplog):
    windows = ["A", "B"] * 3 + ["C"] * 5
    assert candidate_period(windows[:6]) == (0, 2)
    engine_logger = logging.getLogger("zeckwin.orbit.engine")
    engine_logger.addHandler(caplog.handler)
    try:
        with caplog.at_level(logging.WARNING, logger="zeckwin.orbit.engine"):
            assert confirm_candidate(windows, 5) == (None, 5)
    finally:
        engine_logger.removeHandler(caplog.handler)
    assert any("downgraded" in r.getMessage() for r in caplog.records)


def test_candidate_kept_when_tail_agrees():
    assert confirm_candidate(["A", "B"] * 6, 5) == ((0, 2), 11)
    assert confirm_candidate(["A", "B", "C", "D"], 3) == (None, 3)


def test_long_horizons_log_progress(caplog, monkeypatch):
    monkeypatch.setattr(engine, "PROGRESS_EVERY", 50)
    engine_logger = logging.getLogger("zeckwin.orbit.engine")
    engine_logger.addHandler(caplog.handler)
    try:
        with caplog.at_level(logging.INFO, logger="zeckwin.orbit.engine"):
            window_sequence(example(n_max=120))
    finally:
        engine_logger.removeHandler(caplog.handler)
    messages = [r.getMessage() for r in caplog.records if r.levelno == logging.INFO]
    assert any("n=100 of 120" in m for m in messages)
    assert any("121 windows" in m for m in messages)


def test_theta_fixed_point():
    theta = ThetaMap.from_entries(2, 5, {"1####": "1####"})
    summary = theta_orbit(example(n_max=10), theta)
    assert (summary.n0, summary.p) == (0, 1)
    assert summary.finiteness_verdict == "infinite"
    assert summary.exponent_set == list(range(11))


def test_theta_chain_into_rejecting_loop():
    theta = ThetaMap.from_entries(2, 5, {"1####": "101##", "101##": "101##"})
    summary = theta_orbit(example(n_max=10), theta)
    assert (summary.n0, summary.p) == (1, 1)
    assert summary.finiteness_verdict == "finite"
    assert summary.exponent_set == [0]


def test_theta_orbit_agrees_with_its_map():
    entries = {"1####": "01###", "01###": "101##", "101##": "00001", "00001": "01###"}
    summary = theta_orbit(example(n_max=12), ThetaMap.from_entries(2, 5, entries))
    assert (summary.n0, summary.p) == (1, 3)
    for n in range(12):
        assert summary.windows[n + 1] == entries[summary.windows[n]]


def test_theta_orbit_matches_oracle_windows():
    cfg = example(n_max=40)
    seq = window_sequence(cfg)
    r = next(n for n in range(len(seq)) if seq[n] in seq[:n])
    assert r <= 20
    entries = {seq[n]: seq[n + 1] for n in range(r)}
    summary = theta_orbit(cfg, ThetaMap.from_entries(2, 5, entries))
    assert summary.windows[: r + 1] == seq[: r + 1]
    assert summary.n0 == seq.index(seq[r])
    assert summary.p == r - summary.n0


def test_theta_orbit_refuses_conflicted_map():
    cfg = example(n_max=10, M=1, family="1")
    with pytest.raises(ThetaConflicted):
        theta_orbit(cfg, theta_synthesize(2, 1, 10))


def test_theta_orbit_reports_unseen_window():
    with pytest.raises(ThetaIncomplete):
        theta_orbit(example(n_max=10), ThetaMap.from_entries(2, 5, {"1####": "01###"}))


def test_theta_orbit_checks_parameters():
    with pytest.raises(DomainError):
        theta_orbit(example(), ThetaMap.from_entries(3, 5, {"1####": "1####"}))


def test_membership_table():
    summary = exponent_set(example(n_max=5), confirm=False)
    table = membership_table(summary)
    assert list(table.columns) == ["n", "w_n", "member"]
    assert table.iloc[3].tolist() == [3, "00001", "yes"]
    assert table.iloc[2]["member"] == "no"


def test_export_leaves_out_window_lists():
    exported = exponent_set(example(n_max=5)).export()
    assert "windows" not in exported and "members" not in exported
    assert OrbitSummary(**exported).exponent_set == exported["exponent_set"]
