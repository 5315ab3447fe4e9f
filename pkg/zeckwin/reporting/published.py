"""
Published values for the worked example (u=1, q=2, F={101}, M=5) checked
against what the library computes. A mismatch is reported, never corrected.
"""
import logging
import time
from typing import Callable, Dict, List

from zeckwin.errors import DomainError, ThetaConflicted, ThetaIncomplete
from zeckwin.orbit.engine import OrbitConfig, exponent_set, theta_orbit
from zeckwin.reporting.models import PaperClaim, Report, claim
from zeckwin.transducer.theta import theta_synthesize

logger = logging.getLogger(__name__)

EXAMPLE_U = 1
EXAMPLE_Q = 2
EXAMPLE_M = 5
EXAMPLE_FAMILY = "101"
EXAMPLE_HORIZON = 1000
SET_RANGE = 200
THETA_N_CAP = 10_000

TABLE_ROWS = {
    0: ("1####", True),
    1: ("01###", True),
    2: ("101##", False),
    3: ("00001", True),
    4: ("10100", True),
    5: ("00101", False),
    28: ("01010", True),
    29: ("10101", False),
    30: ("01011", False),
    31: ("10110", False),
    32: ("01101", False),
}
NARRATIVE_MEMBERS = {0: True, 1: True, 2: False, 3: True}
EXPONENT_SET = [0, 1, 3, 4, 6, 8, 10, 28]
PREPERIOD = 29
PERIOD = 4

# window dynamics excerpt for q=2, M=3
DYNAMICS_EDGES = [
    ("1##", "01#"),
    ("01#", "010"),
    ("010", "100"),
    ("100", "101"),
    ("101", "101"),
    ("00#", "000"),
    ("000", "001"),
    ("001", "010"),
]


def _table_claims(windows: List[str], members: List[bool]) -> List[PaperClaim]:
    claims = []
    for n, (window, member) in TABLE_ROWS.items():
        note = "window contains 11, which no Zeckendorf window can" if "11" in window else None
        claims.append(claim(f"table1.row{n}.window", window, windows[n], note=note))
        claims.append(
            claim(f"table1.row{n}.member", "yes" if member else "no", "yes" if members[n] else "no")
        )
    return claims


def _set_claim(observed: List[int]) -> PaperClaim:
    shown = [n for n in observed if n <= SET_RANGE]
    missing = sorted(set(EXPONENT_SET) - set(shown))
    extra = sorted(set(shown) - set(EXPONENT_SET))
    return claim(
        "example3.exponent_set",
        EXPONENT_SET,
        shown,
        note=f"compared over [0, {SET_RANGE}]",
        diff={"missing": missing, "extra": extra},
    )


def _dynamics_claims() -> List[PaperClaim]:
    theta = theta_synthesize(EXAMPLE_Q, 3, THETA_N_CAP)
    claims = []
    for v, w in DYNAMICS_EDGES:
        observed = sorted(theta.first_seen.get(v, {}))
        note = None if observed else f"window never produced for N <= {THETA_N_CAP}"
        claims.append(claim(f"figure2.edge.{v}->{w}", [w], observed, note=note))
    return claims


def _finiteness_claim(cfg: OrbitConfig) -> PaperClaim:
    theta = theta_synthesize(cfg.q, cfg.M, THETA_N_CAP)
    try:
        observed = theta_orbit(cfg, theta).finiteness_verdict
        note = f"window map over N <= {THETA_N_CAP}"
    except (ThetaConflicted, ThetaIncomplete) as e:
        observed = "undetermined"
        note = str(e)
    return claim("example3.finiteness", "finite", observed, note=note)


def _locality_claim() -> PaperClaim:
    theta = theta_synthesize(EXAMPLE_Q, 1, 10)
    witnesses = [c.model_dump(mode="json") for c in theta.conflicts]
    return claim(
        "locality.q2_m1",
        "functional",
        "functional" if theta.is_functional else "conflicted",
        note="window map for q=2, M=1 over N <= 10",
        diff={"witnesses": witnesses} if witnesses else None,
    )


def verify_example_3() -> Report:
    started = time.perf_counter()
    cfg = OrbitConfig.create(EXAMPLE_U, EXAMPLE_Q, EXAMPLE_M, EXAMPLE_FAMILY, n_max=EXAMPLE_HORIZON)
    summary = exponent_set(cfg, confirm=True)

    claims = _table_claims(summary.windows, summary.members)
    claims.append(
        claim(
            "narrative.members.n0_3",
            {str(n): ok for n, ok in NARRATIVE_MEMBERS.items()},
            {str(n): summary.members[n] for n in NARRATIVE_MEMBERS},
        )
    )
    claims.append(_set_claim(summary.exponent_set))
    horizon_note = f"oracle candidate at horizon {summary.n_max}, verified to {summary.verified_horizon}"
    claims.append(claim("example3.preperiod", PREPERIOD, summary.n0, note=horizon_note))
    claims.append(claim("example3.period", PERIOD, summary.p, note=horizon_note))
    claims.append(_finiteness_claim(cfg))
    claims.extend(_dynamics_claims())
    claims.append(_locality_claim())

    report = Report(
        command="verify-paper",
        inputs={"example": "example-3", **cfg.model_dump(mode="json")},
        results={
            "summary": summary.export(),
            "windows": {str(n): summary.windows[n] for n in range(33)},
        },
        paper_claims=claims,
        runtime_ms=(time.perf_counter() - started) * 1000,
    )
    logger.info(
        "example-3: %d/%d claims match (%.0f ms)",
        len(claims) - len(report.mismatches), len(claims), report.runtime_ms,
    )
    return report


EXAMPLES: Dict[str, Callable[[], Report]] = {"example-3": verify_example_3}


def verify_paper(example: str) -> Report:
    verifier = EXAMPLES.get(example)
    if verifier is None:
        raise DomainError(f"unknown example {example!r}; available: {', '.join(sorted(EXAMPLES))}")
    return verifier()
