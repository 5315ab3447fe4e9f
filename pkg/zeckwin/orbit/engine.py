"""
Window orbits of u·q^n and the exponent sets S_u^(M).

Two modes:

* oracle: w_n = pref_M(Z~(u·q^n)) computed from the exact integers. Correct at
  every finite horizon; periods found this way are candidates only.
* theta: iterate a conflict-free window map from w_0 and stop at the first
  repeated window. The cycle is exact for that map.
"""
import logging
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from zeckwin.automata.avoidance import ForbiddenFamily, avoids, parse_family
from zeckwin.config.settings import settings
from zeckwin.errors import DomainError, ThetaConflicted, ThetaIncomplete
from zeckwin.numeration.zeckendorf import Window, lsd_prefix
from zeckwin.transducer.theta import ThetaMap

logger = logging.getLogger(__name__)

Verdict = Literal["finite", "infinite", "undetermined"]

PROGRESS_EVERY = 2500


class OrbitConfig(BaseModel):
    u: int = Field(ge=1)
    q: int = Field(ge=2)
    M: int = Field(ge=1)
    family: str
    n_max: int = Field(ge=0)
    override_ml_check: bool = False

    model_config = {"frozen": True}

    @classmethod
    def create(
        cls,
        u: int,
        q: int,
        M: int,
        family: str,
        n_max: Optional[int] = None,
        override_ml_check: bool = False,
    ) -> "OrbitConfig":
        """Validated constructor; raises DomainError instead of a pydantic error."""
        if n_max is None:
            n_max = settings.DEFAULT_N_MAX
        if u < 1:
            raise DomainError(f"u must be >= 1, got {u}")
        if q < 2:
            raise DomainError(f"q must be >= 2, got {q}")
        if M < 1:
            raise DomainError(f"window length M must be >= 1, got {M}")
        if not 0 <= n_max <= settings.MAX_N_MAX:
            raise DomainError(f"n_max must lie in [0, {settings.MAX_N_MAX}], got {n_max}")
        forbidden = parse_family(family)
        if M < forbidden.max_len and not override_ml_check:
            raise DomainError(
                f"window length M={M} is shorter than the longest pattern "
                f"({forbidden.max_len}); pass --override-ml-check to allow it"
            )
        return cls(u=u, q=q, M=M, family=str(forbidden), n_max=n_max, override_ml_check=override_ml_check)

    @property
    def forbidden(self) -> ForbiddenFamily:
        return parse_family(self.family)


class OrbitSummary(BaseModel):
    u: int
    q: int
    M: int
    family: str
    n_max: int
    mode: Literal["oracle", "theta"]
    exponent_set: List[int]
    n0: Optional[int] = None
    p: Optional[int] = None
    verified_horizon: int
    finiteness_verdict: Verdict = "undetermined"
    windows: List[Window] = Field(default_factory=list)
    members: List[bool] = Field(default_factory=list)

    def export(self) -> dict:
        return self.model_dump(mode="json", exclude={"windows", "members"})


def window_sequence(cfg: OrbitConfig, horizon: Optional[int] = None) -> List[Window]:
    """[w_0, ..., w_horizon] with x_{n+1} = q·x_n kept exact."""
    horizon = cfg.n_max if horizon is None else horizon
    if horizon >= PROGRESS_EVERY:
        logger.info("Computing %d windows of %d*%d^n; this takes a while for large horizons", horizon + 1, cfg.u, cfg.q)
    windows = []
    x = cfg.u
    for n in range(horizon + 1):
        windows.append(lsd_prefix(x, cfg.M))
        x *= cfg.q
        if n and n % PROGRESS_EVERY == 0:
            logger.info("Window sequence at n=%d of %d (%d bits)", n, horizon, x.bit_length())
    return windows


def candidate_period(
    windows: Sequence[Window], min_repeats: Optional[int] = None
) -> Optional[Tuple[int, int]]:
    """Least (n0, p), n0 first, with w_{n+p} = w_n for n0 <= n < len - p.

    At least ``min_repeats`` full periods must fit after n0.
    """
    if not windows:
        raise DomainError("candidate_period needs a non-empty window list")
    repeats = min_repeats or settings.PERIOD_MIN_REPEATS
    codes, _ = pd.factorize(pd.Series(list(windows)))
    codes = np.asarray(codes)
    length = len(codes)

    best: Optional[Tuple[int, int]] = None
    for p in range(1, length // repeats + 1):
        mismatch = np.nonzero(codes[p:] != codes[:-p])[0]
        n0 = int(mismatch[-1]) + 1 if mismatch.size else 0
        if length - n0 < repeats * p:
            continue
        if best is None or n0 < best[0]:
            best = (n0, p)
            if n0 == 0:
                break
    return best


def _holds(windows: Sequence[Window], n0: int, p: int) -> bool:
    return all(windows[n + p] == windows[n] for n in range(n0, len(windows) - p))


def confirm_candidate(windows: Sequence[Window], horizon: int) -> Tuple[Optional[Tuple[int, int]], int]:
    """Candidate from windows[:horizon+1], kept only if it holds on all of ``windows``.

    Returns (candidate, verified_horizon); a dropped candidate comes back as None.
    """
    candidate = candidate_period(windows[: horizon + 1])
    if candidate is None:
        return None, horizon
    verified = len(windows) - 1
    if _holds(windows, *candidate):
        return candidate, verified
    logger.warning(
        "Candidate (n0=%d, p=%d) at horizon %d fails at horizon %d; downgraded",
        candidate[0], candidate[1], horizon, verified,
    )
    return None, horizon


def exponent_set(cfg: OrbitConfig, confirm: bool = True) -> OrbitSummary:
    """Oracle-mode S_u^(M) up to n_max, with a candidate (n0, p).

    With ``confirm`` the candidate found at horizon n_max must still hold at
    2·n_max, otherwise it is dropped.
    """
    family = cfg.forbidden
    horizon = cfg.n_max
    full = window_sequence(cfg, 2 * horizon if confirm else horizon)
    windows = full[: horizon + 1]
    members = [avoids(w, family) for w in windows]

    if confirm:
        candidate, verified = confirm_candidate(full, horizon)
    else:
        candidate, verified = candidate_period(windows), horizon

    return OrbitSummary(
        u=cfg.u,
        q=cfg.q,
        M=cfg.M,
        family=cfg.family,
        n_max=cfg.n_max,
        mode="oracle",
        exponent_set=[n for n, ok in enumerate(members) if ok],
        n0=candidate[0] if candidate else None,
        p=candidate[1] if candidate else None,
        verified_horizon=verified,
        finiteness_verdict="undetermined",
        windows=windows,
        members=members,
    )


def theta_orbit(cfg: OrbitConfig, theta: ThetaMap) -> OrbitSummary:
    """Iterate the window map from w_0 until the first repeated window."""
    if (theta.q, theta.window_len) != (cfg.q, cfg.M):
        raise DomainError(
            f"window map is for (q={theta.q}, M={theta.window_len}), orbit needs (q={cfg.q}, M={cfg.M})"
        )
    conflicts = theta.conflicts
    if conflicts:
        first = conflicts[0]
        raise ThetaConflicted(
            f"window map has {len(conflicts)} conflicts, e.g. {first.window!r} -> "
            f"{first.out1!r} (N={first.n1}) and {first.out2!r} (N={first.n2}); use oracle mode"
        )

    family = cfg.forbidden
    entries = theta.entries
    w = lsd_prefix(cfg.u, cfg.M)
    seen = {}
    orbit: List[Window] = []
    while w not in seen:
        seen[w] = len(orbit)
        orbit.append(w)
        if w not in entries:
            raise ThetaIncomplete(
                f"window {w!r} (n={len(orbit) - 1}) was never observed by the window map "
                f"(N <= {theta.n_cap})"
            )
        w = entries[w]
    n0 = seen[w]
    p = len(orbit) - n0

    windows = [orbit[n] if n < len(orbit) else orbit[n0 + (n - n0) % p] for n in range(cfg.n_max + 1)]
    members = [avoids(v, family) for v in windows]
    cycle_accepts = any(avoids(v, family) for v in orbit[n0:])
    logger.info("Window orbit: preperiod %d, cycle length %d", n0, p)

    return OrbitSummary(
        u=cfg.u,
        q=cfg.q,
        M=cfg.M,
        family=cfg.family,
        n_max=cfg.n_max,
        mode="theta",
        exponent_set=[n for n, ok in enumerate(members) if ok],
        n0=n0,
        p=p,
        verified_horizon=cfg.n_max,
        finiteness_verdict="infinite" if cycle_accepts else "finite",
        windows=windows,
        members=members,
    )


def membership_table(summary: OrbitSummary) -> pd.DataFrame:
    """Rows (n, w_n, yes/no) in the layout of the window-evolution table."""
    return pd.DataFrame(
        {
            "n": range(len(summary.windows)),
            "w_n": summary.windows,
            "member": ["yes" if ok else "no" for ok in summary.members],
        }
    )
