"""
Empirical window-update map for multiplication by q.

``theta_synthesize`` scans N = 1..n_cap and records, for every input window
pref_M(Z~(N)), which output windows pref_M(Z~(qN)) occur and the smallest N
producing each. The recorded table is the whole state of a ThetaMap; entries
and conflict witnesses are derived from it, so partial scans over disjoint
ranges merge by plain union.
"""
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from zeckwin.config.settings import settings
from zeckwin.errors import DomainError
from zeckwin.numeration.zeckendorf import Window, c_of_q, fib, lsd_digits, pad_window

logger = logging.getLogger(__name__)


class ConflictWitness(BaseModel):
    window: Window
    n1: int
    n2: int
    out1: Window
    out2: Window


class ThetaMap(BaseModel):
    q: int = Field(ge=2)
    window_len: int = Field(ge=1)
    n_min: int = 1
    n_cap: int = Field(ge=0)
    # input window -> {output window -> smallest N seen}
    first_seen: Dict[str, Dict[str, int]] = Field(default_factory=dict)

    @classmethod
    def from_entries(cls, q: int, window_len: int, entries: Dict[str, str]) -> "ThetaMap":
        """A hand-written, conflict-free map (no sample data behind it)."""
        return cls(
            q=q,
            window_len=window_len,
            n_min=0,
            n_cap=0,
            first_seen={v: {w: 0} for v, w in entries.items()},
        )

    @property
    def entries(self) -> Dict[str, str]:
        return {
            v: min(outs.items(), key=lambda item: (item[1], item[0]))[0]
            for v, outs in sorted(self.first_seen.items())
        }

    @property
    def conflicts(self) -> List[ConflictWitness]:
        witnesses = []
        for v, outs in sorted(self.first_seen.items()):
            if len(outs) < 2:
                continue
            ranked = sorted(outs.items(), key=lambda item: (item[1], item[0]))
            out1, n1 = ranked[0]
            for out2, n2 in ranked[1:]:
                witnesses.append(ConflictWitness(window=v, n1=n1, n2=n2, out1=out1, out2=out2))
        return witnesses

    @property
    def is_functional(self) -> bool:
        return all(len(outs) == 1 for outs in self.first_seen.values())

    def coverage(self) -> Dict[str, int]:
        # lsd_prefix reaches F_{M+3} - 1 distinct windows of length M
        return {"seen": len(self.first_seen), "reachable": fib(self.window_len + 3) - 1}

    def edges(self) -> List[Tuple[str, str, bool]]:
        """Every observed (input, output) pair with a conflict flag, sorted."""
        return [
            (v, w, len(outs) > 1)
            for v, outs in sorted(self.first_seen.items())
            for w in sorted(outs)
        ]

    def to_json(self) -> Dict:
        return {
            "q": self.q,
            "M": self.window_len,
            "n_min": self.n_min,
            "n_cap": self.n_cap,
            "entries": self.entries,
            "conflicts": [w.model_dump(mode="json") for w in self.conflicts],
            "coverage": self.coverage(),
            "first_seen": {v: dict(sorted(outs.items())) for v, outs in sorted(self.first_seen.items())},
        }

    @classmethod
    def from_json(cls, payload: Dict) -> "ThetaMap":
        return cls(
            q=payload["q"],
            window_len=payload["M"],
            n_min=payload.get("n_min", 1),
            n_cap=payload["n_cap"],
            first_seen=payload["first_seen"],
        )


def merge_theta_maps(a: ThetaMap, b: ThetaMap) -> ThetaMap:
    if (a.q, a.window_len) != (b.q, b.window_len):
        raise DomainError(
            f"cannot merge window maps for (q={a.q}, M={a.window_len}) and (q={b.q}, M={b.window_len})"
        )
    merged: Dict[str, Dict[str, int]] = {v: dict(outs) for v, outs in a.first_seen.items()}
    for v, outs in b.first_seen.items():
        slot = merged.setdefault(v, {})
        for w, n in outs.items():
            slot[w] = min(n, slot.get(w, n))
    return ThetaMap(
        q=a.q,
        window_len=a.window_len,
        n_min=min(a.n_min, b.n_min),
        n_cap=max(a.n_cap, b.n_cap),
        first_seen=merged,
    )


def _scan_range(q: int, m: int, lo: int, hi: int) -> ThetaMap:
    first_seen: Dict[str, Dict[str, int]] = {}
    for n in range(lo, hi + 1):
        v = pad_window(lsd_digits(n), m)
        w = pad_window(lsd_digits(q * n), m)
        outs = first_seen.setdefault(v, {})
        if w not in outs:
            outs[w] = n
    return ThetaMap(q=q, window_len=m, n_min=lo, n_cap=hi, first_seen=first_seen)


def theta_synthesize(q: int, m: int, n_cap: int, chunk_size: Optional[int] = None) -> ThetaMap:
    """Scan N = 1..n_cap in chunks and merge the partial maps."""
    c_of_q(q)
    if m < 1:
        raise DomainError(f"window length must be >= 1, got {m}")
    if n_cap < 1:
        raise DomainError(f"n_cap must be >= 1, got {n_cap}")
    chunk = chunk_size or settings.SCAN_CHUNK_SIZE

    theta: Optional[ThetaMap] = None
    for lo in range(1, n_cap + 1, chunk):
        hi = min(n_cap, lo + chunk - 1)
        logger.debug("Scanning N in [%d, %d] for q=%d, M=%d", lo, hi, q, m)
        part = _scan_range(q, m, lo, hi)
        theta = part if theta is None else merge_theta_maps(theta, part)

    conflicts = theta.conflicts
    if conflicts:
        logger.info(
            "Window map q=%d M=%d over N<=%d has %d conflict witnesses",
            q, m, n_cap, len(conflicts),
        )
    return theta


def _conflict_free(pairs: List[Tuple[str, str]], m: int, width: int) -> bool:
    seen: Dict[str, str] = {}
    for stream_n, stream_qn in pairs:
        v = pad_window(stream_n, width)
        w = pad_window(stream_qn, m)
        if seen.setdefault(v, w) != w:
            return False
    return True


def locality_probe(q: int, m: int, n_cap: int, d_max: int) -> Optional[int]:
    """Least D <= d_max such that pref_{M+D}(Z~(N)) determines pref_M(Z~(qN)).

    Returns None when every D up to d_max shows a conflict over N <= n_cap.
    """
    c_of_q(q)
    if m < 1:
        raise DomainError(f"window length must be >= 1, got {m}")
    if d_max < 0:
        raise DomainError(f"d_max must be >= 0, got {d_max}")
    pairs = [(lsd_digits(n), lsd_digits(q * n)) for n in range(1, n_cap + 1)]
    for d in range(d_max + 1):
        if _conflict_free(pairs, m, m + d):
            logger.info("Input width M+%d determines the output window (q=%d, M=%d, N<=%d)", d, q, m, n_cap)
            return d
    logger.info("No input width up to M+%d determines the output window (q=%d, M=%d, N<=%d)", d_max, q, m, n_cap)
    return None
