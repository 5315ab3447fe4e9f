import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from zeckwin.config.settings import settings
from zeckwin.errors import DomainError

OutputFormat = Literal["json", "csv", "dot", "text"]


class PaperClaim(BaseModel):
    claim_id: str
    expected: Any
    observed: Any
    verdict: Literal["match", "mismatch"]
    note: Optional[str] = None
    diff: Optional[Dict[str, Any]] = None


def claim(claim_id: str, expected: Any, observed: Any, note: Optional[str] = None, diff: Optional[Dict] = None) -> PaperClaim:
    """Compare one published value against the computed one."""
    return PaperClaim(
        claim_id=claim_id,
        expected=expected,
        observed=observed,
        verdict="match" if expected == observed else "mismatch",
        note=note,
        diff=diff,
    )


class Report(BaseModel):
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    results: Dict[str, Any] = Field(default_factory=dict)
    paper_claims: List[PaperClaim] = Field(default_factory=list)
    # kept off the serialized payload so output stays byte-identical
    runtime_ms: float = Field(default=0.0, exclude=True)
    text: Optional[str] = Field(default=None, exclude=True)

    @property
    def mismatches(self) -> List[PaperClaim]:
        return [c for c in self.paper_claims if c.verdict == "mismatch"]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        if self.text is not None and not self.paper_claims:
            return self.text + "\n"
        lines = [] if self.text is None else [self.text, ""]
        if self.text is None:
            for key, value in sorted(self.results.items()):
                lines.append(f"{key}: {value}")
        for c in self.paper_claims:
            line = f"[{c.verdict.upper()}] {c.claim_id}: expected={c.expected!r} observed={c.observed!r}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        if self.paper_claims:
            lines.append(f"{len(self.paper_claims) - len(self.mismatches)}/{len(self.paper_claims)} claims match")
        return "\n".join(lines) + "\n"


class RunConfig(BaseModel):
    command: str
    argument: Optional[str] = None
    u: int = 1
    q: int = 2
    M: int = 5
    family: str = "101"
    n_max: int = settings.DEFAULT_N_MAX
    n_cap: int = settings.DEFAULT_N_CAP
    d_max: int = settings.DEFAULT_D_MAX
    carry_bound: Optional[int] = None
    method: str = "oracle"
    mode: str = "oracle"
    confirm: bool = True
    use_cache: bool = True
    output_format: OutputFormat = "text"
    out: Optional[str] = None
    override_ml_check: bool = False

    def validate_numbers(self) -> "RunConfig":
        """Check numeric flags against the operations' preconditions."""
        if self.u < 1:
            raise DomainError(f"--u must be >= 1, got {self.u}")
        if self.q < 2:
            raise DomainError(f"--q must be >= 2, got {self.q}")
        if self.M < 1:
            raise DomainError(f"--M must be >= 1, got {self.M}")
        if not 0 <= self.n_max <= settings.MAX_N_MAX:
            raise DomainError(f"--n-max must lie in [0, {settings.MAX_N_MAX}], got {self.n_max}")
        if self.n_cap < 1:
            raise DomainError(f"--n-cap must be >= 1, got {self.n_cap}")
        if self.d_max < 0:
            raise DomainError(f"--d-max must be >= 0, got {self.d_max}")
        if self.carry_bound is not None and self.carry_bound < 0:
            raise DomainError(f"--carry-bound must be >= 0, got {self.carry_bound}")
        return self

    def inputs(self) -> Dict[str, Any]:
        return self.model_dump(exclude={"command", "out", "output_format", "use_cache"})
