from typing import Optional

from zeckwin.errors import FormatError
from zeckwin.orbit.engine import OrbitSummary, membership_table
from zeckwin.reporting.models import Report


def orbit_csv(summary: OrbitSummary) -> str:
    return membership_table(summary).to_csv(index=False)


def render(
    report: Report,
    output_format: str,
    dot_source: Optional[str] = None,
    csv_source: Optional[str] = None,
) -> str:
    """Serialize a report; dot and csv need the command to supply a payload."""
    if output_format == "json":
        return report.to_json()
    if output_format == "text":
        return report.render_text()
    if output_format == "dot":
        if dot_source is None:
            raise FormatError(f"{report.command} has no DOT output; use export-dot, orbit, avoid or synthesize-theta")
        return dot_source
    if output_format == "csv":
        if csv_source is None:
            raise FormatError(f"{report.command} has no CSV output; only orbit emits the window table")
        return csv_source
    raise FormatError(f"unknown output format {output_format!r}")
