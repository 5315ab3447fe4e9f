from .models import OutputFormat, PaperClaim, Report, RunConfig, claim
from .dot_export import dfa_to_dot, export_dot, orbit_to_dot, theta_to_dot
from .formats import orbit_csv, render
from .published import EXAMPLES, verify_example_3, verify_paper

__all__ = [
    "OutputFormat",
    "PaperClaim",
    "Report",
    "RunConfig",
    "claim",
    "dfa_to_dot",
    "export_dot",
    "orbit_to_dot",
    "theta_to_dot",
    "orbit_csv",
    "render",
    "EXAMPLES",
    "verify_example_3",
    "verify_paper",
]
