from .engine import (
    OrbitConfig,
    OrbitSummary,
    candidate_period,
    confirm_candidate,
    exponent_set,
    membership_table,
    theta_orbit,
    window_sequence,
)

__all__ = [
    "OrbitConfig",
    "OrbitSummary",
    "candidate_period",
    "confirm_candidate",
    "exponent_set",
    "membership_table",
    "theta_orbit",
    "window_sequence",
]
