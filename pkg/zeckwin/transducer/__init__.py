from .multiplier import (
    MultiplierSpec,
    StreamFailure,
    StreamState,
    mul_addition_chain,
    mul_oracle,
    stream_multiply,
)
from .theta import ConflictWitness, ThetaMap, locality_probe, merge_theta_maps, theta_synthesize

__all__ = [
    "MultiplierSpec",
    "StreamFailure",
    "StreamState",
    "mul_addition_chain",
    "mul_oracle",
    "stream_multiply",
    "ConflictWitness",
    "ThetaMap",
    "locality_probe",
    "merge_theta_maps",
    "theta_synthesize",
]
