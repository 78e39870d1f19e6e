"""Sequential-measurement steering and CHSH trade-off toolkit."""

from ._steerlab import (  # noqa: F401
    MAX_ALPHA,
    SCENARIOS,
    build_envelope,
    case_catalog,
    closed_form_scores,
    envelope_value,
    format_angle,
    max_entangled,
    mixed_scores,
    optimize,
    parse_angle,
    partial_entangled,
    pauli,
    rot_y,
    simulate_case,
    verify,
    weak_benchmark,
)

__all__ = [
    "MAX_ALPHA",
    "SCENARIOS",
    "build_envelope",
    "case_catalog",
    "closed_form_scores",
    "envelope_value",
    "format_angle",
    "max_entangled",
    "mixed_scores",
    "optimize",
    "parse_angle",
    "partial_entangled",
    "pauli",
    "rot_y",
    "simulate_case",
    "verify",
    "weak_benchmark",
]
