"""Sigma-class groups, Sigma-units and norm residue checks for quadratic fields."""

from ._core import (
    EnvelopeError,
    VerificationReport,
    class_group,
    cli,
    explain,
    fundamental_unit,
    minimal_sigma,
    narrow_class_group,
    s_class_group,
    s_unit_generators,
    verify_field,
)

__all__ = [
    "EnvelopeError",
    "VerificationReport",
    "class_group",
    "cli",
    "explain",
    "fundamental_unit",
    "minimal_sigma",
    "narrow_class_group",
    "s_class_group",
    "s_unit_generators",
    "verify_field",
]
