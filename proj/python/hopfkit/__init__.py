"""Exact verification of Hopf algebra presentations."""

from ._core import (
    Check,
    HopfkitError,
    Report,
    builtin_names,
    default_order,
    normal_form,
    run,
    scaling_names,
    verify,
)

__all__ = [
    "Check",
    "HopfkitError",
    "Report",
    "builtin_names",
    "default_order",
    "normal_form",
    "run",
    "scaling_names",
    "verify",
]
