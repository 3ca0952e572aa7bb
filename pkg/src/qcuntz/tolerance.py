"""Default zero tolerance shared by every check."""

from __future__ import annotations

import os

FALLBACK_TOLERANCE = 1e-9


def default_tolerance() -> float:
    """Return the tolerance from ``QCK_TOLERANCE`` if set, else 1e-9."""
    raw = os.environ.get("QCK_TOLERANCE")
    if raw is None or raw.strip() == "":
        return FALLBACK_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        return FALLBACK_TOLERANCE
    return value if value > 0 else FALLBACK_TOLERANCE


def resolve(tol: float | None) -> float:
    return default_tolerance() if tol is None else float(tol)
