"""Resource caps. Values are read once per call so tests can patch them."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ResourceLimitError


@dataclass(frozen=True)
class Limits:
    term_cap: int = 10**6
    degree_cap: int = 64
    # default truncation degree used by codim_c
    truncation_bound: int = 12


_limits = Limits()


def get_limits() -> Limits:
    env = os.environ.get("LEVISCOPE_DEGREE_CAP")
    if env:
        try:
            bound = int(env)
        except ValueError:
            raise ValueError(f"LEVISCOPE_DEGREE_CAP must be an integer, got {env!r}") from None
        if bound < 1:
            raise ValueError("LEVISCOPE_DEGREE_CAP must be positive")
        return replace(_limits, truncation_bound=bound, degree_cap=max(_limits.degree_cap, bound))
    return _limits


def set_limits(**changes) -> Limits:
    """Replace process-wide limits; returns the previous value."""
    global _limits
    old = _limits
    _limits = replace(_limits, **changes)
    return old


def check_degree(bound: int) -> None:
    cap = get_limits().degree_cap
    if bound > cap:
        raise ResourceLimitError(f"degree bound {bound} exceeds configured cap {cap}")
