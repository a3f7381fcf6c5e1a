"""Enumeration caps.

The working cap bounds every brute-force enumeration; it defaults to 10 and can
be overridden with the ``VINCULAR_MAX_N`` environment variable, but never past
the hard cap of 12.
"""

import os

from .errors import EnumerationCapError

HARD_CAP = 12
DEFAULT_WORKING_CAP = 10
ENV_VAR = "VINCULAR_MAX_N"


def working_cap() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_WORKING_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return max(0, min(cap, HARD_CAP))


def check_cap(n: int, cap: int | None = None) -> None:
    limit = working_cap() if cap is None else cap
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if n > limit:
        raise EnumerationCapError(n, limit)
