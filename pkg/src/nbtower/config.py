"""Desk-scale bounds.

Construction and verification are exact, so the only limits are time and
memory.  Two bounds are used: a cap on the absolute degree of constructed
towers, and a cap on the total degree handled by the brute-force oracles.
Both keep every check comfortably under a few seconds.
"""

import os

DEFAULT_MAX_TOWER_DEGREE = 256
DEFAULT_ORACLE_DEGREE = 64

ENV_MAX_DEGREE = "NBTOWER_MAX_DEGREE"


def max_tower_degree() -> int:
    """Absolute-degree cap for tower construction.

    Overridable through the NBTOWER_MAX_DEGREE environment variable.
    """
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None:
        return DEFAULT_MAX_TOWER_DEGREE
    value = int(raw)
    if value < 2:
        raise ValueError(f"{ENV_MAX_DEGREE} must be at least 2, got {value}")
    return value
