"""Configurable limits.

Every limit has a built-in default and may be overridden through an
environment variable named ``ARRSPEC_<NAME>``; explicit keyword arguments
(or CLI flags) take precedence over both.
"""
from __future__ import annotations

import os

DEFAULTS: dict[str, int | float] = {
    "PARTITION_LIMIT": 200,
    "MAX_N": 500,
    "VERTEX_LIMIT": 10_000,
    "EXACT_LIMIT": 400,
    "FLOAT_LIMIT": 10_000,
    "FLOAT_TOLERANCE": 1e-6,
}


def get(name: str, override=None):
    """Resolve limit *name*: explicit override, then environment, then default."""
    if override is not None:
        return override
    default = DEFAULTS[name]
    raw = os.environ.get(f"ARRSPEC_{name}")
    if raw is None:
        return default
    return type(default)(raw)
