"""Size caps for the expensive combinatorial routines.

Defaults are desk-scale; both can be raised per call or through the
environment variables TWOMAIN_MAX_CANON and TWOMAIN_MAX_ENUM.
"""

import os

DEFAULT_CANONICAL_CAP = 12

DEFAULT_ENUM_CAPS = {
    "cycle": 14,
    "unicyclic": 9,
    "tree": 9,
    "any-connected": 7,
}


def canonical_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("TWOMAIN_MAX_CANON")
    return int(env) if env else DEFAULT_CANONICAL_CAP


def enum_cap(kind: str, override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("TWOMAIN_MAX_ENUM")
    if env:
        return int(env)
    return DEFAULT_ENUM_CAPS[kind]
