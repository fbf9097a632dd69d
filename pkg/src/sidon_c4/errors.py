"""Exception hierarchy and size budgets.

Every error carries the process exit code the CLI should use for it:
2 for bad parameters, 3 for budget violations.
"""

from __future__ import annotations

import os


class SidonError(Exception):
    exit_code = 2


class NotPrime(SidonError, ValueError):
    pass


class NotPrimePower(SidonError, ValueError):
    pass


class NotOdd(SidonError, ValueError):
    pass


class NotPrimitive(SidonError, ValueError):
    pass


class AlphaOutOfRange(SidonError, ValueError):
    pass


class LogOfZero(SidonError, ValueError):
    pass


class ZInSet(SidonError, ValueError):
    pass


class DecompositionMismatch(SidonError, ValueError):
    pass


class EdgeExists(SidonError, ValueError):
    pass


class SameVertex(SidonError, ValueError):
    pass


class UnsupportedProvenance(SidonError, ValueError):
    pass


class NotC4Free(SidonError, ValueError):
    pass


class ConstructionFailure(SidonError, RuntimeError):
    """A construction produced something that is not a Sidon set."""


class ParseError(SidonError, ValueError):
    pass


class SizeExceeded(SidonError):
    exit_code = 3


FIELD_BUDGET = 1 << 20
GRAPH_BUDGET = 1 << 16
# vertex limit for dense |X| x |X| count matrices
PAIR_BUDGET = 1 << 12


def budget(kind: str) -> int:
    """Return the size budget for ``kind`` ("field", "graph" or "pairs").

    ``SIDON_BUDGET`` overrides the defaults. It is either a bare integer,
    applied to every kind, or comma separated ``kind=value`` pairs.
    """
    default = {"field": FIELD_BUDGET, "graph": GRAPH_BUDGET, "pairs": PAIR_BUDGET}[kind]
    raw = os.environ.get("SIDON_BUDGET", "").strip()
    if not raw:
        return default
    if "=" not in raw:
        return int(raw)
    for part in raw.split(","):
        key, _, value = part.partition("=")
        if key.strip() == kind:
            return int(value)
    return default


def check_budget(kind: str, size: int) -> None:
    limit = budget(kind)
    if size > limit:
        raise SizeExceeded(f"{kind} size {size} exceeds budget {limit}")
