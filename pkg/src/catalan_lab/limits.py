"""Enumeration ceiling handling.

Exhaustive enumeration grows like the Catalan numbers, so every enumerator
refuses sizes above a configurable ceiling instead of silently grinding.
Precedence: explicit ``max_n`` argument (CLI flag) > the ``CATALAN_LAB_MAX_N``
environment variable > the built-in default.
"""

import os

DEFAULT_MAX_N = 16
ENV_VAR = "CATALAN_LAB_MAX_N"


class EnumerationLimitError(Exception):
    """Raised when an enumeration request exceeds the configured ceiling."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(
            f"n={n} exceeds the enumeration ceiling {limit} "
            f"(override with {ENV_VAR} or an explicit max_n)"
        )


def enumeration_ceiling(max_n: int | None = None) -> int:
    """Resolve the effective ceiling from argument, environment, or default."""
    if max_n is not None:
        return max_n
    env = os.environ.get(ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def check_ceiling(n: int, max_n: int | None = None) -> None:
    """Refuse negative sizes and sizes above the effective ceiling."""
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    limit = enumeration_ceiling(max_n)
    if n > limit:
        raise EnumerationLimitError(n, limit)
