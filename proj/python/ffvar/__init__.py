"""Function-field L-functions, variance in arithmetic progressions, and
unitary-group trace moments."""

from ._ffvar import (
    __version__,
    euler_factor,
    lfun,
    selftest,
    trace_moments,
    traces,
    variance,
    von_mangoldt,
)

__all__ = [
    "__version__",
    "euler_factor",
    "lfun",
    "selftest",
    "trace_moments",
    "traces",
    "variance",
    "von_mangoldt",
]
