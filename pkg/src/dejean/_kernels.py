"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it imports; otherwise, or
when ``DEJEAN_PURE`` is set to a non-empty value, the pure-Python twins in
``_pure`` are used.  ``BACKEND`` names the active choice.
"""
import os

from . import _pure

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

NAMES = (
    "smallest_period",
    "max_exponent",
    "first_exceeding",
    "inverse_prefix_table",
    "agreement",
    "stabilizing_starts",
    "first_short_stabilizer",
    "kernel_clean_at",
)


def available():
    """Names of the backends importable in this process."""
    return ("python", "cython") if _speedups is not None else ("python",)


def module(name):
    if name == "python":
        return _pure
    if name == "cython" and _speedups is not None:
        return _speedups
    raise ValueError(f"backend {name!r} is not available")


BACKEND = "cython" if _speedups is not None and not os.environ.get("DEJEAN_PURE") else "python"
_active = module(BACKEND)

smallest_period = _active.smallest_period
max_exponent = _active.max_exponent
first_exceeding = _active.first_exceeding
inverse_prefix_table = _active.inverse_prefix_table
agreement = _active.agreement
stabilizing_starts = _active.stabilizing_starts
first_short_stabilizer = _active.first_short_stabilizer
kernel_clean_at = _active.kernel_clean_at
