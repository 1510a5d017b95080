"""Repetitions in words and the stabilizer check for Dejean's conjecture at n = 27..29."""
from ._kernels import BACKEND
from .verify import verify_range, verify_stabilizer_freeness

__version__ = "0.1.0"
__all__ = ["BACKEND", "verify_range", "verify_stabilizer_freeness"]
