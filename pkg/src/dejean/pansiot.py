"""Pansiot's coding of binary words and k-stabilizing words.

A binary word ``u`` is k-stabilizing when ``phi(u)`` fixes each of the points
``1..k``.  Fixing is pointwise, so the sets of k-stabilizing words shrink as k
grows.
"""
from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

from . import _kernels
from .perms import Permutation, phi
from .words import BinaryWord, Word


def _check_degree(n: int):
    if n < 2:
        raise ValueError("degree must be at least 2")


def gamma(v: Sequence[int], n: int) -> Word:
    """Code ``v`` as a word over ``{1..n}``.

    Letter ``i`` (1-based) is the point that ``phi(v[:i])`` sends to 1.
    """
    _check_degree(n)
    table = _kernels.inverse_prefix_table(encode_bits(v), n)
    return Word(tuple(table[i * n] + 1 for i in range(1, len(v) + 1)), n)


def encode_bits(v: Sequence[int] | str) -> bytes:
    """Bits as a ``bytes`` buffer; accepts bit sequences or a '0'/'1' string."""
    if isinstance(v, bytes):
        return v
    if isinstance(v, str):
        v = BinaryWord.parse(v)
    elif not isinstance(v, BinaryWord):
        v = BinaryWord(v)
    return bytes(v.bits)


def is_k_stabilizing_perm(p: Permutation, k: int) -> bool:
    if not 1 <= k <= p.n:
        raise ValueError(f"k={k} outside 1..{p.n}")
    return all(p.image[j - 1] == j for j in range(1, k + 1))


def is_k_stabilizing(u: Sequence[int], n: int, k: int) -> bool:
    _check_degree(n)
    return is_k_stabilizing_perm(phi(encode_bits(u), n), k)


def max_stabilized(p: Permutation) -> int:
    """Largest k such that ``p`` fixes every point of ``1..k`` (0 if it moves 1)."""
    k = 0
    for i, x in enumerate(p.image, 1):
        if x != i:
            break
        k = i
    return k


def find_condition_i_factor(v: Sequence[int], n: int) -> Optional[tuple[int, int, int]]:
    """First non-empty factor that is k-stabilizing with length < k(n-1), k <= n-1.

    Factors are scanned by start, then length, and the result is
    ``(start, length, k)`` with the largest such k.  Lengths are capped at
    ``(n-1)**2 - 1``, beyond which no k <= n-1 can qualify.
    """
    _check_degree(n)
    table = _kernels.inverse_prefix_table(encode_bits(v), n)
    return _kernels.first_short_stabilizer(table, n, len(v), (n - 1) ** 2 - 1)
