"""Kernel words, kernel periods and kernel repetitions over {1..m}.

A word is in the kernel when every letter occurs a multiple of 4 times.  A
period ``q`` of ``v`` is a kernel period when ``v[:q]`` is in the kernel, and
``v`` is a kernel repetition of order ``n`` when it has a kernel period with
``(n-1)(|v|+1) >= n*q - 3``.
"""
from __future__ import annotations

from array import array
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .words import Word


class SearchExhausted(RuntimeError):
    """The backtracking search ran out of candidates (or of its node budget)."""


@dataclass(frozen=True)
class KernelWitness:
    start: int
    length: int
    q: int
    n: int

    def __str__(self):
        return f"({self.start},{self.length},q={self.q})"


def count_vector(v: Sequence[int], m: int) -> list[int]:
    counts = [0] * m
    for a in v:
        counts[a - 1] += 1
    return counts


def in_kernel(v: Sequence[int], m: int) -> bool:
    return all(c % 4 == 0 for c in count_vector(v, m))


def _is_period(v: Sequence[int], q: int) -> bool:
    return all(v[i] == v[i + q] for i in range(len(v) - q))


def kernel_periods(v: Sequence[int], m: int) -> list[int]:
    """All periods q of v (``q == len(v)`` included) whose length-q prefix is a kernel word."""
    return [q for q in range(1, len(v) + 1) if _is_period(v, q) and in_kernel(v[:q], m)]


def satisfies_order(length: int, q: int, n: int) -> bool:
    return (n - 1) * (length + 1) >= n * q - 3


def is_kernel_repetition(v: Sequence[int], n: int, m: int) -> Optional[int]:
    """Smallest kernel period q of a non-empty v meeting the order-n bound, else None."""
    for q in kernel_periods(v, m):
        if satisfies_order(len(v), q, n):
            return q
    return None


def _states(w: Sequence[int]) -> array:
    """Prefix letter counts mod 4, packed two bits per letter."""
    states = array("q", [0])
    s = 0
    for a in w:
        shift = 2 * (a - 1)
        d = (s >> shift) & 3
        s += (((d + 1) & 3) - d) << shift
        states.append(s)
    return states


def scan_kernel_repetitions(w: Sequence[int], n: int, m: int) -> list[KernelWitness]:
    """Every kernel repetition in w, one witness per (start, q) at maximal length.

    The bound ``(n-1)(len+1) >= n*q - 3`` only gets easier as the factor grows,
    so for each (start, q) with a kernel prefix it suffices to test the
    longest factor of period q starting there.
    """
    if any(not 1 <= a <= m for a in w):
        raise ValueError(f"letters must lie in 1..{m}")
    states = _states(w)
    size = len(w)
    found = []
    for s in range(size):
        for q in range(1, size - s + 1):
            if states[s] != states[s + q]:
                continue
            end = s + q
            while end < size and w[end] == w[end - q]:
                end += 1
            if satisfies_order(end - s, q, n):
                found.append(KernelWitness(s, end - s, q, n))
    return found


def generate_kernel_avoiding(m: int, n: int, target_length: int, seed: int = 0,
                             max_nodes: int = 10_000_000) -> Word:
    """Depth-first search for a word over {1..m} free of order-n kernel repetitions.

    Letter order at every position is ``1..m`` rotated by ``seed``.  Only the
    factors ending at the newly placed letter are checked.  Raises
    :class:`SearchExhausted` when no word of the target length exists or the
    node budget is spent.
    """
    if m < 1 or target_length < 1:
        raise ValueError("need m >= 1 and target_length >= 1")
    order = [(seed + i) % m + 1 for i in range(m)]
    word = array("i")
    states = array("q", [0])
    choice = []  # index into ``order`` tried at each depth
    nodes = 0
    while len(word) < target_length:
        depth = len(word)
        nxt = choice.pop() + 1 if len(choice) > depth else 0
        if nxt >= m:
            if not word:
                raise SearchExhausted(f"no word of length {target_length} over 1..{m} for n={n}")
            word.pop()
            states.pop()
            continue
        nodes += 1
        if nodes > max_nodes:
            raise SearchExhausted(f"node budget {max_nodes} spent at length {depth}")
        a = order[nxt]
        shift = 2 * (a - 1)
        s = states[-1]
        d = (s >> shift) & 3
        word.append(a)
        states.append(s + ((((d + 1) & 3) - d) << shift))
        choice.append(nxt)
        if not _kernels.kernel_clean_at(word, states, depth, n):
            word.pop()
            states.pop()
    return Word(tuple(word), m)

