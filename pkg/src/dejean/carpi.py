"""Carpi's uniform morphism f from words over {1..m} to binary words.

With ``m = (n-3)//6`` and ``p = n//2``, ``y`` is the length ``n-1`` suffix of
``(01)^n`` and ``x`` the suffix of ``y`` of length ``n-1-6m``:

    f(1) = y^p x (101)^(2m)
    f(a) = y^p x (101)^(2m-2a) 010 (101)^(2a-1)     for 2 <= a <= m

Every image has length ``(p+1)(n-1)``.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .words import BinaryWord, Word

MIN_N = 9


@dataclass(frozen=True)
class CarpiParams:
    n: int
    m: int
    p: int
    y: BinaryWord
    x: BinaryWord
    uniform_length: int

    def describe(self) -> str:
        """One-line summary, e.g. ``m=4 p=14 r=405 y=1(01)^13 x=101``."""
        half = len(self.y) // 2
        y = ("1" if len(self.y) % 2 else "") + f"(01)^{half}"
        return f"m={self.m} p={self.p} r={self.uniform_length} y={y} x={self.x}"


@lru_cache(maxsize=None)
def carpi_params(n: int) -> CarpiParams:
    if n < MIN_N:
        raise ValueError(f"n={n} too small: the morphism needs m >= 1, i.e. n >= {MIN_N}")
    m = (n - 3) // 6
    p = n // 2
    y = BinaryWord((0, 1) * n)[-(n - 1):]
    x = y[len(y) - (n - 1 - 6 * m):]
    return CarpiParams(n, m, p, y, x, (p + 1) * (n - 1))


@dataclass(frozen=True)
class MorphismTable:
    params: CarpiParams
    images: dict[int, BinaryWord] = field(repr=False)

    def __getitem__(self, a: int) -> BinaryWord:
        try:
            return self.images[a]
        except KeyError:
            raise ValueError(f"letter {a} outside 1..{self.params.m}") from None


@lru_cache(maxsize=None)
def morphism_table(n: int) -> MorphismTable:
    params = carpi_params(n)
    m = params.m
    head = params.y * params.p + params.x
    t = BinaryWord((1, 0, 1))
    images = {1: head + t * (2 * m)}
    for a in range(2, m + 1):
        images[a] = head + t * (2 * m - 2 * a) + BinaryWord((0, 1, 0)) + t * (2 * a - 1)
    return MorphismTable(params, images)


def f_image(a: int, params: CarpiParams) -> BinaryWord:
    if not 1 <= a <= params.m:
        raise ValueError(f"letter {a} outside 1..{params.m}")
    return morphism_table(params.n)[a]


def apply_f(w: Sequence[int], params: CarpiParams) -> BinaryWord:
    """Concatenate the images of the letters of ``w``."""
    if isinstance(w, str):
        w = Word.parse(w)
    table = morphism_table(params.n)
    bits: list[int] = []
    for a in w:
        bits.extend(table[a].bits)
    return BinaryWord(tuple(bits))
