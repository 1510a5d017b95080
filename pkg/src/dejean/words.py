"""Finite words, periods and exact fractional exponents.

Words over ``A_sigma = {1..sigma}`` are :class:`Word`; binary words over
``{0, 1}`` are :class:`BinaryWord`.  The period and exponent functions accept
any finite sequence of hashable symbols (plain strings included), so
``exponent_of("010")`` and ``exponent_of(Word.parse("121"))`` both work.
Exponents are :class:`fractions.Fraction` values and are compared exactly.
"""
from __future__ import annotations

from array import array
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Optional

from . import _kernels, _pure

Rational = Fraction


class ParseError(ValueError):
    """A textual word contains a character outside its alphabet."""

    def __init__(self, text: str, index: int, expected: str):
        self.text = text
        self.index = index
        super().__init__(
            f"invalid character {text[index]!r} at index {index} (expected {expected})"
        )


@dataclass(frozen=True)
class Word(Sequence):
    """A word over ``{1..sigma}``."""

    letters: tuple[int, ...]
    sigma: int

    def __post_init__(self):
        if self.sigma < 1:
            raise ValueError("alphabet size must be positive")
        object.__setattr__(self, "letters", tuple(self.letters))
        for i, a in enumerate(self.letters):
            if not 1 <= a <= self.sigma:
                raise ValueError(f"letter {a} at index {i} outside 1..{self.sigma}")

    @classmethod
    def parse(cls, text: str, sigma: int = 9) -> "Word":
        """Parse the digit encoding, one character per letter."""
        if not 1 <= sigma <= 9:
            raise ValueError("the digit encoding covers alphabets of size 1..9")
        letters = []
        for i, ch in enumerate(text):
            if not ("1" <= ch <= "9" and int(ch) <= sigma):
                raise ParseError(text, i, f"a digit in 1..{sigma}")
            letters.append(int(ch))
        return cls(tuple(letters), sigma)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.sigma)
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + tuple(other), max(self.sigma, getattr(other, "sigma", 1)))

    def __str__(self):
        if self.sigma <= 9:
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))


@dataclass(frozen=True)
class BinaryWord(Sequence):
    """A word over ``B = {0, 1}``."""

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        for i, b in enumerate(self.bits):
            if b not in (0, 1):
                raise ValueError(f"bit {b!r} at index {i} is not 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        for i, ch in enumerate(text):
            if ch not in "01":
                raise ParseError(text, i, "'0' or '1'")
        return cls(tuple(ch == "1" and 1 or 0 for ch in text))

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BinaryWord(self.bits[index])
        return self.bits[index]

    def __add__(self, other) -> "BinaryWord":
        return BinaryWord(self.bits + tuple(other))

    def __mul__(self, times: int) -> "BinaryWord":
        return BinaryWord(self.bits * times)

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class RepetitionWitness:
    """Locates the factor ``w[start:start+length]`` of period ``period``."""

    start: int
    length: int
    period: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def factor(self, w):
        return w[self.start:self.start + self.length]

    def __str__(self):
        return f"{self.exponent} (start={self.start} len={self.length} period={self.period})"


def encode(w: Sequence[Hashable]) -> array:
    """Map symbols to small integer codes in first-occurrence order."""
    if isinstance(w, Word):
        return array("i", w.letters)
    if isinstance(w, BinaryWord):
        return array("i", w.bits)
    codes: dict = {}
    return array("i", [codes.setdefault(c, len(codes)) for c in w])


def smallest_period(w: Sequence[Hashable]) -> int:
    """Least ``q >= 1`` with ``w[i] == w[i+q]`` wherever both are defined."""
    if len(w) == 0:
        raise ValueError("empty word has no period")
    return _kernels.smallest_period(encode(w))


def exponent_of(w: Sequence[Hashable]) -> Fraction:
    if len(w) == 0:
        raise ValueError("empty word has no exponent")
    return Fraction(len(w), smallest_period(w))


def max_exponent_factor(w: Sequence[Hashable]) -> tuple[Fraction, RepetitionWitness]:
    """Largest exponent of a non-empty factor of ``w`` and its first witness.

    Ties go to the smallest start, then the shortest length.  Runs one border
    table per suffix, so the cost is quadratic in ``len(w)``.
    """
    if len(w) == 0:
        raise ValueError("empty word has no factors")
    start, length, period = _kernels.max_exponent(encode(w))
    witness = RepetitionWitness(start, length, period)
    return witness.exponent, witness


def has_factor_exceeding(w: Sequence[Hashable], threshold) -> Optional[RepetitionWitness]:
    """First factor (by start, then length) of exponent strictly above ``threshold``."""
    threshold = Fraction(threshold)
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    if len(w) == 0:
        return None
    num, den = threshold.numerator, threshold.denominator
    codes = encode(w)
    if max(num, den) * len(w) < 2**62:
        hit = _kernels.first_exceeding(codes, num, den)
    else:
        hit = _pure.first_exceeding(codes, num, den)
    return RepetitionWitness(*hit) if hit else None


def dejean_threshold(n: int) -> Fraction:
    """Conjectured repetitive threshold of an ``n``-letter alphabet."""
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    if n == 3:
        return Fraction(7, 4)
    if n == 4:
        return Fraction(7, 5)
    return Fraction(n, n - 1)


def thue_morse(length: int) -> BinaryWord:
    """Prefix of the Thue-Morse word: bit i is the parity of popcount(i)."""
    return BinaryWord(tuple(bin(i).count("1") & 1 for i in range(length)))
