"""Permutations of {1..n} under the right action, and Pansiot's morphism.

``p.image[i-1]`` is the point that ``i`` maps to.  Composition applies the
left operand first: ``i . compose(a, b) == (i . a) . b``, which makes
``phi(u + v) == compose(phi(u), phi(v))``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence


class Permutation:
    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {list(image)}")
        self.image = image

    @classmethod
    def _unchecked(cls, image: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.image = image
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._unchecked(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        return self.image[point - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.image)) + "]"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, 1))

    def order(self) -> int:
        """Smallest e >= 1 with self**e the identity, by repeated composition."""
        power = self
        e = 1
        while not power.is_identity():
            power = compose(power, self)
            e += 1
        return e


def pansiot_generator(n: int, bit: int) -> Permutation:
    """phi(0) is the cycle (1 2 ... n-1) fixing n; phi(1) is the cycle (1 2 ... n)."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    k = n if bit else n - 1
    return Permutation._unchecked(tuple(range(2, k + 1)) + (1,) + tuple(range(k + 1, n + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    img = b.image
    return Permutation._unchecked(tuple([img[x - 1] for x in a.image]))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.image, 1):
        inv[x - 1] = i
    return Permutation._unchecked(tuple(inv))


def phi(v: Sequence[int], n: int) -> Permutation:
    gens = (pansiot_generator(n, 0), pansiot_generator(n, 1))
    p = Permutation.identity(n)
    for bit in v:
        p = compose(p, gens[bit])
    return p


class PrefixTable:
    """``perms[i] == phi(v[:i], n)`` for every prefix of ``v``."""

    __slots__ = ("n", "perms")

    def __init__(self, n: int, perms: list[Permutation]):
        self.n = n
        self.perms = perms

    def __len__(self):
        return len(self.perms)


def prefix_table(v: Sequence[int], n: int) -> PrefixTable:
    gens = (pansiot_generator(n, 0), pansiot_generator(n, 1))
    perms = [Permutation.identity(n)]
    for bit in v:
        perms.append(compose(perms[-1], gens[bit]))
    return PrefixTable(n, perms)


def factor_image(t: PrefixTable, i: int, j: int) -> Permutation:
    """phi(v[i:j]) recovered from the prefix table."""
    if not 0 <= i <= j < len(t.perms):
        raise IndexError(f"factor [{i}, {j}) outside 0..{len(t.perms) - 1}")
    return compose(inverse(t.perms[i]), t.perms[j])
