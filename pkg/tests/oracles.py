"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the library's fast paths: periods are found by
trying every candidate, factors are enumerated explicitly, and permutations
are multiplied point by point.
"""
import itertools
from fractions import Fraction


def period(u) -> int:
    u = tuple(u)
    for q in range(1, len(u) + 1):
        if u[q:] == u[:len(u) - q]:
            return q
    raise ValueError("empty")


def factors(w):
    """All non-empty factors as (start, length), ordered by start then length."""
    for s in range(len(w)):
        for length in range(1, len(w) - s + 1):
            yield s, length


def max_exponent(w):
    best = None
    for s, length in factors(w):
        q = period(w[s:s + length])
        e = Fraction(length, q)
        if best is None or e > best[0]:
            best = (e, s, length, q)
    return best


def first_exceeding(w, threshold):
    for s, length in factors(w):
        q = period(w[s:s + length])
        if Fraction(length, q) > threshold:
            return s, length, q
    return None


def apply_cycle_word(bits, n):
    """phi(bits) as an image list, built by following each point through every letter."""
    image = []
    for point in range(1, n + 1):
        x = point
        for b in bits:
            top = n if b else n - 1
            if x <= top:
                x = x % top + 1
        image.append(x)
    return image


def kernel_scan(w, n, m):
    """Longest kernel repetition per (start, q) over all (start, end, q)."""
    best = {}
    for s, e in itertools.combinations(range(len(w) + 1), 2):
        u = tuple(w[s:e])
        for q in range(1, e - s + 1):
            if u[q:] != u[:len(u) - q]:
                continue
            head = u[:q]
            if any(head.count(a) % 4 for a in range(1, m + 1)):
                continue
            if (n - 1) * (e - s + 1) >= n * q - 3:
                best[s, q] = max(best.get((s, q), 0), e - s)
    return [(s, length, q) for (s, q), length in sorted(best.items())]


def exhaustive_records(alphabet: int, max_length: int):
    """Every word whose letters first appear in the order 0, 1, 2, ...

    Every word is a relabeling of exactly one of these.  Yields
    ``(word, period, (start, length, q))`` where the triple locates the first
    maximal-exponent factor.  Only the suffixes added by the final letter are
    examined at each node; the running record covers the older factors.  A
    period of ``u + a`` is a period of ``u`` (or equals ``len(u) + 1``), so
    each suffix's candidate search starts at its parent's period.
    """
    # node: (word, letters used, suffix periods of word, best (start, length, q))
    stack = [("", 0, [], None)]
    while stack:
        word, used, periods, best = stack.pop()
        if word:
            yield word, periods[0], best
        if len(word) == max_length:
            continue
        for a in range(min(used + 1, alphabet)):
            w = word + chr(48 + a)
            size = len(w)
            new_periods = []
            top = None
            for s in range(size):
                u = w[s:]
                length = size - s
                q = periods[s] if s < size - 1 else 1
                while u[q:] != u[:length - q]:
                    q += 1
                new_periods.append(q)
                # exponents compared as length/q by cross-multiplication
                if top is None or length * top[2] > top[1] * q:
                    top = (s, length, q)
            if best is None or top[1] * best[2] > best[1] * top[2] or (
                top[1] * best[2] == best[1] * top[2] and top[:2] < best[:2]
            ):
                new_best = top
            else:
                new_best = best
            stack.append((w, max(used, a + 1), new_periods, new_best))


def kernel_repetition_ends_at(w, t, n, m):
    """Is some factor w[s:t+1] a kernel repetition of order n?"""
    for s in range(t + 1):
        u = tuple(w[s:t + 1])
        for q in range(1, len(u) + 1):
            head = u[:q]
            if (u[q:] == u[:len(u) - q]
                    and not any(head.count(a) % 4 for a in range(1, m + 1))
                    and (n - 1) * (len(u) + 1) >= n * q - 3):
                return True
    return False
