"""Pure-Python reference kernels.

Every function here has a twin of the same name and signature in the compiled
``_speedups`` module.  Inputs are integer sequences (``array('i')`` in
practice); permutation tables use 0-based points and are stored flat, row
``t`` occupying ``table[t*n:(t+1)*n]``.
"""
from array import array


def smallest_period(codes):
    size = len(codes)
    border = [0] * size
    b = 0
    for i in range(1, size):
        c = codes[i]
        while b and codes[b] != c:
            b = border[b - 1]
        if codes[b] == c:
            b += 1
        border[i] = b
    return size - border[size - 1]


def max_exponent(codes):
    """Return ``(start, length, period)`` of the first factor of maximal exponent.

    Factors are visited by start, then length; only a strictly larger exponent
    replaces the incumbent, which yields the (start, length) minimum.
    """
    size = len(codes)
    best_s, best_l, best_p = 0, 1, 1
    border = [0] * size
    for s in range(size):
        if (size - s) * best_p <= best_l:
            break
        border[0] = 0
        b = 0
        for i in range(1, size - s):
            c = codes[s + i]
            while b and codes[s + b] != c:
                b = border[b - 1]
            if codes[s + b] == c:
                b += 1
            border[i] = b
            length = i + 1
            period = length - b
            if length * best_p > best_l * period:
                best_s, best_l, best_p = s, length, period
    return best_s, best_l, best_p


def first_exceeding(codes, num, den):
    """First factor (by start, then length) with length/period > num/den, or None."""
    size = len(codes)
    if size and num < den:
        return 0, 1, 1
    border = [0] * size
    for s in range(size):
        if (size - s) * den <= num:
            break
        b = 0
        for i in range(1, size - s):
            c = codes[s + i]
            while b and codes[s + b] != c:
                b = border[b - 1]
            if codes[s + b] == c:
                b += 1
            border[i] = b
            length = i + 1
            period = length - b
            if length * den > num * period:
                return s, length, period
    return None


def inverse_prefix_table(bits, n):
    """Rows of preimages: ``table[t*n + j]`` is the point sent to ``j`` by phi(bits[:t])."""
    size = len(bits)
    table = array("i", bytes(4 * (size + 1) * n))
    for j in range(n):
        table[j] = j
    for t in range(size):
        src = t * n
        dst = src + n
        if bits[t]:
            table[dst] = table[src + n - 1]
            table[dst + 1:dst + n] = table[src:src + n - 1]
        else:
            if n >= 2:
                table[dst] = table[src + n - 2]
                table[dst + 1:dst + n - 1] = table[src:src + n - 2]
            table[dst + n - 1] = table[src + n - 1]
    return table


def agreement(table, n, i, j, limit):
    """Length of the longest run of points 0.. fixed by the factor between rows i and j."""
    a = i * n
    b = j * n
    k = 0
    while k < limit and table[a + k] == table[b + k]:
        k += 1
    return k


def stabilizing_starts(table, n, length, k, count):
    """Starts s < count whose factor of the given length fixes points 0..k-1."""
    hits = []
    for s in range(count):
        a = s * n
        b = (s + length) * n
        if table[a:a + k] == table[b:b + k]:
            hits.append(s)
    return hits


def first_short_stabilizer(table, n, size, max_len):
    """First (start, length, k) with length < k*(n-1), k <= n-1 the fixed prefix size."""
    for s in range(size):
        top = min(max_len, size - s)
        a = s * n
        for length in range(1, top + 1):
            b = (s + length) * n
            k = 0
            while k < n - 1 and table[a + k] == table[b + k]:
                k += 1
            if k and length < k * (n - 1):
                return s, length, k
    return None


def kernel_clean_at(word, states, t, n):
    """True iff no kernel repetition of order n ends at position t.

    ``states[i]`` encodes the letter counts of ``word[:i]`` reduced mod 4, so
    ``word[s:s+q]`` is in the kernel iff ``states[s] == states[s+q]``.
    """
    for q in range(1, t + 2):
        need = -((3 - n * q) // (n - 1)) - 1
        if need < q:
            need = q
        if need > t + 1:
            break
        s = t - need + 1
        ok = True
        for i in range(s, t - q + 1):
            if word[i] != word[i + q]:
                ok = False
                break
        if not ok:
            continue
        while True:
            if states[s] == states[s + q]:
                return False
            if s == 0 or word[s - 1] != word[s - 1 + q]:
                break
            s -= 1
    return True
