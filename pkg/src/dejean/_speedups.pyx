# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same names and contracts as ``dejean._pure``."""
from array import array

from libc.stdlib cimport free, malloc


cdef int* _border_buffer(Py_ssize_t size) except NULL:
    cdef int* border = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    if border == NULL:
        raise MemoryError()
    return border


def smallest_period(const int[::1] codes):
    cdef Py_ssize_t size = codes.shape[0], i
    cdef int b = 0, c
    cdef int* border = _border_buffer(size)
    try:
        border[0] = 0
        for i in range(1, size):
            c = codes[i]
            while b and codes[b] != c:
                b = border[b - 1]
            if codes[b] == c:
                b += 1
            border[i] = b
        return size - border[size - 1]
    finally:
        free(border)


def max_exponent(const int[::1] codes):
    cdef Py_ssize_t size = codes.shape[0], s, i
    cdef long long best_s = 0, best_l = 1, best_p = 1, length, period
    cdef int b, c
    cdef int* border = _border_buffer(size)
    try:
        with nogil:
            for s in range(size):
                if (size - s) * best_p <= best_l:
                    break
                b = 0
                border[0] = 0
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
                        best_s = s
                        best_l = length
                        best_p = period
    finally:
        free(border)
    return best_s, best_l, best_p


def first_exceeding(const int[::1] codes, long long num, long long den):
    cdef Py_ssize_t size = codes.shape[0], s, i
    cdef long long length, period
    cdef int b, c
    cdef Py_ssize_t hit_s = -1, hit_l = 0, hit_p = 0
    if size and num < den:
        return 0, 1, 1
    cdef int* border = _border_buffer(size)
    try:
        with nogil:
            for s in range(size):
                if (size - s) * den <= num:
                    break
                b = 0
                border[0] = 0
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
                        hit_s = s
                        hit_l = length
                        hit_p = period
                        break
                if hit_s >= 0:
                    break
    finally:
        free(border)
    if hit_s < 0:
        return None
    return hit_s, hit_l, hit_p


def inverse_prefix_table(bits, int n):
    cdef Py_ssize_t size = len(bits), t, j, src, dst
    table = array("i", bytes(4 * (size + 1) * n))
    cdef int[::1] tab = table
    cdef const unsigned char[::1] bv = bytes(bytearray(bits))
    with nogil:
        for j in range(n):
            tab[j] = j
        for t in range(size):
            src = t * n
            dst = src + n
            if bv[t]:
                tab[dst] = tab[src + n - 1]
                for j in range(n - 1):
                    tab[dst + 1 + j] = tab[src + j]
            else:
                if n >= 2:
                    tab[dst] = tab[src + n - 2]
                    for j in range(n - 2):
                        tab[dst + 1 + j] = tab[src + j]
                tab[dst + n - 1] = tab[src + n - 1]
    return table


def agreement(const int[::1] table, int n, Py_ssize_t i, Py_ssize_t j, int limit):
    cdef Py_ssize_t a = i * n, b = j * n
    cdef int k = 0
    while k < limit and table[a + k] == table[b + k]:
        k += 1
    return k


def stabilizing_starts(const int[::1] table, int n, Py_ssize_t length, int k,
                       Py_ssize_t count):
    cdef Py_ssize_t s, a, b
    cdef int j
    hits = []
    for s in range(count):
        a = s * n
        b = (s + length) * n
        j = 0
        while j < k and table[a + j] == table[b + j]:
            j += 1
        if j == k:
            hits.append(s)
    return hits


def first_short_stabilizer(const int[::1] table, int n, Py_ssize_t size,
                           Py_ssize_t max_len):
    cdef Py_ssize_t s, length, top, a, b
    cdef int k
    for s in range(size):
        top = size - s
        if max_len < top:
            top = max_len
        a = s * n
        for length in range(1, top + 1):
            b = (s + length) * n
            k = 0
            while k < n - 1 and table[a + k] == table[b + k]:
                k += 1
            if k and length < k * (n - 1):
                return s, length, k
    return None


def kernel_clean_at(const int[::1] word, const long long[::1] states,
                    Py_ssize_t t, long long n):
    cdef Py_ssize_t q, s, i
    cdef long long need, x
    cdef bint ok
    for q in range(1, t + 2):
        # ceil((n*q - 3) / (n - 1)) - 1 with floor division on a non-negative shift
        x = n * q - 3
        if x >= 0:
            need = (x + n - 2) // (n - 1) - 1
        else:
            need = -((-x) // (n - 1)) - 1
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
