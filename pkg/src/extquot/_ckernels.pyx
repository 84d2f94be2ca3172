# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; must agree exactly with ``_pykernels``."""

from libc.stdlib cimport malloc, free


def wedge_trace_sums(int n):
    """Sum over r of trace(gamma^r | wedge^j C^n), for j = 0..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 62:
        raise ValueError("n too large for 64-bit subset masks")
    cdef unsigned long long full = (1ULL << n) - 1
    cdef unsigned long long mask, rotated
    cdef int r, i, a, b, j, inversions, ia
    cdef int images[64]
    cdef long long *totals = <long long *> malloc((n + 1) * sizeof(long long))
    if totals == NULL:
        raise MemoryError()
    try:
        for j in range(n + 1):
            totals[j] = 0
        for r in range(n):
            mask = 0
            while True:
                if r == 0:
                    rotated = mask
                else:
                    rotated = ((mask << r) | (mask >> (n - r))) & full
                if rotated == mask:
                    j = 0
                    for i in range(n):
                        if (mask >> i) & 1ULL:
                            images[j] = (i + r) % n
                            j += 1
                    inversions = 0
                    for a in range(j):
                        ia = images[a]
                        for b in range(a + 1, j):
                            if ia > images[b]:
                                inversions += 1
                    if inversions & 1:
                        totals[j] -= 1
                    else:
                        totals[j] += 1
                if mask == full:
                    break
                mask += 1
        return [totals[j] for j in range(n + 1)]
    finally:
        free(totals)


def lattice_orbit_data(int n, long long M):
    """Isotropy orders and least orbit codes on the 1/M lattice of T^n/T."""
    if n < 1 or M < 1:
        raise ValueError("n and M must be >= 1")
    cdef long long size = 1
    cdef int i, k
    for i in range(n - 1):
        size *= M
    cdef long long code, rem, shifted, best, base
    cdef int order
    cdef long long *coords = <long long *> malloc(n * sizeof(long long))
    if coords == NULL:
        raise MemoryError()
    orders = [0] * size
    reps = [0] * size
    try:
        for code in range(size):
            coords[0] = 0
            rem = code
            for i in range(n - 1, 0, -1):
                coords[i] = rem % M
                rem //= M
            order = 0
            best = code
            for k in range(n):
                base = coords[(n - k) % n]
                shifted = 0
                for i in range(1, n):
                    shifted = shifted * M + (coords[(i - k + n) % n] - base + M) % M
                if shifted == code:
                    order += 1
                if shifted < best:
                    best = shifted
            orders[code] = order
            reps[code] = best
        return orders, reps
    finally:
        free(coords)
