"""Pure-Python hot kernels; reference twin of ``_ckernels.pyx``.

Both modules must return identical results for identical arguments.
"""


def wedge_trace_sums(n):
    """Sum over r of trace(gamma^r | wedge^j C^n), for j = 0..n.

    Brute force over the wedge basis e_S, S a subset of {0..n-1}.  The
    shift x -> x + r (mod n) sends e_S to +-e_{S+r}; only subsets with
    S + r == S contribute, each with the sign of the sorting permutation
    of the shifted elements (counted by inversions).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    full = (1 << n) - 1
    totals = [0] * (n + 1)
    for r in range(n):
        for mask in range(full + 1):
            rotated = ((mask << r) | (mask >> (n - r))) & full
            if rotated != mask:
                continue
            images = [(i + r) % n for i in range(n) if (mask >> i) & 1]
            inversions = 0
            for a in range(len(images)):
                ia = images[a]
                for b in range(a + 1, len(images)):
                    if ia > images[b]:
                        inversions += 1
            totals[len(images)] += -1 if inversions & 1 else 1
    return totals


def lattice_orbit_data(n, M):
    """Isotropy orders and orbit representatives on the 1/M lattice of T^n/T.

    Points are integer codes: coordinates (0, c_1, ..., c_{n-1}) with
    0 <= c_i < M, encoded big-endian in base M (c_1 most significant), so
    code order is lexicographic order of the angle tuples.

    Returns ``(orders, reps)``: ``orders[code]`` is the number of shifts k
    with gamma^k . p == p and ``reps[code]`` the least code in the orbit.
    """
    if n < 1 or M < 1:
        raise ValueError("n and M must be >= 1")
    size = M ** (n - 1)
    orders = [0] * size
    reps = [0] * size
    for code in range(size):
        coords = [0] * n
        rem = code
        for i in range(n - 1, 0, -1):
            coords[i] = rem % M
            rem //= M
        order = 0
        best = code
        for k in range(n):
            base = coords[(-k) % n]
            shifted = 0
            for i in range(1, n):
                shifted = shifted * M + (coords[(i - k) % n] - base) % M
            if shifted == code:
                order += 1
            if shifted < best:
                best = shifted
        orders[code] = order
        reps[code] = best
    return orders, reps
