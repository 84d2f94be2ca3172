"""Cyclic invariants of H*(T^n; C) and Betti numbers of the quotient orbifolds.

Two independent routes to the same numbers:

* formula path: characters of the exterior powers of the regular
  representation, read off from (1 + (-1)^(d+1) x^d)^(n/d), then averaged;
* oracle paths: a signed fixed-subset count on the wedge basis (see
  ``_pykernels.wedge_trace_sums``), and principal minors of explicit
  integer matrices for the reduced lattice Z^g / diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _backend
from .arith import _positive, binomial, gcd, odd_divisors, totient
from .quotient import Component, fixed_set_descriptor

DEFAULT_ORACLE_BOUND = 16


class OracleBoundError(ValueError):
    """Raised when a brute-force oracle is asked for n above its bound."""


@dataclass(frozen=True)
class CharacterRow:
    n: int
    r: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class GradedDims:
    n: int
    dims: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def even(self) -> int:
        return sum(self.dims[0::2])

    @property
    def odd(self) -> int:
        return sum(self.dims[1::2])

    @property
    def euler(self) -> int:
        return self.even - self.odd


@dataclass(frozen=True)
class BettiTable:
    n: int
    betti: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.betti)

    @property
    def even(self) -> int:
        return sum(self.betti[0::2])

    @property
    def odd(self) -> int:
        return sum(self.betti[1::2])


def _exact_div(total: int, n: int, what: str) -> int:
    q, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"{what}: {total} is not divisible by {n}")
    return q


def character_row(n: int, r: int) -> CharacterRow:
    """Trace of gamma^r on wedge^j of the regular representation, j = 0..n."""
    _positive(n)
    if not 0 <= r < n:
        raise ValueError(f"r={r} not in [0, {n})")
    d = n // gcd(n, r)
    sign = -1 if d % 2 == 0 else 1
    values = []
    for j in range(n + 1):
        if j % d:
            values.append(0)
        else:
            values.append(sign ** (j // d) * binomial(n // d, j // d))
    return CharacterRow(n, r, tuple(values))


def graded_invariants(n: int) -> GradedDims:
    _positive(n)
    sums = [0] * (n + 1)
    for r in range(n):
        for j, v in enumerate(character_row(n, r).values):
            sums[j] += v
    return GradedDims(n, tuple(_exact_div(s, n, f"n={n}, degree {j}") for j, s in enumerate(sums)))


def graded_invariants_oracle(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> GradedDims:
    """Same numbers as ``graded_invariants`` by brute force over 2^n subsets."""
    _positive(n)
    if n > bound:
        raise OracleBoundError(f"oracle refused: n={n} exceeds bound {bound}")
    sums = _backend.wedge_trace_sums(n)
    return GradedDims(n, tuple(_exact_div(s, n, f"oracle n={n}, degree {j}") for j, s in enumerate(sums)))


def betti_from_invariants(a: GradedDims) -> BettiTable:
    """Split a_j = b_j + b_(j-1) (Kunneth with the circle factor)."""
    n = a.n
    b = [1]
    if a.dims[0] != 1:
        raise AssertionError(f"n={n}: a_0 = {a.dims[0]}, expected 1")
    for j in range(1, n):
        b.append(a.dims[j] - b[j - 1])
    if a.dims[n] != b[n - 1]:
        raise AssertionError(f"n={n}: top degree a_n={a.dims[n]} but b_(n-1)={b[n - 1]}")
    if min(b) < 0:
        raise AssertionError(f"n={n}: negative Betti number in {b}")
    return BettiTable(n, tuple(b))


def betti_X(n: int) -> BettiTable:
    """Betti numbers b_0..b_(n-1) of the ordinary quotient X(n)."""
    return betti_from_invariants(graded_invariants(n))


def closed_form_total(n: int) -> int:
    """g(n) = (1/n) * sum over odd d | n of phi(d) 2^(n/d)."""
    _positive(n)
    total = sum(totient(d) * 2 ** (n // d) for d in odd_divisors(n))
    return _exact_div(total, n, f"g({n})")


def total_dim(n: int, check: bool = True) -> int:
    """g(n), the total dimension of the cyclic invariants of H*(T^n).

    With ``check`` the closed form is compared against the graded
    averaging and against twice the total Betti number of X(n).
    """
    g = closed_form_total(n)
    if check:
        a = graded_invariants(n)
        b = betti_from_invariants(a)
        if a.total != g:
            raise AssertionError(f"n={n}: sum of a_j = {a.total}, closed form {g}")
        if 2 * b.total != g:
            raise AssertionError(f"n={n}: sum of b_j = {b.total}, g/2 = {g / 2}")
    return g


def sequence(limit: int) -> list[int]:
    """g(n)/2 for n = 1..limit."""
    _positive(limit, "limit")
    return [closed_form_total(n) // 2 for n in range(1, limit + 1)]


# -- matrix oracle ----------------------------------------------------------


def _det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    size = len(m)
    if size == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for i in range(size - 1):
        if a[i][i] == 0:
            for r in range(i + 1, size):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, size):
            for c in range(i + 1, size):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    return [[sum(x[i][t] * y[t][j] for t in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


def _wedge_traces(a: list[list[int]]) -> list[int]:
    """Traces on wedge^j, j = 0..size: sums of principal j x j minors."""
    size = len(a)
    out = [1]
    for j in range(1, size + 1):
        out.append(sum(_det([[a[r][c] for c in s] for r in s]) for s in itertools.combinations(range(size), j)))
    return out


def reduced_lattice_matrix(perm: tuple[int, ...]) -> list[list[int]]:
    """Matrix on Z^g / Z(1,...,1) of v -> v', v'[c] = v[perm[c]].

    Basis: the images of e_0..e_(g-2); e_(g-1) is minus their sum.
    """
    g = len(perm)
    inverse = [0] * g
    for c, src in enumerate(perm):
        inverse[src] = c
    q = [[0] * (g - 1) for _ in range(g - 1)]
    for j in range(g - 1):
        target = inverse[j]
        if target == g - 1:
            for i in range(g - 1):
                q[i][j] = -1
        else:
            q[target][j] = 1
    return q


def _averaged_invariants(mat: list[list[int]], order: int, what: str) -> list[int]:
    size = len(mat)
    ident = [[int(i == j) for j in range(size)] for i in range(size)]
    sums = [0] * (size + 1)
    power = ident
    for _ in range(order):
        for j, t in enumerate(_wedge_traces(power)):
            sums[j] += t
        power = _matmul(mat, power) if size else power
    if power != ident:
        raise AssertionError(f"{what}: matrix does not have order dividing {order}")
    return [_exact_div(s, order, what) for s in sums]


def reduced_invariants(g: int) -> list[int]:
    """Invariant dimensions of wedge^j (C^g / C(1,...,1)) under Z/gZ.

    Independent of the character-row formula: computed from principal
    minors of explicit integer matrices.
    """
    _positive(g, "g")
    shift = tuple((c - 1) % g for c in range(g))
    return _averaged_invariants(reduced_lattice_matrix(shift), g, f"reduced g={g}")


def component_betti(c: Component) -> BettiTable:
    """Betti numbers of X(n, k, omega); same as those of X((n, k))."""
    return betti_X(c.g)


def component_betti_oracle(c: Component) -> list[int]:
    """Invariants of the whole Z/nZ on H^*(Y(n, k, omega)) via its H^1 lattice.

    The action on degree-one cohomology is read off the fixed-set
    descriptor; translations are dropped since they act trivially.
    """
    perm = fixed_set_descriptor(c.n, c.k, c.omega).induced_shift()
    return _averaged_invariants(reduced_lattice_matrix(perm), c.n, f"component {c}")


def cohomology_record(n: int) -> dict:
    a = graded_invariants(n)
    b = betti_from_invariants(a)
    g = total_dim(n, check=False)
    return {"n": n, "a": list(a.dims), "b": list(b.betti), "g": g, "g_half": g // 2}
