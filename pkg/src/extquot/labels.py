"""Combinatorial model of the tempered-dual labelling for SL(N).

Representations never appear as objects: a ``ReprLabel`` (orbit, r) stands
for the r-th irreducible constituent of the induced representation at that
orbit.  What is checked is the bookkeeping around it: which n occur, the
map mu on extended-quotient points, and the square pi = inf.ch o mu.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .arith import RationalAngle, _positive, divisors, factorize, is_prime, prime_to_part
from .quotient import (
    ExtQuotPoint,
    ProjectivePoint,
    ShiftElement,
    act,
    extquot_orbit_key,
    fibre_cardinality,
    isotropy,
    iter_lattice,
    lattice_census,
    normalize,
    orbit_representative,
    project,
)


@dataclass(frozen=True)
class LocalFieldData:
    """Residue characteristic p and residue field size q = p^f."""

    p: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"residue characteristic {self.p} is not prime")
        if isinstance(self.q, bool) or not isinstance(self.q, int) or self.q < self.p:
            raise ValueError(f"residue field size {self.q} is not a power of {self.p}")
        if factorize(self.q) != {self.p: factorize(self.q).get(self.p, 0)}:
            raise ValueError(f"residue field size {self.q} is not a power of {self.p}")


@dataclass(frozen=True)
class BernsteinPoint:
    """Levi GL(m)^n inside GL(N), N = m n."""

    N: int
    m: int
    n: int

    def __post_init__(self):
        _positive(self.n)
        _positive(self.m, "m")
        if self.m * self.n != self.N:
            raise ValueError(f"{self.m} * {self.n} != {self.N}")


def has_unit_character_of_order(n: int, f: LocalFieldData) -> bool:
    # Units of a p-adic field: cyclic tame part of order q - 1 times a
    # pro-p group with characters of every p-power order.
    return (f.q - 1) % prime_to_part(n, f.p) == 0


def admissible_n(N: int, f: LocalFieldData) -> list[int]:
    _positive(N, "N")
    return [n for n in divisors(N) if has_unit_character_of_order(n, f)]


def bernstein_points(N: int, f: LocalFieldData) -> list[BernsteinPoint]:
    return [BernsteinPoint(N, N // n, n) for n in admissible_n(N, f)]


@dataclass(frozen=True, order=True)
class ReprLabel:
    orbit_rep: ProjectivePoint
    r: int

    def __post_init__(self):
        m, _ = isotropy(self.orbit_rep)
        if not 0 <= self.r < m:
            raise ValueError(f"label index {self.r} out of range for isotropy order {m}")

    def __str__(self) -> str:
        return f"{self.orbit_rep}:{self.r}"


def mu_label(x: ExtQuotPoint) -> ReprLabel:
    """(p, (gamma^(n/m))^r) -> (orbit of p, r), m the isotropy order of p."""
    if act(x.element, x.point) != x.point:
        raise ValueError(f"{x.element} does not fix {x.point}")
    m, gen = isotropy(x.point)
    r, rem = divmod(x.element.k, gen.k) if gen.k else (0, 0)
    if rem or r >= m:
        raise AssertionError(f"{x.element} is not a power of the generator {gen}")
    return ReprLabel(orbit_representative(x.point), r)


def inf_ch(label: ReprLabel) -> ProjectivePoint:
    return label.orbit_rep


@dataclass
class SquareReport:
    n: int
    M: int
    lattice_size: int = 0
    orbit_count: int = 0
    extquot_orbit_count: int = 0
    label_count: int = 0
    passed: bool = True
    witness: Optional[str] = None
    census_backend: str = ""
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)
        if self.witness is None:
            self.witness = msg

    def record(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "lattice_size": self.lattice_size,
            "orbit_count": self.orbit_count,
            "extquot_orbit_count": self.extquot_orbit_count,
            "label_count": self.label_count,
            "passed": self.passed,
            "witness": self.witness,
        }


def check_square(n: int, M: int) -> SquareReport:
    """Exhaustive finite-model check of pi = inf.ch o mu on the 1/M lattice.

    (a) inf_ch(mu_label(x)) == project(x) for every extended-quotient point;
    (b) mu_label is constant on orbits and injective on the orbit set, and
        hits every label (orbit, r), 0 <= r < isotropy order;
    (c) labels per orbit == fibre cardinality == isotropy order.
    Counts are cross-checked against the integer-coded lattice kernel.
    """
    _positive(n)
    _positive(M, "M")
    rep = SquareReport(n, M)
    extquot_orbits: dict[tuple, ReprLabel] = {}
    labels_over: dict[ProjectivePoint, set[int]] = defaultdict(set)
    orbit_reps: set[ProjectivePoint] = set()

    for p in iter_lattice(n, M):
        rep.lattice_size += 1
        orbit_reps.add(orbit_representative(p))
        for k in range(n):
            e = ShiftElement(n, k)
            if act(e, p) != p:
                continue
            x = ExtQuotPoint(p, e)
            label = mu_label(x)
            if inf_ch(label) != project(x):
                rep.fail(f"square fails at ({p}, {e}): inf.ch gives {inf_ch(label)}, pi gives {project(x)}")
            key = extquot_orbit_key(x)
            seen = extquot_orbits.setdefault(key, label)
            if seen != label:
                rep.fail(f"mu not constant on the orbit of ({p}, {e}): {seen} vs {label}")
            labels_over[label.orbit_rep].add(label.r)

    rep.orbit_count = len(orbit_reps)
    rep.extquot_orbit_count = len(extquot_orbits)
    rep.label_count = len(set(extquot_orbits.values()))
    if rep.label_count != rep.extquot_orbit_count:
        rep.fail(f"mu not injective: {rep.extquot_orbit_count} orbits but {rep.label_count} labels")

    for o in sorted(orbit_reps):
        m, _ = isotropy(o)
        fib = fibre_cardinality(o)
        if labels_over[o] != set(range(m)):
            rep.fail(f"labels over {o} are {sorted(labels_over[o])}, expected 0..{m - 1}")
        if len(labels_over[o]) != fib:
            rep.fail(f"fibre over {o} has {fib} points but {len(labels_over[o])} labels")

    census = lattice_census(n, M)
    rep.census_backend = census.backend
    if (census.points, census.orbits, census.extquot_orbits) != (
        rep.lattice_size,
        rep.orbit_count,
        rep.extquot_orbit_count,
    ):
        rep.fail(f"kernel census {census} disagrees with the object-level scan")
    return rep


def elliptic_fixed_points(ell: int) -> list[ProjectivePoint]:
    """The ell points of T^ell/T fixed by all of Z/ell: arithmetic progressions."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    pts = []
    for j in range(ell):
        c = RationalAngle.of_parts(j, ell)
        p = normalize(i * c for i in range(ell))
        m, _ = isotropy(p)
        if m != ell:
            raise AssertionError(f"{p} has isotropy order {m}, expected {ell}")
        pts.append(p)
    return pts
