"""The torus E = T^n/T, its cyclic shift action, and the extended quotient.

Conventions
-----------
A point of E is a tuple of n angles taken up to adding a constant to every
coordinate; the normal form pins coordinate 0 to angle 0.  Coordinates are
indexed 0..n-1.

The generator gamma of Z/nZ moves coordinate i to position i + 1, so
``(gamma^k . z)[i] = z[i - k]``.  A point z fixed by gamma^k satisfies
gamma^k . z = z + omega (a constant shift, since we are in T^n/T), and
omega is the label of the component X(n, k, omega) through z.  The
equivalent relations on coordinates are z[i + k] = z[i] - omega.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from . import _backend
from .arith import RationalAngle, _positive, gcd, totient

ZERO = RationalAngle.zero()


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    angles: tuple[RationalAngle, ...]

    def __post_init__(self):
        if not self.angles:
            raise ValueError("a point needs at least one coordinate")
        if not self.angles[0].is_zero():
            raise ValueError("first coordinate of a normalized point must be 0")

    @property
    def n(self) -> int:
        return len(self.angles)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.angles) + ")"


def normalize(raw: Iterable) -> ProjectivePoint:
    """Homogeneous normal form: subtract the first coordinate from all."""
    angles = [a if isinstance(a, RationalAngle) else RationalAngle.of(a) for a in raw]
    if not angles:
        raise ValueError("cannot normalize an empty coordinate list")
    first = angles[0]
    return ProjectivePoint(tuple(a - first for a in angles))


def point(*values) -> ProjectivePoint:
    """Shorthand: ``point(0, "1/3", "2/3")``."""
    return normalize(values)


@dataclass(frozen=True)
class ShiftElement:
    n: int
    k: int

    def __post_init__(self):
        _positive(self.n)
        if not 0 <= self.k < self.n:
            raise ValueError(f"shift exponent {self.k} not in [0, {self.n})")

    @classmethod
    def of(cls, n: int, k: int) -> "ShiftElement":
        return cls(n, k % n)

    def __mul__(self, other: "ShiftElement") -> "ShiftElement":
        if self.n != other.n:
            raise ValueError("shift elements of different groups")
        return ShiftElement.of(self.n, self.k + other.k)

    def __str__(self) -> str:
        return f"gamma^{self.k}"


def _raw_shift(p: ProjectivePoint, k: int) -> tuple[RationalAngle, ...]:
    n = p.n
    return tuple(p.angles[(i - k) % n] for i in range(n))


def act(e: ShiftElement, p: ProjectivePoint) -> ProjectivePoint:
    if e.n != p.n:
        raise ValueError(f"shift of Z/{e.n} applied to a point of T^{p.n}/T")
    return normalize(_raw_shift(p, e.k))


def fixing_exponents(p: ProjectivePoint) -> list[int]:
    return [k for k in range(p.n) if act(ShiftElement(p.n, k), p) == p]


def isotropy(p: ProjectivePoint) -> tuple[int, ShiftElement]:
    """Order m of the stabilizer of p and its generator gamma^(n/m)."""
    n = p.n
    fixing = fixing_exponents(p)
    m = len(fixing)
    step = n // m
    if n % m or fixing != list(range(0, n, step)):
        raise AssertionError(f"stabilizer {fixing} of {p} is not a subgroup")
    return m, ShiftElement(n, step % n)


def membership(p: ProjectivePoint, k: int) -> Optional[RationalAngle]:
    """The omega with gamma^k . p = p + omega, or None if gamma^k moves p."""
    n = p.n
    shifted = _raw_shift(p, k % n)
    diffs = {s - a for s, a in zip(shifted, p.angles)}
    if len(diffs) != 1:
        return None
    return diffs.pop()


@dataclass(frozen=True)
class Component:
    """Descriptor of the orbifold X(n, k, omega), 1 <= k <= n."""

    n: int
    k: int
    omega: RationalAngle

    def __post_init__(self):
        _positive(self.n)
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k={self.k} not in [1, {self.n}]")
        if self.d % self.omega.den:
            raise ValueError(f"omega={self.omega} is not a {self.d}-th root of unity")

    @property
    def g(self) -> int:
        return gcd(self.n, self.k)

    @property
    def d(self) -> int:
        return self.n // gcd(self.n, self.k)

    @property
    def dim(self) -> int:
        return self.g - 1

    @property
    def is_ordinary_quotient(self) -> bool:
        return self.k == self.n

    def record(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "omega_num": self.omega.num,
            "omega_den": self.omega.den,
            "d": self.d,
            "g": self.g,
            "dim": self.dim,
        }

    def __str__(self) -> str:
        return f"X({self.n},{self.k},{self.omega})"


def enumerate_components(n: int) -> list[Component]:
    """All X(n, k, omega), ordered by k then by omega."""
    _positive(n)
    out = []
    for k in range(1, n + 1):
        d = n // gcd(n, k)
        for j in range(d):
            out.append(Component(n, k, RationalAngle.of_parts(j, d)))
    return out


def isolated_point_count(n: int) -> int:
    count = n * totient(n)
    points = sum(1 for c in enumerate_components(n) if c.dim == 0)
    if points != count:
        raise AssertionError(f"n={n}: {points} point components, expected {count}")
    return count


@dataclass(frozen=True)
class FixedSetDescriptor:
    """The fixed set Y(n, k, omega) as free coordinates plus a closure rule.

    Coordinate i equals ``free value of class source[i]`` plus
    ``offset[i]``.  The free coordinates are 0..g-1, one per residue class
    mod g.
    """

    component: Component
    source: tuple[int, ...]
    offset: tuple[RationalAngle, ...]
    steps: tuple[int, ...]

    @property
    def free_indices(self) -> tuple[int, ...]:
        return tuple(range(self.component.g))

    def instantiate(self, values: Sequence) -> ProjectivePoint:
        if len(values) != self.component.g:
            raise ValueError(f"need {self.component.g} free values, got {len(values)}")
        vals = [v if isinstance(v, RationalAngle) else RationalAngle.of(v) for v in values]
        return normalize(vals[s] + o for s, o in zip(self.source, self.offset))

    def translation(self) -> tuple[RationalAngle, ...]:
        """The translation carrying Y(n, k, omega) onto Y(n, k, 1)."""
        return tuple(-o for o in self.offset)

    def induced_shift(self) -> tuple[int, ...]:
        """Linear part of gamma on the free coordinates.

        ``perm[c]`` is the free coordinate whose value lands in free
        coordinate c under gamma; the omega-dependent translation part is
        discarded.
        """
        n = self.component.n
        return tuple(self.source[(c - 1) % n] for c in self.free_indices)


def fixed_set_descriptor(n: int, k: int, omega: RationalAngle) -> FixedSetDescriptor:
    comp = Component(n, k, omega)
    g, d = comp.g, comp.d
    source = [None] * n
    offset = [None] * n
    steps = [None] * n
    for c in range(g):
        i = c
        for s in range(d):
            source[i] = c
            offset[i] = -(s * omega)
            steps[i] = s
            i = (i + k) % n
        if i != c:
            raise AssertionError("cycle of gamma^k did not close")
    return FixedSetDescriptor(comp, tuple(source), tuple(offset), tuple(steps))


def translate(p: ProjectivePoint, by: Sequence[RationalAngle]) -> ProjectivePoint:
    return normalize(a + b for a, b in zip(p.angles, by))


@dataclass(frozen=True)
class ExtQuotPoint:
    """A pair (x, gamma^k) with gamma^k . x = x."""

    point: ProjectivePoint
    element: ShiftElement

    def __post_init__(self):
        if act(self.element, self.point) != self.point:
            raise ValueError(f"{self.element} does not fix {self.point}")

    def moved(self, e: ShiftElement) -> "ExtQuotPoint":
        return ExtQuotPoint(act(e, self.point), self.element)


def orbit(p: ProjectivePoint) -> list[ProjectivePoint]:
    return sorted({act(ShiftElement(p.n, k), p) for k in range(p.n)})


def orbit_representative(p: ProjectivePoint) -> ProjectivePoint:
    return min(act(ShiftElement(p.n, k), p) for k in range(p.n))


def project(x: ExtQuotPoint) -> ProjectivePoint:
    return orbit_representative(x.point)


def extquot_orbit_key(x: ExtQuotPoint) -> tuple[ProjectivePoint, int]:
    # Gamma is abelian, so the orbit of (p, h) is {(q, h) : q in orbit(p)}.
    return orbit_representative(x.point), x.element.k


def fibre(orbit_rep: ProjectivePoint) -> list[ExtQuotPoint]:
    """One representative per extended-quotient orbit over ``orbit_rep``."""
    n = orbit_rep.n
    seen = {}
    for q in orbit(orbit_rep):
        for k in range(n):
            e = ShiftElement(n, k)
            if act(e, q) == q:
                x = ExtQuotPoint(q, e)
                seen.setdefault(extquot_orbit_key(x), x)
    return [seen[key] for key in sorted(seen, key=lambda t: (t[0], t[1]))]


def fibre_cardinality(orbit_rep: ProjectivePoint) -> int:
    count = len(fibre(orbit_rep))
    order, _ = isotropy(orbit_rep)
    if count != order:
        raise AssertionError(f"fibre over {orbit_rep} has {count} points, isotropy {order}")
    return count


def rational_lattice(n: int, M: int) -> list[ProjectivePoint]:
    return list(iter_lattice(n, M))


def iter_lattice(n: int, M: int) -> Iterator[ProjectivePoint]:
    """Normalized points with all angles in (1/M)Z/Z, in lexicographic order."""
    _positive(n)
    _positive(M, "M")
    grid = [RationalAngle.of_parts(a, M) for a in range(M)]
    for tail in itertools.product(grid, repeat=n - 1):
        yield ProjectivePoint((ZERO,) + tail)


def lattice_code(p: ProjectivePoint, M: int) -> int:
    code = 0
    for a in p.angles[1:]:
        if M % a.den:
            raise ValueError(f"{p} is not on the 1/{M} lattice")
        code = code * M + a.num * (M // a.den)
    return code


def lattice_point(code: int, n: int, M: int) -> ProjectivePoint:
    digits = []
    for _ in range(n - 1):
        code, r = divmod(code, M)
        digits.append(RationalAngle.of_parts(r, M))
    return ProjectivePoint((ZERO,) + tuple(reversed(digits)))


@dataclass(frozen=True)
class LatticeCensus:
    n: int
    M: int
    points: int
    orbits: int
    extquot_orbits: int
    backend: str


def lattice_census(n: int, M: int) -> LatticeCensus:
    """Counts on the 1/M lattice from the fast kernel (integer-coded path)."""
    orders, reps = _backend.lattice_orbit_data(n, M)
    orbit_codes = [c for c in range(len(reps)) if reps[c] == c]
    return LatticeCensus(
        n=n,
        M=M,
        points=len(orders),
        orbits=len(orbit_codes),
        extquot_orbits=sum(orders[c] for c in orbit_codes),
        backend=_backend.BACKEND,
    )
