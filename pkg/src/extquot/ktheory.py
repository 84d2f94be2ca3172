"""Rational K-theory ranks of C(T^n/T) x| Z/nZ from the extended quotient.

The Chern character for discrete groups and the Morita equivalence with
the fixed algebra are taken as given; what is computed here is
rank K_0 = sum of even Betti numbers and rank K_1 = sum of odd Betti
numbers over all components X(n, k, omega).  Torsion is not seen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .cohomology import closed_form_total, component_betti
from .quotient import Component, enumerate_components

ASSUMPTIONS = (
    "K_i tensored with C is identified with even/odd cohomology of the "
    "extended quotient via the Chern character; ranks only, no torsion."
)


@dataclass(frozen=True)
class BreakdownRow:
    component: Component
    h_ev: int
    h_odd: int

    def record(self) -> dict:
        rec = self.component.record()
        rec["omega"] = str(self.component.omega)
        rec["h_ev"] = self.h_ev
        rec["h_odd"] = self.h_odd
        return rec


@dataclass(frozen=True)
class KRanks:
    n: int
    k0: int
    k1: int
    breakdown: tuple[BreakdownRow, ...]

    def __post_init__(self):
        if self.k0 != sum(r.h_ev for r in self.breakdown):
            raise ValueError("k0 does not match the breakdown")
        if self.k1 != sum(r.h_odd for r in self.breakdown):
            raise ValueError("k1 does not match the breakdown")

    @property
    def ranks(self) -> tuple[int, int]:
        return self.k0, self.k1

    def records(self) -> list[dict]:
        return [r.record() for r in self.breakdown]


def component_contribution(c: Component) -> tuple[int, int]:
    b = component_betti(c)
    return b.even, b.odd


def ktheory_ranks(n: int) -> KRanks:
    rows = []
    for c in enumerate_components(n):
        ev, odd = component_contribution(c)
        rows.append(BreakdownRow(c, ev, odd))
    return KRanks(n, sum(r.h_ev for r in rows), sum(r.h_odd for r in rows), tuple(rows))


def prime_case_report(ell: int) -> KRanks:
    """K-theory ranks for prime n, checking the X(ell) + ell(ell-1) points shape."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    ranks = ktheory_ranks(ell)
    points = [r for r in ranks.breakdown if r.component.dim == 0]
    others = [r for r in ranks.breakdown if r.component.dim > 0]
    if len(points) != ell * (ell - 1):
        raise AssertionError(f"ell={ell}: {len(points)} isolated points")
    if len(others) != 1 or not others[0].component.is_ordinary_quotient:
        raise AssertionError(f"ell={ell}: unexpected component shape")
    if ranks.k0 + ranks.k1 != closed_form_total(ell) // 2 + ell * (ell - 1):
        raise AssertionError(f"ell={ell}: total rank mismatch")
    return ranks
