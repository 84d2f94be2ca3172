"""Extended quotients of T^n/T by Z/nZ, their cohomology and K-theory ranks."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .arith import RationalAngle, binomial, gcd, odd_divisors, totient
from .cohomology import (
    BettiTable,
    GradedDims,
    betti_X,
    character_row,
    component_betti,
    graded_invariants,
    graded_invariants_oracle,
    reduced_invariants,
    total_dim,
)
from .ktheory import KRanks, component_contribution, ktheory_ranks, prime_case_report
from .labels import LocalFieldData, ReprLabel, admissible_n, check_square, elliptic_fixed_points, inf_ch, mu_label
from .quotient import (
    Component,
    ExtQuotPoint,
    ProjectivePoint,
    ShiftElement,
    act,
    enumerate_components,
    fibre_cardinality,
    fixed_set_descriptor,
    isolated_point_count,
    isotropy,
    membership,
    normalize,
    point,
    project,
    rational_lattice,
)
