import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extquot.arith import RationalAngle, gcd, totient
from extquot.quotient import (
    Component,
    ExtQuotPoint,
    ProjectivePoint,
    ShiftElement,
    act,
    enumerate_components,
    fibre,
    fibre_cardinality,
    fixed_set_descriptor,
    isolated_point_count,
    isotropy,
    iter_lattice,
    lattice_census,
    lattice_code,
    lattice_point,
    membership,
    normalize,
    orbit,
    point,
    project,
    rational_lattice,
    translate,
)

A = RationalAngle.of_parts
Z = RationalAngle.zero()


def pt(*xs):
    return point(*xs)


# -- normalize / act ---------------------------------------------------------


@pytest.mark.parametrize(
    "raw,expected",
    [
        (("1/3", "2/3", 0), (0, "1/3", "2/3")),
        ((0, 0), (0, 0)),
        (("1/2", "1/2", "1/2"), (0, 0, 0)),
    ],
)
def test_normalize(raw, expected):
    p = normalize(RationalAngle.of(x) for x in raw)
    assert p.angles == tuple(RationalAngle.of(x) for x in expected)


def test_normalize_rejects_empty():
    with pytest.raises(ValueError):
        normalize([])


def test_projective_point_must_be_normalized():
    with pytest.raises(ValueError):
        ProjectivePoint((A(1, 2), Z))


def test_act_examples():
    tau = pt(0, "1/3", "2/3")
    assert act(ShiftElement(3, 1), tau) == tau
    assert act(ShiftElement(3, 0), tau) == tau
    # coordinate i moves to i + 1: (0, 1/4, 0, 0) -> (0, 0, 1/4, 0)
    assert act(ShiftElement(4, 1), pt(0, "1/4", 0, 0)) == pt(0, 0, "1/4", 0)
    # last coordinate wraps to the front, then renormalizes
    assert act(ShiftElement(4, 1), pt(0, 0, 0, "1/4")) == pt(0, "3/4", "3/4", "3/4")


def test_act_dimension_mismatch():
    with pytest.raises(ValueError):
        act(ShiftElement(4, 1), pt(0, "1/3", "2/3"))


def test_shift_element_range():
    with pytest.raises(ValueError):
        ShiftElement(3, 3)
    assert ShiftElement.of(3, -1) == ShiftElement(3, 2)
    assert ShiftElement(5, 3) * ShiftElement(5, 4) == ShiftElement(5, 2)


def _check_action_laws(n, M):
    for p in iter_lattice(n, M):
        table = [act(ShiftElement(n, k), p) for k in range(n)]
        assert table[0] == p
        for j in range(n):
            for k in range(n):
                assert act(ShiftElement(n, j), table[k]) == table[(j + k) % n]


@pytest.mark.parametrize("n,M", [(n, M) for n in range(1, 5) for M in range(1, 9)] + [(5, 4), (6, 3)])
def test_action_laws_exhaustive(n, M):
    _check_action_laws(n, M)


@pytest.mark.slow
@pytest.mark.parametrize("n,M", [(5, 8), (6, 8)])
def test_action_laws_exhaustive_large(n, M):
    # act(k) == act(1)^k for every k (wrapping to act(0) == id)
    # implies act(j) o act(k) == act(j + k) without checking all pairs.
    gen = ShiftElement(n, 1)
    for p in iter_lattice(n, M):
        table = [act(ShiftElement(n, k), p) for k in range(n)]
        assert table[0] == p
        for k in range(n):
            assert act(gen, table[k]) == table[(k + 1) % n]


lattice_points = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 7), min_size=n - 1, max_size=n - 1))
)


@settings(max_examples=300)
@given(lattice_points, st.integers(0, 20), st.integers(0, 20))
def test_action_laws_sampled(data, j, k):
    n, tail = data
    p = ProjectivePoint((Z,) + tuple(A(t, 8) for t in tail))
    assert act(ShiftElement.of(n, j), act(ShiftElement.of(n, k), p)) == act(ShiftElement.of(n, j + k), p)


# -- isotropy ----------------------------------------------------------------


def test_isotropy_examples():
    assert isotropy(pt(0, "1/3", "2/3")) == (3, ShiftElement(3, 1))
    for n in range(1, 8):
        assert isotropy(ProjectivePoint((Z,) * n))[0] == n
    assert isotropy(pt(0, "1/5", 0)) == (1, ShiftElement(3, 0))
    assert isotropy(pt(0, "1/2", 0, "1/2")) == (4, ShiftElement(4, 1))
    assert isotropy(pt(0, "1/4", 0, "1/4")) == (2, ShiftElement(4, 2))


@pytest.mark.parametrize("n,M", [(n, M) for n in range(1, 6) for M in range(1, 7)])
def test_stabilizers_are_subgroups(n, M):
    for p in iter_lattice(n, M):
        fixing = {k for k in range(n) if act(ShiftElement(n, k), p) == p}
        assert 0 in fixing
        assert all((a + b) % n in fixing for a in fixing for b in fixing)
        m, gen = isotropy(p)
        assert n % m == 0 and len(fixing) == m
        assert fixing == {(gen.k * r) % n for r in range(m)}


# -- components ----------------------------------------------------------------


def test_component_invariants():
    c = Component(6, 4, A(1, 3))
    assert (c.d, c.g, c.dim) == (3, 2, 1)
    with pytest.raises(ValueError):
        Component(6, 4, A(1, 2))  # omega must be a cube root of unity
    with pytest.raises(ValueError):
        Component(6, 6, A(1, 2))  # k = n forces omega = 1
    with pytest.raises(ValueError):
        Component(6, 0, Z)
    assert Component(5, 5, Z).is_ordinary_quotient


@pytest.mark.parametrize("n,count", [(1, 1), (3, 7), (4, 11)])
def test_component_counts(n, count):
    comps = enumerate_components(n)
    assert len(comps) == count
    assert sum(1 for c in comps if c.is_ordinary_quotient) == 1


def test_component_order_n4():
    comps = enumerate_components(4)
    per_k = {k: sum(1 for c in comps if c.k == k) for k in range(1, 5)}
    assert per_k == {1: 4, 2: 2, 3: 4, 4: 1}
    assert [(c.k, c.omega) for c in comps] == sorted((c.k, c.omega) for c in comps)


def test_prime_three_is_quotient_plus_six_points():
    comps = enumerate_components(3)
    assert sum(1 for c in comps if c.dim == 0) == 6
    assert [c for c in comps if c.dim > 0] == [Component(3, 3, Z)]


@pytest.mark.parametrize("n", range(1, 25))
def test_component_census(n):
    comps = enumerate_components(n)
    assert len(comps) == sum(n // gcd(n, k) for k in range(1, n + 1))
    assert len(set(comps)) == len(comps)
    assert isolated_point_count(n) == n * totient(n)


@pytest.mark.parametrize("n,expected", [(3, 6), (1, 1), (4, 8)])
def test_isolated_point_count(n, expected):
    assert isolated_point_count(n) == expected


def test_component_record():
    rec = Component(4, 2, A(1, 2)).record()
    assert rec == {"n": 4, "k": 2, "omega_num": 1, "omega_den": 2, "d": 2, "g": 2, "dim": 1}


# -- fixed sets and membership -----------------------------------------------


def test_fixed_set_prime_three():
    desc = fixed_set_descriptor(3, 1, A(2, 3))
    assert desc.free_indices == (0,)
    assert desc.instantiate([Z]) == pt(0, "1/3", "2/3")
    # the free coordinate is absorbed by normalization: a single point
    assert {desc.instantiate([A(t, 7)]) for t in range(7)} == {pt(0, "1/3", "2/3")}
    assert fixed_set_descriptor(3, 1, A(1, 3)).instantiate([Z]) == pt(0, "2/3", "1/3")


def test_fixed_set_n4_k2():
    trivial = fixed_set_descriptor(4, 2, Z)
    assert trivial.free_indices == (0, 1)
    assert trivial.source == (0, 1, 0, 1)
    assert trivial.offset == (Z, Z, Z, Z)
    twisted = fixed_set_descriptor(4, 2, A(1, 2))
    assert twisted.source == (0, 1, 0, 1)
    assert twisted.offset == (Z, Z, A(1, 2), A(1, 2))


def test_fixed_set_rejects_wrong_order():
    with pytest.raises(ValueError):
        fixed_set_descriptor(4, 2, A(1, 4))


def _sample_components(nmax):
    for n in range(1, nmax + 1):
        yield from enumerate_components(n)


@pytest.mark.parametrize("c", list(_sample_components(6)), ids=str)
def test_fixed_set_instances_are_fixed(c):
    desc = fixed_set_descriptor(c.n, c.k, c.omega)
    e = ShiftElement(c.n, c.k % c.n)
    to_trivial = desc.translation()
    trivial = fixed_set_descriptor(c.n, c.k, Z)
    for values in itertools.product(range(3), repeat=c.g):
        vals = [A(v, 3) for v in values]
        p = desc.instantiate(vals)
        assert act(e, p) == p
        assert membership(p, c.k) == c.omega
        # translation by t(omega; 1..1) lands in Y(n, k, 1)
        q = translate(p, to_trivial)
        assert q == trivial.instantiate(vals)
        assert membership(q, c.k) == Z


def test_membership_examples():
    # gamma . (0, 1/3, 2/3) = (2/3, 0, 1/3) = (0, 1/3, 2/3) + 2/3
    assert membership(pt(0, "1/3", "2/3"), 1) == A(2, 3)
    assert membership(pt(0, 0, 0, 0), 2) == Z
    assert membership(pt(0, "1/5", 0), 1) is None


@pytest.mark.parametrize("n,M", [(n, M) for n in range(1, 6) for M in range(1, 7)])
def test_membership_partitions_fixed_points(n, M):
    comps = set(enumerate_components(n))
    for p in iter_lattice(n, M):
        for k in range(1, n + 1):
            omega = membership(p, k % n)
            fixed = act(ShiftElement(n, k % n), p) == p
            assert (omega is not None) == fixed
            if omega is None:
                continue
            d = n // gcd(n, k)
            assert d * omega == Z
            claims = [c for c in comps if c.k == k and membership(p, k % n) == c.omega]
            assert len(claims) == 1


# -- projection and fibres -----------------------------------------------------


def test_project_examples():
    tau = pt(0, "1/3", "2/3")
    assert project(ExtQuotPoint(tau, ShiftElement(3, 1))) == tau
    zero = pt(0, 0, 0, 0)
    for k in range(4):
        assert project(ExtQuotPoint(zero, ShiftElement(4, k))) == zero
    p = pt(0, "1/2", 0, 0)
    assert orbit(p) == sorted([pt(0, "1/2", 0, 0), pt(0, 0, "1/2", 0), pt(0, 0, 0, "1/2"), pt(0, "1/2", "1/2", "1/2")])
    assert project(ExtQuotPoint(p, ShiftElement(4, 0))) == pt(0, 0, 0, "1/2")


def test_extquot_point_requires_fixing():
    with pytest.raises(ValueError):
        ExtQuotPoint(pt(0, "1/5", 0), ShiftElement(3, 1))


def test_fibre_examples():
    assert fibre_cardinality(pt(0, "1/3", "2/3")) == 3
    assert fibre_cardinality(pt(0, "1/5", "2/7")) == 1
    assert fibre_cardinality(pt(0, 0)) == 2
    assert {x.element.k for x in fibre(pt(0, 0))} == {0, 1}


@pytest.mark.parametrize("n,M", [(n, M) for n in range(1, 6) for M in range(1, 7)])
def test_fibre_equals_isotropy(n, M):
    reps = {project(ExtQuotPoint(p, ShiftElement(n, 0))) for p in iter_lattice(n, M)}
    for o in reps:
        assert fibre_cardinality(o) == isotropy(o)[0]


# -- lattices and the census kernel -----------------------------------------


def test_rational_lattice_examples():
    assert rational_lattice(2, 2) == [pt(0, 0), pt(0, "1/2")]
    assert rational_lattice(3, 1) == [pt(0, 0, 0)]
    assert len(rational_lattice(2, 4)) == 4
    assert len(rational_lattice(4, 5)) == 125


@pytest.mark.parametrize("n,M", [(2, 3), (3, 4), (4, 3)])
def test_lattice_closed_under_action(n, M):
    pts = set(rational_lattice(n, M))
    assert all(act(ShiftElement(n, k), p) in pts for p in pts for k in range(n))


def test_lattice_codes_roundtrip():
    pts = rational_lattice(4, 3)
    assert [lattice_code(p, 3) for p in pts] == list(range(27))
    assert all(lattice_point(lattice_code(p, 3), 4, 3) == p for p in pts)


def _burnside_orbits(n, M):
    # |X/G| = (1/n) sum_k |X^(gamma^k)|, and the extended quotient has
    # (1/n) sum_{j,k} |X^<gamma^j, gamma^k>| points.
    pts = rational_lattice(n, M)
    fix = {k: {p for p in pts if act(ShiftElement(n, k), p) == p} for k in range(n)}
    orbits = sum(len(fix[k]) for k in range(n)) // n
    ext = sum(len(fix[j] & fix[k]) for j in range(n) for k in range(n)) // n
    return len(pts), orbits, ext


@pytest.mark.parametrize("n,M", [(1, 3), (2, 2), (2, 5), (3, 3), (3, 6), (4, 4), (5, 3)])
def test_lattice_census_matches_burnside(n, M):
    census = lattice_census(n, M)
    assert (census.points, census.orbits, census.extquot_orbits) == _burnside_orbits(n, M)
