"""Basic subsets, derived sets, decomposition, achievable dimensions."""

import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coadorbits.basic import (
    Chain,
    NotBasicError,
    WrongKindError,
    achievable_dimensions,
    basic_map,
    basic_map_from_json,
    basic_map_to_json,
    basic_point,
    basic_subset,
    chains_in,
    decompose,
    derived_set,
    enumerate_basic_subsets,
    is_basic,
    is_single_orbit,
    iter_scan_records,
    max_dimension,
    max_singular_witness,
    max_weyl_index,
    s_of,
    singular_union,
    support,
    witness_basic_subsets,
)
from coadorbits.functionals import coadjoint_apply, e_star, functional, orbit_dimension, zero_functional
from coadorbits.oracle import default_word_length, random_word
from coadorbits.orbits import chart_point, orbit_chart
from coadorbits.roots import diff, get_system, short

A4 = get_system("A", 4)
A6 = get_system("A", 6)


def rook_condition(roots):
    firsts = [r.i for r in roots]
    seconds = [r.j for r in roots]
    return len(set(firsts)) == len(firsts) and len(set(seconds)) == len(seconds)


# ---------------------------------------------------------------------------
# Support and basicness
# ---------------------------------------------------------------------------

def test_support_examples():
    assert support(zero_functional(A4)) == ()
    f = functional(A4, {diff(1, 3): 3, diff(2, 4): -1})
    assert set(support(f)) == {diff(1, 3), diff(2, 4)}


def test_support_of_chart_point():
    chart = orbit_chart("A", 4, diff(1, 4), 1)
    f = chart_point(chart, {diff(1, 3): 1, diff(2, 4): 1, diff(1, 2): 0, diff(3, 4): 0})
    got = set(support(f))
    assert {diff(1, 4), diff(1, 3), diff(2, 4), diff(2, 3)} <= got


def test_support_rejects_other_kinds():
    with pytest.raises(WrongKindError):
        support(e_star(get_system("B", 3), short(1)))


def test_is_basic_examples():
    assert is_basic([diff(1, 3), diff(2, 5), diff(3, 4)])
    assert is_basic([])
    assert not is_basic([diff(1, 3), diff(1, 2)])
    assert is_basic([diff(1, 2), diff(2, 3)])  # chains are basic
    assert not is_basic([diff(1, 3), diff(2, 3)])


def test_is_basic_rejects_non_diff_roots():
    with pytest.raises(WrongKindError):
        is_basic([short(1)])


@given(st.lists(st.sampled_from(A6.roots), max_size=5, unique=True))
def test_is_basic_equals_rook_condition(roots):
    assert is_basic(roots) == rook_condition(roots)


def test_basic_subset_constructor_validates():
    with pytest.raises(NotBasicError):
        basic_subset(4, [diff(1, 3), diff(2, 3)])


# ---------------------------------------------------------------------------
# Singular unions
# ---------------------------------------------------------------------------

def test_singular_union_examples():
    assert s_of(basic_subset(4, [])) == 0
    d = basic_subset(4, [diff(1, 4), diff(2, 3)])
    assert s_of(d) == 4
    assert set(singular_union(d)) == {diff(1, 2), diff(2, 4), diff(1, 3), diff(3, 4)}
    assert s_of(basic_subset(3, [diff(2, 3)])) == 0


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def bell(n):
    # Bell numbers via the Stirling triangle; rook placements on the
    # strictly-upper staircase board are counted by them.
    b = [1]
    for _ in range(n):
        row = [b[-1]]
        for v in b:
            row.append(row[-1] + v)
        b = row
    return b[0]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_enumeration_count_is_bell_number(n):
    assert sum(1 for _ in enumerate_basic_subsets(n)) == bell(n)


def test_enumeration_small_cases_exactly():
    assert [set(d.roots) for d in enumerate_basic_subsets(2)] == [set(), {diff(1, 2)}]
    got = [frozenset(d.roots) for d in enumerate_basic_subsets(3)]
    assert len(got) == len(set(got)) == 5


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_brute_force_filter(n):
    system = get_system("A", n)
    expected = set()
    for k in range(len(system.roots) + 1):
        for combo in itertools.combinations(system.roots, k):
            if is_basic(combo):
                expected.add(frozenset(combo))
    got = {frozenset(d.roots) for d in enumerate_basic_subsets(n)}
    assert got == expected


# ---------------------------------------------------------------------------
# Chains and derived sets
# ---------------------------------------------------------------------------

def test_chain_validation():
    with pytest.raises(ValueError):
        Chain((3,))
    with pytest.raises(ValueError):
        Chain((2, 2))
    assert Chain((1, 3, 5)).roots() == (diff(1, 3), diff(3, 5))


def test_chains_in_subset():
    d = basic_subset(6, [diff(1, 3), diff(3, 5), diff(2, 4)])
    got = {c.indices for c in chains_in(d)}
    assert got == {(1, 3), (3, 5), (1, 3, 5), (2, 4)}


def test_derived_set_worked_example():
    d = basic_subset(6, [diff(1, 3), diff(3, 5), diff(2, 4), diff(4, 6)])
    assert derived_set(d) == frozenset({diff(1, 2)})
    assert not is_single_orbit(d)


def test_derived_set_of_singletons_and_empty():
    assert derived_set(basic_subset(6, [diff(1, 6)])) == frozenset()
    assert derived_set(basic_subset(4, [])) == frozenset()
    assert is_single_orbit(basic_subset(4, [diff(2, 4)]))
    assert is_single_orbit(basic_subset(4, []))


def test_derived_set_condition_iii_and_iv_matter():
    # a forward extension landing inside the partner chain keeps the pair special
    d1 = basic_subset(5, [diff(1, 3), diff(3, 4), diff(2, 5)])
    assert derived_set(d1) == frozenset({diff(1, 2)})
    # ... but an extension landing past its end kills it
    d2 = basic_subset(6, [diff(1, 3), diff(3, 5), diff(2, 4)])
    assert derived_set(d2) == frozenset()
    # a backward extension of the partner chain starting too early also kills it
    assert derived_set(basic_subset(6, [diff(3, 5), diff(4, 6)])) == frozenset({diff(3, 4)})
    assert derived_set(basic_subset(6, [diff(2, 4), diff(3, 5), diff(4, 6)])) == frozenset()


def test_derived_set_is_inside_singular_union():
    for n in (4, 5, 6):
        for subset in enumerate_basic_subsets(n):
            assert set(derived_set(subset)) <= set(singular_union(subset))


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------

def test_decompose_zero():
    result = decompose(zero_functional(A4))
    assert result.subset.roots == ()
    assert result.map.phi == {}


def test_decompose_rook_points():
    for n in (3, 4, 5):
        for subset in enumerate_basic_subsets(n):
            phi = {r: Q((-1) ** r.i * (r.i + r.j), 2) for r in subset.roots}
            f = basic_point(basic_map(subset, phi)) if phi else zero_functional(get_system("A", n))
            result = decompose(f)
            assert result.subset == subset
            assert result.map.phi == phi


def test_decompose_is_word_invariant():
    rng = random.Random("basic-dec")
    for n in (3, 4, 5, 6):
        system = get_system("A", n)
        subsets = list(enumerate_basic_subsets(n))
        for _ in range(25):
            subset = subsets[rng.randrange(len(subsets))]
            phi = {r: Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
                   for r in subset.roots}
            f = basic_point(basic_map(subset, phi)) if phi else zero_functional(system)
            moved = coadjoint_apply(random_word(system, rng, default_word_length(system)), f)
            result = decompose(moved)
            assert result.subset == subset
            assert result.map.phi == phi


def test_decompose_rejects_other_kinds():
    with pytest.raises(WrongKindError):
        decompose(e_star(get_system("B", 3), short(1)))


def test_decompose_single_elementary_orbit_points():
    rng = random.Random("dec-elem")
    for n in (3, 4, 5):
        system = get_system("A", n)
        for alpha in system.roots:
            c = Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
            chart = orbit_chart("A", n, alpha, c)
            assignment = {r: Q(rng.choice([-2, -1, 0, 1, 2])) for r in chart.data.singular}
            f = chart_point(chart, assignment)
            result = decompose(f)
            assert result.subset.roots == (alpha,)
            assert result.map.phi == {alpha: c}


def test_decompose_on_true_coordinatewise_sums():
    # points of a basic sum built as literal sums of independently sampled
    # elementary orbit points, not as word images of the distinguished point
    rng = random.Random("dec-sums")
    for n in (4, 5, 6):
        system = get_system("A", n)
        subsets = [d for d in enumerate_basic_subsets(n) if d.roots]
        for _ in range(40):
            subset = subsets[rng.randrange(len(subsets))]
            phi = {}
            total = zero_functional(system)
            for alpha in subset.roots:
                c = Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
                phi[alpha] = c
                chart = orbit_chart("A", n, alpha, c)
                assignment = {
                    r: Q(rng.choice([-2, -1, 0, 1, 2]), rng.choice([1, 2]))
                    for r in chart.data.singular
                }
                total = total.plus(chart_point(chart, assignment))
            result = decompose(total)
            assert result.subset == subset
            assert result.map.phi == phi


def test_dimension_bounded_by_s_generatively():
    rng = random.Random("dim-bound")
    for n in (3, 4, 5):
        system = get_system("A", n)
        for subset in enumerate_basic_subsets(n):
            if not subset.roots:
                continue
            phi = {r: Q(rng.choice([-2, -1, 1, 2])) for r in subset.roots}
            f = basic_point(basic_map(subset, phi))
            moved = coadjoint_apply(random_word(system, rng, 8), f)
            assert orbit_dimension(moved) <= s_of(subset)


def test_single_orbit_dichotomy_small():
    for n in (2, 3, 4, 5):
        for subset in enumerate_basic_subsets(n):
            if not subset.roots:
                continue
            f = basic_point(basic_map(subset, {r: 1 for r in subset.roots}))
            dim = orbit_dimension(f)
            if is_single_orbit(subset):
                assert dim == s_of(subset)
            else:
                assert dim < s_of(subset)


def test_two_dimensional_orbits_have_tight_support_window():
    # every sampled functional with a two-dimensional orbit decomposes into
    # a basic subset with s(D) of 2 or 3
    rng = random.Random("window")
    hits = 0
    for n in (3, 4, 5, 6):
        system = get_system("A", n)
        for _ in range(120):
            values = {}
            for root in system.roots:
                if rng.randrange(4) == 0:
                    values[root] = Q(rng.choice([-2, -1, 1, 2]))
            f = functional(system, values)
            if orbit_dimension(f) != 2:
                continue
            hits += 1
            assert s_of(decompose(f).subset) in (2, 3)
    assert hits > 20, "sampling must actually exercise the window"


# ---------------------------------------------------------------------------
# Achievable dimensions
# ---------------------------------------------------------------------------

def test_achievable_dimension_examples():
    assert achievable_dimensions(4) == [0, 2, 4]
    assert max_dimension(4) == 4
    assert achievable_dimensions(3) == [0, 2]
    assert max_dimension(3) == 2
    assert achievable_dimensions(6) == [0, 2, 4, 6, 8, 10, 12]
    assert max_dimension(6) == 12
    assert max_weyl_index(7) == 9


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_achievable_dimensions_match_exhaustive_scan(n):
    reachable = sorted({s_of(d) for d in enumerate_basic_subsets(n) if is_single_orbit(d)})
    assert reachable == achievable_dimensions(n)


def test_witnesses_match_printed_families():
    ws6 = dict(witness_basic_subsets(6))
    assert ws6[0].roots == (diff(3, 4),)
    assert ws6[1].roots == (diff(3, 5),)
    assert ws6[2].roots == (diff(2, 5),)
    assert ws6[3].roots == (diff(2, 6),)
    assert ws6[4].roots == (diff(1, 6),)
    ws5 = dict(witness_basic_subsets(5))
    assert ws5[0].roots == (diff(3, 4),)
    assert ws5[1].roots == (diff(2, 4),)
    assert ws5[2].roots == (diff(2, 5),)
    assert ws5[3].roots == (diff(1, 5),)


@pytest.mark.parametrize("n", range(2, 11))
def test_witnesses_cover_every_achievable_dimension(n):
    ws = witness_basic_subsets(n)
    assert [m for m, _ in ws] == list(range(max_weyl_index(n) + 1))
    for m, subset in ws:
        assert is_single_orbit(subset)
        assert s_of(subset) == 2 * m


@pytest.mark.parametrize("n", range(2, 9))
def test_max_singular_witness_attains_the_scan_maximum(n):
    witness = max_singular_witness(n)
    assert s_of(witness) == max_dimension(n)
    assert max(s_of(d) for d in enumerate_basic_subsets(n)) == s_of(witness)


def test_max_singular_witness_examples():
    assert set(max_singular_witness(4).roots) == {diff(1, 4), diff(2, 3)}
    assert s_of(max_singular_witness(5)) == 8
    assert s_of(max_singular_witness(6)) == 12


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def test_basic_map_json_round_trip():
    subset = basic_subset(5, [diff(1, 3), diff(2, 5)])
    bmap = basic_map(subset, {diff(1, 3): Q(2), diff(2, 5): Q(-1, 3)})
    payload = basic_map_to_json(bmap)
    assert payload == {
        "n": 5,
        "roots": ["e1-e3", "e2-e5"],
        "phi": {"e1-e3": "2", "e2-e5": "-1/3"},
    }
    assert basic_map_from_json(payload) == bmap


def test_scan_records_shape():
    records = list(iter_scan_records(3))
    assert len(records) == 5
    by_roots = {tuple(r["roots"]): r for r in records}
    assert by_roots[("e1-e3",)]["s"] == 2
    assert by_roots[("e1-e3",)]["single_orbit"] is True
    assert by_roots[()]["s"] == 0


def test_basic_map_validation():
    subset = basic_subset(4, [diff(1, 3)])
    with pytest.raises(ValueError):
        basic_map(subset, {diff(1, 3): 0})
    with pytest.raises(ValueError):
        basic_map(subset, {diff(1, 4): 1})
