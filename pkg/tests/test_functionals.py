"""Coadjoint action, skew forms, orbit dimensions, radicals."""

import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coadorbits.functionals import (
    coadjoint_apply,
    coadjoint_apply_one,
    concat_words,
    e_star,
    functional,
    functional_from_json,
    functional_to_json,
    group_word,
    orbit_dimension,
    radical_basis,
    skew_form,
    zero_functional,
)
from coadorbits.oracle import random_functional, random_word
from coadorbits.orbits import singular_set
from coadorbits.roots import RootSystemKind, diff, get_system, short, sum_root

KINDS = tuple(RootSystemKind)

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
).filter(lambda q: q != 0)


def small_words(system, max_len=4):
    roots = st.sampled_from(system.roots)
    return st.lists(st.tuples(roots, rationals), max_size=max_len).map(group_word)


# ---------------------------------------------------------------------------
# One-letter action
# ---------------------------------------------------------------------------

def test_simple_root_functionals_are_fixed_points():
    for kind in KINDS:
        system = get_system(kind, 4)
        for alpha in system.simple_roots():
            f = e_star(system, alpha, Q(5, 3))
            for beta in system.roots:
                assert coadjoint_apply_one(beta, Q(7, 2), f) == f


def test_zero_parameter_is_identity():
    system = get_system("B", 3)
    f = e_star(system, sum_root(1, 3), 2)
    assert coadjoint_apply_one(diff(1, 2), 0, f) == f


def test_one_letter_worked_example():
    # acting along e2-e3 on e*_{e1-e3} feeds the parameter into the e1-e2 slot
    system = get_system("A", 3)
    f = e_star(system, diff(1, 3))
    g = coadjoint_apply_one(diff(2, 3), Q(5, 7), f)
    assert g.values == {diff(1, 2): Q(5, 7), diff(1, 3): Q(1)}


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def test_empty_word_is_identity():
    system = get_system("D", 3)
    f = e_star(system, sum_root(1, 3), -2)
    assert coadjoint_apply(group_word([]), f) == f


def test_inverse_word():
    system = get_system("B", 3)
    f = functional(system, {sum_root(1, 3): Q(2), diff(1, 2): Q(-1, 3)})
    w = group_word([(short(2), Q(3, 2)), (short(2), Q(-3, 2))])
    assert coadjoint_apply(w, f) == f


@given(rationals, rationals)
def test_one_parameter_subgroup_law(s, t):
    system = get_system("B", 3)
    f = functional(system, {sum_root(1, 3): 1, diff(1, 3): Q(1, 2), short(3): -2})
    beta = short(2)
    two = coadjoint_apply(group_word([(beta, s), (beta, t)]), f)
    one = coadjoint_apply(group_word([(beta, s + t)]), f)
    assert two == one


@given(st.data())
def test_concatenation_is_group_multiplication(data):
    system = get_system("A", 4)
    w1 = data.draw(small_words(system))
    w2 = data.draw(small_words(system))
    f = functional(system, {diff(1, 4): 1, diff(2, 4): Q(1, 2)})
    lhs = coadjoint_apply(concat_words(w1, w2), f)
    rhs = coadjoint_apply(w1, coadjoint_apply(w2, f))
    assert lhs == rhs


# ---------------------------------------------------------------------------
# Skew form, dimension, radical
# ---------------------------------------------------------------------------

def test_skew_form_of_zero():
    system = get_system("A", 3)
    m = skew_form(zero_functional(system))
    assert all(v == 0 for row in m.rows for v in row)


def test_skew_form_rank_two_example():
    system = get_system("A", 3)
    m = skew_form(e_star(system, diff(1, 3)))
    a = system.index_of(diff(1, 2))
    b = system.index_of(diff(2, 3))
    assert m.rows[a][b] == 1
    assert m.rows[b][a] == -1
    assert orbit_dimension(e_star(system, diff(1, 3))) == 2


@pytest.mark.parametrize("kind", KINDS)
def test_skew_form_antisymmetry_random(kind):
    system = get_system(kind, 3)
    rng = random.Random(f"skew:{kind.value}")
    for _ in range(5):
        f = random_functional(system, rng)
        m = skew_form(f)
        size = len(system.roots)
        for a in range(size):
            for b in range(size):
                assert m.rows[a][b] == -m.rows[b][a]


def test_orbit_dimension_examples():
    assert orbit_dimension(zero_functional(get_system("A", 3))) == 0
    assert orbit_dimension(e_star(get_system("A", 4), diff(1, 4))) == 4
    assert orbit_dimension(e_star(get_system("D", 3), sum_root(1, 3))) == 2


def test_orbit_dimension_matches_singular_count_spot():
    for kind in KINDS:
        for n in (2, 3, 4, 5, 6):
            system = get_system(kind, n)
            for alpha in (system.roots[0], system.roots[-1]):
                expected = len(singular_set(kind, n, alpha).singular)
                for c in (Q(1), Q(2), Q(-3, 5)):
                    assert orbit_dimension(e_star(system, alpha, c)) == expected


def test_orbit_dimension_invariant_along_orbits():
    for kind in KINDS:
        for n in (2, 3, 4):
            system = get_system(kind, n)
            for t in range(50):
                rng = random.Random(f"orbinv:{kind.value}:{n}:{t}")
                f = random_functional(system, rng)
                w = random_word(system, rng, 2 * len(system.roots))
                assert orbit_dimension(coadjoint_apply(w, f)) == orbit_dimension(f)


@given(rationals)
def test_orbit_dimension_scaling_invariance(c):
    system = get_system("B", 3)
    f = functional(system, {sum_root(1, 3): 1, diff(1, 2): Q(1, 2), short(2): -1})
    assert orbit_dimension(f.scaled(c)) == orbit_dimension(f)


def test_radical_of_zero_is_everything():
    system = get_system("D", 3)
    assert len(radical_basis(zero_functional(system))) == len(system.roots)


def test_radical_of_elementary_functional():
    for kind in KINDS:
        system = get_system(kind, 4)
        for alpha in (system.roots[0], system.roots[-1]):
            f = e_star(system, alpha, Q(3, 2))
            data = singular_set(kind, 4, alpha)
            basis = radical_basis(f)
            assert len(basis) == len(data.regular)
            m = skew_form(f).rows
            for beta in data.regular:
                k = system.index_of(beta)
                assert all(row[k] == 0 for row in m), "coordinate vector is in the kernel"


def test_radical_kernel_dimension_example():
    system = get_system("A", 3)
    assert len(radical_basis(e_star(system, diff(1, 3)))) == 1


def test_radical_dimension_count_random():
    for kind in KINDS:
        system = get_system(kind, 4)
        rng = random.Random(f"radcount:{kind.value}")
        for _ in range(5):
            f = random_functional(system, rng)
            assert len(radical_basis(f)) == len(system.roots) - orbit_dimension(f)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def test_functional_json_round_trip():
    system = get_system("B", 3)
    f = functional(system, {diff(1, 3): Q(-3, 7), short(2): Q(4), sum_root(1, 2): Q(1, 2)})
    payload = functional_to_json(f)
    assert payload["kind"] == "B" and payload["n"] == 3
    assert payload["values"]["e1-e3"] == "-3/7"
    assert functional_from_json(payload) == f


def test_functional_json_rejects_bad_input():
    with pytest.raises(ValueError):
        functional_from_json({"kind": "A", "values": {}})
    with pytest.raises(Exception):
        functional_from_json({"kind": "A", "n": 3, "values": {"e1": "1"}})
