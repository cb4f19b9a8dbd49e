import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyaut.errors import CapacityError
from cayleyaut.groups import (
    NotASubgroupError,
    center_is_trivial,
    contains,
    group_from_generators,
    intersection_is_trivial,
    is_full_symmetric,
    is_normal_subgroup,
    order,
    recognize_dihedral,
    trivial_group,
)
from cayleyaut.perm import Perm, PermError, identity, parse_cycles, parse_cycle_words

from conftest import closure


def G(text, n):
    return group_from_generators(parse_cycle_words(text, n))


def dihedral(n):
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    ref = Perm(tuple((-i) % n for i in range(n)))
    return group_from_generators([rot, ref])


S4 = lambda: G("(1,2),(2,3),(3,4)", 4)
A4 = lambda: group_from_generators([parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)])


def test_orders():
    assert order(S4()) == 24 == len(closure(S4().generators))
    assert order(trivial_group(4)) == 1
    assert order(group_from_generators([identity(3)])) == 1
    assert order(G("(1,2),(2,3),(3,4),(4,5),(1,5)", 5)) == 120
    assert order(dihedral(6)) == 12 == len(closure(dihedral(6).generators))


def test_mixed_degrees_rejected():
    with pytest.raises(PermError):
        group_from_generators([identity(3), identity(4)])


def test_contains():
    assert contains(S4(), parse_cycles("(1,3)", 4))
    a4 = A4()
    assert len(closure(a4.generators)) == 12
    assert parse_cycles("(1,2)", 4) not in closure(a4.generators)
    assert not contains(a4, parse_cycles("(1,2)", 4))
    assert contains(a4, identity(4))
    with pytest.raises(PermError):
        contains(a4, identity(5))


def test_normal_subgroup():
    s4 = S4()
    assert is_normal_subgroup(s4, A4())
    assert not is_normal_subgroup(s4, G("(1,2)", 4))
    assert is_normal_subgroup(s4, s4)
    with pytest.raises(NotASubgroupError):
        is_normal_subgroup(A4(), G("(1,2)", 4))


def test_intersection():
    s3 = G("(1,2),(2,3)", 3)
    assert not intersection_is_trivial(s3, s3)
    assert intersection_is_trivial(G("(1,2)", 4), G("(3,4)", 4))
    big = G("(1,2),(2,3),(3,4),(4,5),(5,6),(6,7),(7,8),(8,9),(9,10)", 10)
    with pytest.raises(CapacityError):
        intersection_is_trivial(big, big, bound=1000)


def test_center():
    for n in range(3, 7):
        gens = [parse_cycles(f"({i},{i + 1})", n) for i in range(1, n)]
        assert center_is_trivial(group_from_generators(gens))
    assert not center_is_trivial(G("(1,2)", 2))
    assert not center_is_trivial(G("(1,2,3,4)", 4))


def test_recognize_dihedral():
    for n in range(3, 9):
        assert recognize_dihedral(dihedral(n)) == n
    assert recognize_dihedral(G("(1,2),(2,3)", 3)) == 3
    assert recognize_dihedral(G("(1,2,3,4,5,6)", 6)) is None
    assert recognize_dihedral(G("(1,2)(3,4),(1,3)(2,4)", 4)) is None  # order 4 is below the cutoff
    assert recognize_dihedral(A4()) is None


def test_is_full_symmetric():
    assert is_full_symmetric(G("(1,2),(1,3),(1,4)", 4), 4)
    assert not is_full_symmetric(G("(1,2),(3,4)", 4), 4)
    assert is_full_symmetric(group_from_generators([identity(1)]), 1)


def test_big_order_is_exact():
    n = 21
    gens = [parse_cycles("(1,2)", n), Perm(tuple((i + 1) % n for i in range(n)))]
    assert order(group_from_generators(gens)) == math.factorial(21)


def test_stabilizer_and_base_prefix():
    s5 = G("(1,2),(2,3),(3,4),(4,5)", 5)
    st = s5.stabilizer(2)
    assert st.order == 24
    assert all(g.images[2] == 2 for g in st.generators)
    rebased = group_from_generators(s5.generators, base=[4, 3])
    assert rebased.base[:2] == (4, 3)
    assert rebased.order == 120


def test_deterministic_strong_generators():
    a = G("(1,2,3,4,5),(1,2)", 5)
    b = G("(1,2,3,4,5),(1,2)", 5)
    assert a.strong_generators == b.strong_generators
    assert a.base == b.base
    keys = [g.images for g in a.strong_generators]
    assert keys == sorted(set(keys))


small_gen_lists = st.integers(3, 7).flatmap(
    lambda n: st.lists(st.permutations(range(n)).map(lambda t: Perm(tuple(t))), min_size=1, max_size=3)
)


@settings(max_examples=60, deadline=None)
@given(small_gen_lists)
def test_schreier_sims_matches_closure(gens):
    grp = group_from_generators(gens)
    elems = closure(gens)
    assert grp.order == len(elems)
    assert all(grp.contains(g) for g in gens)
    assert all(grp.contains(g) for g in grp.strong_generators)


@settings(max_examples=30, deadline=None)
@given(small_gen_lists, st.randoms(use_true_random=False))
def test_membership_matches_enumeration(gens, rnd):
    grp = group_from_generators(gens)
    elems = closure(gens)
    if len(elems) <= 1000:
        assert {p for p in grp.elements()} == elems
    n = gens[0].degree
    for _ in range(30):
        images = list(range(n))
        rnd.shuffle(images)
        p = Perm(tuple(images))
        assert grp.contains(p) == (p in elems)


def test_random_element_in_group():
    grp = dihedral(7)
    rng = random.Random(1)
    for _ in range(20):
        assert grp.contains(grp.random_element(rng))
