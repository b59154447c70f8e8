import pytest
from hypothesis import given, strategies as st

from legrack.perms import (
    PermGroup,
    burnside_pair_count,
    centralizer,
    compose,
    conjugate,
    cycle_string,
    cycle_type,
    diagonal_pair_orbits,
    identity,
    inverse,
    parse_cycles,
    power,
    subgroup_closure,
    symmetric_group,
    trivial_group,
    validate_perm,
)


def perms_of(n):
    return st.permutations(list(range(n))).map(tuple)


def test_compose_identity_and_involution():
    assert compose(identity(2), (1, 0)) == (1, 0)
    assert compose((1, 0), (1, 0)) == identity(2)


def test_compose_hand_evaluated_convention():
    # p = 3-cycle 0->1->2->0, q = swap of 0,1; (p o q)(0) = p(1) = 2, etc.
    p = (1, 2, 0)
    q = (1, 0, 2)
    assert compose(p, q) == (2, 1, 0)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(perms_of(n), perms_of(n), perms_of(n))))
def test_compose_associative_and_inverse(pqr):
    p, q, r = pqr
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)) == identity(len(p))
    assert compose(inverse(p), p) == identity(len(p))


def test_power_negative_and_zero():
    p = (1, 2, 0)
    assert power(p, 0) == identity(3)
    assert power(p, 3) == identity(3)
    assert power(p, -1) == inverse(p)
    assert power(p, -2) == compose(inverse(p), inverse(p))


def test_subgroup_closure_examples():
    assert subgroup_closure([(1, 0)]).order == 2
    assert subgroup_closure([(1, 0, 2), (0, 2, 1)]).order == 6
    assert subgroup_closure([], degree=3) == trivial_group(3)


@given(st.integers(2, 5).flatmap(
    lambda n: st.lists(perms_of(n), min_size=1, max_size=2)))
def test_closure_is_closed(gens):
    group = subgroup_closure(gens)
    elems = group.sorted_elements()
    for a in elems:
        for b in elems:
            assert compose(a, b) in group


def test_centralizer_examples():
    s3 = symmetric_group(3)
    assert centralizer(s3, [identity(3)]).order == 6
    assert centralizer(s3, [(1, 2, 0)]).elements == \
        subgroup_closure([(1, 2, 0)]).elements
    s2 = symmetric_group(2)
    assert centralizer(s2, [(1, 0)]).order == 2


def test_centralizer_is_subgroup():
    s4 = symmetric_group(4)
    c = centralizer(s4, [(1, 0, 3, 2)])
    for a in c.sorted_elements():
        for b in c.sorted_elements():
            assert compose(a, b) in c


def test_pair_orbits_trivial_action():
    s2 = symmetric_group(2)
    pairs = [(a, b) for a in s2 for b in s2]
    assert len(diagonal_pair_orbits(pairs, s2)) == 4


def test_pair_orbits_fixed_point():
    s3 = symmetric_group(3)
    orbits = diagonal_pair_orbits([(identity(3), identity(3))], s3)
    assert len(orbits) == 1 and orbits[0].size == 1


def test_burnside_formula_small():
    assert burnside_pair_count(trivial_group(1)) == 1
    assert burnside_pair_count(symmetric_group(2)) == 4  # (4 + 4) / 2
    assert burnside_pair_count(symmetric_group(3)) == 11  # (36 + 3*4 + 2*9) / 6


@pytest.mark.parametrize("group", [
    trivial_group(3),
    symmetric_group(2),
    symmetric_group(3),
    subgroup_closure([(1, 2, 3, 0)]),
    subgroup_closure([(1, 0, 2, 3), (0, 1, 3, 2)]),
    symmetric_group(4),
    subgroup_closure([(1, 2, 3, 4, 0)]),
    subgroup_closure([(1, 2, 0, 3), (1, 0, 2, 3)]),
])
def test_burnside_matches_explicit_orbits(group):
    assert group.order <= 120
    pairs = [(a, b) for a in group for b in group]
    orbits = diagonal_pair_orbits(pairs, group)
    assert burnside_pair_count(group) == len(orbits)
    assert sum(o.size for o in orbits) == group.order ** 2
    for o in orbits:
        assert o.representative == min(o.members)


def test_orbit_reps_are_canonical_and_sorted():
    s3 = symmetric_group(3)
    pairs = [(a, b) for a in s3 for b in s3]
    orbits = diagonal_pair_orbits(pairs, s3)
    reps = [o.representative for o in orbits]
    assert reps == sorted(reps)


def test_cycle_string_and_parse_roundtrip():
    assert cycle_string(identity(4)) == "()"
    assert cycle_string((1, 2, 0, 4, 3)) == "(0 1 2)(3 4)"
    for text, n in [("(0 1 2)(3 4)", 5), ("()", 3), ("(1 3)", 4)]:
        p = parse_cycles(text, n)
        assert parse_cycles(cycle_string(p), n) == p


def test_parse_cycles_rejects_garbage():
    for bad in ["(0 1", "(0 0)", "(0 1)(1 2)", "(9)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 3)


def test_validate_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        validate_perm((0, 0, 2))


def test_conjugate_matches_definition():
    g, p = (1, 2, 0), (1, 0, 2)
    assert conjugate(g, p) == compose(compose(g, p), inverse(g))


def test_group_degree_consistency():
    with pytest.raises(ValueError):
        PermGroup(3, frozenset({(0, 1)}))
