import itertools
from collections import Counter

import pytest

from pmqkit import builtins, groups
from pmqkit.errors import BudgetExceeded, UnsupportedInput
from pmqkit.hurwitz import enumerate_orbits, hurwitz_move, orbit_invariants, orbits_from_conj


def t(group, *cycles):
    return groups.find_permutation(group, [list(c) for c in cycles])


def brute_orbit_count(group, c, n, total=None):
    """Union-find with both move directions at every position over the explicit tuple set."""
    tuples = [x for x in itertools.product(sorted(c), repeat=n) if total is None or group.product(x) == total]
    parent = {x: x for x in tuples}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for x in tuples:
        for i in range(n - 1):
            for d in ("fwd", "inv"):
                y = hurwitz_move(group, x, i, d)
                parent[find(x)] = find(y)
    return len({find(x) for x in tuples})


def test_move_examples(s3):
    a, b, c = t(s3, (1, 2)), t(s3, (1, 3)), t(s3, (2, 3))
    assert hurwitz_move(s3, (a, a), 0) == (a, a)
    assert hurwitz_move(s3, (a, b), 0) == (b, c)
    for x in itertools.product(range(6), repeat=3):
        for i in range(2):
            assert hurwitz_move(s3, hurwitz_move(s3, x, i, "fwd"), i, "inv") == x
            assert hurwitz_move(s3, hurwitz_move(s3, x, i, "inv"), i, "fwd") == x


def test_move_errors(s3):
    with pytest.raises(IndexError):
        hurwitz_move(s3, (1, 2), 1)
    with pytest.raises(ValueError):
        hurwitz_move(s3, (1, 2), 0, "sideways")


def test_move_preserves_product(s3, s4):
    for G in (s3, s4):
        for a, b in itertools.product(range(G.size), repeat=2):
            x, y = hurwitz_move(G, (a, b), 0)
            assert G.mult[x][y] == G.mult[a][b]


def test_empty_tuple(s3, s3_transpositions):
    (orbit,) = enumerate_orbits(s3, s3_transpositions, 0)
    assert orbit.rep == () and orbit.size == 1
    assert orbit.invariants.as_dict() == {"total": s3.identity, "classes": [], "subgroup_order": 1}


def test_pairs_of_transpositions(s3, s3_transpositions):
    orbits = enumerate_orbits(s3, s3_transpositions, 2)
    assert len(orbits) == brute_orbit_count(s3, s3_transpositions, 2) == 5
    a = t(s3, (1, 2))
    assert any(o.rep == (a, a) and o.size == 1 for o in orbits)
    by_total = Counter(o.invariants.total for o in orbits)
    assert by_total[s3.identity] == 3
    assert sorted(o.size for o in orbits if o.invariants.total != s3.identity) == [3, 3]


def test_fixed_total_identity(s3, s3_transpositions):
    orbits = enumerate_orbits(s3, s3_transpositions, 2, total=s3.identity)
    assert [o.rep for o in orbits] == [(x, x) for x in s3_transpositions]
    assert all(o.size == 1 for o in orbits)


def test_invariants_of_mixed_pair(s3):
    inv = orbit_invariants(s3, (t(s3, (1, 2)), t(s3, (1, 3))))
    assert s3.element_order(inv.total) == 3
    assert inv.subgroup_order == 6


@pytest.mark.parametrize("n", range(5))
def test_invariants_constant_on_orbits(s3, s3_transpositions, n):
    for orbit in enumerate_orbits(s3, s3_transpositions, n, members=True):
        assert {orbit_invariants(s3, m) for m in orbit.members} == {orbit.invariants}
        assert orbit.rep == min(orbit.members)


@pytest.mark.parametrize("gname, cls", [("S3", "nonidentity"), ("S4", "transpositions"), ("A4", "nonidentity")])
def test_fibres_partition_orbits(gname, cls):
    G = builtins.group(gname)
    c = builtins.nonidentity(G) if cls == "nonidentity" else builtins.transpositions(G)
    for n in range(4):
        total = len(enumerate_orbits(G, c, n))
        assert total == brute_orbit_count(G, c, n)
        assert total == sum(len(enumerate_orbits(G, c, n, total=g)) for g in range(G.size))


def test_orbits_on_pmq_conjugation(trivial_s3, s3, s3_transpositions):
    q = trivial_s3.pmq
    for n in range(5):
        assert len(orbits_from_conj(q.conj, q.positive, n)) == len(enumerate_orbits(s3, s3_transpositions, n))


def test_rejects_non_closed_and_budget(s3):
    with pytest.raises(UnsupportedInput):
        enumerate_orbits(s3, [t(s3, (1, 2))], 2)
    with pytest.raises(BudgetExceeded):
        enumerate_orbits(s3, builtins.transpositions(s3), 5, budget=100)
