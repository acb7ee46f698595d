import itertools
from math import comb

import pytest

from pmqkit import builtins
from pmqkit.aq import hilbert_series
from pmqkit.errors import BudgetExceeded, UnsupportedInput
from pmqkit.pmq import validate_pmq
from pmqkit.sullivan import (
    SullivanModel,
    check_d_squared,
    identity_component,
    loop_model,
    loop_twice_betti,
    model_cohomology,
    monomials_of_degree,
    square_zero_quotient_dims,
    stable_hurwitz_betti,
    sullivan_model,
)

def a4_nonidentity():
    from pmqkit.pmq import from_group_subset

    G = builtins.group("A4")
    return from_group_subset(G, builtins.nonidentity(G), "trivial", with_pair=True)


def unit_pmq():
    return validate_pmq(1, 0, [[0]], [[0]], [0])


def test_model_examples():
    assert sullivan_model(unit_pmq()).ngens == 0
    m = sullivan_model(builtins.pmq("s3-transpositions"))
    assert m.degrees == (2, 3)
    assert m.d == ((), (((2, 0), 1),))
    assert sullivan_model(builtins.pmq("s3-nonidentity")).degrees == (2, 2, 3, 3)
    assert sullivan_model(a4_nonidentity()).ngens == 6


def test_model_rejects_nontrivial_product():
    with pytest.raises(UnsupportedInput):
        sullivan_model(builtins.pmq("geodesic-s3"))
    with pytest.raises(UnsupportedInput):
        loop_twice_betti(builtins.pmq("geodesic-s3"), 3)


def test_koszul_signs():
    m = SullivanModel((1, 1, 2), ((), (), ()))
    x, y, z = m.generator(0), m.generator(1), m.generator(2)
    assert m.multiply(x, y) == (1, (1, 1, 0))
    assert m.multiply(y, x) == (-1, (1, 1, 0))
    assert m.multiply(x, x) == (0, None)
    assert m.multiply(z, x) == (1, (1, 0, 1))


def test_leibniz_on_product():
    # d(y0 y1) = x0^2 y1 - y0 x1^2 with |y| odd
    m = sullivan_model(builtins.pmq("s3-nonidentity"))
    assert m.differential((0, 0, 1, 1)) == {(2, 0, 0, 1): 1, (0, 2, 1, 0): -1}


@pytest.mark.parametrize("name", ["s3-transpositions", "s3-nonidentity"])
def test_d_squared_on_truncated_basis(name):
    assert check_d_squared(sullivan_model(builtins.pmq(name)), 12) is None


def test_d_squared_detects_bad_differential():
    # d y = x, d z = y on odd/even mismatch still squares to zero; d z = x y does not
    bad = SullivanModel((2, 3, 4), ((), (((1, 0, 0), 1),), (((1, 1, 0), 1),)))
    assert check_d_squared(bad, 8) is not None


def test_monomials_of_degree():
    m = sullivan_model(builtins.pmq("s3-transpositions"))
    assert monomials_of_degree(m, 5) == [(1, 1)]
    assert monomials_of_degree(m, 6) == [(3, 0)]
    assert monomials_of_degree(m, 1) == []


def test_model_cohomology_examples():
    assert model_cohomology(sullivan_model(unit_pmq()), 4) == [1, 0, 0, 0, 0]
    assert model_cohomology(sullivan_model(builtins.pmq("s3-transpositions")), 6) == [1, 0, 1, 0, 0, 0, 0]
    assert model_cohomology(sullivan_model(builtins.pmq("s3-nonidentity")), 6) == [1, 0, 2, 0, 1, 0, 0]


@pytest.mark.parametrize("k", range(4))
def test_cohomology_is_square_zero_quotient(k):
    model = SullivanModel((2,) * k + (3,) * k, tuple(
        () if i < k else (((tuple(2 * int(j == i - k) for j in range(2 * k))), 1),) for i in range(2 * k)
    ))
    assert model_cohomology(model, 8) == square_zero_quotient_dims(k, 8)


def test_cohomology_budget():
    with pytest.raises(BudgetExceeded):
        model_cohomology(sullivan_model(a4_nonidentity()), 12, budget=50)
    with pytest.raises(ValueError):
        model_cohomology(sullivan_model(unit_pmq()), -1)


def test_hilbert_agrees_with_model_for_one_class():
    pair = builtins.pmq("s3-transpositions")
    assert hilbert_series(pair, 8) == model_cohomology(sullivan_model(pair), 8)


def test_hilbert_and_model_diverge_for_two_classes():
    # every product of positive classes vanishes in A(Q), whereas x1 x2 survives in the model
    pair = builtins.pmq("s3-nonidentity")
    assert hilbert_series(pair, 8) == [1, 0, 2, 0, 0, 0, 0, 0, 0]
    assert model_cohomology(sullivan_model(pair), 8) == [1, 0, 2, 0, 1, 0, 0, 0, 0]


def test_loop_shift():
    m = sullivan_model(builtins.pmq("s3-transpositions"))
    once = loop_model(m)
    assert once.degrees == (1, 2)
    assert once.d == ((), ())
    twice = identity_component(loop_model(once))
    assert twice.degrees == (1,)


@pytest.mark.parametrize("obj, expected", [
    (unit_pmq, [1, 0, 0, 0]),
    (lambda: builtins.pmq("s3-transpositions"), [1, 1, 0, 0]),
    (lambda: builtins.pmq("s3-nonidentity"), [1, 2, 1, 0]),
    (a4_nonidentity, [1, 3, 3, 1]),
])
def test_loop_twice_betti(obj, expected):
    assert loop_twice_betti(obj(), 3) == expected


@pytest.mark.parametrize("gname, cls, k", [
    ("S3", "transpositions", 1),
    ("S3", "nonidentity", 2),
    ("Z2", "nonidentity", 1),
    ("A4", "nonidentity", 3),
    ("S4", "transpositions", 1),
])
def test_stable_betti(gname, cls, k):
    G = builtins.group(gname)
    c = builtins.transpositions(G) if cls == "transpositions" else builtins.nonidentity(G)
    betti, report = stable_hurwitz_betti(G, c, k + 2)
    assert report["k"] == k and len(report["classes"]) == k
    assert betti == [comb(k, i) for i in range(k + 3)]
    assert sum(betti) == 2**k
    assert betti[: k + 1] == betti[k::-1]


def test_stable_betti_preconditions():
    S3 = builtins.group("S3")
    A4 = builtins.group("A4")
    t = builtins.transpositions(S3)
    with pytest.raises(UnsupportedInput):
        stable_hurwitz_betti(S3, t[:1], 2)
    with pytest.raises(UnsupportedInput):
        stable_hurwitz_betti(S3, [S3.identity] + t, 2)
    three_cycles = [g for g in builtins.nonidentity(S3) if g not in t]
    with pytest.raises(UnsupportedInput):
        stable_hurwitz_betti(S3, three_cycles, 2)
    double_transpositions = [g for g in builtins.nonidentity(A4) if A4.element_order(g) == 2]
    with pytest.raises(UnsupportedInput):
        stable_hurwitz_betti(A4, double_transpositions, 2)
