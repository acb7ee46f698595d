"""Acceptance criteria. Each test prints exactly one PASS/FAIL line."""

import itertools
import time
from collections import Counter

from pmqkit import builtins, groups, io
from pmqkit.aq import aq_structure_constants, hilbert_series, verify_commutativity
from pmqkit.cli import run
from pmqkit.completion import complete_pmq_collapse_check, completion_classes
from pmqkit.enveloping import enveloping_abelianization, relation_matrix
from pmqkit.hurwitz import enumerate_orbits
from pmqkit.pmq import check_pair, check_pmq, from_group_subset
from pmqkit.sullivan import model_cohomology, stable_hurwitz_betti, sullivan_model

from oracles import determinantal_invariants

RING_DEGREE = 8


def generating_closed_subsets(G):
    """Unions of non-identity classes that generate G (the pair axioms need generation)."""
    classes = groups.conjugacy_classes(G, [g for g in range(G.size) if g != G.identity])
    for r in range(1, len(classes) + 1):
        for pick in itertools.combinations(classes, r):
            c = sorted(g for cls in pick for g in cls)
            if len(groups.generated_subgroup(G, c)) == G.size:
                yield c


def test_01_axiom_suites(acceptance):
    start = time.perf_counter()
    objects = [builtins.pmq(n) for n in builtins.PMQS]
    for name in ("S3", "S4"):
        G = builtins.group(name)
        objects += [from_group_subset(G, c, "trivial", with_pair=True) for c in generating_closed_subsets(G)]
    bad = []
    for pair in objects:
        q = pair.pmq
        if check_pmq(q.size, q.unit, q.conj, q.prod, q.norm) or check_pair(q, pair.group, pair.e, pair.r):
            bad.append(pair)
    elapsed = time.perf_counter() - start
    acceptance("1 axiom suites on all constructions", not bad and elapsed < 5,
               f"{len(objects)} structures, {len(bad)} invalid, {elapsed:.2f}s < 5s")


def test_02_completion_matches_orbits(acceptance):
    start = time.perf_counter()
    pair = builtins.pmq("s3-transpositions")
    G = pair.group
    c = builtins.transpositions(G)
    rows = []
    for nu in range(1, 5):
        rows.append((nu, len(completion_classes(pair, nu)), len(enumerate_orbits(G, c, nu))))
    elapsed = time.perf_counter() - start
    ok = all(a == b for _, a, b in rows) and elapsed < 10
    acceptance("2 |completion classes| = |Hurwitz orbits|, nu=1..4", ok,
               f"{[(nu, a, b) for nu, a, b in rows]}, {elapsed:.2f}s < 10s")


def test_03_complete_collapse(acceptance):
    start = time.perf_counter()
    seen = {}
    for name in ("complete-z2", "complete-s3"):
        q = builtins.pmq(name).pmq
        report = complete_pmq_collapse_check(q, 4)
        seen[name] = [c["classes"] for c in report["caps"]]
        seen[name + " ok"] = report["ok"] and all(n == q.size for n in seen[name]) and len(seen[name]) == 4
    elapsed = time.perf_counter() - start
    ok = seen["complete-z2 ok"] and seen["complete-s3 ok"] and elapsed < 10
    acceptance("3 complete PMQ collapse at caps 1..4", ok,
               f"Z2 {seen['complete-z2']}, S3 {seen['complete-s3']}, {elapsed:.2f}s < 10s")


def test_04_ring_specialization(acceptance):
    start = time.perf_counter()
    expected = {
        "s3-transpositions": [1, 0, 1, 0, 0, 0, 0, 0, 0],
        "s3-nonidentity": [1, 0, 2, 0, 0, 0, 0, 0, 0],
    }
    got = {}
    for name in expected:
        pair = builtins.pmq(name)
        got[name] = (hilbert_series(pair, RING_DEGREE), model_cohomology(sullivan_model(pair), RING_DEGREE))
    elapsed = time.perf_counter() - start
    ok = all(h == expected[n] and m == expected[n] for n, (h, m) in got.items()) and elapsed < 5
    detail = "; ".join(f"{n}: hilbert {h} model {m}" for n, (h, m) in got.items())
    acceptance("4 hilbert series and Sullivan model cohomology to degree 8", ok, f"{detail}, {elapsed:.2f}s < 5s")


def test_05_stable_betti(acceptance):
    start = time.perf_counter()
    S3 = builtins.group("S3")
    cases = {
        "transpositions": (builtins.transpositions(S3), [1, 1, 0, 0, 0]),
        "nonidentity": (builtins.nonidentity(S3), [1, 2, 1, 0, 0]),
    }
    ok = True
    found = {}
    for label, (c, expected) in cases.items():
        betti, report = stable_hurwitz_betti(S3, c, 4)
        k = report["k"]
        found[label] = betti
        ok &= betti == expected and sum(betti) == 2**k and betti[: k + 1] == betti[k::-1]
    elapsed = time.perf_counter() - start
    acceptance("5 stable Betti numbers of S3 Hurwitz spaces", ok and elapsed < 5, f"{found}, {elapsed:.2f}s < 5s")


def test_06_commutativity(acceptance):
    start = time.perf_counter()
    failures = []
    pairs = 0
    for name in builtins.PMQS:
        pair = builtins.pmq(name)
        sc = aq_structure_constants(pair)
        pairs += len(sc.basis.classes) ** 2
        if verify_commutativity(pair, sc) is not None:
            failures.append(name)
    elapsed = time.perf_counter() - start
    acceptance("6 A(Q) commutative on every built-in", not failures and elapsed < 30,
               f"{len(builtins.PMQS)} built-ins, {pairs} basis pairs, failures {failures}, {elapsed:.2f}s < 30s")


def test_07_geodesic_s3_constants(acceptance, geodesic_s3):
    q = geodesic_s3.pmq
    T = [a for a in q.positive if q.norm[a] == 1]
    S = [a for a in q.positive if q.norm[a] == 2]
    # brute force over all ordered pairs of transpositions
    hits = Counter(q.prod[a][b] for a in T for b in T)
    brute = {s: hits[s] for s in S}
    assert set(brute.values()) == {3} and None in hits and hits[None] == 3
    start = time.perf_counter()
    sc = aq_structure_constants(geodesic_s3)
    tt, ts = sc.product_terms(1, 1), sc.product_terms(1, 2)
    elapsed = time.perf_counter() - start
    ok = tt == [(2, 3)] and ts == [] and elapsed < 1
    acceptance("7 geodesic S3: <T>^2 = 3<S>, <T><S> = 0", ok, f"<T>^2 terms {tt}, <T><S> terms {ts}, {elapsed:.3f}s < 1s")


def test_08_abelianization(acceptance):
    cases = {
        "z2-reflection": (1, ()),
        "s3-transpositions": (1, ()),
        "s3-nonidentity": (2, ()),
        "s4-transpositions": (1, ()),
        "geodesic-s3": (1, ()),
    }
    ok = True
    elapsed = 0.0
    found = {}
    for name, expected in cases.items():
        q = builtins.pmq(name).pmq
        start = time.perf_counter()
        inv = enveloping_abelianization(q)
        elapsed += time.perf_counter() - start
        oracle = determinantal_invariants(relation_matrix(q), len(q.positive))
        found[name] = (inv.rank, inv.torsion)
        ok &= (inv.rank, inv.torsion) == expected == oracle
    acceptance("8 enveloping abelianization vs minors oracle", ok and elapsed < 1, f"{found}, {elapsed:.3f}s < 1s")


def test_09_determinism(acceptance, monkeypatch):
    differing = []
    for name in builtins.PMQS:
        outputs = set()
        for threads in ("1", "4"):
            monkeypatch.setenv("PMQKIT_THREADS", threads)
            for _ in range(3):
                outputs.add(io.dumps(run(["crosscheck", "--input", f"builtin:{name}"])[1]))
        if len(outputs) != 1:
            differing.append(name)
    acceptance("9 crosscheck output byte-identical over 3 runs x threads {1,4}", not differing,
               f"{len(builtins.PMQS)} built-ins, differing {differing}")
