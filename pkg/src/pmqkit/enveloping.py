"""Finite shadows of the enveloping group of a PMQ.

The enveloping group is presented by generators ``a`` (``a`` in Q) with
relations ``a b = b a^b`` and ``a b = (ab)`` whenever ``ab`` is defined. It may be
infinite; here we compute

* its image in the permutations of the carrier (acting on the right by
  conjugation), which is the finite group used to form the canonical pair, and
* the abelianization, by Smith normal form of the relation matrix.

Permutations act on the right: ``p`` sends ``a`` to ``p[a]`` and the product
``p * q`` is "``p`` first, then ``q``", i.e. ``(p * q)[a] == q[p[a]]``. With this
order ``a -> conj-by-a`` is multiplicative: ``c^(ab) = (c^a)^b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import groups as _groups
from .pmq import UNDEFINED, validate_pair


def then(p, q):
    """``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    elements: tuple[tuple[int, ...], ...]
    generator_of: tuple[int, ...]

    @property
    def order(self):
        return len(self.elements)

    def index(self, p):
        return self.elements.index(tuple(p))


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...]

    def as_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def inner_automorphism_group(q):
    """Group of carrier permutations generated by the conjugations ``x -> x^a``.

    ``generator_of[a]`` is the index in ``elements`` of conj-by-``a``.
    """
    n = q.size
    gens = [tuple(q.conj[x][a] for x in range(n)) for a in range(n)]
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    bound = factorial(n)
    while frontier:
        nxt = []
        for p in frontier:
            for g in set(gens):
                r = then(p, g)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        assert len(seen) <= bound
    elements = tuple(sorted(seen))
    index = {p: i for i, p in enumerate(elements)}
    return PermutationGroup(n, elements, tuple(index[g] for g in gens))


def as_finite_group(perm_group):
    elements = perm_group.elements
    index = {p: i for i, p in enumerate(elements)}
    mult = [[index[then(p, r)] for r in elements] for p in elements]
    return _groups.group_from_table(mult, labels=elements, name="Inn")


def canonical_pair(q):
    """``(Q, Inn(Q), a -> conj-by-a, right action by permutation)``."""
    inn = inner_automorphism_group(q)
    group = as_finite_group(inn)
    return validate_pair(q, group, inn.generator_of, inn.elements)


# --------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonzero diagonal entries ``d_1 | d_2 | ...`` (all positive).
    Row and column operations are unimodular; entries stay Python ints.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    qt = a[i][t] // p
                    a[i] = [x - qt * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    qt = a[t][j] // p
                    for row in a:
                        row[j] -= qt * row[t]
                    if a[t][j]:
                        done = False
            if not done:
                # move the smallest remainder into the pivot position and repeat
                best = min(
                    [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                )
                _, i, j = best
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            # pivot must divide the rest: fold the offending row in and retry
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelian_invariants(relations, ngens):
    """Invariants of ``Z^ngens / <relations>``."""
    diag = smith_normal_form(relations) if relations else []
    rank = ngens - len(diag)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(rank, torsion)


def relation_matrix(q):
    """Integer relations over the generators Q+ (columns in ascending index order).

    Rows ``a - a^b`` for all ``a`` in Q+, ``b`` in Q, and ``a + b - ab`` whenever
    ``ab`` is defined with ``a, b`` in Q+. If ``ab`` is the unit (non-augmented
    PMQs) the row is ``a + b``, since the unit generator is trivial in the group.
    Zero and duplicate rows are dropped.
    """
    positive = q.positive
    col = {a: j for j, a in enumerate(positive)}
    rows = set()
    for a in positive:
        for b in range(q.size):
            r = [0] * len(positive)
            r[col[a]] += 1
            r[col[q.conj[a][b]]] -= 1
            rows.add(tuple(r))
    for a in positive:
        for b in positive:
            ab = q.prod[a][b]
            if ab is UNDEFINED:
                continue
            r = [0] * len(positive)
            r[col[a]] += 1
            r[col[b]] += 1
            if ab != q.unit:
                r[col[ab]] -= 1
            rows.add(tuple(r))
    zero = tuple([0] * len(positive))
    rows.discard(zero)
    return sorted(rows)


def enveloping_abelianization(q):
    return abelian_invariants(relation_matrix(q), len(q.positive))
