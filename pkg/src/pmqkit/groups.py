"""Finite groups given by multiplication tables.

Elements are dense indices ``0..n-1``. Permutation groups are built by closure
and stored with their permutations as ``labels``; for those, the product
``x * y`` is the composite "apply ``y`` first, then ``x``" so that
``(x * y)[i] == x[y[i]]``.

Conjugation is ``a ^ b = b^-1 a b`` everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations as _all_perms

from .errors import ValidationError, Violation


@dataclass(frozen=True)
class FiniteGroup:
    size: int
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int
    labels: tuple | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def mul(self, x, y):
        return self.mult[x][y]

    def conj(self, a, b):
        """``a ^ b = b^-1 a b``."""
        return self.mult[self.mult[self.inverse[b]][a]][b]

    def product(self, elements):
        acc = self.identity
        for g in elements:
            acc = self.mult[acc][g]
        return acc

    def conj_table(self):
        return tuple(tuple(self.conj(a, b) for b in range(self.size)) for a in range(self.size))

    def element_order(self, g):
        k, acc = 1, g
        while acc != self.identity:
            acc = self.mult[acc][g]
            k += 1
        return k

    def label(self, g):
        return self.labels[g] if self.labels is not None else g


def check_group_table(mult):
    """Return violations of the group axioms for a square table (empty if valid)."""
    n = len(mult)
    found = []
    if n == 0:
        return [Violation("nonempty", (), "group must have at least one element")]
    for x, row in enumerate(mult):
        if len(row) != n:
            return [Violation("shape", (x,), "table is not square")]
        for y, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                return [Violation("range", (x, y), f"entry {v!r} out of range")]
    identities = [e for e in range(n) if all(mult[e][x] == x and mult[x][e] == x for x in range(n))]
    if not identities:
        found.append(Violation("identity", (), "no two-sided identity"))
    else:
        e = identities[0]
        for x in range(n):
            if not any(mult[x][y] == e and mult[y][x] == e for y in range(n)):
                found.append(Violation("inverse", (x,), "element has no inverse"))
                break
    for x in range(n):
        mx = mult[x]
        for y in range(n):
            xy = mx[y]
            my = mult[y]
            for z in range(n):
                if mult[xy][z] != mx[my[z]]:
                    found.append(Violation("associative", (x, y, z)))
                    return found
    return found


def group_from_table(mult, labels=None, name=""):
    mult = tuple(tuple(row) for row in mult)
    bad = check_group_table(mult)
    if bad:
        raise ValidationError(bad, "group table")
    n = len(mult)
    e = next(e for e in range(n) if all(mult[e][x] == x for x in range(n)))
    inverse = tuple(next(y for y in range(n) if mult[x][y] == e) for x in range(n))
    return FiniteGroup(n, mult, inverse, e, labels, name)


def compose(p, q):
    """Apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def perm_closure(generators, degree):
    """All permutations generated by ``generators`` (lex sorted, identity first)."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def group_from_permutations(perms, name=""):
    """Group on an explicit list of permutations closed under composition."""
    perms = sorted(tuple(p) for p in perms)
    index = {p: i for i, p in enumerate(perms)}
    mult = [[index[compose(p, q)] for q in perms] for p in perms]
    return group_from_table(mult, labels=tuple(perms), name=name)


def permutation_group(generators, degree, name=""):
    return group_from_permutations(perm_closure(generators, degree), name=name)


def symmetric_group(n):
    return group_from_permutations(_all_perms(range(n)), name=f"S{n}")


def alternating_group(n):
    evens = [p for p in _all_perms(range(n)) if sign(p) == 1]
    return group_from_permutations(evens, name=f"A{n}")


def cyclic_group(n):
    mult = [[(x + y) % n for y in range(n)] for x in range(n)]
    return group_from_table(mult, labels=tuple(range(n)), name=f"Z{n}")


def direct_product(g, h, name=""):
    n, m = g.size, h.size
    mult = [
        [g.mult[a // m][b // m] * m + h.mult[a % m][b % m] for b in range(n * m)]
        for a in range(n * m)
    ]
    return group_from_table(mult, name=name or f"{g.name}x{h.name}")


def dihedral_group(n):
    """Symmetries of the n-gon as permutations of its vertices (order 2n)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], n, name=f"D{n}")


def quaternion_group():
    """Q8 via its left-regular representation on 8 points."""
    # elements (s, k): s in {0,1} sign, k in {1,i,j,k} encoded 0..3
    table = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def mul(x, y):
        s, k = table[(x % 4, y % 4)]
        return ((x // 4 + y // 4 + s) % 2) * 4 + k

    i_gen = tuple(mul(1, x) for x in range(8))
    j_gen = tuple(mul(2, x) for x in range(8))
    return permutation_group([i_gen, j_gen], 8, name="Q8")


def sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cycle_count(p):
    seen, count = set(), 0
    for i in range(len(p)):
        if i not in seen:
            count += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = p[j]
    return count


def cycle_norm(group):
    """Word length in transpositions, ``degree - #cycles``, for a permutation group."""
    if group.labels is None:
        raise ValueError("cycle_norm needs a permutation group")
    return tuple(len(p) - cycle_count(p) for p in group.labels)


def cycle_notation(p):
    """1-based cycle notation, ``()`` for the identity."""
    out, seen = [], set()
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "()"


def find_permutation(group, cycles):
    """Index of the element given as a list of 1-based cycles, e.g. ``[(1, 2)]``."""
    degree = len(group.labels[0])
    p = list(range(degree))
    for cyc in cycles:
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            p[x - 1] = y - 1
    return group.labels.index(tuple(p))


def generated_subgroup(group, gens):
    """Sorted element indices of the subgroup generated by ``gens``."""
    seen = {group.identity}
    frontier = [group.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mult[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def conjugacy_classes(group, elements=None):
    """Orbits of conjugation by the whole group, ordered by least member.

    With ``elements`` given (a conjugation-closed subset), only those are partitioned.
    """
    pool = range(group.size) if elements is None else sorted(elements)
    seen, classes = set(), []
    for a in pool:
        if a in seen:
            continue
        orbit = sorted({group.conj(a, b) for b in range(group.size)})
        seen.update(orbit)
        classes.append(orbit)
    return classes


def is_conjugation_closed(group, subset):
    s = set(subset)
    return all(group.conj(a, b) in s for a in s for b in range(group.size))


def subgroups(group):
    """All subgroups generated by at most two elements, as sorted index tuples.

    For the small groups handled here (e.g. S3, S4) this is every subgroup.
    """
    found = set()
    for x, y in combinations(range(group.size), 2):
        found.add(tuple(generated_subgroup(group, (x, y))))
    for x in range(group.size):
        found.add(tuple(generated_subgroup(group, (x,))))
    return sorted(found, key=lambda h: (len(h), h))


def subgroup_as_group(group, elements):
    """Restrict ``group`` to the subgroup on ``elements``; labels keep the parent's."""
    elements = sorted(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = [[index[group.mult[a][b]] for b in elements] for a in elements]
    labels = None if group.labels is None else tuple(group.labels[g] for g in elements)
    return group_from_table(mult, labels=labels)
