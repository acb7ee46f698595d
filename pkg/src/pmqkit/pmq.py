"""Finite partially multiplicative quandles (PMQs) and PMQ-group pairs.

A PMQ is stored as dense tables over ``0..n-1``:

* ``conj[a][b]`` is ``a^b`` (a right action of the carrier on itself),
* ``prod[a][b]`` is ``ab`` or :data:`UNDEFINED`,
* ``norm`` is an optional vector of naturals.

Validation is exhaustive over all pairs/triples; every failed axiom is reported
once, with the lexicographically first witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groups as _groups
from .errors import MalformedInput, UnsupportedInput, ValidationError, Violation

UNDEFINED = None

PMQ_AXIOMS = (
    "conj_bijective",
    "conj_by_unit",
    "unit_conj",
    "self_distributive",
    "prod_unit",
    "associative",
    "assoc_defined",
    "conj_by_product",
    "product_conj",
    "swap",
    "norm_unit",
    "norm_positive",
    "norm_conj",
    "norm_additive",
)


@dataclass(frozen=True)
class FinitePMQ:
    size: int
    unit: int
    conj: tuple[tuple[int, ...], ...]
    prod: tuple[tuple[int | None, ...], ...]
    norm: tuple[int, ...] | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def positive(self):
        """Indices of Q+ (every element except the unit), ascending."""
        return [a for a in range(self.size) if a != self.unit]

    def label(self, a):
        return self.labels[a] if self.labels is not None else str(a)

    def is_trivial_product(self):
        u = self.unit
        return all(
            self.prod[a][b] is UNDEFINED
            for a in range(self.size)
            for b in range(self.size)
            if a != u and b != u
        )

    def is_complete(self):
        return all(v is not UNDEFINED for row in self.prod for v in row)

    def augmentation_witness(self):
        """First pair of non-units with product the unit, or ``None``."""
        u = self.unit
        for a in self.positive:
            for b in self.positive:
                if self.prod[a][b] == u:
                    return (a, b)
        return None

    def is_augmented(self):
        return self.augmentation_witness() is None

    def elements_of_norm(self, nu):
        if self.norm is None:
            raise UnsupportedInput("PMQ has no norm")
        return [a for a in range(self.size) if self.norm[a] == nu]


def _as_table(raw, n, name, allow_none):
    if not isinstance(raw, (list, tuple)) or len(raw) != n:
        raise MalformedInput(f"{name} must have {n} rows", f"$.{name}")
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise MalformedInput(f"{name} row {i} must have {n} entries", f"$.{name}[{i}]")
        for j, v in enumerate(row):
            if v is None and allow_none:
                continue
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedInput(f"{name} entry {v!r} out of range", f"$.{name}[{i}][{j}]")
        rows.append(tuple(row))
    return tuple(rows)


def _normalize(size, unit, conj, prod, norm):
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise MalformedInput("size must be a positive integer", "$.size")
    if isinstance(unit, bool) or not isinstance(unit, int) or not 0 <= unit < size:
        raise MalformedInput("unit out of range", "$.unit")
    conj = _as_table(conj, size, "conj", allow_none=False)
    prod = _as_table(prod, size, "prod", allow_none=True)
    if norm is not None:
        if not isinstance(norm, (list, tuple)) or len(norm) != size:
            raise MalformedInput(f"norm must have {size} entries", "$.norm")
        for i, v in enumerate(norm):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise MalformedInput("norm entries must be natural numbers", f"$.norm[{i}]")
        norm = tuple(norm)
    return conj, prod, norm


def check_pmq(size, unit, conj, prod, norm=None):
    """List the PMQ axioms violated by the given tables (empty when valid).

    Raises :class:`MalformedInput` if the tables have the wrong shape or
    out-of-range entries.
    """
    conj, prod, norm = _normalize(size, unit, conj, prod, norm)
    n, u = size, unit
    R = range(n)
    found = {}

    def report(axiom, witness, message=""):
        if axiom not in found:
            found[axiom] = Violation(axiom, witness, message)

    for b in R:
        hit = {}
        for a in R:
            x = conj[a][b]
            if x in hit:
                report("conj_bijective", (b, hit[x], a), f"a -> a^{b} is not injective")
                break
            hit[x] = a
    for a in R:
        if conj[a][u] != a:
            report("conj_by_unit", (a,), "a^1 != a")
            break
    for b in R:
        if conj[u][b] != u:
            report("unit_conj", (b,), "1^b != 1")
            break
    for a in R:
        if prod[u][a] != a or prod[a][u] != a:
            report("prod_unit", (a,), "1a = a1 = a fails")
            break

    for a in R:
        ca = conj[a]
        pa = prod[a]
        for b in R:
            cab = ca[b]
            cb = conj[b]
            ab = pa[b]
            if "self_distributive" not in found:
                for c in R:
                    if conj[cab][c] != conj[ca[c]][cb[c]]:
                        report("self_distributive", (a, b, c), "(a^b)^c != (a^c)^(b^c)")
                        break
            if ab is UNDEFINED:
                # half of assoc_defined: bc and a(bc) defined while ab is not
                if "assoc_defined" not in found:
                    for c in R:
                        bc = prod[b][c]
                        if bc is not UNDEFINED and pa[bc] is not UNDEFINED:
                            report("assoc_defined", (a, b, c), "a(bc) defined but ab is not")
                            break
                continue
            for c in R:
                bc = prod[b][c]
                abc_l = prod[ab][c]
                abc_r = pa[bc] if bc is not UNDEFINED else UNDEFINED
                if (abc_l is UNDEFINED) != (abc_r is UNDEFINED):
                    report("assoc_defined", (a, b, c), "(ab)c and a(bc) not defined together")
                elif abc_l is not UNDEFINED and abc_l != abc_r:
                    report("associative", (a, b, c), "(ab)c != a(bc)")
                if conj[c][ab] != conj[conj[c][a]][b]:
                    report("conj_by_product", (a, b, c), "c^(ab) != (c^a)^b")
                p = prod[ca[c]][cb[c]]
                if p is UNDEFINED or p != conj[ab][c]:
                    report("product_conj", (a, b, c), "(ab)^c != a^c b^c")
            s = prod[b][cab]
            if s is UNDEFINED or s != ab:
                report("swap", (a, b), "b(a^b) != ab")

    if norm is not None:
        if norm[u] != 0:
            report("norm_unit", (u,), "N(1) != 0")
        for a in R:
            if a != u and norm[a] < 1:
                report("norm_positive", (a,), "N(a) = 0 for a != 1")
                break
        for a in R:
            for b in R:
                if norm[conj[a][b]] != norm[a]:
                    report("norm_conj", (a, b), "N(a^b) != N(a)")
                ab = prod[a][b]
                if ab is not UNDEFINED and norm[ab] != norm[a] + norm[b]:
                    report("norm_additive", (a, b), "N(ab) != N(a) + N(b)")
    return [found[k] for k in PMQ_AXIOMS if k in found]


def validate_pmq(size, unit, conj, prod, norm=None, labels=None):
    """Build a :class:`FinitePMQ`, raising :class:`ValidationError` on any violation."""
    bad = check_pmq(size, unit, conj, prod, norm)
    if bad:
        raise ValidationError(bad, "PMQ")
    conj, prod, norm = _normalize(size, unit, conj, prod, norm)
    return FinitePMQ(size, unit, conj, prod, norm, None if labels is None else tuple(labels))


def suspect_features(q):
    """Identities that every PMQ we know satisfies but that validation does not require."""
    flags = []
    for a in range(q.size):
        if q.conj[a][a] != a:
            flags.append(Violation("idempotent", (a,), "a^a != a"))
            break
    return flags


def relabel(q, perm):
    """Transport ``q`` along the bijection ``a -> perm[a]``."""
    inv = [0] * q.size
    for a, pa in enumerate(perm):
        inv[pa] = a
    conj = [[perm[q.conj[inv[x]][inv[y]]] for y in range(q.size)] for x in range(q.size)]
    prod = [
        [None if q.prod[inv[x]][inv[y]] is None else perm[q.prod[inv[x]][inv[y]]] for y in range(q.size)]
        for x in range(q.size)
    ]
    norm = None if q.norm is None else [q.norm[inv[x]] for x in range(q.size)]
    return validate_pmq(q.size, perm[q.unit], conj, prod, norm)


# --------------------------------------------------------------------------
# PMQ-group pairs


@dataclass(frozen=True)
class PMQGroupPair:
    """``(Q, G, e, r)``: ``e[a]`` is a group index, ``r[g][a]`` is ``a`` acted on by ``g``."""

    pmq: FinitePMQ
    group: _groups.FiniteGroup
    e: tuple[int, ...]
    r: tuple[tuple[int, ...], ...]


PAIR_AXIOMS = (
    "e_unit",
    "e_conj",
    "e_prod",
    "action_identity",
    "action_right",
    "action_conj",
    "action_prod",
    "action_norm",
    "action_extends_conj",
    "e_equivariant",
    "generation",
)


def _normalize_pair(q, group, e, r):
    n, m = q.size, group.size
    if not isinstance(e, (list, tuple)) or len(e) != n:
        raise MalformedInput(f"e must have {n} entries", "$.pair.e")
    for i, v in enumerate(e):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < m:
            raise MalformedInput(f"e entry {v!r} is not a group element", f"$.pair.e[{i}]")
    if not isinstance(r, (list, tuple)) or len(r) != m:
        raise MalformedInput(f"r must have {m} rows", "$.pair.r")
    for g, row in enumerate(r):
        if not isinstance(row, (list, tuple)) or sorted(row) != list(range(n)):
            raise MalformedInput("r rows must be permutations of the carrier", f"$.pair.r[{g}]")
    return tuple(e), tuple(tuple(row) for row in r)


def check_pair(q, group, e, r):
    """List the pair axioms violated by ``(q, group, e, r)``."""
    e, r = _normalize_pair(q, group, e, r)
    n, G = q.size, group
    R, RG = range(n), range(G.size)
    found = {}

    def report(axiom, witness, message=""):
        if axiom not in found:
            found[axiom] = Violation(axiom, witness, message)

    if e[q.unit] != G.identity:
        report("e_unit", (q.unit,), "e(1) is not the identity")
    for a in R:
        for b in R:
            if e[q.conj[a][b]] != G.conj(e[a], e[b]):
                report("e_conj", (a, b), "e(a^b) != e(b)^-1 e(a) e(b)")
            ab = q.prod[a][b]
            if ab is not UNDEFINED and e[ab] != G.mult[e[a]][e[b]]:
                report("e_prod", (a, b), "e(ab) != e(a)e(b)")
            if r[e[b]][a] != q.conj[a][b]:
                report("action_extends_conj", (a, b), "a acted on by e(b) != a^b")
    if r[G.identity] != tuple(R):
        report("action_identity", (G.identity,), "identity acts nontrivially")
    for g in RG:
        rg = r[g]
        for h in RG:
            rh, rgh = r[h], r[G.mult[g][h]]
            for a in R:
                if rgh[a] != rh[rg[a]]:
                    report("action_right", (g, h, a), "a.(gh) != (a.g).h")
                    break
        for a in R:
            if q.norm is not None and q.norm[rg[a]] != q.norm[a]:
                report("action_norm", (g, a), "action does not preserve the norm")
            if e[rg[a]] != G.conj(e[a], g):
                report("e_equivariant", (g, a), "e(a.g) != g^-1 e(a) g")
            for b in R:
                if rg[q.conj[a][b]] != q.conj[rg[a]][rg[b]]:
                    report("action_conj", (g, a, b), "action does not preserve conjugation")
                ab = q.prod[a][b]
                img = q.prod[rg[a]][rg[b]]
                if (ab is UNDEFINED) != (img is UNDEFINED) or (ab is not UNDEFINED and rg[ab] != img):
                    report("action_prod", (g, a, b), "action does not preserve the product")
    reached = _groups.generated_subgroup(G, set(e))
    if len(reached) != G.size:
        report("generation", tuple(reached), f"e(Q) generates a subgroup of order {len(reached)} < {G.size}")
    return [found[k] for k in PAIR_AXIOMS if k in found]


def validate_pair(q, group, e, r):
    bad = check_pair(q, group, e, r)
    if bad:
        raise ValidationError(bad, "PMQ-group pair")
    e, r = _normalize_pair(q, group, e, r)
    return PMQGroupPair(q, group, e, r)


# --------------------------------------------------------------------------
# classes and constructions


def _orbits(n, perms, order_first=None):
    seen, classes = set(), []
    for a in range(n):
        if a in seen:
            continue
        orbit, frontier = {a}, [a]
        while frontier:
            nxt = []
            for x in frontier:
                for p in perms:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        classes.append(sorted(orbit))
    if order_first is not None:
        classes.sort(key=lambda c: (order_first not in c, c[0]))
    return classes


def conjugacy_classes(obj):
    """Orbits of a PMQ under its inner conjugations, or of a pair under the group action.

    Classes are sorted by least member, except that ``{1}`` always comes first.
    """
    if isinstance(obj, PMQGroupPair):
        q = obj.pmq
        perms = obj.r
    else:
        q = obj
        perms = [tuple(q.conj[a][b] for a in range(q.size)) for b in range(q.size)]
    return _orbits(q.size, perms, order_first=q.unit)


def from_group_subset(group, c=None, mode="trivial", norm=None, with_pair=False):
    """Build a PMQ (and optionally its pair with ``group``) from a finite group.

    ``trivial``: carrier ``{1} + c`` (unit is index 0, then ``c`` ascending), products
    only with the unit, norm 1 on ``c``.
    ``complete``: carrier ``G`` with the group product, ``c`` ignored.
    ``geodesic``: carrier ``G`` with the supplied norm; ``ab`` is kept only when
    ``N(a) + N(b) == N(ab)``.

    The pair uses ``e`` = inclusion and the action by conjugation.
    """
    G = group
    glabels = None
    if G.labels is not None and isinstance(G.labels[0], tuple):
        glabels = [_groups.cycle_notation(p) for p in G.labels]
    if mode == "trivial":
        if c is None:
            raise UnsupportedInput("trivial mode needs a subset c")
        c = sorted(set(c))
        if G.identity in c:
            raise UnsupportedInput("c must not contain the identity")
        if not _groups.is_conjugation_closed(G, c):
            raise UnsupportedInput("c is not closed under conjugation")
        carrier = [G.identity] + c
        index = {g: i for i, g in enumerate(carrier)}
        n = len(carrier)
        conj = [[index[G.conj(x, y)] for y in carrier] for x in carrier]
        prod = [[b if a == 0 else (a if b == 0 else None) for b in range(n)] for a in range(n)]
        qnorm = [0] + [1] * (n - 1)
    elif mode in ("complete", "geodesic"):
        carrier = list(range(G.size))
        conj = [list(row) for row in G.conj_table()]
        if mode == "complete":
            prod = [list(row) for row in G.mult]
            qnorm = norm
        else:
            if norm is None:
                raise UnsupportedInput("geodesic mode needs a norm vector")
            norm = list(norm)
            prod = [
                [G.mult[a][b] if norm[a] + norm[b] == norm[G.mult[a][b]] else None for b in carrier]
                for a in carrier
            ]
            qnorm = norm
    else:
        raise ValueError(f"unknown mode {mode!r}")
    labels = None if glabels is None else [glabels[g] for g in carrier]
    unit = 0 if mode == "trivial" else G.identity
    q = validate_pmq(len(carrier), unit, conj, prod, qnorm, labels)
    if not with_pair:
        return q
    e = list(carrier)
    position = {g: i for i, g in enumerate(carrier)}
    r = [[position[G.conj(x, g)] for x in carrier] for g in range(G.size)]
    return validate_pair(q, G, e, r)
