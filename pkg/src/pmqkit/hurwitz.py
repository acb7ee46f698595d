"""Hurwitz (braid) action on tuples.

The move at position ``i`` sends ``(..., a, b, ...)`` to ``(..., b, a^b, ...)``
with ``a^b = b^-1 a b``, so the left-to-right product ``a b = b (b^-1 a b)`` is
preserved. Moves only need a conjugation table, so the same code runs on
groups and on PMQs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product as _cartesian

from . import groups as _groups
from .errors import BudgetExceeded, UnsupportedInput

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class OrbitInvariants:
    total: int
    classes: tuple[int, ...]
    subgroup_order: int

    def as_dict(self):
        return {"total": self.total, "classes": list(self.classes), "subgroup_order": self.subgroup_order}


@dataclass(frozen=True)
class HurwitzOrbit:
    rep: tuple[int, ...]
    size: int
    members: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)
    invariants: OrbitInvariants | None = None


def _conj_table(obj):
    if isinstance(obj, _groups.FiniteGroup):
        return obj.conj_table()
    return getattr(obj, "conj", obj)


def hurwitz_move(conj, t, i, direction="fwd"):
    """Apply the braid generator ``sigma_i`` (``fwd``) or its inverse (``inv``) to ``t``.

    ``conj`` is a conjugation table, a PMQ or a :class:`FiniteGroup`.
    """
    conj = _conj_table(conj)
    t = tuple(t)
    if not 0 <= i < len(t) - 1:
        raise IndexError(f"position {i} out of range for a tuple of length {len(t)}")
    a, b = t[i], t[i + 1]
    if direction == "fwd":
        return t[:i] + (b, conj[a][b]) + t[i + 2 :]
    if direction == "inv":
        c = next(x for x in range(len(conj)) if conj[x][a] == b)
        return t[:i] + (c, a) + t[i + 2 :]
    raise ValueError(f"direction must be 'fwd' or 'inv', not {direction!r}")


def orbits_from_conj(conj, letters, n, accept=None, budget=DEFAULT_BUDGET):
    """Orbits of the forward moves on ``letters^n`` (restricted to tuples passing ``accept``).

    Each move is a bijection of the finite set ``letters^n``, so closing under
    forward moves alone yields the full braid-group orbits. Returns lists of
    members sorted lex, orbits ordered by their least member.
    """
    letters = sorted(set(letters))
    needed = len(letters) ** n
    if needed > budget:
        raise BudgetExceeded(needed, budget, f"tuples of length {n}")
    tuples = [t for t in _cartesian(letters, repeat=n) if accept is None or accept(t)]
    seen = set()
    orbits = []
    for start in tuples:
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for i in range(n - 1):
                    a, b = t[i], t[i + 1]
                    s = t[:i] + (b, conj[a][b]) + t[i + 2 :]
                    if s not in orbit:
                        orbit.add(s)
                        nxt.append(s)
            frontier = nxt
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def orbit_invariants(group, t, class_of=None):
    """Total product, sorted conjugacy-class indices and generated subgroup order of ``t``."""
    if class_of is None:
        class_of = _class_index(group)
    total = group.product(t)
    classes = tuple(sorted(class_of[g] for g in t))
    order = len(_groups.generated_subgroup(group, set(t)))
    return OrbitInvariants(total, classes, order)


def _class_index(group):
    return {g: k for k, cls in enumerate(_groups.conjugacy_classes(group)) for g in cls}


def enumerate_orbits(group, c, n, total=None, budget=DEFAULT_BUDGET, members=False):
    """Hurwitz orbits on ``c^n``, optionally only those with total product ``total``."""
    c = sorted(set(c))
    if not _groups.is_conjugation_closed(group, c):
        raise UnsupportedInput("c is not closed under conjugation")
    if n < 0:
        raise ValueError("length must be non-negative")
    accept = None if total is None else (lambda t: group.product(t) == total)
    conj = group.conj_table()
    class_of = _class_index(group)
    out = []
    for orbit in orbits_from_conj(conj, c, n, accept, budget):
        inv = orbit_invariants(group, orbit[0], class_of)
        out.append(HurwitzOrbit(orbit[0], len(orbit), tuple(orbit) if members else (), inv))
    return out


def orbit_count_by_total(group, c, n, budget=DEFAULT_BUDGET):
    return Counter(o.invariants.total for o in enumerate_orbits(group, c, n, budget=budget))
