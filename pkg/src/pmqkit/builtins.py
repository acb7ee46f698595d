"""Named example groups and PMQ-group pairs."""

from __future__ import annotations

from . import groups as _groups
from .enveloping import canonical_pair
from .pmq import from_group_subset, validate_pmq

GROUPS = {
    "Z2": lambda: _groups.cyclic_group(2),
    "Z3": lambda: _groups.cyclic_group(3),
    "Z4": lambda: _groups.cyclic_group(4),
    "Z6": lambda: _groups.cyclic_group(6),
    "V4": lambda: _groups.direct_product(_groups.cyclic_group(2), _groups.cyclic_group(2), "V4"),
    "S3": lambda: _groups.symmetric_group(3),
    "D4": lambda: _groups.dihedral_group(4),
    "Q8": _groups.quaternion_group,
    "D5": lambda: _groups.dihedral_group(5),
    "A4": lambda: _groups.alternating_group(4),
    "D6": lambda: _groups.dihedral_group(6),
    "S4": lambda: _groups.symmetric_group(4),
    "Z3xS3": lambda: _groups.direct_product(_groups.cyclic_group(3), _groups.symmetric_group(3), "Z3xS3"),
}


def group(name):
    try:
        return GROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin group {name!r}; known: {', '.join(GROUPS)}") from None


def transpositions(G):
    """Permutations moving exactly two points."""
    return [g for g, p in enumerate(G.labels) if sum(x != i for i, x in enumerate(p)) == 2]


def nonidentity(G):
    return [g for g in range(G.size) if g != G.identity]


def _trivial(gname, subset):
    def build():
        G = group(gname)
        return from_group_subset(G, subset(G), "trivial", with_pair=True)

    return build


def _complete(gname):
    return lambda: from_group_subset(group(gname), mode="complete", with_pair=True)


def _geodesic(gname):
    def build():
        G = group(gname)
        return from_group_subset(G, mode="geodesic", norm=_groups.cycle_norm(G), with_pair=True)

    return build


def _unit():
    return canonical_pair(validate_pmq(1, 0, [[0]], [[0]], [0]))


PMQS = {
    "unit": _unit,
    "z2-reflection": _trivial("Z2", nonidentity),
    "s3-transpositions": _trivial("S3", transpositions),
    "s3-nonidentity": _trivial("S3", nonidentity),
    "s4-transpositions": _trivial("S4", transpositions),
    "geodesic-s3": _geodesic("S3"),
    "geodesic-s4": _geodesic("S4"),
}
for _name in GROUPS:
    PMQS[f"complete-{_name.lower()}"] = _complete(_name)

TRIVIAL_PRODUCT = [k for k in PMQS if k in ("unit", "z2-reflection") or k.startswith(("s3-", "s4-"))]
COMPLETE = [k for k in PMQS if k.startswith("complete-")]
GEODESIC = [k for k in PMQS if k.startswith("geodesic-")]


def pmq(name):
    """The named built-in as a validated :class:`PMQGroupPair`."""
    try:
        return PMQS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin PMQ {name!r}; known: {', '.join(PMQS)}") from None
