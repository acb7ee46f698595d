"""The PMQ-ring Q[Q] and its graded invariant subring A(Q).

``<a><b> = <ab>`` when ``ab`` is defined and ``0`` otherwise. The invariant
subring under a group acting on Q has the basis ``<S> = sum of <a> over a in S``,
one element per orbit ``S``, placed in degree ``2 N(a)``.
All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enveloping import canonical_pair
from .errors import PMQError, UnsupportedInput
from .pmq import UNDEFINED, PMQGroupPair, conjugacy_classes


class InvarianceError(PMQError):
    """A product of invariant elements came out non-invariant: the action is not by automorphisms."""

    exit_code = 2


class AQElement:
    """Sparse exact linear combination of PMQ elements."""

    __slots__ = ("pmq", "coeffs")

    def __init__(self, pmq, coeffs=None):
        self.pmq = pmq
        self.coeffs = {a: Fraction(c) for a, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def basis(cls, pmq, a):
        return cls(pmq, {a: 1})

    @classmethod
    def class_sum(cls, pmq, members):
        return cls(pmq, {a: 1 for a in members})

    def _check(self, other):
        if other.pmq is not self.pmq and other.pmq != self.pmq:
            raise PMQError("elements of different PMQ rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return AQElement(self.pmq, out)

    def __neg__(self):
        return AQElement(self.pmq, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return AQElement(self.pmq, {a: k * c for a, c in self.coeffs.items()})

    def __mul__(self, other):
        return pmq_ring_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, AQElement):
            return NotImplemented
        return self.pmq == other.pmq and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}<{self.pmq.label(a)}>" for a, c in sorted(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs


def pmq_ring_product(x, y):
    x._check(y)
    q = x.pmq
    out = {}
    for a, ca in x.coeffs.items():
        row = q.prod[a]
        for b, cb in y.coeffs.items():
            ab = row[b]
            if ab is not UNDEFINED:
                out[ab] = out.get(ab, 0) + ca * cb
    return AQElement(q, out)


@dataclass(frozen=True)
class GradedBasis:
    classes: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    def index_of(self, a):
        for k, cls in enumerate(self.classes):
            if a in cls:
                return k
        raise KeyError(a)

    def as_list(self):
        return [{"class": list(c), "degree": d} for c, d in zip(self.classes, self.degrees)]


@dataclass(frozen=True)
class StructureConstants:
    """``coeff[i][j][k]``: coefficient of basis element ``k`` in ``b_i * b_j``."""

    basis: GradedBasis
    coeff: tuple[tuple[tuple[int, ...], ...], ...]

    def product_terms(self, i, j):
        return [(k, c) for k, c in enumerate(self.coeff[i][j]) if c]


def _split(obj):
    if isinstance(obj, PMQGroupPair):
        return obj.pmq, obj
    return obj, None


def aq_basis(obj):
    """Orbit basis of A(Q), ordered by (degree, least member).

    Without a pair the orbits of the canonical pair are used; these coincide
    with the closure of Q under its own conjugations. A PMQ without a norm
    gets an ungraded basis: every degree is ``None``, ordered by least member.
    """
    q, pair = _split(obj)
    classes = conjugacy_classes(pair if pair is not None else canonical_pair(q))
    if q.norm is None:
        keyed = sorted(((None, c) for c in classes), key=lambda dc: dc[1][0])
    else:
        keyed = sorted(((2 * q.norm[c[0]], c) for c in classes), key=lambda dc: (dc[0], dc[1][0]))
    return GradedBasis(tuple(tuple(c) for _, c in keyed), tuple(d for d, _ in keyed))


def basis_elements(obj):
    q, _ = _split(obj)
    basis = aq_basis(obj)
    return [AQElement.class_sum(q, c) for c in basis.classes]


def express_in_basis(basis, x):
    """Coordinates of an invariant element in the orbit basis (raises if not invariant)."""
    coords = []
    for cls in basis.classes:
        values = {x.coeffs.get(a, Fraction(0)) for a in cls}
        if len(values) != 1:
            raise InvarianceError(f"coefficients differ along the orbit {list(cls)}: {sorted(values)}")
        coords.append(values.pop())
    return coords


def aq_structure_constants(obj):
    q, _ = _split(obj)
    basis = aq_basis(obj)
    elems = [AQElement.class_sum(q, c) for c in basis.classes]
    table = []
    for i, x in enumerate(elems):
        row = []
        for j, y in enumerate(elems):
            coords = express_in_basis(basis, x * y)
            for k, c in enumerate(coords):
                if c and q.norm is not None and basis.degrees[k] != basis.degrees[i] + basis.degrees[j]:
                    raise AssertionError(f"degree not additive in b{i}*b{j} -> b{k}")
                if c.denominator != 1 or c < 0:
                    raise AssertionError(f"non-natural structure constant {c}")
            row.append(tuple(int(c) for c in coords))
        table.append(tuple(row))
    return StructureConstants(basis, tuple(table))


def hilbert_series(obj, max_degree=None):
    """Coefficients of ``t^0 .. t^max_degree``; ``t^(2 nu)`` counts orbits of norm ``nu``."""
    q, _ = _split(obj)
    if q.norm is None:
        raise UnsupportedInput("the Hilbert series needs a normed PMQ")
    basis = aq_basis(obj)
    if max_degree is None:
        max_degree = max(basis.degrees)
    coeffs = [0] * (max_degree + 1)
    for d in basis.degrees:
        if d <= max_degree:
            coeffs[d] += 1
    return coeffs


def verify_commutativity(obj, constants=None):
    """``None`` if ``<S><S'> = <S'><S>`` for all basis pairs, else the first failing ``(i, j)``."""
    sc = constants or aq_structure_constants(obj)
    n = len(sc.basis.classes)
    for i in range(n):
        for j in range(i + 1, n):
            if sc.coeff[i][j] != sc.coeff[j][i]:
                return (i, j)
    return None


def swap_bijection(q, s, t):
    """Map the defined pairs of ``s x t`` to those of ``t x s`` by ``(a, b) -> (b, a^b)``."""
    return {
        (a, b): (b, q.conj[a][b])
        for a in s
        for b in t
        if q.prod[a][b] is not UNDEFINED
    }
