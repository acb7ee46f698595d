"""Sullivan model of A(Q) for trivial-product PMQs and its double loop.

For ``k`` orbits in Q+, the model is ``Q[x_1..x_k] (x) Lambda[y_1..y_k]`` with
``|x_i| = 2``, ``|y_i| = 3``, ``d x_i = 0`` and ``d y_i = x_i^2``.

Models are free graded-commutative algebras on numbered generators. A monomial
is an exponent vector (odd generators have exponent 0 or 1) read in generator
order; cohomology is computed degree by degree with exact Gaussian elimination
on the monomial basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import groups as _groups
from .errors import BudgetExceeded, UnsupportedInput
from .pmq import PMQGroupPair, conjugacy_classes, from_group_subset

DEFAULT_MONOMIAL_BUDGET = 10**5


@dataclass(frozen=True)
class SullivanModel:
    """Free cdga: ``degrees[i]`` is the degree of generator ``i`` and
    ``d[i]`` its differential as a tuple of ``(monomial, coefficient)``."""

    degrees: tuple[int, ...]
    d: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]
    names: tuple[str, ...] = ()

    @property
    def ngens(self):
        return len(self.degrees)

    def degree(self, m):
        return sum(e * g for e, g in zip(m, self.degrees))

    def generator(self, i):
        return tuple(int(j == i) for j in range(self.ngens))

    def multiply(self, m1, m2):
        """``(sign, monomial)`` of ``m1 * m2``; sign 0 when an odd generator squares."""
        sign = 1
        odd_after = 0  # odd generators of m1 with larger index than the current one
        for i in reversed(range(self.ngens)):
            if self.degrees[i] % 2:
                if m2[i] and odd_after % 2:
                    sign = -sign
                if m1[i]:
                    odd_after += 1
                if m1[i] + m2[i] > 1:
                    return 0, None
        return sign, tuple(a + b for a, b in zip(m1, m2))

    def differential(self, m):
        """``d(m)`` as ``{monomial: coefficient}`` (Leibniz rule with Koszul signs)."""
        factors = [i for i, e in enumerate(m) for _ in range(e)]
        one = (0,) * self.ngens
        out = {}
        left = one
        left_degree = 0
        for p, i in enumerate(factors):
            right = one
            for j in factors[p + 1 :]:
                right = tuple(a + (k == j) for k, a in enumerate(right))
            sign0 = -1 if left_degree % 2 else 1
            for dm, c in self.d[i]:
                s1, lm = self.multiply(left, dm)
                if not s1:
                    continue
                s2, full = self.multiply(lm, right)
                if not s2:
                    continue
                out[full] = out.get(full, 0) + sign0 * s1 * s2 * c
            left = tuple(a + (k == i) for k, a in enumerate(left))
            left_degree += self.degrees[i]
        return {mm: c for mm, c in out.items() if c}


def _trivial_product_pmq(obj):
    q = obj.pmq if isinstance(obj, PMQGroupPair) else obj
    if not q.is_trivial_product():
        raise UnsupportedInput("only PMQs with trivial product are supported")
    return q


def positive_classes(obj):
    q = obj.pmq if isinstance(obj, PMQGroupPair) else obj
    return [tuple(c) for c in conjugacy_classes(obj) if q.unit not in c]


def sullivan_model(obj):
    """Model with ``x_S`` (generators ``0..k-1``) and ``y_S`` (generators ``k..2k-1``)."""
    _trivial_product_pmq(obj)
    k = len(positive_classes(obj))
    degrees = (2,) * k + (3,) * k
    d = []
    for i in range(2 * k):
        if i < k:
            d.append(())
        else:
            square = tuple(2 * int(j == i - k) for j in range(2 * k))
            d.append(((square, 1),))
    names = tuple(f"x{i}" for i in range(k)) + tuple(f"y{i}" for i in range(k))
    model = SullivanModel(degrees, tuple(d), names)
    bad = check_d_squared(model, 3)
    assert bad is None, bad
    return model


def monomials_of_degree(model, degree):
    """Monomials of total degree ``degree``; generators of degree <= 0 are not allowed."""
    if any(g <= 0 for g in model.degrees):
        raise ValueError("monomial bases need positive generator degrees")
    n = model.ngens
    out = []

    def extend(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        g = model.degrees[i]
        top = 1 if g % 2 else remaining // g
        for e in range(min(top, remaining // g) + 1):
            prefix.append(e)
            extend(i + 1, remaining - e * g, prefix)
            prefix.pop()

    extend(0, degree, [])
    return sorted(out)


def _rank(rows):
    """Rank over Q of sparse rows ``{column: value}``."""
    pivots = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                pivots[col] = r
                rank += 1
                break
            p = pivots[col]
            factor = r[col] / p[col]
            for c, v in p.items():
                nv = r.get(c, 0) - factor * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def check_d_squared(model, max_degree):
    """First monomial of degree ``<= max_degree`` with ``d(d m) != 0``, else ``None``."""
    for deg in range(max_degree + 1):
        for m in monomials_of_degree(model, deg):
            total = {}
            for m1, c1 in model.differential(m).items():
                for m2, c2 in model.differential(m1).items():
                    total[m2] = total.get(m2, 0) + c1 * c2
            if any(total.values()):
                return m
    return None


def model_cohomology(model, max_degree, budget=DEFAULT_MONOMIAL_BUDGET):
    """Dimensions of ``H^n`` of the model for ``0 <= n <= max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    bases = []
    total = 0
    for d in range(max_degree + 2):
        bases.append(monomials_of_degree(model, d))
        total += len(bases[-1])
        if total > budget:
            raise BudgetExceeded(total, budget, "monomials")
    index = [{m: i for i, m in enumerate(b)} for b in bases]
    ranks = []
    for d in range(max_degree + 1):
        rows = [{index[d + 1][t]: c for t, c in model.differential(m).items()} for m in bases[d]]
        ranks.append(_rank(rows))
    return [len(bases[d]) - ranks[d] - (ranks[d - 1] if d else 0) for d in range(max_degree + 1)]


def square_zero_quotient_dims(k, max_degree):
    """``Q[x_S]/(x_S^2)`` with ``|x_S| = 2``: ``C(k, j)`` in degree ``2j``."""
    return [comb(k, d // 2) if d % 2 == 0 else 0 for d in range(max_degree + 1)]


def loop_model(model):
    """Shift every generator down by one; only the linear part of ``d`` survives."""
    d = []
    for terms in model.d:
        d.append(tuple((m, c) for m, c in terms if sum(m) == 1))
    return SullivanModel(tuple(g - 1 for g in model.degrees), tuple(d), model.names)


def identity_component(model):
    """Drop the generators of degree <= 0 (they only label components)."""
    keep = [i for i, g in enumerate(model.degrees) if g > 0]
    pos = {i: j for j, i in enumerate(keep)}
    d = []
    for i in keep:
        terms = []
        for m, c in model.d[i]:
            if all(m[j] == 0 for j in range(model.ngens) if j not in pos):
                terms.append((tuple(m[j] for j in keep), c))
        d.append(tuple(terms))
    names = tuple(model.names[i] + "'" for i in keep) if model.names else ()
    return SullivanModel(tuple(model.degrees[i] for i in keep), tuple(d), names)


def loop_twice_betti(obj, max_degree):
    """Betti numbers ``C(k, i)`` of the exterior algebra on ``k`` degree-1 classes.

    The closed form is checked against the cohomology of the twice-looped
    model restricted to one component, computed by elimination.
    """
    model = sullivan_model(obj)
    k = len(model.degrees) // 2
    closed = [comb(k, i) for i in range(max_degree + 1)]
    looped = identity_component(loop_model(loop_model(model)))
    computed = model_cohomology(looped, max_degree)
    assert computed == closed, (computed, closed)
    return closed


def stable_hurwitz_betti(group, c, max_degree):
    """Stable rational Betti numbers of classical Hurwitz spaces with monodromy in ``c``.

    Returns ``(betti, report)``; the report holds ``k`` and the conjugacy
    classes of ``c`` as group indices.
    """
    c = sorted(set(c))
    if group.identity in c:
        raise UnsupportedInput("c must not contain the identity")
    if not _groups.is_conjugation_closed(group, c):
        raise UnsupportedInput("c is not closed under conjugation")
    reached = _groups.generated_subgroup(group, c)
    if len(reached) != group.size:
        raise UnsupportedInput(f"c generates a subgroup of order {len(reached)} < {group.size}")
    pair = from_group_subset(group, c, "trivial", with_pair=True)
    classes = _groups.conjugacy_classes(group, c)
    betti = loop_twice_betti(pair, max_degree)
    return betti, {"k": len(classes), "classes": classes}
