"""The graded completion monoid of a finite augmented normed PMQ.

Elements of norm ``nu`` are classes of words over Q+ of total norm ``nu`` under
the moves

* swap: ``(a, b) -> (b, a^b)`` and its inverse ``(a, b) -> (c, a)`` with ``c^a = b``,
* contraction: ``(a, b) -> (ab)`` when ``ab`` is defined, and its inverse (expansion).

All moves preserve the total norm, so each graded piece is a finite closure
problem. Classes are computed with a union-find over the whole word universe of
the given norm; the representative of a class is its ``(length, lex)``-minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, PMQError, UnsupportedInput
from .pmq import UNDEFINED, FinitePMQ, PMQGroupPair
from .unionfind import UnionFind

DEFAULT_BUDGET = 10**6


def word_key(w):
    return (len(w), tuple(w))


@dataclass(frozen=True)
class CompletionClass:
    norm: int
    rep: tuple[int, ...]
    size: int
    members: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)
    pmq: FinitePMQ | None = field(default=None, compare=False, repr=False)


def strip_units(q, word):
    return tuple(a for a in word if a != q.unit)


def word_norm(q, word):
    return sum(q.norm[a] for a in word)


def _inverse_conj(q):
    # inv[a][b] = the c with c^a = b
    inv = [[0] * q.size for _ in range(q.size)]
    for c in range(q.size):
        for a in range(q.size):
            inv[a][q.conj[c][a]] = c
    return inv


def relation_moves(q, word, i):
    """All words one move away from ``word`` at position ``i``.

    Binary moves (swaps, contraction) act on letters ``i, i+1`` and need
    ``i < len(word) - 1``; expansion splits the letter at ``i``.
    """
    w = tuple(word)
    if not 0 <= i < len(w):
        raise IndexError(f"position {i} out of range for a word of length {len(w)}")
    out = set()
    u = q.unit
    if i < len(w) - 1:
        a, b = w[i], w[i + 1]
        out.add(w[:i] + (b, q.conj[a][b]) + w[i + 2 :])
        c = next(x for x in range(q.size) if q.conj[x][a] == b)
        out.add(w[:i] + (c, a) + w[i + 2 :])
        ab = q.prod[a][b]
        if ab is not UNDEFINED and ab != u:
            out.add(w[:i] + (ab,) + w[i + 2 :])
    c = w[i]
    for a in q.positive:
        for b in q.positive:
            if q.prod[a][b] == c:
                out.add(w[:i] + (a, b) + w[i + 1 :])
    return out


def _require_graded(q):
    if q.norm is None:
        raise UnsupportedInput("completion needs a normed PMQ")
    witness = q.augmentation_witness()
    if witness is not None:
        raise UnsupportedInput(f"PMQ is not augmented: {witness[0]}*{witness[1]} is the unit")


def words_of_norm(q, nu):
    """All Q+ words of total norm ``nu``, in (length, lex) order."""
    letters = [(a, q.norm[a]) for a in q.positive]
    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a, na in letters:
            if na <= remaining:
                prefix.append(a)
                extend(prefix, remaining - na)
                prefix.pop()

    extend([], nu)
    out.sort(key=word_key)
    return out


def count_words_of_norm(q, nu):
    counts = [1] + [0] * nu
    norms = [q.norm[a] for a in q.positive]
    for k in range(1, nu + 1):
        counts[k] = sum(counts[k - na] for na in norms if na <= k)
    return counts[nu]


def _partition(q, words, move_targets):
    """Union-find the ``words`` along the forward moves ``move_targets(w)``."""
    index = {w: i for i, w in enumerate(words)}
    uf = UnionFind(len(words))
    for i, w in enumerate(words):
        for v in move_targets(w):
            uf.union(i, index[v])
    blocks = [[words[i] for i in block] for block in uf.groups()]
    for block in blocks:
        block.sort(key=word_key)
    blocks.sort(key=lambda b: word_key(b[0]))
    return blocks


def _forward_moves(q):
    conj, prod, u = q.conj, q.prod, q.unit

    def targets(w):
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            yield w[:i] + (b, conj[a][b]) + w[i + 2 :]
            ab = prod[a][b]
            if ab is not UNDEFINED:
                yield w[:i] + (() if ab == u else (ab,)) + w[i + 2 :]

    return targets


@lru_cache(maxsize=64)
def _classes_cached(q, nu, budget):
    total = count_words_of_norm(q, nu)
    if total > budget:
        raise BudgetExceeded(total, budget, f"words of norm {nu}")
    words = words_of_norm(q, nu)
    blocks = _partition(q, words, _forward_moves(q))
    classes = tuple(
        CompletionClass(nu, block[0], len(block), tuple(block), q) for block in blocks
    )
    lookup = {w: k for k, block in enumerate(blocks) for w in block}
    return classes, lookup


def completion_classes(q, nu, members=False, budget=DEFAULT_BUDGET):
    """The elements of norm ``nu`` of the completion, sorted by representative."""
    if isinstance(q, PMQGroupPair):
        q = q.pmq
    if nu < 0:
        raise ValueError("norm must be non-negative")
    _require_graded(q)
    classes, _ = _classes_cached(q, nu, budget)
    if members:
        return list(classes)
    return [CompletionClass(c.norm, c.rep, c.size, None, q) for c in classes]


def class_of(q, word, members=False, budget=DEFAULT_BUDGET):
    """The completion class containing ``word`` (unit letters are dropped)."""
    _require_graded(q)
    w = strip_units(q, word)
    nu = word_norm(q, w)
    classes, lookup = _classes_cached(q, nu, budget)
    c = classes[lookup[w]]
    return c if members else CompletionClass(c.norm, c.rep, c.size, None, q)


def completion_multiply(x, y, budget=DEFAULT_BUDGET):
    if x.pmq is None or y.pmq is None or (x.pmq is not y.pmq and x.pmq != y.pmq):
        raise PMQError("completion classes over different PMQs")
    return class_of(x.pmq, x.rep + y.rep, budget=budget)


def total_monodromy(x, pair):
    """``e(a_1) ... e(a_k)`` over the representative of ``x``."""
    return pair.group.product(pair.e[a] for a in x.rep)


def complete_pmq_collapse_check(q, cap, budget=DEFAULT_BUDGET):
    """Classes of Q+ words of length <= ``cap`` in a complete PMQ.

    Contraction always applies in a complete PMQ, so each class should be the
    fibre of the product map; the report lists the class count at every cap
    from 1 to ``cap`` together with the products the classes map to.
    """
    if isinstance(q, PMQGroupPair):
        q = q.pmq
    if cap < 1:
        raise ValueError("length cap must be at least 1")
    if not q.is_complete():
        raise UnsupportedInput("collapse check needs a complete PMQ")
    positive = q.positive
    k = len(positive)
    needed = sum(k**length for length in range(cap + 1))
    if needed > budget:
        raise BudgetExceeded(needed, budget, f"words of length <= {cap}")

    words = [()]
    layer = [()]
    per_cap = []
    for length in range(1, cap + 1):
        layer = [w + (a,) for w in layer for a in positive]
        words.extend(layer)
        blocks = _partition(q, list(words), _forward_moves(q))
        products = []
        for block in blocks:
            seen = {_evaluate(q, w) for w in block}
            products.append(sorted(seen))
        per_cap.append(
            {
                "cap": length,
                "classes": len(blocks),
                "fibres_separated": all(len(p) == 1 for p in products),
                "products": sorted(p[0] for p in products if len(p) == 1),
            }
        )
    return {
        "group_order": q.size,
        "caps": per_cap,
        "ok": all(c["classes"] == q.size and c["fibres_separated"] for c in per_cap),
    }


def _evaluate(q, word):
    acc = q.unit
    for a in word:
        acc = q.prod[acc][a]
    return acc
