"""Cross-module consistency checks on one PMQ (or pair).

Each check yields ``{"name", "status", "detail"}`` with status one of
``pass``, ``fail``, ``skipped`` or ``budget_exceeded``. Checks are independent
and may run on a thread pool (``PMQKIT_THREADS``); results keep a fixed order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import aq as _aq
from . import completion as _completion
from . import enveloping as _enveloping
from . import hurwitz as _hurwitz
from . import sullivan as _sullivan
from .errors import BudgetExceeded
from .pmq import PMQGroupPair, check_pair, check_pmq, conjugacy_classes

DEFAULT_BUDGET = 10**5
MAX_NORM = 4
COLLAPSE_CAP = 4
RING_DEGREE = 8


def thread_count():
    try:
        return max(1, int(os.environ.get("PMQKIT_THREADS", "1")))
    except ValueError:
        return 1


class Skipped(Exception):
    pass


def _graded(q):
    return q.norm is not None and q.is_augmented()


def check_pmq_axioms(q, pair, budget):
    bad = check_pmq(q.size, q.unit, q.conj, q.prod, q.norm)
    return not bad, {"violations": [v.as_dict() for v in bad]}


def check_pair_axioms(q, pair, budget):
    used = pair if pair is not None else _enveloping.canonical_pair(q)
    bad = check_pair(q, used.group, used.e, used.r)
    detail = {"group_order": used.group.size, "canonical": pair is None, "violations": [v.as_dict() for v in bad]}
    return not bad, detail


def check_completion_vs_hurwitz(q, pair, budget):
    if not (_graded(q) and q.is_trivial_product()):
        raise Skipped("needs a normed PMQ with trivial product")
    counts = []
    for nu in range(1, MAX_NORM + 1):
        classes = len(_completion.completion_classes(q, nu, budget=budget))
        orbits = len(_hurwitz.orbits_from_conj(q.conj, q.positive, nu, budget=budget))
        counts.append({"norm": nu, "completion": classes, "hurwitz": orbits})
    return all(c["completion"] == c["hurwitz"] for c in counts), {"counts": counts}


def check_monodromy(q, pair, budget):
    if not _graded(q):
        raise Skipped("needs a normed augmented PMQ")
    used = pair if pair is not None else _enveloping.canonical_pair(q)
    classes = [c for nu in range(3) for c in _completion.completion_classes(q, nu, members=True, budget=budget)]
    ok = True
    for x in classes:
        values = {used.group.product(used.e[a] for a in w) for w in x.members}
        ok &= len(values) == 1
    for x in classes:
        for y in classes:
            if x.norm + y.norm > 2:
                continue
            xy = _completion.completion_multiply(x, y, budget=budget)
            lhs = _completion.total_monodromy(xy, used)
            rhs = used.group.mult[_completion.total_monodromy(x, used)][_completion.total_monodromy(y, used)]
            ok &= lhs == rhs
    return ok, {"classes_checked": len(classes)}


def check_collapse(q, pair, budget):
    if not q.is_complete():
        raise Skipped("needs a complete PMQ")
    report = _completion.complete_pmq_collapse_check(q, COLLAPSE_CAP, budget=budget)
    return report["ok"], {"caps": [{"cap": c["cap"], "classes": c["classes"]} for c in report["caps"]], "group_order": q.size}


def check_ring(q, pair, budget):
    obj = pair if pair is not None else q
    sc = _aq.aq_structure_constants(obj)
    witness = _aq.verify_commutativity(obj, sc)
    return witness is None, {"basis_size": len(sc.basis.classes), "witness": witness and list(witness)}


def check_sullivan_vs_hilbert(q, pair, budget):
    if q.norm is None or not q.is_trivial_product():
        raise Skipped("needs a normed PMQ with trivial product")
    obj = pair if pair is not None else q
    hilbert = _aq.hilbert_series(obj, RING_DEGREE)
    model = _sullivan.model_cohomology(_sullivan.sullivan_model(obj), RING_DEGREE, budget=budget)
    return hilbert == model, {"hilbert": hilbert, "model": model}


def check_betti(q, pair, budget):
    if not q.is_trivial_product():
        raise Skipped("needs a PMQ with trivial product")
    obj = pair if pair is not None else q
    k = len(_sullivan.positive_classes(obj))
    betti = _sullivan.loop_twice_betti(obj, k + 1)
    ok = sum(betti) == 2**k and betti[: k + 1] == betti[k::-1]
    return ok, {"k": k, "betti": betti}


def check_abelianization(q, pair, budget):
    inv = _enveloping.enveloping_abelianization(q)
    classes = len([c for c in conjugacy_classes(q) if q.unit not in c])
    ok = inv.rank <= classes and (inv.rank == classes or not q.is_trivial_product())
    return ok, {"abelianization": inv.as_dict(), "positive_classes": classes}


CHECKS = (
    ("pmq_axioms", check_pmq_axioms),
    ("pair_axioms", check_pair_axioms),
    ("completion_vs_hurwitz", check_completion_vs_hurwitz),
    ("monodromy_multiplicative", check_monodromy),
    ("complete_collapse", check_collapse),
    ("ring_commutative", check_ring),
    ("sullivan_vs_hilbert", check_sullivan_vs_hilbert),
    ("betti_exterior", check_betti),
    ("abelianization_rank", check_abelianization),
)


def _run(entry, q, pair, budget):
    name, check = entry
    try:
        ok, detail = check(q, pair, budget)
    except Skipped as exc:
        return {"name": name, "status": "skipped", "detail": {"reason": str(exc)}}
    except BudgetExceeded as exc:
        return {"name": name, "status": "budget_exceeded", "detail": {"needed": exc.needed, "budget": exc.budget}}
    return {"name": name, "status": "pass" if ok else "fail", "detail": detail}


def crosscheck(obj, budget=DEFAULT_BUDGET, threads=None):
    """Run every applicable check; returns ``{"checks": [...], "ok": bool}``."""
    pair = obj if isinstance(obj, PMQGroupPair) else None
    q = pair.pmq if pair else obj
    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: _run(c, q, pair, budget), CHECKS))
    else:
        results = [_run(c, q, pair, budget) for c in CHECKS]
    return {"checks": results, "ok": all(r["status"] != "fail" for r in results)}
