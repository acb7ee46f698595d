"""Command line interface: ``pmqkit <command> ...``.

Every command prints one canonical JSON report on stdout. Exit codes:
0 success, 2 validation failure, 3 budget exceeded, 4 malformed input.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from . import aq as _aq
from . import completion as _completion
from . import enveloping as _enveloping
from . import groups as _groups
from . import hurwitz as _hurwitz
from . import io as _io
from . import sullivan as _sullivan
from .crosscheck import crosscheck
from .errors import MalformedInput, PMQError, ValidationError
from .pmq import PMQGroupPair, conjugacy_classes, suspect_features


def _pmq_of(obj):
    return obj.pmq if isinstance(obj, PMQGroupPair) else obj


def parse_class(spec, group):
    """``nonidentity``, ``classes:i,j`` (group conjugacy classes) or element indices ``a,b,c``."""
    if spec == "nonidentity":
        return [g for g in range(group.size) if g != group.identity]
    try:
        if spec.startswith("classes:"):
            classes = _groups.conjugacy_classes(group)
            return sorted(g for k in spec[len("classes:") :].split(",") for g in classes[int(k)])
        out = sorted({int(x) for x in spec.split(",") if x.strip()})
    except (ValueError, IndexError):
        raise MalformedInput(f"cannot parse class specification {spec!r}", "--class") from None
    if any(not 0 <= g < group.size for g in out):
        raise MalformedInput("class element out of range", "--class")
    return out


def cmd_validate(args):
    obj = args.obj
    q = _pmq_of(obj)
    return {
        "valid": True,
        "size": q.size,
        "unit": q.unit,
        "normed": q.norm is not None,
        "augmented": q.is_augmented(),
        "trivial_product": q.is_trivial_product(),
        "complete": q.is_complete(),
        "pair": isinstance(obj, PMQGroupPair),
        "suspect": [v.as_dict() for v in suspect_features(q)],
    }


def cmd_classes(args):
    return {"classes": conjugacy_classes(args.obj)}


def cmd_completion(args):
    obj = args.obj
    classes = _completion.completion_classes(obj, args.norm, members=args.members, budget=args.budget)
    out = []
    for c in classes:
        entry = {"norm": c.norm, "rep": list(c.rep), "size": c.size}
        if args.members:
            entry["members"] = [list(w) for w in c.members]
        out.append(entry)
    return {"classes": out}


def cmd_enveloping(args):
    q = _pmq_of(args.obj)
    inn = _enveloping.inner_automorphism_group(q)
    return {"order": inn.order, "abelianization": _enveloping.enveloping_abelianization(q).as_dict()}


def cmd_hurwitz(args):
    group = args.obj
    c = parse_class(args.class_, group)
    orbits = _hurwitz.enumerate_orbits(group, c, args.length, total=args.total, budget=args.budget)
    return {
        "orbits": [
            {"rep": list(o.rep), "size": o.size, **o.invariants.as_dict()}
            for o in orbits
        ]
    }


def cmd_aq(args):
    obj = args.obj
    sc = _aq.aq_structure_constants(obj)
    n = len(sc.basis.classes)
    structure = []
    for i in range(n):
        for j in range(n):
            terms = [{"T": k, "coeff": c} for k, c in sc.product_terms(i, j)]
            structure.append({"S": i, "S'": j, "terms": terms})
    return {
        "basis": sc.basis.as_list(),
        "structure": structure,
        "hilbert": _aq.hilbert_series(obj, args.max_deg) if _pmq_of(obj).norm is not None else None,
    }


def cmd_betti(args):
    group = args.obj
    c = parse_class(args.class_, group)
    betti, report = _sullivan.stable_hurwitz_betti(group, c, args.max_deg)
    return {"k": report["k"], "classes": report["classes"], "betti": betti}


def cmd_crosscheck(args):
    return crosscheck(args.obj, budget=args.budget)


def build_parser():
    parser = argparse.ArgumentParser(prog="pmqkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pmqkit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="state cap for enumerations")
    common.add_argument("--timing", action="store_true", help="add elapsed seconds to the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def pmq_command(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--input", required=True, help="PMQ JSON file or builtin:NAME")
        p.set_defaults(func=func)
        return p

    pmq_command("validate", cmd_validate, "validate a PMQ document")
    pmq_command("classes", cmd_classes, "conjugacy classes")
    p = pmq_command("completion", cmd_completion, "completion classes of a given norm")
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--members", action="store_true")
    pmq_command("enveloping", cmd_enveloping, "inner automorphism group and abelianization")
    p = pmq_command("aq", cmd_aq, "graded invariant ring A(Q)")
    p.add_argument("--max-deg", type=int, default=None)
    pmq_command("crosscheck", cmd_crosscheck, "cross-module consistency checks")

    for name, func, help_ in (
        ("hurwitz", cmd_hurwitz, "Hurwitz orbits on tuples"),
        ("betti", cmd_betti, "stable Betti numbers of classical Hurwitz spaces"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--group", required=True, help="group JSON file or builtin:NAME")
        p.add_argument("--class", dest="class_", required=True, help="indices a,b,c | classes:i,j | nonidentity")
        p.set_defaults(func=func)
    sub.choices["hurwitz"].add_argument("--length", type=int, required=True)
    sub.choices["hurwitz"].add_argument("--total", type=int, default=None)
    sub.choices["betti"].add_argument("--max-deg", type=int, default=4)
    return parser


DEFAULT_BUDGETS = {
    "completion": _completion.DEFAULT_BUDGET,
    "hurwitz": _hurwitz.DEFAULT_BUDGET,
    "crosscheck": 10**5,
}


def run(argv):
    """Execute a command; returns ``(exit_code, report_dict)``."""
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = DEFAULT_BUDGETS.get(args.command, 10**6)
    params = {k.rstrip("_"): v for k, v in vars(args).items() if k not in ("func", "command", "timing")}
    report = {"command": args.command, "parameters": params, "version": __version__}
    start = time.perf_counter()
    try:
        if getattr(args, "input", None):
            args.obj = _io.load_pmq(args.input)
            report["input_digest"] = _io.digest(_io.pmq_document(args.obj))
        else:
            args.obj = _io.load_group(args.group)
            report["input_digest"] = _io.digest(_io.group_document(args.obj))
        report["results"] = args.func(args)
        code = 0
        if args.command == "crosscheck" and not report["results"]["ok"]:
            code = ValidationError.exit_code
    except PMQError as exc:
        code = exc.exit_code
        err = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ValidationError):
            err["violations"] = [v.as_dict() for v in exc.violations]
        if isinstance(exc, MalformedInput):
            err["path"] = exc.path
            if exc.offset is not None:
                err["offset"] = exc.offset
        report["error"] = err
    except ValueError as exc:
        code = MalformedInput.exit_code
        report["error"] = {"type": "ValueError", "message": str(exc)}
    if args.timing:
        report["elapsed"] = round(time.perf_counter() - start, 6)
    return code, report


def main(argv=None):
    code, report = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(_io.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
