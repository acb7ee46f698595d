"""JSON documents for PMQs, pairs and groups.

PMQ document::

    {"size": n, "unit": u, "conj": [[...]], "prod": [[..., null, ...]],
     "norm": [...],                                   # optional
     "pair": {"group_mult": [[...]], "e": [...], "r": [[...]]}}   # optional

Group document::

    {"mult": [[...]]}

``null`` encodes an undefined product. Unknown keys are rejected. Output is
canonical: sorted keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from . import builtins as _builtins
from . import groups as _groups
from .errors import MalformedInput
from .pmq import PMQGroupPair, validate_pair, validate_pmq

PMQ_KEYS = {"size", "unit", "conj", "prod", "norm", "pair"}
PMQ_REQUIRED = {"size", "unit", "conj", "prod"}
PAIR_KEYS = {"group_mult", "e", "r"}
GROUP_KEYS = {"mult"}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(obj):
    return hashlib.sha256(dumps(obj).encode("utf-8")).hexdigest()


def _load_json(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedInput(f"not UTF-8: {exc.reason}", offset=exc.start) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise MalformedInput(f"JSON syntax error: {exc.msg}", offset=offset) from None


def _check_keys(doc, allowed, required, path):
    if not isinstance(doc, dict):
        raise MalformedInput("expected an object", path)
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise MalformedInput(f"unknown field {unknown[0]!r}", f"{path}.{unknown[0]}")
    missing = sorted(required - set(doc))
    if missing:
        raise MalformedInput(f"missing field {missing[0]!r}", f"{path}.{missing[0]}")


def _group_from_mult(mult, path):
    if not isinstance(mult, list) or not mult:
        raise MalformedInput("group table must be a non-empty list of rows", path)
    n = len(mult)
    for i, row in enumerate(mult):
        if not isinstance(row, list) or len(row) != n:
            raise MalformedInput(f"row must have {n} entries", f"{path}[{i}]")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedInput(f"entry {v!r} out of range", f"{path}[{i}][{j}]")
    return _groups.group_from_table(mult)


def pmq_from_document(doc):
    """Validated :class:`FinitePMQ` or :class:`PMQGroupPair` from a decoded document."""
    _check_keys(doc, PMQ_KEYS, PMQ_REQUIRED, "$")
    q = validate_pmq(doc["size"], doc["unit"], doc["conj"], doc["prod"], doc.get("norm"))
    if doc.get("pair") is None:
        return q
    pair = doc["pair"]
    _check_keys(pair, PAIR_KEYS, PAIR_KEYS, "$.pair")
    group = _group_from_mult(pair["group_mult"], "$.pair.group_mult")
    return validate_pair(q, group, pair["e"], pair["r"])


def parse_pmq_document(data):
    return pmq_from_document(_load_json(data))


def pmq_document(obj):
    pair = obj if isinstance(obj, PMQGroupPair) else None
    q = pair.pmq if pair else obj
    doc = {
        "size": q.size,
        "unit": q.unit,
        "conj": [list(row) for row in q.conj],
        "prod": [list(row) for row in q.prod],
    }
    if q.norm is not None:
        doc["norm"] = list(q.norm)
    if pair is not None:
        doc["pair"] = {
            "group_mult": [list(row) for row in pair.group.mult],
            "e": list(pair.e),
            "r": [list(row) for row in pair.r],
        }
    return doc


def group_document(group):
    return {"mult": [list(row) for row in group.mult]}


def parse_group_document(data):
    doc = _load_json(data)
    _check_keys(doc, GROUP_KEYS, GROUP_KEYS, "$")
    return _group_from_mult(doc["mult"], "$.mult")


def load_pmq(spec):
    """``builtin:NAME`` or a path to a PMQ document."""
    if spec.startswith("builtin:"):
        try:
            return _builtins.pmq(spec[len("builtin:") :])
        except KeyError as exc:
            raise MalformedInput(str(exc.args[0]), "$") from None
    try:
        data = Path(spec).read_bytes()
    except OSError as exc:
        raise MalformedInput(f"cannot read {spec}: {exc.strerror}") from None
    return parse_pmq_document(data)


def load_group(spec):
    """``builtin:NAME`` or a path to a group document."""
    if spec.startswith("builtin:"):
        try:
            return _builtins.group(spec[len("builtin:") :])
        except KeyError as exc:
            raise MalformedInput(str(exc.args[0]), "$") from None
    try:
        data = Path(spec).read_bytes()
    except OSError as exc:
        raise MalformedInput(f"cannot read {spec}: {exc.strerror}") from None
    return parse_group_document(data)
