"""JSON interchange and DOT export for posets.

Canonical file: {"n": ..., "covers": [[x, y], ...], "names": [...]} with
covers the sorted transitive reduction.  The reader closes any acyclic
pair list, so hand-written files need not be reduced.
"""

from __future__ import annotations

import json

from .errors import BadParameters
from .poset import Realizer, cover_relations, from_covers, ranks


def poset_to_obj(p):
    obj = {"n": p.n, "covers": [list(c) for c in cover_relations(p)]}
    if p.names is not None:
        obj["names"] = list(p.names)
    if p.realizer is not None:
        obj["realizer"] = [list(p.realizer.ext1), list(p.realizer.ext2)]
    return obj


def poset_from_obj(obj):
    try:
        n = obj["n"]
        covers = [tuple(pair) for pair in obj.get("covers", [])]
        names = obj.get("names")
        realizer = obj.get("realizer")
    except (TypeError, KeyError) as exc:
        raise BadParameters(f"malformed poset JSON: {exc}") from None
    if names is not None and len(names) != n:
        raise BadParameters("names must have one entry per element")
    p, mapping = from_covers(n, covers, names=names)
    if realizer is not None:
        ext1, ext2 = realizer
        p.realizer = Realizer(
            tuple(mapping[x] for x in ext1), tuple(mapping[x] for x in ext2)
        )
    return p


def dumps(p):
    return json.dumps(poset_to_obj(p), separators=(", ", ": ")) + "\n"


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"invalid JSON: {exc}") from None
    return poset_from_obj(obj)


def export_dot(p):
    """DOT digraph of the cover relations, rank-aligned when ranked."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    for x in range(p.n):
        lines.append(f'  v{x} [label="{p.name(x)}"];')
    for x, y in cover_relations(p):
        lines.append(f"  v{x} -> v{y};")
    classes = ranks(p)
    if classes is not None:
        for cls in classes:
            row = "; ".join(f"v{x}" for x in sorted(cls))
            lines.append("  { rank=same; " + row + "; }")
    lines.append("}")
    return "\n".join(lines) + "\n"
