"""JSON (covers form) and DOT export of finite lattices."""

from __future__ import annotations

import json
from pathlib import Path

from .order import lattice_from_covers


def to_dict(L):
    labels = L.labels
    return {
        "name": L.name,
        "elements": sorted(labels),
        "covers": sorted([labels[x], labels[y]] for x, y in L.covers),
    }


def to_json(L):
    """Deterministic text: identical lattices give identical bytes.

    Elements sit on one line and each cover on its own line, so documents
    stay readable and diff well.
    """
    d = to_dict(L)
    q = lambda v: json.dumps(v, ensure_ascii=False)  # noqa: E731
    covers = ",\n".join(f"    {q(c)}" for c in d["covers"])
    body = f"\n{covers}\n  " if covers else ""
    return (f'{{\n  "name": {q(d["name"])},\n  "elements": {q(d["elements"])},\n'
            f'  "covers": [{body}]\n}}\n')


def from_dict(data):
    for key in ("elements", "covers"):
        if key not in data:
            raise ValueError(f"lattice document lacks {key!r}")
    return lattice_from_covers(data["elements"], data["covers"], data.get("name", "L"))


def load_json(source):
    """Load from a path, or from JSON text when ``source`` starts with ``{``."""
    text = str(source)
    if not text.lstrip().startswith("{"):
        text = Path(source).read_text(encoding="utf-8")
    return from_dict(json.loads(text))


def to_dot(L):
    """Hasse diagram drawn bottom-up, one rank per height."""
    q = json.dumps
    order = sorted(range(L.n), key=lambda x: (L.heights[x], L.labels[x]))
    ids = {x: f"n{k}" for k, x in enumerate(order)}
    lines = [f"digraph {q(L.name, ensure_ascii=False)} {{", "  rankdir=BT;",
             "  node [shape=plaintext];"]
    for x in order:
        lines.append(f"  {ids[x]} [label={q(L.labels[x], ensure_ascii=False)}];")
    for h in range(L.height + 1):
        same = [ids[x] for x in order if L.heights[x] == h]
        if len(same) > 1:
            lines.append("  { rank=same; " + " ".join(same) + "; }")
    for x, y in sorted(L.covers, key=lambda e: (ids[e[0]], ids[e[1]])):
        lines.append(f"  {ids[x]} -> {ids[y]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(L, fmt="json"):
    """Bytes in ``json`` or ``dot`` format."""
    if fmt == "json":
        return to_json(L).encode("utf-8")
    if fmt == "dot":
        return to_dot(L).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")
