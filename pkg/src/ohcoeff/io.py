"""Reading and writing hypergraph files.

Text format, one element per line, ``#`` starts a comment::

    v v1
    e e12
    i v1 e12 +

Document order of ``v``/``e``/``i`` lines fixes every ordering.  Files
ending in ``.json`` (or stdin starting with ``{``) use the equivalent
object form ``{"vertices": [...], "edges": [...], "incidences": [[v, e, "+"], ...]}``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .errors import ParseError, ValidationError
from .hypergraph import OrientedHypergraph, build


def loads(text: str) -> OrientedHypergraph:
    vertices, edges, incs = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        tag, args = line[0], line[1:]
        expected = {"v": 1, "e": 1, "i": 3}.get(tag)
        if expected is None:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")
        if len(args) != expected:
            raise ParseError(f"line {lineno}: {tag!r} takes {expected} field(s), got {len(args)}")
        if tag == "v":
            vertices.append(args[0])
        elif tag == "e":
            edges.append(args[0])
        else:
            incs.append(tuple(args))
    return build(vertices, edges, incs)


def dumps(G: OrientedHypergraph) -> str:
    lines = [f"v {name}" for name in G.vertices]
    lines += [f"e {name}" for name in G.edges]
    lines += [
        f"i {G.vertices[inc.vertex]} {G.edges[inc.edge]} {'+' if inc.sign > 0 else '-'}"
        for inc in G.incidences
    ]
    return "".join(line + "\n" for line in lines)


def loads_json(text: str) -> OrientedHypergraph:
    try:
        doc = json.loads(text)
        return build(doc["vertices"], doc["edges"], [tuple(x) for x in doc["incidences"]])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ParseError(f"bad JSON hypergraph: {exc}") from None


def dumps_json(G: OrientedHypergraph) -> str:
    doc = {
        "vertices": list(G.vertices),
        "edges": list(G.edges),
        "incidences": [
            [G.vertices[inc.vertex], G.edges[inc.edge], "+" if inc.sign > 0 else "-"]
            for inc in G.incidences
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load(path: str) -> OrientedHypergraph:
    """Load from a path, or from stdin when ``path`` is ``-``."""
    if path == "-":
        text = sys.stdin.read()
        is_json = text.lstrip().startswith("{")
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        is_json = path.endswith(".json")
    return loads_json(text) if is_json else loads(text)
