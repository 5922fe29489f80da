"""JSON cover documents.

A document looks like::

    {"schemaVersion": 1,
     "vertices": [{"id": "u", "dilated": false}, ...],
     "edges": [{"id": "e1", "ends": ["u", "u"], "length": "3/2", "sign": -1}, ...]}

``dilated`` on an edge defaults to false.  ``sign`` is required exactly on
free edges.  Lengths are integer or ``p/q`` strings; JSON numbers are
accepted only when they are integers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .cover import CoverError, DoubleCover, normalize_signs, validate
from .graph import GraphError, HalfEdgeGraph

SCHEMA_VERSION = 1


class DocumentError(CoverError):
    pass


def _length(raw, where):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise DocumentError(f"{where}: length must be an integer or a 'p/q' string")
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: cannot parse length {raw!r}") from None
    if value <= 0:
        raise DocumentError(f"{where}: length must be positive, got {raw!r}")
    return value


def cover_from_dict(doc, normalize=True):
    """Build and validate a cover; returns ``(cover, warnings)``."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    version = doc.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schemaVersion {version!r}")
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise DocumentError("'vertices' and 'edges' must be lists")
    ids = []
    dilated = set()
    for i, v in enumerate(vertices):
        where = f"vertices[{i}]"
        if not isinstance(v, dict) or not isinstance(v.get("id"), str):
            raise DocumentError(f"{where}: needs a string 'id'")
        if v["id"] in ids:
            raise DocumentError(f"{where}: duplicate vertex id {v['id']!r}")
        ids.append(v["id"])
        flag = v.get("dilated", False)
        if not isinstance(flag, bool):
            raise DocumentError(f"{where}: 'dilated' must be a boolean")
        if flag:
            dilated.add(v["id"])
    ends = {}
    lengths = {}
    dil_edges = set()
    sign = {}
    for i, e in enumerate(edges):
        where = f"edges[{i}]"
        if not isinstance(e, dict) or not isinstance(e.get("id"), str):
            raise DocumentError(f"{where}: needs a string 'id'")
        eid = e["id"]
        where = f"edge {eid!r}"
        if eid in ends:
            raise DocumentError(f"{where}: duplicate edge id")
        pair = e.get("ends")
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"{where}: 'ends' must list two vertex ids")
        for x in pair:
            if x not in ids:
                raise DocumentError(f"{where}: unknown vertex {x!r}")
        ends[eid] = tuple(pair)
        if "length" not in e:
            raise DocumentError(f"{where}: missing length")
        lengths[eid] = _length(e["length"], where)
        flag = e.get("dilated", False)
        if not isinstance(flag, bool):
            raise DocumentError(f"{where}: 'dilated' must be a boolean")
        if flag:
            for x in pair:
                if x not in dilated:
                    raise DocumentError(f"{where}: dilated edge has undilated end {x!r}")
            dil_edges.add(eid)
        free = not flag and all(x not in dilated for x in pair)
        if "sign" in e:
            if not free:
                raise DocumentError(f"{where}: sign given on an edge that is not free")
            if e["sign"] not in (1, -1) or isinstance(e["sign"], bool):
                raise DocumentError(f"{where}: sign must be 1 or -1")
            sign[eid] = e["sign"]
        elif free:
            raise DocumentError(f"{where}: free edge needs a sign")
    try:
        cover = DoubleCover(HalfEdgeGraph(ids, ends), lengths, dilated, dil_edges, sign)
        validate(cover)
    except GraphError as exc:
        raise DocumentError(str(exc)) from None
    warnings = []
    if normalize:
        norm = normalize_signs(cover)
        changed = [e for e in cover.sign if norm.sign[e] != cover.sign[e]]
        if changed:
            warnings.append(
                "signs switched to put +1 on a spanning forest: " + ", ".join(changed)
            )
        cover = norm
    return cover, warnings


def cover_to_dict(c):
    vertices = [
        {"id": str(v), "dilated": v in c.dilated_vertices} for v in c.base.vertices
    ]
    edges = []
    for e in c.base.edges:
        a, b = c.base.ends[e]
        item = {"id": str(e), "ends": [str(a), str(b)], "length": str(c.lengths[e])}
        if e in c.dilated_edges:
            item["dilated"] = True
        if e in c.sign:
            item["sign"] = c.sign[e]
        edges.append(item)
    return {"schemaVersion": SCHEMA_VERSION, "vertices": vertices, "edges": edges}


def loads(text, normalize=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return cover_from_dict(doc, normalize)


def load(path, normalize=True):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return loads(text, normalize)


def dumps(c):
    return json.dumps(cover_to_dict(c), indent=2) + "\n"


def dump(c, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(c))


SHIPPED = ("cover_a", "cover_b", "cover_c", "no_ogod")


def shipped_path(name):
    """Filesystem path of a bundled document (``cover_a``, ``cover_b``, ``cover_c``, ``no_ogod``)."""
    return resources.files("prymatroid") / "data" / f"{name}.json"


def load_shipped(name):
    return loads(shipped_path(name).read_text(encoding="utf-8"))[0]
