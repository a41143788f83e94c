"""JSON documents for algebras, modules and Gorenstein projective sets.

Rationals are written as strings ``"p/q"`` (or ``"p"``).  Bound-quiver
documents write paths left to right in diagram order: ``"a*b"`` is the path
that traverses ``a`` first and ``b`` second.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import Algebra
from .errors import MalformedDoc
from .linalg import Mat, rat_str, to_rat
from .modules import Module
from .quiver import BoundQuiver, algebra_from_bound_quiver


def _rat(x) -> Any:
    try:
        return to_rat(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedDoc(f"bad rational literal {x!r}") from exc


def mat_to_doc(m: Mat) -> list[list[str]]:
    return [[rat_str(x) for x in row] for row in m.data]


def mat_from_doc(rows, nrows: int | None = None, ncols: int | None = None) -> Mat:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise MalformedDoc("matrix must be a list of rows")
    try:
        m = Mat([[_rat(x) for x in r] for r in rows], ncols if not rows else None)
    except ValueError as exc:
        raise MalformedDoc(str(exc)) from exc
    if nrows is not None and m.nrows != nrows:
        raise MalformedDoc(f"matrix has {m.nrows} rows, expected {nrows}")
    if ncols is not None and rows and m.ncols != ncols:
        raise MalformedDoc(f"matrix has {m.ncols} columns, expected {ncols}")
    return m


def vec_to_doc(v) -> list[str]:
    return [rat_str(x) for x in v]


# -- algebras ------------------------------------------------------------------


def algebra_to_doc(a: Algebra) -> dict:
    q = a.presentation
    if isinstance(q, BoundQuiver):
        rels = [_relation_text(r, q) for r in q.relations]
        return {
            "name": a.name,
            "kind": "bound_quiver",
            "vertices": list(q.vertices),
            "arrows": [{"name": n, "src": s, "tgt": t} for n, s, t in q.arrows],
            "relations": rels,
            "max_path_length": q.max_path_length,
        }
    mult = []
    for (i, j), d in sorted(a.mult.items()):
        for k, c in sorted(d.items()):
            mult.append([i, j, k, rat_str(c)])
    return {
        "name": a.name,
        "kind": "structure_constants",
        "dim": a.dim,
        "basis": list(a.basis),
        "unit": vec_to_doc(a.unit),
        "mult": mult,
    }


def _relation_text(rel: dict, q: BoundQuiver) -> str:
    out = ""
    for p, c in rel.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = q.label(p) if mag == 1 else f"{rat_str(mag)} {q.label(p)}"
        if not out:
            out = term if sign == "+" else f"-{term}"
        else:
            out += f" {sign} {term}"
    return out


def parse_structure_constants(doc: dict) -> Algebra:
    try:
        n = int(doc["dim"])
        basis = doc.get("basis") or [f"b{i}" for i in range(n)]
        unit = [_rat(x) for x in doc["unit"]]
        entries = doc["mult"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDoc(f"structure-constant document: {exc}") from exc
    if len(basis) != n or len(unit) != n:
        raise MalformedDoc("basis/unit length does not match dim")
    mult: dict = {}
    for e in entries:
        if not isinstance(e, list) or len(e) != 4:
            raise MalformedDoc(f"mult entry {e!r} is not [i, j, k, c]")
        i, j, k, c = e
        if not all(isinstance(x, int) and 0 <= x < n for x in (i, j, k)):
            raise MalformedDoc(f"mult entry {e!r} has a bad index")
        c = _rat(c)
        if c:
            d = mult.setdefault((i, j), {})
            d[k] = d.get(k, 0) + c
    return Algebra(str(doc.get("name", "A")), basis, unit, mult)


def algebra_from_doc(doc: dict) -> Algebra:
    if not isinstance(doc, dict):
        raise MalformedDoc("algebra document must be an object")
    kind = doc.get("kind")
    if kind == "structure_constants":
        return parse_structure_constants(doc)
    if kind == "bound_quiver":
        try:
            arrows = [(a["name"], str(a["src"]), str(a["tgt"])) for a in doc["arrows"]]
            q = BoundQuiver(doc["vertices"], arrows, list(doc.get("relations", [])),
                            int(doc["max_path_length"]))
        except (KeyError, TypeError) as exc:
            raise MalformedDoc(f"bound-quiver document: {exc}") from exc
        return algebra_from_bound_quiver(q, name=str(doc.get("name", "kQ/I")))
    raise MalformedDoc(f"unknown algebra kind {kind!r}")


# -- modules -------------------------------------------------------------------


def module_to_doc(m: Module) -> dict:
    doc = {"algebra": m.algebra.name, "dim": m.dim, "action": [mat_to_doc(x) for x in m.action]}
    if m.name:
        doc["name"] = m.name
    return doc


def _path_of_label(label: str, q: BoundQuiver):
    if label.startswith("e_"):
        return label[2:], ()
    names = tuple(label.split("*"))
    return q.arrow_map[names[0]][0], names


def module_from_doc(doc: dict, a: Algebra) -> Module:
    if not isinstance(doc, dict):
        raise MalformedDoc("module document must be an object")
    if "algebra" in doc and doc["algebra"] != a.name:
        raise MalformedDoc(f"module is over {doc['algebra']!r}, not {a.name!r}")
    name = str(doc.get("name", ""))
    if "action" in doc:
        try:
            dim = int(doc["dim"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDoc("module document needs an integer dim") from exc
        if not isinstance(doc["action"], list) or len(doc["action"]) != a.dim:
            raise MalformedDoc(f"need {a.dim} action matrices")
        action = [mat_from_doc(x, dim, dim) if dim else Mat.zeros(0, 0) for x in doc["action"]]
        return Module(a, dim, action, name=name)
    if "dimension_vector" in doc:
        return _module_from_representation(doc, a, name)
    raise MalformedDoc("module document needs 'action' or 'dimension_vector'")


def _module_from_representation(doc: dict, a: Algebra, name: str) -> Module:
    q = a.presentation
    if not isinstance(q, BoundQuiver):
        raise MalformedDoc("representation form needs a bound-quiver algebra")
    dv = {str(k): int(v) for k, v in doc["dimension_vector"].items()}
    for v in q.vertices:
        dv.setdefault(v, 0)
    if set(dv) != set(q.vertices):
        raise MalformedDoc("dimension vector mentions unknown vertices")
    off = {}
    total = 0
    for v in q.vertices:
        off[v] = total
        total += dv[v]
    maps = {}
    am = q.arrow_map
    for arrow, (s, t) in am.items():
        rows = doc.get("arrow_maps", {}).get(arrow)
        if rows is None:
            maps[arrow] = Mat.zeros(dv[t], dv[s])
        else:
            maps[arrow] = mat_from_doc(rows, dv[t], dv[s]) if dv[t] else Mat.zeros(0, dv[s])
    extra = set(doc.get("arrow_maps", {})) - set(am)
    if extra:
        raise MalformedDoc(f"unknown arrows {sorted(extra)}")
    action = []
    for label in a.basis:
        start, arrows = _path_of_label(label, q)
        block = Mat.identity(dv[start])
        end = start
        for x in arrows:
            block = maps[x] @ block
            end = am[x][1]
        rows = [[0] * total for _ in range(total)]
        for i in range(dv[end]):
            for j in range(dv[start]):
                rows[off[end] + i][off[start] + j] = block.data[i][j]
        action.append(Mat(rows, total))
    return Module(a, total, action, name=name)


# -- files -----------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedDoc(f"{path}: {exc}") from exc


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# -- bundled corpus ----------------------------------------------------------------


def corpus_docs() -> dict[str, dict]:
    """Bundled algebra documents keyed by algebra name."""
    from importlib import resources

    out = {}
    for entry in sorted(resources.files("grig.corpus").iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            out[doc["name"]] = doc
    return out


def corpus_algebra(name: str) -> Algebra:
    docs = corpus_docs()
    if name not in docs:
        raise MalformedDoc(f"no bundled algebra named {name!r}; have {sorted(docs)}")
    return algebra_from_doc(docs[name])
