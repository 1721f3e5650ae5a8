"""JSON and CSV formats.

Complex::

    {"field": {"kind": "prime", "q": 2} | {"kind": "rational"},
     "cells": [{"id": "v0", "dim": 0, "birth": "0", "boundary": [["e1", "1"], ...]}, ...]}

Action::

    {"k": 6, "generator": [["v0", "v1", "1"], ...]}

Class::

    {"level": "-inf", "degree": 2, "chain": [["t0", "1"], ...]}

Surrogate spec (for ``capacity``)::

    {"class": <class>, "kill": [<class>, ...] | "auto"}

Diagram CSV: header ``degree,birth,death``; ``inf`` for an infinite death.
Numbers are exact strings throughout.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .algebra import FieldSpec, format_extended, parse_extended
from .complex import Cell, FilteredComplex
from .equivariant import GroupAction
from .errors import ParseError
from .persistence import HomologyClass, PersistenceDiagram, Point


def _check_keys(obj, allowed: set, required: set, what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"unknown keys in {what}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"missing keys in {what}: {sorted(missing)}")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def read_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


# -- fields and complexes ---------------------------------------------------

def field_from_json(obj) -> FieldSpec:
    _check_keys(obj, {"kind", "q"}, {"kind"}, "field")
    try:
        if obj["kind"] == "prime":
            return FieldSpec.prime(_int(obj.get("q"), "field order"))
        if obj["kind"] == "rational":
            if "q" in obj:
                raise ParseError("rational field takes no 'q'")
            return FieldSpec.rational()
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field kind {obj['kind']!r}")


def field_to_json(field: FieldSpec) -> dict:
    return {"kind": "prime", "q": field.q} if field.kind == "prime" else {"kind": "rational"}


def complex_from_json(obj, field: FieldSpec | None = None, *, births: bool = True) -> FilteredComplex:
    """Parse a complex; ``field`` overrides the declared one, ``births=False`` accepts bare cells."""
    _check_keys(obj, {"field", "cells"}, {"cells"} | ({"field"} if field is None else set()), "complex")
    if field is None:
        field = field_from_json(obj["field"])
    elif "field" in obj:
        field_from_json(obj["field"])
    if not isinstance(obj["cells"], list):
        raise ParseError("'cells' must be a list")
    cells = []
    allowed = {"id", "dim", "birth", "boundary"}
    for i, c in enumerate(obj["cells"]):
        _check_keys(c, allowed, {"id", "dim"} | ({"birth"} if births else set()), f"cell #{i}")
        if not isinstance(c["id"], str):
            raise ParseError(f"cell #{i} id must be a string")
        bd = c.get("boundary", [])
        if not isinstance(bd, list) or any(not isinstance(t, list) or len(t) != 2 for t in bd):
            raise ParseError(f"boundary of {c['id']!r} must be a list of [id, coefficient] pairs")
        birth = parse_extended(c["birth"]) if "birth" in c else parse_extended("0")
        cells.append(Cell(c["id"], _int(c["dim"], f"dim of {c['id']!r}"), birth,
                          tuple((str(g), field.parse(x)) for g, x in bd)))
    return FilteredComplex(field, tuple(cells))


def complex_to_json(cx: FilteredComplex) -> dict:
    f = cx.field
    return {
        "field": field_to_json(f),
        "cells": [
            {"id": c.id, "dim": c.dim, "birth": format_extended(c.birth),
             "boundary": [[g, f.format(x)] for g, x in c.boundary]}
            for c in cx.ordered
        ],
    }


def load_complex(path, field: FieldSpec | None = None) -> FilteredComplex:
    return complex_from_json(read_json(path), field)


# -- actions ----------------------------------------------------------------

def action_from_json(obj, field: FieldSpec, k: int | None = None) -> GroupAction:
    _check_keys(obj, {"k", "generator"}, {"generator"} | ({"k"} if k is None else set()), "action")
    order = k if k is not None else _int(obj["k"], "k")
    gen = {}
    for t in obj["generator"]:
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError("generator entries must be [source, target, coefficient]")
        s, d, c = t
        if s in gen:
            raise ParseError(f"generator lists {s!r} twice")
        gen[str(s)] = (str(d), field.parse(c))
    return GroupAction(order, gen)


def action_to_json(action: GroupAction, field: FieldSpec) -> dict:
    return {
        "k": action.k,
        "generator": [[s, t, field.format(c)] for s, (t, c) in sorted(action.generator.items())],
    }


def load_action(path, field: FieldSpec, k: int | None = None) -> GroupAction:
    return action_from_json(read_json(path), field, k)


# -- classes ----------------------------------------------------------------

def class_from_json(obj, field: FieldSpec) -> HomologyClass:
    _check_keys(obj, {"level", "degree", "chain"}, {"degree", "chain"}, "class")
    chain = obj["chain"]
    if not isinstance(chain, list) or any(not isinstance(t, list) or len(t) != 2 for t in chain):
        raise ParseError("class chain must be a list of [id, coefficient] pairs")
    level = parse_extended(obj.get("level", "-inf"))
    return HomologyClass(level, _int(obj["degree"], "degree"), tuple((str(g), field.parse(x)) for g, x in chain))


def class_to_json(cls: HomologyClass, field: FieldSpec) -> dict:
    return {
        "level": format_extended(cls.level),
        "degree": cls.degree,
        "chain": [[g, field.format(x)] for g, x in cls.chain],
    }


def surrogate_from_json(obj, field: FieldSpec):
    """Return ``(class or None, kill list or "auto")``."""
    _check_keys(obj, {"class", "kill"}, set(), "surrogate spec")
    cls = class_from_json(obj["class"], field) if obj.get("class") is not None else None
    kill = obj.get("kill", [])
    if kill == "auto":
        return cls, "auto"
    if not isinstance(kill, list):
        raise ParseError("'kill' must be a list of classes or \"auto\"")
    return cls, [class_from_json(k, field) for k in kill]


# -- builder inputs ---------------------------------------------------------

def grid_from_json(obj) -> list:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ParseError("grid must be a JSON 2D array")
    out = []
    for r in obj:
        row = []
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (str, int, float)):
                raise ParseError(f"bad grid value {x!r}")
            v = parse_extended(str(x))
            if isinstance(v, float):
                raise ParseError("grid values must be finite")
            row.append(v)
        out.append(row)
    return out


def vertex_function_from_json(obj, field: FieldSpec | None = None):
    from .builders import VertexFunction

    _check_keys(obj, {"complex", "values"}, {"complex", "values"}, "vertex function")
    base = complex_from_json(obj["complex"], field, births=False)
    if not isinstance(obj["values"], dict):
        raise ParseError("'values' must map vertex ids to numbers")
    values = {}
    for v, x in obj["values"].items():
        val = parse_extended(str(x))
        if isinstance(val, float):
            raise ParseError(f"value of {v!r} must be finite")
        values[v] = val
    return VertexFunction(base, values)


# -- diagram CSV ------------------------------------------------------------

HEADER = ["degree", "birth", "death"]


def diagram_to_csv(dgm: PersistenceDiagram) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for p in dgm.points:
        w.writerow([p.degree, format_extended(p.birth), format_extended(p.death)])
    return buf.getvalue()


def diagram_from_csv(text: str) -> PersistenceDiagram:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [h.strip() for h in rows[0]] != HEADER:
        raise ParseError("diagram CSV must start with the header 'degree,birth,death'")
    pts = []
    for n, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 3:
            raise ParseError(f"line {n}: expected 3 fields, got {len(row)}")
        try:
            degree = int(row[0])
        except ValueError:
            raise ParseError(f"line {n}: bad degree {row[0]!r}") from None
        birth, death = parse_extended(row[1]), parse_extended(row[2])
        if not birth < death:
            raise ParseError(f"line {n}: birth must be less than death")
        pts.append(Point(degree, birth, death))
    return PersistenceDiagram(tuple(pts))


def load_diagram(path) -> PersistenceDiagram:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return diagram_from_csv(text)
