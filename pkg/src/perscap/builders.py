"""Filtered complexes from vertex functions and grids, plus symmetric fixtures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FieldSpec
from .complex import Cell, FilteredComplex
from .equivariant import GroupAction
from .errors import BadParameter, EmptyGrid, MissingValue

F2 = FieldSpec.prime(2)


@dataclass(frozen=True)
class VertexFunction:
    base: FilteredComplex  # births are ignored
    values: dict  # vertex id -> rational


def _merge(field: FieldSpec, terms) -> tuple:
    acc: dict = {}
    for cid, x in terms:
        acc[cid] = field.add(acc.get(cid, field.zero), field.elem(x))
    return tuple((cid, x) for cid, x in acc.items() if x != 0)


def vertex_sets(base: FilteredComplex) -> dict:
    """Vertices in the closure of every cell."""
    out: dict = {}
    for c in sorted(base.cells, key=lambda c: c.dim):
        if c.dim == 0:
            out[c.id] = frozenset([c.id])
        else:
            out[c.id] = frozenset().union(*(out[g] for g, _ in c.boundary))
    return out


def lower_star(f: VertexFunction) -> FilteredComplex:
    """Each cell is born at the largest value among its vertices."""
    verts = vertex_sets(f.base)
    cells = []
    for c in f.base.cells:
        vs = verts[c.id]
        if not vs:
            raise BadParameter(f"cell {c.id!r} has no vertices in its closure")
        missing = sorted(v for v in vs if v not in f.values)
        if missing:
            raise MissingValue(f"no value for vertices {missing}")
        cells.append(Cell(c.id, c.dim, max(Fraction(f.values[v]) for v in vs), c.boundary))
    return f.base.with_cells(cells)


def grid_sublevel(samples, field: FieldSpec = F2) -> FilteredComplex:
    """Cubical complex of a rectangular grid with lower-star births."""
    rows = [list(r) for r in samples]
    if not rows or not rows[0]:
        raise EmptyGrid("grid has no samples")
    n, m = len(rows), len(rows[0])
    if any(len(r) != m for r in rows):
        raise BadParameter("grid rows have different lengths")
    val = [[Fraction(x) for x in r] for r in rows]
    one, neg = field.one, field.neg(field.one)
    cells = []
    for i in range(n):
        for j in range(m):
            cells.append(Cell(f"v{i}_{j}", 0, val[i][j]))
    for i in range(n):
        for j in range(m - 1):
            b = max(val[i][j], val[i][j + 1])
            cells.append(Cell(f"h{i}_{j}", 1, b, ((f"v{i}_{j + 1}", one), (f"v{i}_{j}", neg))))
    for i in range(n - 1):
        for j in range(m):
            b = max(val[i][j], val[i + 1][j])
            cells.append(Cell(f"u{i}_{j}", 1, b, ((f"v{i + 1}_{j}", one), (f"v{i}_{j}", neg))))
    for i in range(n - 1):
        for j in range(m - 1):
            b = max(val[i][j], val[i][j + 1], val[i + 1][j], val[i + 1][j + 1])
            bd = ((f"h{i}_{j}", one), (f"u{i}_{j + 1}", one), (f"h{i + 1}_{j}", neg), (f"u{i}_{j}", neg))
            cells.append(Cell(f"s{i}_{j}", 2, b, bd))
    return FilteredComplex(field, tuple(cells))


# -- symmetric fixtures -----------------------------------------------------

def point(k: int = 1, field: FieldSpec = F2, birth=Fraction(0)):
    cx = FilteredComplex(field, (Cell("v0", 0, birth),))
    return cx, GroupAction(k, {"v0": ("v0", field.one)})


def polygon_circle(m: int, k: int, field: FieldSpec = F2, birth=Fraction(0)):
    """``(m*k)``-gon with the free rotation by ``m`` steps, of order ``k``."""
    n = m * k
    one, neg = field.one, field.neg(field.one)
    cells = [Cell(f"v{i}", 0, birth) for i in range(n)]
    for i in range(n):
        cells.append(Cell(f"e{i}", 1, birth, _merge(field, [(f"v{(i + 1) % n}", one), (f"v{i}", neg)])))
    gen = {}
    for i in range(n):
        gen[f"v{i}"] = (f"v{(i + m) % n}", one)
        gen[f"e{i}"] = (f"e{(i + m) % n}", one)
    return FilteredComplex(field, tuple(cells)), GroupAction(k, gen)


def bipyramid_sphere(k: int, field: FieldSpec = F2, heights=None):
    """Sphere as a suspension of a ``k``-gon; the rotation fixes exactly the two poles.

    ``heights = (south, equator, north)`` gives the lower-star height
    filtration; by default every cell is born at 0.
    """
    one, neg = field.one, field.neg(field.one)
    spec = []  # (id, dim, boundary terms, vertex set)
    spec.append(("s", 0, [], {"s"}))
    spec.append(("n", 0, [], {"n"}))
    for i in range(k):
        spec.append((f"v{i}", 0, [], {f"v{i}"}))
    for i in range(k):
        j = (i + 1) % k
        spec.append((f"e{i}", 1, [(f"v{j}", one), (f"v{i}", neg)], {f"v{i}", f"v{j}"}))
        spec.append((f"a{i}", 1, [(f"v{i}", one), ("s", neg)], {f"v{i}", "s"}))
        spec.append((f"b{i}", 1, [("n", one), (f"v{i}", neg)], {f"v{i}", "n"}))
    for i in range(k):
        j = (i + 1) % k
        tri = {"s", f"v{i}", f"v{j}"}
        spec.append((f"t{i}", 2, [(f"a{i}", one), (f"e{i}", one), (f"a{j}", neg)], tri))
        tri = {"n", f"v{i}", f"v{j}"}
        spec.append((f"u{i}", 2, [(f"b{j}", one), (f"b{i}", neg), (f"e{i}", one)], tri))
    if heights is None:
        value = lambda v: Fraction(0)
    else:
        south, equator, north = (Fraction(h) for h in heights)
        value = lambda v: south if v == "s" else north if v == "n" else equator
    cells = tuple(
        Cell(cid, dim, max(value(v) for v in vs), _merge(field, bd)) for cid, dim, bd, vs in spec
    )
    gen = {}
    for i in range(k):
        j = (i + 1) % k
        for prefix in "veabtu":
            gen[f"{prefix}{i}"] = (f"{prefix}{j}", one)
    return FilteredComplex(field, cells), GroupAction(k, gen)


def octahedron(heights=(-1, 0, 1), field: FieldSpec = F2):
    """Octahedron (bipyramid over a square) with its lower-star height filtration."""
    return bipyramid_sphere(4, field, heights)


def fundamental_cycle(k: int, field: FieldSpec = F2) -> tuple:
    """Fundamental 2-cycle of ``bipyramid_sphere(k)`` as ``((cell id, coefficient), ...)``."""
    one, neg = field.one, field.neg(field.one)
    return tuple([(f"t{i}", one) for i in range(k)] + [(f"u{i}", neg) for i in range(k)])


FIXTURES = ("point", "polygon-circle", "bipyramid-sphere")


def symmetric_fixture(name: str, k: int, m: int = 1, field: FieldSpec = F2, heights=None):
    if not isinstance(k, int) or k < 1:
        raise BadParameter(f"k must be a positive integer, got {k!r}")
    if name == "point":
        return point(k, field)
    if name == "polygon-circle":
        if not isinstance(m, int) or m < 1:
            raise BadParameter(f"m must be a positive integer, got {m!r}")
        return polygon_circle(m, k, field)
    if name == "bipyramid-sphere":
        return bipyramid_sphere(k, field, heights)
    raise BadParameter(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def trivial_filtration(complex: FilteredComplex, birth=Fraction(0)) -> FilteredComplex:
    return complex.with_cells(Cell(c.id, c.dim, birth, c.boundary) for c in complex.cells)

