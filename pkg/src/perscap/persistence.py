"""Boundary-matrix reduction and the persistence data derived from it."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .algebra import (
    INF, ExtReal, SparseColumn, add_scaled, column, format_extended, is_finite, low, scale,
)
from .complex import FilteredComplex, WindowSpec, relative_complex
from .errors import InvalidWindow, NotACycle, ParseError, TrivialClass, Unbounded


def _alive(death: ExtReal, t: ExtReal) -> bool:
    # essential bars are alive at every level including +inf
    return t < death or death == INF


class Point(NamedTuple):
    degree: int
    birth: ExtReal
    death: ExtReal


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of ``(degree, birth, death)`` points, kept sorted."""

    points: tuple = ()

    def __post_init__(self):
        pts = tuple(sorted(Point(*p) for p in self.points))
        for p in pts:
            if not p.birth < p.death:
                raise ValueError(f"diagram point {p} has birth >= death")
        object.__setattr__(self, "points", pts)

    def degree(self, p: int) -> list:
        return [pt for pt in self.points if pt.degree == p]

    def degrees(self) -> list:
        return sorted({pt.degree for pt in self.points})

    def betti(self, p: int, t: ExtReal = INF) -> int:
        """Number of bars in degree ``p`` alive at ``t``."""
        return sum(1 for pt in self.points if pt.degree == p and pt.birth <= t and _alive(pt.death, t))

    def restrict(self, degrees: Iterable[int]) -> "PersistenceDiagram":
        keep = set(degrees)
        return PersistenceDiagram(tuple(p for p in self.points if p.degree in keep))

    def counter(self) -> Counter:
        return Counter(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class HomologyClass:
    """A chain presented at a filtration level.

    For ordinary persistence the chain is a cycle of the sublevel complex at
    ``level``.  For relative modules ``H_p(X, X^a)`` it is a relative cycle:
    its boundary lies in ``X^level``.
    """

    level: ExtReal
    degree: int
    chain: tuple  # ((cell id, coefficient), ...)

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(tuple(t) for t in self.chain))


@dataclass
class ReducedDecomposition:
    """``R = D V`` for the boundary matrix ``D`` in canonical order."""

    complex: FilteredComplex
    D: list
    R: list
    V: list
    pivot_of: dict  # low row -> column whose reduced column has that low

    @property
    def cells(self) -> tuple:
        return self.complex.ordered

    def pairs(self) -> list:
        """``(creator, destroyer)`` index pairs; destroyer is ``None`` for essential classes."""
        out = []
        for j, col in enumerate(self.R):
            if col:
                out.append((low(col), j))
            elif j not in self.pivot_of:
                out.append((j, None))
        return sorted(out)

    def death_of(self, i: int) -> ExtReal:
        j = self.pivot_of.get(i)
        return INF if j is None else self.cells[j].birth

    def cut(self, t: ExtReal) -> int:
        """Number of cells born at or before ``t``."""
        lo, hi = 0, len(self.cells)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.cells[mid].birth <= t:
                lo = mid + 1
            else:
                hi = mid
        return lo


def _boundary_columns(complex: FilteredComplex) -> list:
    idx = complex.index
    f = complex.field
    return [column(((idx[g], x) for g, x in c.boundary), f) for c in complex.ordered]


def reduce(complex: FilteredComplex) -> ReducedDecomposition:
    """Standard column reduction in canonical order, with clearing.

    Dimensions are processed from the top down.  Once column ``j`` reduces to
    a column with low ``i``, column ``i`` is known to reduce to zero; it is
    cleared and its ``V`` column set to the normalized ``R[j]``, which keeps
    ``V`` upper unitriangular and ``R = D V``.
    """
    f = complex.field
    cells = complex.ordered
    n = len(cells)
    D = _boundary_columns(complex)
    R = list(D)
    V: list = [((j, f.one),) for j in range(n)]
    pivot_of: dict = {}
    cleared: set = set()
    by_dim: dict = {}
    for j, c in enumerate(cells):
        by_dim.setdefault(c.dim, []).append(j)
    for d in sorted(by_dim, reverse=True):
        for j in by_dim[d]:
            if j in cleared:
                continue
            r, v = R[j], V[j]
            while r:
                i = r[-1][0]
                k = pivot_of.get(i)
                if k is None:
                    break
                c = f.neg(f.div(r[-1][1], R[k][-1][1]))
                r = add_scaled(r, R[k], c, f)
                v = add_scaled(v, V[k], c, f)
            R[j], V[j] = r, v
            if r:
                i, lead = r[-1]
                pivot_of[i] = j
                cleared.add(i)
                R[i] = ()
                V[i] = scale(r, f.inv(lead), f)
    return ReducedDecomposition(complex, D, R, V, pivot_of)


def diagram(dec: ReducedDecomposition) -> PersistenceDiagram:
    """Persistence diagram; zero-length pairs are dropped."""
    cells = dec.cells
    pts = []
    for i, j in dec.pairs():
        birth = cells[i].birth
        death = INF if j is None else cells[j].birth
        if birth < death:
            pts.append(Point(cells[i].dim, birth, death))
    return PersistenceDiagram(tuple(pts))


def persistence_diagram(complex: FilteredComplex) -> PersistenceDiagram:
    return diagram(reduce(complex))


def persistent_betti(dec: ReducedDecomposition | PersistenceDiagram, s: ExtReal, t: ExtReal, p: int) -> int:
    """Rank of the map ``H_p(X^s) -> H_p(X^t)``."""
    if s > t:
        raise InvalidWindow(f"persistent Betti number needs s <= t, got s={format_extended(s)}, t={format_extended(t)}")
    dgm = dec if isinstance(dec, PersistenceDiagram) else diagram(dec)
    return sum(1 for pt in dgm.points if pt.degree == p and pt.birth <= s and _alive(pt.death, t))


def homology_dims(complex: FilteredComplex) -> dict:
    """``{degree: dim H_p}`` of the whole complex (all degrees up to the top cell dimension)."""
    dec = reduce(complex)
    dims = {d: 0 for d in range(complex.max_dim + 1)}
    for i, j in dec.pairs():
        if j is None:
            dims[dec.cells[i].dim] += 1
    return dims


def chain_column(dec: ReducedDecomposition, chain: Iterable, *, level: ExtReal | None = None) -> SparseColumn:
    """Column (over canonical positions) of a chain given by cell ids."""
    idx = dec.complex.index
    entries = []
    for cid, x in chain:
        if cid not in idx:
            raise ParseError(f"unknown cell {cid!r} in chain")
        if level is not None and dec.cells[idx[cid]].birth > level:
            raise ParseError(f"cell {cid!r} is born after level {format_extended(level)}")
        entries.append((idx[cid], x))
    return column(entries, dec.complex.field)


def boundary_column(dec: ReducedDecomposition, col: SparseColumn) -> SparseColumn:
    f = dec.complex.field
    out: SparseColumn = ()
    for j, x in col:
        out = add_scaled(out, dec.D[j], x, f)
    return out


def class_persistence(dec: ReducedDecomposition, mu: HomologyClass) -> ExtReal:
    """``sup {a > 0 : [mu] survives from level s to s + a}``.

    The cycle is written in the basis of cycles ``V[i]`` (one per creator
    ``i``, each with low ``i``); the answer is the latest death among the
    creators used, minus ``s``.
    """
    f = dec.complex.field
    s = mu.level
    z = chain_column(dec, mu.chain, level=s)
    if not z:
        raise TrivialClass("the zero chain has no persistence")
    if any(dec.cells[j].dim != mu.degree for j, _ in z):
        raise ParseError(f"chain is not homogeneous of degree {mu.degree}")
    if boundary_column(dec, z):
        raise NotACycle("chain has nonzero boundary")
    latest = None
    while z:
        i, x = z[-1]
        if dec.R[i]:
            raise AssertionError(f"cycle low {i} is not a creator")  # impossible for a cycle
        death = dec.death_of(i)
        if latest is None or death > latest:
            latest = death
        z = add_scaled(z, dec.V[i], f.neg(x), f)
    if not latest > s:
        raise TrivialClass(f"class is already a boundary at level {format_extended(s)}")
    if not is_finite(latest):
        return INF
    return latest - s


def windowed_homology(complex: FilteredComplex, w: WindowSpec) -> int:
    """``dim H_p(X^b, X^a)`` for the window ``(a, b]``."""
    rel = relative_complex(complex, w.a, w.b)
    return homology_dims(rel).get(w.degree, 0) if w.degree >= 0 else 0


def strict_bracket(x: ExtReal) -> int:
    """Largest integer strictly less than ``x``."""
    if isinstance(x, float) and (math.isinf(x) or math.isnan(x)):
        raise Unbounded(f"strict bracket of {x} is undefined")
    return math.ceil(Fraction(x)) - 1
