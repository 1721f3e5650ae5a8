"""Filtered chain complexes over a field.

A complex is a finite list of cells, each with a dimension, a birth value
(an exact rational or +-inf) and a boundary given as a formal sum of cells
one dimension lower.  The sublevel subcomplex at ``t`` is the set of cells
born at or before ``t``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable

from .algebra import ExtReal, FieldSpec, format_extended
from .errors import InvalidComplex, InvalidWindow


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    birth: ExtReal
    boundary: tuple = ()  # ((face id, coefficient), ...)

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(tuple(t) for t in self.boundary))


@dataclass(frozen=True)
class WindowSpec:
    """Action window ``(a, b]`` in a fixed degree."""

    a: ExtReal
    b: ExtReal
    degree: int

    def __post_init__(self):
        if not self.a < self.b:
            raise InvalidWindow(
                f"window needs a < b, got ({format_extended(self.a)}, {format_extended(self.b)}]"
            )


@dataclass(frozen=True)
class Violation:
    kind: str
    cells: tuple
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message}"


@dataclass
class Report:
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, cells: Iterable[str], message: str) -> None:
        self.violations.append(Violation(kind, tuple(cells), message))

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class FilteredComplex:
    field: FieldSpec
    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    @cached_property
    def ordered(self) -> tuple:
        """Cells in canonical order ``(birth, dim, id)``."""
        return tuple(sorted(self.cells, key=lambda c: (c.birth, c.dim, c.id)))

    @cached_property
    def index(self) -> dict:
        return {c.id: i for i, c in enumerate(self.ordered)}

    @cached_property
    def by_id(self) -> dict:
        return {c.id: c for c in self.cells}

    @property
    def max_dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def births(self) -> list:
        """Sorted distinct birth values."""
        return sorted({c.birth for c in self.cells})

    def __len__(self):
        return len(self.cells)

    def boundary_of(self, chain: dict) -> dict:
        """Boundary of a chain given as ``{cell id: coefficient}``."""
        f = self.field
        out: dict = defaultdict(lambda: f.zero)
        for cid, c in chain.items():
            for face, a in self.by_id[cid].boundary:
                out[face] = f.add(out[face], f.mul(c, a))
        return {k: v for k, v in out.items() if v != 0}

    def with_cells(self, cells: Iterable[Cell]) -> "FilteredComplex":
        return FilteredComplex(self.field, tuple(cells))


def validate(complex: FilteredComplex) -> Report:
    """Check id uniqueness, face existence and dimension, birth monotonicity and d∘d = 0."""
    report = Report()
    f = complex.field
    counts = Counter(c.id for c in complex.cells)
    for cid, n in sorted(counts.items()):
        if n > 1:
            report.add("duplicate-id", [cid], f"cell id {cid!r} used {n} times")
    cells = complex.by_id
    for c in complex.cells:
        if not isinstance(c.dim, int) or c.dim < 0:
            report.add("dimension", [c.id], f"cell {c.id!r} has invalid dimension {c.dim!r}")
        if c.birth != c.birth:
            report.add("birth", [c.id], f"cell {c.id!r} has NaN birth")
        seen = set()
        for face, coef in c.boundary:
            if face in seen:
                report.add("boundary", [c.id, face], f"face {face!r} repeated in boundary of {c.id!r}")
            seen.add(face)
            if coef == 0:
                report.add("boundary", [c.id, face], f"zero coefficient on {face!r} in boundary of {c.id!r}")
            g = cells.get(face)
            if g is None:
                report.add("missing-face", [c.id, face], f"cell {c.id!r} has unknown face {face!r}")
                continue
            if g.dim != c.dim - 1:
                report.add(
                    "face-dimension", [c.id, face],
                    f"face {face!r} (dim {g.dim}) of {c.id!r} (dim {c.dim}) is not one dimension lower",
                )
            if g.birth > c.birth:
                report.add(
                    "monotonicity", [c.id, face],
                    f"face {face!r} born at {format_extended(g.birth)} after "
                    f"{c.id!r} born at {format_extended(c.birth)}",
                )
    if "missing-face" in report.kinds() or "duplicate-id" in report.kinds():
        return report
    for c in complex.cells:
        dd = complex.boundary_of(complex.boundary_of({c.id: f.one}))
        if dd:
            report.add("dd-nonzero", [c.id, *sorted(dd)], f"boundary of boundary of {c.id!r} is nonzero")
    return report


def require_valid(complex: FilteredComplex) -> FilteredComplex:
    report = validate(complex)
    if not report.ok:
        raise InvalidComplex(report)
    return complex


def snapshot(complex: FilteredComplex, t: ExtReal) -> FilteredComplex:
    """Sublevel subcomplex of cells born at or before ``t``."""
    return complex.with_cells(c for c in complex.cells if c.birth <= t)


def relative_complex(complex: FilteredComplex, a: ExtReal, b: ExtReal) -> FilteredComplex:
    """Quotient complex ``C(X^b) / C(X^a)``; boundary terms landing in ``X^a`` are dropped."""
    if not a < b:
        raise InvalidWindow(f"relative complex needs a < b, got a={format_extended(a)}, b={format_extended(b)}")
    keep = {c.id for c in complex.cells if a < c.birth <= b}
    out = []
    for c in complex.cells:
        if c.id in keep:
            out.append(Cell(c.id, c.dim, c.birth, tuple((g, x) for g, x in c.boundary if g in keep)))
    return complex.with_cells(out)
