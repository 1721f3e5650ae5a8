"""Z_k actions and Borel equivariant persistence.

The Borel complex is ``E ⊗_{K[Z_k]} C`` for the periodic free resolution
``E_i = K[Z_k]`` whose differential ``E_i -> E_{i-1}`` is multiplication by
``g - 1`` for odd ``i`` and by the norm ``1 + g + ... + g^(k-1)`` for even
``i >= 2``.  Since each ``E_i`` is free of rank one, the degree-``n`` chains
are spanned by pairs ``(i, c)`` with ``i + dim c = n`` and

    d(i, c) = (i - 1, δ_i c) + (-1)^i (i, ∂c).

Truncating at ``i <= cap`` only corrupts degrees ``>= cap``; results are
reported in degrees ``<= cap - max(max base dim, 1)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .complex import Cell, FilteredComplex, Report, WindowSpec, relative_complex
from .errors import CapTooSmall, InvalidAction
from .modules import SurrogateSpec, auto_spec, capacity
from .persistence import PersistenceDiagram, diagram, homology_dims, reduce


@dataclass(frozen=True)
class GroupAction:
    """Generator of a Z_k action as a signed cell permutation.

    Cells missing from ``generator`` are fixed with coefficient 1.
    """

    k: int
    generator: dict  # cell id -> (image id, coefficient)

    def image(self, cid: str, field):
        return self.generator.get(cid, (cid, field.one))

    def apply(self, chain: dict, field) -> dict:
        out: dict = defaultdict(lambda: field.zero)
        for cid, x in chain.items():
            t, c = self.image(cid, field)
            out[t] = field.add(out[t], field.mul(x, c))
        return {a: b for a, b in out.items() if b != 0}

    def orbit_sum(self, cid: str, field) -> dict:
        """Norm element applied to a cell: ``sum_j g^j c``."""
        total: dict = defaultdict(lambda: field.zero)
        cur = {cid: field.one}
        for _ in range(self.k):
            for a, b in cur.items():
                total[a] = field.add(total[a], b)
            cur = self.apply(cur, field)
        return {a: b for a, b in total.items() if b != 0}

    def restrict(self, ids) -> "GroupAction":
        ids = set(ids)
        return GroupAction(self.k, {s: t for s, t in self.generator.items() if s in ids})

    def with_order(self, k: int) -> "GroupAction":
        return GroupAction(k, self.generator)

    def power(self, n: int, k: int, field) -> "GroupAction":
        """The action generated by ``g^n``, declared to have order ``k``."""
        gen = {}
        for s in self.generator:
            chain = {s: field.one}
            for _ in range(n):
                chain = self.apply(chain, field)
            ((t, c),) = chain.items()
            gen[s] = (t, c)
        return GroupAction(k, gen)


def validate_action(complex: FilteredComplex, action: GroupAction) -> Report:
    report = Report()
    f = complex.field
    cells = complex.by_id
    if not isinstance(action.k, int) or action.k < 1:
        report.add("order", [], f"group order k={action.k!r} must be a positive integer")
        return report
    targets: dict = {}
    for s, (t, c) in sorted(action.generator.items()):
        if s not in cells or t not in cells:
            missing = [x for x in (s, t) if x not in cells]
            report.add("unknown-cell", missing, f"action maps {s!r} -> {t!r} but {missing} not in complex")
            continue
        if c == 0:
            report.add("coefficient", [s], f"zero coefficient on image of {s!r}")
        if cells[s].dim != cells[t].dim:
            report.add("dimension", [s, t], f"action maps {s!r} (dim {cells[s].dim}) to {t!r} (dim {cells[t].dim})")
        if cells[s].birth != cells[t].birth:
            report.add("birth-preservation", [s, t], f"action maps {s!r} to {t!r} with a different birth")
        if t in targets:
            report.add("permutation", [targets[t], s, t], f"cells {targets[t]!r} and {s!r} both map to {t!r}")
        targets[t] = s
    # unlisted cells are fixed, so an unlisted image would have two preimages
    for t in sorted(set(targets) - set(action.generator)):
        report.add("permutation", [targets[t], t], f"{t!r} is the image of {targets[t]!r} and also fixed")
    if not report.ok:
        return report
    for c in complex.cells:
        chain = {c.id: f.one}
        for _ in range(action.k):
            chain = action.apply(chain, f)
        if chain != {c.id: f.one}:
            report.add("order", [c.id], f"g^{action.k} does not fix {c.id!r} with coefficient 1")
        lhs = action.apply(complex.boundary_of({c.id: f.one}), f)
        rhs = complex.boundary_of(action.apply({c.id: f.one}, f))
        if lhs != rhs:
            report.add("equivariance", [c.id], f"g∘∂ != ∂∘g on {c.id!r}")
    return report


def require_valid_action(complex: FilteredComplex, action: GroupAction) -> GroupAction:
    report = validate_action(complex, action)
    if not report.ok:
        raise InvalidAction(report)
    return action


def safe_band(complex: FilteredComplex, cap: int) -> int:
    """Highest total degree whose Borel homology is unaffected by truncation at ``cap``."""
    return cap - max(complex.max_dim, 1)


def borel_id(i: int, cid: str) -> str:
    return f"{i}:{cid}"


def borel_complex(complex: FilteredComplex, action: GroupAction, cap: int, max_degree: int | None = None) -> FilteredComplex:
    """Filtered Borel complex truncated at resolution degree ``cap``."""
    if cap < 0:
        raise CapTooSmall(f"cap {cap} must be non-negative")
    if max_degree is not None and max_degree > safe_band(complex, cap):
        raise CapTooSmall(
            f"cap {cap} only supports degrees <= {safe_band(complex, cap)}; degree {max_degree} requested"
        )
    f = complex.field
    cells = []
    for c in complex.ordered:
        twisted = action.apply({c.id: f.one}, f)
        minus = {a: f.sub(b, f.one if a == c.id else f.zero) for a, b in twisted.items()}
        if c.id not in minus:
            minus[c.id] = f.neg(f.one)
        minus = {a: b for a, b in minus.items() if b != 0}
        norm = action.orbit_sum(c.id, f)
        for i in range(cap + 1):
            bd = []
            if i >= 1:
                delta = minus if i % 2 == 1 else norm
                bd.extend((borel_id(i - 1, a), x) for a, x in sorted(delta.items()))
            sign = f.one if i % 2 == 0 else f.neg(f.one)
            bd.extend((borel_id(i, g), f.mul(sign, x)) for g, x in c.boundary)
            cells.append(Cell(borel_id(i, c.id), i + c.dim, c.birth, tuple(bd)))
    return FilteredComplex(f, tuple(cells))


def equivariant_persist(complex: FilteredComplex, action: GroupAction, cap: int) -> PersistenceDiagram:
    """Borel persistence diagram, restricted to the truncation-safe degrees."""
    band = safe_band(complex, cap)
    if band < 0:
        raise CapTooSmall(f"cap {cap} leaves no truncation-safe degree")
    dgm = diagram(reduce(borel_complex(complex, action, cap)))
    return dgm.restrict(range(band + 1))


def equivariant_windowed(complex: FilteredComplex, action: GroupAction, w: WindowSpec, cap: int) -> int:
    """``dim H^{Z_k}_p(X^b, X^a)`` for the window ``(a, b]``."""
    band = safe_band(complex, cap)
    if w.degree > band:
        raise CapTooSmall(f"cap {cap} only supports degrees <= {band}; degree {w.degree} requested")
    rel = relative_complex(complex, w.a, w.b)
    act = action.restrict(c.id for c in rel.cells)
    if w.degree < 0:
        return 0
    return homology_dims(borel_complex(rel, act, cap)).get(w.degree, 0)


def equivariant_capacity(
    complex: FilteredComplex,
    action: GroupAction,
    p: int,
    spec: SurrogateSpec | None = None,
    cap: int = 8,
    mu=None,
    eps=None,
):
    """Capacity of the degree-``p`` generator of the equivariant surrogate module.

    With no ``spec`` the kill-classes are the classes that vanish at 0.  With
    no ``mu`` the surrogate value at 0 must be one-dimensional and its
    generator is used.  Chains refer to Borel cells ``borel_id(i, cell)``.
    """
    band = safe_band(complex, cap)
    if p > band:
        raise CapTooSmall(f"cap {cap} only supports degrees <= {band}; degree {p} requested")
    borel = borel_complex(complex, action, cap)
    if spec is None:
        spec = auto_spec(borel, p, eps)
    return capacity(borel, mu, p, spec, eps)
