"""Relative persistence modules ``a -> H_p(X, X^a)``, their quotient at 0, and capacities.

``relative_module`` reads the module off the ordinary reduction: an
essential bar born at ``b`` in degree ``p`` gives a relative class alive for
``a < b`` in degree ``p``; a finite bar ``(b, d)`` in degree ``p`` gives a
relative class alive for ``b <= a < d`` in degree ``p + 1``.

``surrogate_module`` and ``capacity`` work directly with relative cycles and
boundaries at each level, since the quotient by kill-classes at 0 has no
barcode shortcut.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import INF, NEG_INF, ExtReal, FieldSpec, SparseColumn, add_scaled, format_extended, is_finite, scale
from .complex import FilteredComplex
from .errors import (
    AmbiguousClass, BadParameter, DeadAtZero, EpsilonCollision, InvalidWindow, KillClassSurvives,
    NotACycle, TrivialClass,
)
from .persistence import HomologyClass, ReducedDecomposition, boundary_column, chain_column, reduce


class EchelonSpan:
    """Span of sparse columns kept with pairwise distinct lows.

    Each basis vector may carry a payload column that is combined alongside
    it, which is how kernels and preimages are tracked.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.basis: dict = {}  # low -> (normalized vector, payload)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v: SparseColumn, payload: SparseColumn = ()):
        f = self.field
        while v:
            i, x = v[-1]
            entry = self.basis.get(i)
            if entry is None:
                break
            b, pb = entry
            c = f.neg(x)
            v = add_scaled(v, b, c, f)
            payload = add_scaled(payload, pb, c, f)
        return v, payload

    def add(self, v: SparseColumn, payload: SparseColumn = ()) -> bool:
        """Insert ``v``; return ``True`` if it was independent of the span."""
        v, payload = self.reduce(v, payload)
        if not v:
            return False
        inv = self.field.inv(v[-1][1])
        self.basis[v[-1][0]] = (scale(v, inv, self.field), scale(payload, inv, self.field))
        return True

    def contains(self, v: SparseColumn) -> bool:
        return not self.reduce(v)[0]

    def copy(self) -> "EchelonSpan":
        out = EchelonSpan(self.field)
        out.basis = dict(self.basis)
        return out


class RelativeHomology:
    """Relative cycles and boundaries of ``(X, X^a)`` over canonical cell positions."""

    def __init__(self, complex: FilteredComplex, dec: ReducedDecomposition | None = None):
        self.complex = complex
        self.field = complex.field
        self.dec = dec if dec is not None else reduce(complex)
        self._cycles: dict = {}
        self._bounds: dict = {}

    def cut(self, a: ExtReal) -> int:
        return self.dec.cut(a)

    @staticmethod
    def project(v: SparseColumn, cut: int) -> SparseColumn:
        return tuple(e for e in v if e[0] >= cut)

    def _cells_of_dim(self, p: int, cut: int) -> list:
        return [j for j, c in enumerate(self.dec.cells) if c.dim == p and j >= cut]

    def cycles(self, p: int, cut: int) -> list:
        """Basis of relative ``p``-cycles of ``(X, X^a)`` where ``cut = |X^a|``."""
        key = (p, cut)
        if key not in self._cycles:
            span = EchelonSpan(self.field)
            basis = []
            for j in self._cells_of_dim(p, cut):
                image = self.project(self.dec.D[j], cut)
                rem, comb = span.reduce(image, ((j, self.field.one),))
                if rem:
                    span.add(rem, comb)
                else:
                    basis.append(comb)
            self._cycles[key] = basis
        return self._cycles[key]

    def boundaries(self, p: int, cut: int) -> EchelonSpan:
        """Span of relative ``p``-boundaries of ``(X, X^a)``."""
        key = (p, cut)
        if key not in self._bounds:
            span = EchelonSpan(self.field)
            for j in self._cells_of_dim(p + 1, cut):
                span.add(self.project(self.dec.D[j], cut))
            self._bounds[key] = span
        return self._bounds[key]

    def is_relative_cycle(self, v: SparseColumn, cut: int) -> bool:
        return not self.project(boundary_column(self.dec, v), cut)

    def to_chain(self, v: SparseColumn) -> tuple:
        cells = self.dec.cells
        return tuple((cells[j].id, x) for j, x in v)


@dataclass(frozen=True)
class ModuleSummary:
    """Rank function ``(s, t, p) -> rank v_s^t`` of a persistence module."""

    rank_fn: Callable
    critical_values: tuple
    degrees: tuple

    def rank(self, s: ExtReal, t: ExtReal, p: int) -> int:
        if s > t:
            raise InvalidWindow(f"rank needs s <= t, got s={format_extended(s)}, t={format_extended(t)}")
        if p not in self.degrees:
            raise ValueError(f"degree {p} not covered by this module (degrees {self.degrees})")
        return self.rank_fn(s, t, p)

    def dim(self, s: ExtReal, p: int) -> int:
        return self.rank(s, s, p)

    def sample_levels(self) -> list:
        """Critical values, midpoints between them, and points beyond both ends."""
        cv = [c for c in self.critical_values if is_finite(c)]
        if not cv:
            return [NEG_INF, Fraction(0), INF]
        out = {NEG_INF, INF, cv[0] - 1, cv[-1] + 1, *cv}
        out.update((x + y) / 2 for x, y in zip(cv, cv[1:]))
        return sorted(out)


def relative_intervals(dec: ReducedDecomposition) -> list:
    """``(degree, lo, hi)`` meaning the relative class is alive for ``lo <= a < hi``."""
    cells = dec.cells
    out = []
    for i, j in dec.pairs():
        birth = cells[i].birth
        if j is None:
            out.append((cells[i].dim, NEG_INF, birth))
        else:
            death = cells[j].birth
            if birth < death:
                out.append((cells[i].dim + 1, birth, death))
    return sorted(out)


def relative_module(complex: FilteredComplex, p: int | None = None) -> ModuleSummary:
    """The module ``a -> H_p(X, X^a)`` with maps induced by inclusion of pairs."""
    intervals = relative_intervals(reduce(complex))

    def rank_fn(s, t, q):
        return sum(1 for d, lo, hi in intervals if d == q and lo <= s and t < hi)

    degrees = tuple(range(complex.max_dim + 1)) if p is None else (p,)
    crit = tuple(b for b in complex.births() if is_finite(b))
    return ModuleSummary(rank_fn, crit, degrees)


# -- surrogate module at 0 --------------------------------------------------

@dataclass(frozen=True)
class SurrogateSpec:
    """Classes quotiented out of the module at level 0 (pivot level fixed at 0)."""

    kill: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kill", tuple(self.kill))

    def of_degree(self, p: int) -> list:
        return [k for k in self.kill if k.degree == p]


def negative_gap(complex: FilteredComplex) -> ExtReal:
    """Largest finite negative birth, or ``-inf`` if there is none."""
    neg = [b for b in complex.births() if is_finite(b) and b < 0]
    return max(neg) if neg else NEG_INF


def default_epsilon(complex: FilteredComplex) -> Fraction:
    """Midpoint of the gap below 0; 1 when no finite birth is negative."""
    lo = negative_gap(complex)
    return Fraction(1) if lo == NEG_INF else -lo / 2


def check_epsilon(complex: FilteredComplex, eps) -> Fraction:
    if eps is None:
        return default_epsilon(complex)
    eps = Fraction(eps)
    if not (eps > 0 and -eps > negative_gap(complex)):
        raise EpsilonCollision(
            f"-eps = {format_extended(-eps)} is not strictly between the largest negative "
            f"critical value {format_extended(negative_gap(complex))} and 0"
        )
    return eps


class _Surrogate:
    def __init__(self, complex: FilteredComplex, p: int, spec: SurrogateSpec, eps):
        self.rh = RelativeHomology(complex)
        self.p = p
        self.eps = check_epsilon(complex, eps)
        self.cut_neg = self.rh.cut(-self.eps)
        self.cut_zero = self.rh.cut(Fraction(0))
        f = complex.field
        self.kill_span = self.rh.boundaries(p, self.cut_neg).copy()
        after_zero = self.rh.boundaries(p, self.cut_zero)
        for k in spec.of_degree(p):
            if not k.level < 0:
                raise BadParameter("kill-classes must be presented at a level below 0")
            v = _class_column(self.rh, k)
            v = self.rh.project(v, self.cut_neg)
            if not self.kill_span.add(v):
                raise TrivialClass(f"kill-class {_describe(k)} is trivial (or dependent) at level -eps")
            if not after_zero.contains(self.rh.project(v, self.cut_zero)):
                raise KillClassSurvives(f"kill-class {_describe(k)} is still nonzero just after 0")
        self.field = f

    def target(self, t):
        """Projection cut and subspace divided out at level ``t``."""
        if t == 0:
            return self.cut_neg, self.kill_span
        cut = self.rh.cut(t)
        return cut, self.rh.boundaries(self.p, cut)

    def source_cut(self, s) -> int:
        return self.cut_neg if s == 0 else self.rh.cut(s)

    def rank(self, s, t, p) -> int:
        cut_t, quotient = self.target(t)
        span = quotient.copy()
        before = len(span)
        for z in self.rh.cycles(p, self.source_cut(s)):
            span.add(self.rh.project(z, cut_t))
        return len(span) - before


def _class_column(rh: RelativeHomology, cls: HomologyClass) -> SparseColumn:
    v = chain_column(rh.dec, cls.chain)
    if not v:
        raise TrivialClass("the zero chain is not a class")
    if any(rh.dec.cells[j].dim != cls.degree for j, _ in v):
        raise BadParameter(f"chain is not homogeneous of degree {cls.degree}")
    if not rh.is_relative_cycle(v, rh.cut(cls.level)):
        raise NotACycle(f"chain is not a relative cycle at level {format_extended(cls.level)}")
    return v


def _describe(cls: HomologyClass) -> str:
    return "+".join(f"{x}*{cid}" for cid, x in cls.chain)


def surrogate_module(complex: FilteredComplex, p: int, spec: SurrogateSpec = SurrogateSpec(), eps=None) -> ModuleSummary:
    """Relative module with the value at 0 replaced by ``H_p(X, X^-eps) / <kill-classes>``."""
    sur = _Surrogate(complex, p, spec, eps)
    crit = tuple(sorted({0, *(b for b in complex.births() if is_finite(b))}))
    return ModuleSummary(sur.rank, crit, (p,))


def vanishing_classes(complex: FilteredComplex, p: int, eps=None) -> list:
    """Basis of the classes of ``H_p(X, X^-eps)`` that die when the level reaches 0."""
    rh = RelativeHomology(complex)
    eps = check_epsilon(complex, eps)
    cut_neg, cut_zero = rh.cut(-eps), rh.cut(Fraction(0))
    f = complex.field
    images = rh.boundaries(p, cut_zero).copy()
    kernel = []
    for z in rh.cycles(p, cut_neg):
        rem, comb = images.reduce(rh.project(z, cut_zero), z)
        if rem:
            images.add(rem, comb)
        else:
            kernel.append(comb)
    quotient = rh.boundaries(p, cut_neg).copy()
    out = []
    for w in kernel:
        if quotient.add(rh.project(w, cut_neg)):
            out.append(HomologyClass(-eps, p, rh.to_chain(w)))
    return out


def auto_spec(complex: FilteredComplex, p: int, eps=None) -> SurrogateSpec:
    """Kill exactly the classes that vanish at 0 in degree ``p``."""
    return SurrogateSpec(tuple(vanishing_classes(complex, p, eps)))


def surviving_class(complex: FilteredComplex, p: int, spec: SurrogateSpec, eps=None) -> HomologyClass:
    """Generator of the one-dimensional value at 0 of the surrogate module."""
    sur = _Surrogate(complex, p, spec, eps)
    span = sur.kill_span.copy()
    found = []
    for z in sur.rh.cycles(p, sur.cut_neg):
        if span.add(sur.rh.project(z, sur.cut_neg)):
            found.append(z)
    if not found:
        raise DeadAtZero(f"surrogate module is zero at 0 in degree {p}")
    if len(found) > 1:
        raise AmbiguousClass(f"surrogate module has dimension {len(found)} at 0 in degree {p}; pass a class")
    return HomologyClass(-sur.eps, p, sur.rh.to_chain(found[0]))


def capacity(
    complex: FilteredComplex,
    mu: HomologyClass | None,
    p: int,
    spec: SurrogateSpec = SurrogateSpec(),
    eps=None,
) -> ExtReal:
    """Persistence of the image of ``mu`` at 0 in the surrogate module.

    Returns ``sup {b > 0 : v_0^b(mu') != 0}``: the first level past 0 at which
    the class dies, ``inf`` if it never dies, and 0 if it dies immediately
    after 0.  Raises :class:`DeadAtZero` if the image at 0 is already zero.
    """
    if mu is None:
        mu = surviving_class(complex, p, spec, eps)
    if mu.degree != p:
        raise BadParameter(f"class has degree {mu.degree}, expected {p}")
    if not mu.level < 0:
        raise BadParameter("the class must be presented at a level below 0")
    sur = _Surrogate(complex, p, spec, eps)
    rh = sur.rh
    v = _class_column(rh, mu)
    if sur.kill_span.contains(rh.project(v, sur.cut_neg)):
        raise DeadAtZero("class is zero in the surrogate module at 0")
    levels = [Fraction(0)] + [b for b in complex.births() if is_finite(b) and b > 0]
    for b in levels:
        cut = rh.cut(b)
        if rh.boundaries(p, cut).contains(rh.project(v, cut)):
            return b
    return INF
