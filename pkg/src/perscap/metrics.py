"""Exact bottleneck distance between persistence diagrams."""
from __future__ import annotations

import math
from fractions import Fraction

import networkx as nx

from .algebra import INF, ExtReal, is_finite
from .persistence import PersistenceDiagram


def _sup_dist(p, q) -> ExtReal:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _half_life(p) -> ExtReal:
    return (p[1] - p[0]) / 2


def _perfect_matching_exists(A: list, B: list, r) -> bool:
    """Can every point be matched within ``r``, using diagonal copies for leftovers?"""
    g = nx.Graph()
    left = [("a", i) for i in range(len(A))] + [("db", j) for j in range(len(B))]
    right = [("b", j) for j in range(len(B))] + [("da", i) for i in range(len(A))]
    g.add_nodes_from(left, bipartite=0)
    g.add_nodes_from(right, bipartite=1)
    for i, p in enumerate(A):
        for j, q in enumerate(B):
            if _sup_dist(p, q) <= r:
                g.add_edge(("a", i), ("b", j))
        if _half_life(p) <= r:
            g.add_edge(("a", i), ("da", i))
    for j, q in enumerate(B):
        if _half_life(q) <= r:
            g.add_edge(("db", j), ("b", j))
    for j in range(len(B)):
        for i in range(len(A)):
            g.add_edge(("db", j), ("da", i))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return len(matching) // 2 == len(left)


def _finite_bottleneck(A: list, B: list) -> ExtReal:
    if not A and not B:
        return Fraction(0)
    candidates = {Fraction(0)}
    candidates.update(_half_life(p) for p in A)
    candidates.update(_half_life(q) for q in B)
    candidates.update(_sup_dist(p, q) for p in A for q in B)
    cands = sorted(candidates)
    lo, hi = 0, len(cands) - 1  # the largest candidate is always feasible
    while lo < hi:
        mid = (lo + hi) // 2
        if _perfect_matching_exists(A, B, cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def _kind(pt) -> tuple:
    return (is_finite(pt[0]) or pt[0], is_finite(pt[1]) or pt[1])


def bottleneck(d1: PersistenceDiagram, d2: PersistenceDiagram, p: int | None = None) -> ExtReal:
    """Bottleneck distance in degree ``p`` (all degrees combined when ``p`` is None).

    Points with an infinite coordinate can only be matched to points with the
    same infinite coordinates; if their counts differ the distance is ``inf``.
    """
    if p is None:
        degrees = set(d1.degrees()) | set(d2.degrees())
        return max((bottleneck(d1, d2, q) for q in degrees), default=Fraction(0))
    A = [(pt.birth, pt.death) for pt in d1.points if pt.degree == p]
    B = [(pt.birth, pt.death) for pt in d2.points if pt.degree == p]
    groups_a: dict = {}
    groups_b: dict = {}
    for pt in A:
        groups_a.setdefault(_kind(pt), []).append(pt)
    for pt in B:
        groups_b.setdefault(_kind(pt), []).append(pt)
    finite = (True, True)
    best = _finite_bottleneck(groups_a.pop(finite, []), groups_b.pop(finite, []))
    for kind in set(groups_a) | set(groups_b):
        ga, gb = groups_a.get(kind, []), groups_b.get(kind, [])
        if len(ga) != len(gb):
            return INF
        # one finite coordinate left; sorted order is an optimal bottleneck matching
        axis = 0 if kind[0] is True else 1
        xs = sorted(pt[axis] for pt in ga)
        ys = sorted(pt[axis] for pt in gb)
        for x, y in zip(xs, ys):
            if is_finite(x):
                best = max(best, abs(x - y))
    if isinstance(best, float) and math.isinf(best):
        return INF
    return best
