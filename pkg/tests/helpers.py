"""Random filtered complexes for property and oracle tests."""
import itertools
import random
from fractions import Fraction

from perscap import Cell, FieldSpec, FilteredComplex

GRID = [Fraction(x) for x in (-2, -1, 0, 1, 2)]
FIELDS = [FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.rational()]


def simplex_id(s):
    return "s" + "_".join(map(str, s))


def random_simplicial(rng: random.Random, field: FieldSpec, max_cells=40, max_dim=3, values=GRID):
    """Closure of random simplices on <= 8 vertices, monotone random births from ``values``."""
    n = rng.randint(1, 8) if rng.random() < 0.2 else rng.randint(4, 8)
    simplices = set((v,) for v in range(n))
    for _ in range(rng.randint(0, 25)):
        d = rng.randint(1, min(max_dim, n - 1)) if n > 1 else 0
        top = tuple(sorted(rng.sample(range(n), d + 1)))
        closure = {f for k in range(1, len(top) + 1) for f in itertools.combinations(top, k)}
        if len(simplices | closure) <= max_cells:
            simplices |= closure
    return _filtered(sorted(simplices, key=lambda s: (len(s), s)), rng, field, values)


def _filtered(simplices, rng, field, values):
    births = {}
    cells = []
    for s in simplices:
        b = rng.choice(values)
        faces = [s[:i] + s[i + 1:] for i in range(len(s))] if len(s) > 1 else []
        for f in faces:
            b = max(b, births[f])
        births[s] = b
        bd = tuple((simplex_id(f), field.elem((-1) ** i)) for i, f in enumerate(faces))
        cells.append(Cell(simplex_id(s), len(s) - 1, b, bd))
    return FilteredComplex(field, tuple(cells))


def random_complexes(count, seed=0, **kw):
    rng = random.Random(seed)
    for i in range(count):
        yield random_simplicial(rng, FIELDS[i % len(FIELDS)], **kw)


def random_grid(rng: random.Random, n=4, m=5, values=range(-4, 5)):
    return [[Fraction(rng.choice(values)) for _ in range(m)] for _ in range(n)]


def perturb(rng: random.Random, grid, delta):
    """Pointwise perturbation with sup-norm at most ``delta`` (attained somewhere)."""
    steps = [delta * Fraction(k, 4) for k in range(-4, 5)]
    out = [[x + rng.choice(steps) for x in row] for row in grid]
    out[0][0] = grid[0][0] + delta
    return out
