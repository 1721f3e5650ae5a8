"""Dense Gaussian-elimination oracle, independent of the package's sparse algebra.

Only the raw cell data of a complex is read (ids, dims, births, boundary
coefficients); all linear algebra happens here on dense lists, over F_q
(``q`` prime) or the rationals (``q == 0``).
"""
from fractions import Fraction


class Arith:
    def __init__(self, q):
        self.q = q

    def norm(self, x):
        if self.q:
            return int(x) % self.q
        return Fraction(x)

    def inv(self, x):
        return pow(int(x), self.q - 2, self.q) if self.q else 1 / Fraction(x)


def arith_of(cx):
    return Arith(cx.field.q if cx.field.kind == "prime" else 0)


def rref(rows, ar):
    """Row-reduce a list of dense rows; returns the nonzero rows and pivot columns."""
    m = [[ar.norm(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ar.inv(m[r][c])
        m[r] = [ar.norm(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [ar.norm(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(vectors, ar):
    vectors = [v for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    return len(rref(vectors, ar)[1])


def nullspace(matrix_cols, nrows, ar):
    """Basis of {x : sum_j x_j col_j = 0} for the given columns (each of length nrows)."""
    n = len(matrix_cols)
    if n == 0:
        return []
    if nrows == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    rows = [[matrix_cols[j][i] for j in range(n)] for i in range(nrows)]
    red, pivots = rref(rows, ar)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        x = [ar.norm(0)] * n
        x[fcol] = ar.norm(1)
        for row, pc in zip(red, pivots):
            x[pc] = ar.norm(-row[fcol])
        basis.append(x)
    return basis


def window_cells(cx, a, b, p):
    """Sorted ids of p-cells born in (a, b]; ``a = None`` means no lower bound."""
    return sorted(c.id for c in cx.cells if c.dim == p and (a is None or a < c.birth) and c.birth <= b)


def boundary_vector(cx, cid, targets, ar):
    pos = {t: i for i, t in enumerate(targets)}
    v = [ar.norm(0)] * len(targets)
    for g, x in cx.by_id[cid].boundary:
        if g in pos:
            v[pos[g]] = ar.norm(v[pos[g]] + x)
    return v


def relative_cycles(cx, a, b, p, ar):
    """Basis (as {id: coef} dicts) of relative p-cycles of (X^b, X^a)."""
    src = window_cells(cx, a, b, p)
    tgt = window_cells(cx, a, b, p - 1) if p > 0 else []
    cols = [boundary_vector(cx, s, tgt, ar) for s in src]
    return [{s: x for s, x in zip(src, vec) if x != 0} for vec in nullspace(cols, len(tgt), ar)]


def relative_boundaries(cx, a, b, p, ar):
    src = window_cells(cx, a, b, p + 1)
    tgt = window_cells(cx, a, b, p)
    return tgt, [boundary_vector(cx, s, tgt, ar) for s in src]


def relative_dim(cx, a, b, p):
    """dim H_p(X^b, X^a)."""
    ar = arith_of(cx)
    tgt, bounds = relative_boundaries(cx, a, b, p, ar)
    return len(relative_cycles(cx, a, b, p, ar)) - rank(bounds, ar)


def dense(chain, ids, ar):
    pos = {t: i for i, t in enumerate(ids)}
    v = [ar.norm(0)] * len(ids)
    for g, x in chain.items():
        if g in pos:
            v[pos[g]] = ar.norm(v[pos[g]] + x)
    return v


def induced_rank(cx, src, tgt, p_src, p_tgt, chain_map, extra=()):
    """Rank of the map H_{p_src}(src pair) -> H_{p_tgt}(tgt pair) induced by ``chain_map``.

    ``src`` and ``tgt`` are windows ``(a, b)`` meaning the pair (X^b, X^a).
    ``extra`` are chains added to the target boundaries (a quotient).
    """
    ar = arith_of(cx)
    ids, bounds = relative_boundaries(cx, tgt[0], tgt[1], p_tgt, ar)
    bounds = bounds + [dense(e, ids, ar) for e in extra]
    images = [dense(chain_map(z), ids, ar) for z in relative_cycles(cx, src[0], src[1], p_src, ar)]
    if not ids:
        return 0
    return rank(bounds + images, ar) - rank(bounds, ar)


def chain_boundary(cx, chain, ar):
    out = {}
    for cid, x in chain.items():
        for g, y in cx.by_id[cid].boundary:
            out[g] = ar.norm(out.get(g, 0) + x * y)
    return {g: x for g, x in out.items() if x != 0}


def persistent_betti(cx, s, t, p):
    """Rank of H_p(X^s) -> H_p(X^t) from full snapshot boundary matrices."""
    return induced_rank(cx, (None, s), (None, t), p, p, lambda z: z)


def homology_dims(cx, maxdeg):
    return [relative_dim(cx, None, float("inf"), p) for p in range(maxdeg + 1)]
