"""Exact linear algebra over a field (Fraction or QI) plus univariate
polynomial helpers.

Matrices are lists of rows; vectors are lists.  Everything is duck-typed
over the field operations +, -, *, /, and truthiness as the zero test, so
the same routines serve the rational and Gaussian-rational cases.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

F0 = Fraction(0)
F1 = Fraction(1)


# ---------------------------------------------------------------------------
# matrices


def mat_vec(mat, vec):
    return [sum((row[j] * vec[j] for j in range(len(vec)) if vec[j]), row[0] * 0)
            for row in mat]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    zero = a[0][0] * 0
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if not x:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    oi[j] = oi[j] + x * bt[j]
    return out


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in mat]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows if any(row)]
    return rows, pivots


def rank(mat):
    return len(rref(mat)[0])


def nullspace(mat, ncols=None):
    """Basis of {x : mat @ x = 0}."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    if not mat:
        mat = []
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [F0] * ncols
        vec[fc] = F1
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve(mat, rhs):
    """One solution x of mat @ x = rhs, or None if inconsistent."""
    if not mat:
        return None if any(rhs) else []
    ncols = len(mat[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    rows, pivots = rref(aug)
    for row in rows:
        if not any(row[:-1]) and row[-1]:
            return None
    x = [F0] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rows[r][-1]
    return x


def det(mat):
    """Determinant by fraction-friendly Gaussian elimination."""
    n = len(mat)
    rows = [list(r) for r in mat]
    one = rows[0][0] * 0 + 1 if rows else F1
    d = F1 if isinstance(one, Fraction) else one
    sign = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            return d * 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        pv = rows[c][c]
        d = d * pv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d * sign


class Span:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []          # reduced rows
        self.pivots = []        # pivot column of each row

    def _reduce(self, vec):
        vec = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            if vec[pc]:
                f = vec[pc]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec):
        return not any(self._reduce(vec))

    def add(self, vec):
        """Insert vec; returns True if it enlarged the span."""
        red = self._reduce(vec)
        pc = next((c for c in range(self.ncols) if red[c]), None)
        if pc is None:
            return False
        pv = red[pc]
        red = [x / pv for x in red]
        for i in range(len(self.rows)):
            if self.rows[i][pc]:
                f = self.rows[i][pc]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], red)]
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pc:
            pos += 1
        self.rows.insert(pos, red)
        self.pivots.insert(pos, pc)
        return True

    @property
    def dim(self):
        return len(self.rows)


# ---------------------------------------------------------------------------
# polynomials (coefficient lists, low degree first)


def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_deg(p):
    return len(p) - 1


def poly_add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else F0
        b = q[i] if i < len(q) else F0
        out.append(a + b)
    return poly_trim(out)


def poly_neg(p):
    return [-a for a in p]


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_scale(p, c):
    if not c:
        return []
    return [a * c for a in p]


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [p[0] * q[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    quot = [F0] * max(0, len(p) - len(q) + 1)
    inv = 1 / q[-1]
    while len(p) >= len(q) and any(p):
        poly_trim(p)
        if len(p) < len(q):
            break
        c = p[-1] * inv
        s = len(p) - len(q)
        quot[s] = c
        for i in range(len(q)):
            p[s + i] = p[s + i] - c * q[i]
        p.pop()
    return poly_trim(quot), poly_trim(p)


def poly_monic(p):
    if not p:
        return []
    inv = 1 / p[-1]
    return [a * inv for a in p]


def poly_gcd(p, q):
    p, q = list(p), list(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_deriv(p):
    return poly_trim([p[i] * i for i in range(1, len(p))])


def poly_eval(p, x):
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p):
    g = poly_gcd(p, poly_deriv(p))
    if poly_deg(g) == 0:
        return poly_monic(p)
    return poly_monic(poly_divmod(p, g)[0])


def is_squarefree(p):
    return poly_deg(poly_gcd(p, poly_deriv(p))) == 0


def rational_roots(p):
    """All rational roots of p (Fraction coefficients), with the root-free
    residual factor.  Returns (sorted_roots, residual)."""
    p = poly_trim(list(p))
    if not p:
        raise ValueError("zero polynomial has every root")
    roots = []
    # factor out x = 0
    while not p[0]:
        roots.append(F0)
        p = p[1:]
    if poly_deg(p) >= 1:
        # clear denominators
        from math import gcd, lcm
        den = 1
        for c in p:
            den = lcm(den, c.denominator)
        ip = [int(c * den) for c in p]
        g = 0
        for c in ip:
            g = gcd(g, c)
        ip = [c // g for c in ip]

        def divisors(n):
            n = abs(n)
            out = set()
            d = 1
            while d * d <= n:
                if n % d == 0:
                    out.add(d)
                    out.add(n // d)
                d += 1
            return out

        cands = sorted(
            {Fraction(s * a, b) for a in divisors(ip[0]) for b in divisors(ip[-1])
             for s in (1, -1)},
        )
        changed = True
        while changed and poly_deg(p) >= 1:
            changed = False
            for r in cands:
                if not poly_eval(p, r):
                    roots.append(r)
                    p = poly_divmod(p, [-r, F1])[0]
                    changed = True
                    break
    roots = sorted(set(roots))
    return roots, poly_monic(p)


# ---------------------------------------------------------------------------
# minimal polynomial of a linear operator (Krylov, exact)


def min_poly(apply_op, dim, sample_order=None):
    """Minimal polynomial of the operator v -> apply_op(v) on F^dim.

    Works by accumulating annihilators of Krylov chains until the candidate
    kills every basis vector, so the result is certified, not probabilistic.
    """
    p = [F1]
    order = sample_order if sample_order is not None else range(dim)
    for i in order:
        e = [F0] * dim
        e[i] = F1
        v = _apply_poly(apply_op, p, e)
        if not any(v):
            continue
        q = _krylov_annihilator(apply_op, v, dim)
        p = poly_mul(p, q)
    return poly_monic(p)


def _apply_poly(apply_op, p, v):
    acc = [x * 0 for x in v]
    for c in reversed(p):
        acc = apply_op(acc)
        if c:
            acc = [a + c * b for a, b in zip(acc, v)]
    return acc


def _krylov_annihilator(apply_op, v, dim):
    span = Span(dim)
    chain = [list(v)]
    span.add(v)
    while True:
        nxt = apply_op(chain[-1])
        if span.contains(nxt):
            break
        span.add(nxt)
        chain.append(nxt)
    # express nxt in terms of the chain: solve chain^T c = nxt
    mat = [[chain[j][i] for j in range(len(chain))] for i in range(dim)]
    coeffs = solve(mat, nxt)
    q = [-c for c in coeffs] + [F1]
    return poly_trim(q)


# ---------------------------------------------------------------------------
# pencil rank-drop locus (exact, over Q)


def pencil_locus(A, B):
    """Rank-drop locus of the pencil M(s) = A + s*B over Q, both matrices
    rational with the same shape.

    Returns (generic_rank, drop_points, residual_factors):
      drop_points   -- Fractions s0 with rank(A + s0*B) < generic_rank
      residual_factors -- monic rational polynomials without rational roots
                          whose (complex) roots are also drop points.
    Rank at the point at infinity (the pure-B matrix) is NOT covered here;
    test B separately.
    """
    nrows = len(A)
    ncols = len(A[0]) if A else 0

    # split into independent blocks via the bipartite support graph
    parent = list(range(nrows + ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for i in range(nrows):
        for j in range(ncols):
            if A[i][j] or B[i][j]:
                union(i, nrows + j)

    blocks = {}
    for i in range(nrows):
        blocks.setdefault(find(i), [set(), set()])[0].add(i)
    for j in range(ncols):
        blocks.setdefault(find(nrows + j), [set(), set()])[1].add(j)

    generic_rank = 0
    drop_points = set()
    residual = []
    for rows_set, cols_set in blocks.values():
        rows_b = sorted(rows_set)
        cols_b = sorted(cols_set)
        if not rows_b or not cols_b:
            continue
        Ab = [[A[i][j] for j in cols_b] for i in rows_b]
        Bb = [[B[i][j] for j in cols_b] for i in rows_b]
        r, pts, res = _block_locus(Ab, Bb)
        generic_rank += r
        drop_points |= set(pts)
        residual.extend(res)
    return generic_rank, sorted(drop_points), residual


def _eval_pencil(A, B, s):
    return [[a + s * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _block_locus(A, B):
    nrows, ncols = len(A), len(A[0])
    bound = min(nrows, ncols)
    # generic rank: the drop locus has at most `bound` points, so among
    # bound+1 sample points at least one realizes the generic rank
    r = 0
    for k in range(bound + 2):
        s = Fraction(k)
        r = max(r, rank(_eval_pencil(A, B, s)))
        if r == bound:
            break
    if r == 0:
        return 0, [], []
    # gcd of all r x r minors; a point is in the locus iff it kills them all
    g = None
    npts = r + 1
    xs = [Fraction(k) for k in range(npts)]
    for rows_c in combinations(range(nrows), r):
        for cols_c in combinations(range(ncols), r):
            # det of the poly submatrix via interpolation at r+1 points
            vals = []
            for s in xs:
                M = [[A[i][j] + s * B[i][j] for j in cols_c] for i in rows_c]
                vals.append(det(M))
            minor = _lagrange(xs, vals)
            g = minor if g is None else poly_gcd(g, minor)
            if g is not None and poly_deg(poly_trim(list(g))) <= 0 and any(g):
                return r, [], []
    if g is None or not any(g):
        # every r x r minor vanishes identically: cannot happen, r is generic
        raise AssertionError("generic rank inconsistent with minors")
    roots, res = rational_roots(g)
    residual = [res] if poly_deg(res) >= 1 else []
    return r, roots, residual


def _lagrange(xs, ys):
    p = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = [F1]
        denom = F1
        for j, xj in enumerate(xs):
            if i == j:
                continue
            term = poly_mul(term, [-xj, F1])
            denom *= xi - xj
        p = poly_add(p, poly_scale(term, yi / denom))
    return poly_trim(p)
