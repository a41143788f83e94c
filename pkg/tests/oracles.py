"""Slow, independent reference computations used to cross-check the engine.

Nothing here calls the engine's linear algebra: ranks and kernels are done by
textbook Gaussian elimination over Fractions, Hom spaces by solving the full
intertwining system over every basis element of the algebra.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from grig.linalg import Mat
from grig.modules import Module, direct_sum, quotient


def naive_rref(rows: list[list], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def naive_rank(rows: list[list], ncols: int) -> int:
    return len(naive_rref(rows, ncols)[1])


def naive_kernel(rows: list[list], ncols: int) -> list[list[Fraction]]:
    red, pivots = naive_rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(v)
    return out


def _mat_rows(m: Mat) -> list[list]:
    return [list(r) for r in m.data]


def hom_system(m: Module, n: Module) -> list[list]:
    """Equations ``f x_M = x_N f`` for all basis elements x; unknown f is row-major."""
    dm, dn = m.dim, n.dim
    rows = []
    for xm, xn in zip(m.action, n.action):
        am, an = _mat_rows(xm), _mat_rows(xn)
        for i in range(dn):
            for j in range(dm):
                row = [0] * (dn * dm)
                # (f am)[i][j] - (an f)[i][j]
                for k in range(dm):
                    row[i * dm + k] += am[k][j]
                for k in range(dn):
                    row[k * dm + j] -= an[i][k]
                if any(row):
                    rows.append(row)
    return rows


def naive_hom_basis(m: Module, n: Module) -> list[list[list[Fraction]]]:
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    ker = naive_kernel(hom_system(m, n), dn * dm)
    return [[v[i * dm:(i + 1) * dm] for i in range(dn)] for v in ker]


def naive_hom_dim(m: Module, n: Module) -> int:
    if m.dim == 0 or n.dim == 0:
        return 0
    return m.dim * n.dim - naive_rank(hom_system(m, n), m.dim * n.dim)


def _matmul(a: list[list], b: list[list], inner: int) -> list[list]:
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(len(b[0]))] for i in range(len(a))]


def naive_ext_from_resolution(res, n: Module, top: int) -> list[int]:
    """Ext dims from the engine's resolution, with every Hom space and
    coboundary rank recomputed naively."""
    res.grow(top + 2)
    terms = res.terms
    diffs = {i: _mat_rows(res.differential(i).matrix) for i in range(1, len(terms))}
    homs = [naive_hom_basis(p, n) for p in terms]

    def cob_rank(i: int) -> int:
        # Hom(P_{i-1}, N) -> Hom(P_i, N), f -> f d_i
        if i < 1 or i >= len(terms) or not homs[i - 1] or terms[i].dim == 0:
            return 0
        vecs = []
        for f in homs[i - 1]:
            g = _matmul(f, diffs[i], terms[i - 1].dim)
            vecs.append([x for row in g for x in row])
        return naive_rank(vecs, n.dim * terms[i].dim)

    out = []
    for i in range(top + 1):
        if i >= len(terms):
            out.append(0)
            continue
        out.append(len(homs[i]) - cob_rank(i + 1) - cob_rank(i))
    return out


# -- bound quiver path enumeration ------------------------------------------------


def cyclic_paths(n: int, length_bound: int) -> list[tuple[int, int]]:
    """Paths (start, length) in the cyclic quiver on n vertices shorter than the bound."""
    return [(s, k) for s in range(n) for k in range(length_bound)]


# -- closed forms over the self-injective Nakayama algebras N(n, 2) ----------------------


def nakayama_simple_ext(n: int, i: int, a: int, b: int) -> int:
    """dim Ext^i(S_a, S_b) over N(n, 2); the syzygy of S_a is S_{a+1}."""
    return 1 if (a + i - b) % n == 0 else 0


def nakayama_rd_oracle(n: int) -> int:
    """rd(A + S) over N(n, 2): Ext^k(S, S) is first nonzero at k = n."""
    return n - 1


def nakayama_set_rd(n: int, simples: list[int], top: int = 64) -> int:
    """rd(A + sum of the given simples) over N(n, 2), by scanning degrees."""
    for i in range(1, top):
        if any(nakayama_simple_ext(n, i, a, b) for a in simples for b in simples):
            return i - 1
    return top


# -- t-dominant dimension by exhaustive search -------------------------------------------


def _coeff_maps(homs: list, coeffs=(-1, 0, 1)):
    for cs in itertools.product(coeffs, repeat=len(homs)):
        if not any(cs):
            continue
        yield cs


def brute_t_domdim(m: Module, ts: list[Module], depth: int, copies: int = 2) -> int:
    """Longest exact ``0 -> M -> T^0 -> ... -> T^{k-1}`` found by trying every map
    M -> sum of up to ``copies`` copies of each T_j with coefficients in {-1, 0, 1}
    on the naive Hom basis, capped at ``depth``."""
    if depth == 0 or m.dim == 0:
        return depth
    best = 0
    options = []
    for t in ts:
        basis = naive_hom_basis(m, t)
        opts = [None]
        if basis:
            for cs in _coeff_maps(basis):
                f = [[sum(c * b[i][j] for c, b in zip(cs, basis)) for j in range(m.dim)] for i in range(t.dim)]
                opts.append(f)
        options.append(opts)
    slots = [(j, t) for j, t in enumerate(ts) for _ in range(copies)]
    seen = set()
    for choice in itertools.product(*[options[j] for j, _ in slots]):
        blocks = [(t, f) for (j, t), f in zip(slots, choice) if f is not None]
        if not blocks:
            continue
        rows = [row for _, f in blocks for row in f]
        if naive_rank([list(c) for c in zip(*rows)], len(rows)) != m.dim:
            continue
        target = direct_sum([t for t, _ in blocks])
        cols = [tuple(r[j] for r in rows) for j in range(m.dim)]
        coker, _ = quotient(target, cols)
        key = (coker.dim, tuple(naive_rank(_mat_rows(x), coker.dim) for x in coker.action))
        if key in seen:
            continue
        seen.add(key)
        best = max(best, 1 + brute_t_domdim(coker, ts, depth - 1, copies))
        if best == depth:
            return best
    return best


# -- random isomorphic copies -------------------------------------------------------


def random_invertible(n: int, rng: random.Random) -> Mat:
    """Product of random integer elementary matrices."""
    g = Mat.identity(n)
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        e = [[int(r == c) for c in range(n)] for r in range(n)]
        e[i][j] = rng.choice([-2, -1, 1, 2])
        g = Mat(e, n) @ g
    perm = list(range(n))
    rng.shuffle(perm)
    p = Mat([[int(perm[r] == c) for c in range(n)] for r in range(n)], n)
    return p @ g


def conjugate(m: Module, g: Mat, ginv: Mat) -> Module:
    return Module(m.algebra, m.dim, [g @ x @ ginv for x in m.action], name=m.name + "'")
