"""Exact dense linear algebra over the rationals.

Entries are Python ``int`` or :class:`fractions.Fraction`.  Elimination is
done fraction-free: every row is scaled to integers and reduced with a
Bareiss-style Gauss-Jordan sweep, so intermediate values stay integral.
Pivots are always the first nonzero entry in column order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction


class NoSolution(Exception):
    """Raised by :func:`solve` when the right-hand side is not in the column space."""


def to_rat(x) -> int | Fraction:
    """Parse ``"p/q"``, ``"p"``, ints or Fractions into a normalized rational."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x.strip())
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Mat:
    """Immutable dense matrix with rational entries, stored row by row."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        data = tuple(tuple(_norm(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self.nrows = len(data)
        self.ncols = ncols
        self.data = data

    # -- constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        return cls([(0,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([tuple(1 if i == j else 0 for j in range(n)) for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Mat":
        if not cols:
            return cls.zeros(nrows, 0)
        return cls(list(zip(*cols)), len(cols))

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, entries: Sequence) -> "Mat":
        if len(entries) != nrows * ncols:
            raise ValueError("entries length must equal rows * cols")
        return cls([entries[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols)

    @classmethod
    def block_diag(cls, blocks: Sequence["Mat"]) -> "Mat":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = []
        c0 = 0
        for b in blocks:
            for r in b.data:
                rows.append((0,) * c0 + r + (0,) * (m - c0 - b.ncols))
            c0 += b.ncols
        return cls(rows, m) if n else cls.zeros(0, m)

    @classmethod
    def hstack(cls, mats: Sequence["Mat"], nrows: int | None = None) -> "Mat":
        if not mats:
            return cls.zeros(nrows or 0, 0)
        n = mats[0].nrows
        return cls([sum((m.data[i] for m in mats), ()) for i in range(n)],
                   sum(m.ncols for m in mats))

    @classmethod
    def vstack(cls, mats: Sequence["Mat"], ncols: int | None = None) -> "Mat":
        if not mats:
            return cls.zeros(0, ncols or 0)
        return cls([r for m in mats for r in m.data], mats[0].ncols)

    # -- accessors ----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self.data for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return list(zip(*self.data)) if self.nrows else [() for _ in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.data))

    def __repr__(self) -> str:
        return f"Mat({[[rat_str(x) for x in r] for r in self.data]})"

    # -- arithmetic ---------------------------------------------------------
    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        odata = other.data
        m = other.ncols
        out = []
        for r in self.data:
            acc = [0] * m
            for k, a in enumerate(r):
                if a:
                    orow = odata[k]
                    for j in range(m):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return Mat(out, m)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        return tuple(sum(a * b for a, b in zip(r, v) if a and b) for r in self.data)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ncols)

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.data], self.ncols)

    def scale(self, c) -> "Mat":
        return Mat([[c * a for a in r] for r in self.data], self.ncols)

    @property
    def T(self) -> "Mat":
        if not self.nrows:
            return Mat.zeros(self.ncols, 0)
        return Mat(list(zip(*self.data)), self.nrows)

    def kron(self, other: "Mat") -> "Mat":
        rows = []
        for r in self.data:
            for s in other.data:
                rows.append([a * b for a in r for b in s])
        return Mat(rows, self.ncols * other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat([[self.data[i][j] for j in cols] for i in rows], len(cols))

    def trace(self):
        return sum(self.data[i][i] for i in range(min(self.nrows, self.ncols)))


def lin_comb(coeffs: Sequence, mats: Sequence[Mat], shape: tuple[int, int]) -> Mat:
    """Sum of ``c * M`` over the pairs, skipping zero coefficients."""
    n, m = shape
    acc = [[0] * m for _ in range(n)]
    for c, M in zip(coeffs, mats):
        if not c:
            continue
        for i, r in enumerate(M.data):
            ai = acc[i]
            for j, x in enumerate(r):
                if x:
                    ai[j] += c * x
    return Mat(acc, m)


# ---------------------------------------------------------------------------
# fraction-free elimination


def _integer_row(row: Sequence) -> list[int]:
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in row]
    L = lcm(*dens)
    return [int(x * L) for x in row]


def ff_rref(rows: Sequence[Sequence], ncols: int):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(R, pivots, d)``: the nonzero reduced rows (integers), their
    pivot columns and the common pivot value ``d``.  Every row of ``R`` has
    ``d`` at its own pivot and 0 at every other pivot column.
    """
    M = [_integer_row(r) for r in rows]
    M = [r for r in M if any(r)]
    nrows = len(M)
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and M[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        prow = M[r]
        piv = prow[c]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            row = M[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    M[i] = [x * piv // prev for x in row]
                continue
            new = [x * piv for x in row] if piv != 1 else row[:]
            for k in nz:
                new[k] -= f * prow[k]
            if prev != 1:
                new = [x // prev for x in new]
            M[i] = new
        pivots.append(c)
        prev = piv
        r += 1
    return M[:r], pivots, prev


def rank(m: Mat) -> int:
    """Rank over the rationals."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    rows = m.data if m.nrows <= m.ncols else m.T.data
    ncols = m.ncols if m.nrows <= m.ncols else m.nrows
    return len(ff_rref(rows, ncols)[1])


def rank_of_vectors(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors or dim == 0:
        return 0
    return len(ff_rref(vectors, dim)[1])


def kernel_basis(m: Mat) -> list[tuple]:
    """Basis of the right null space, one vector per free column (integer entries)."""
    n = m.ncols
    R, pivots, d = ff_rref(m.data, n)
    pivset = set(pivots)
    basis = []
    for j in range(n):
        if j in pivset:
            continue
        v = [0] * n
        v[j] = d
        for row, pc in zip(R, pivots):
            v[pc] = -row[j]
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, b: Sequence):
    """Return one ``x`` with ``m x = b``; raise :class:`NoSolution` otherwise."""
    if len(b) != m.nrows:
        raise ValueError(f"dimension mismatch: matrix has {m.nrows} rows, rhs has {len(b)}")
    n = m.ncols
    aug = [list(r) + [bi] for r, bi in zip(m.data, b)]
    R, pivots, d = ff_rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        raise NoSolution
    x = [0] * n
    for row, pc in zip(R, pivots):
        x[pc] = Fraction(row[n], d) if d != 1 else row[n]
    return tuple(_norm(Fraction(v)) if isinstance(v, Fraction) else v for v in x)


def inverse(m: Mat) -> Mat:
    n = m.nrows
    if n != m.ncols:
        raise ValueError("not square")
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.data)]
    R, pivots, d = ff_rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("singular matrix")
    return Mat([[Fraction(x, d) for x in row[n:]] for row in R[:n]], n)


def det_nonzero(m: Mat) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


class Subspace:
    """A subspace of Q^n held by its reduced row echelon basis.

    Coordinates of a vector known to lie in the subspace are read directly
    off the pivot positions.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, vectors: Iterable[Sequence], ambient: int):
        vecs = [v for v in vectors]
        self.ambient = ambient
        if not vecs or ambient == 0:
            self.basis: list[tuple] = []
            self.pivots: list[int] = []
            return
        R, pivots, d = ff_rref(vecs, ambient)
        self.basis = [tuple(_norm(Fraction(x, d)) if d != 1 else x for x in row) for row in R]
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: Sequence) -> tuple:
        return tuple(v[p] for p in self.pivots)

    def vector(self, coords: Sequence) -> tuple:
        out = [0] * self.ambient
        for c, b in zip(coords, self.basis):
            if c:
                for k, x in enumerate(b):
                    if x:
                        out[k] += c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        out = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                for k, x in enumerate(b):
                    if x:
                        out[k] -= c * x
        return tuple(out)

    def complement_indices(self) -> list[int]:
        ps = set(self.pivots)
        return [i for i in range(self.ambient) if i not in ps]

    def basis_matrix(self) -> Mat:
        """Columns are the basis vectors."""
        return Mat.from_columns(self.basis, self.ambient)
