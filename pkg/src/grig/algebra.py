"""Finite-dimensional split algebras over the rationals.

An :class:`Algebra` is stored by sparse structure constants: ``mult[i, j]``
is the coordinate dict of ``b_i * b_j``.  Everything derived from the
multiplication (radical, primitive idempotents, Peirce generators, blocks)
is computed lazily and cached; the object is otherwise immutable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

from .errors import (
    ContextNotZero,
    InternalInconsistency,
    MalformedDoc,
    NoUnit,
    NotAssociative,
    NotIdempotent,
    NotSplit,
)
from .linalg import Mat, NoSolution, Subspace, kernel_basis, solve

Vec = tuple

SPLIT_RETRIES = 32


def _axpy(acc: dict, c, d: dict) -> None:
    for k, v in d.items():
        x = acc.get(k, 0) + c * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


class Algebra:
    def __init__(
        self,
        name: str,
        basis: Sequence[str],
        unit: Sequence,
        mult: dict,
        presentation=None,
        check: bool = True,
    ):
        self.name = name
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.unit = tuple(unit)
        if len(self.unit) != self.dim:
            raise MalformedDoc("unit has wrong length")
        self.mult = {k: dict(v) for k, v in mult.items() if v}
        self.presentation = presentation
        self._opposite: Algebra | None = None
        if check:
            self.check_unit()
            self.check_associativity()

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim})"

    # -- multiplication -----------------------------------------------------
    def basis_mul(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def mul_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                d = self.mult.get((i, j))
                if d:
                    _axpy(out, a * b, d)
        return out

    def mul(self, x: Sequence, y: Sequence) -> Vec:
        out = self.mul_sparse(_sparse(x), _sparse(y))
        return _dense(out, self.dim)

    def e(self, i: int) -> Vec:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def zero(self) -> Vec:
        return (0,) * self.dim

    def left_matrix(self, x: Sequence) -> Mat:
        """Matrix of ``y -> x*y`` in the basis."""
        cols = [self.mul(x, self.e(j)) for j in range(self.dim)]
        return Mat.from_columns(cols, self.dim)

    @cached_property
    def left_mult_matrices(self) -> tuple[Mat, ...]:
        return tuple(self.left_matrix(self.e(i)) for i in range(self.dim))

    # -- validation ---------------------------------------------------------
    def check_unit(self) -> None:
        u = _sparse(self.unit)
        for i in range(self.dim):
            bi = {i: 1}
            if self.mul_sparse(u, bi) != bi or self.mul_sparse(bi, u) != bi:
                raise NoUnit(f"{self.name}: claimed unit is not a two-sided identity (fails on b_{i})")

    def check_associativity(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.mult.get((i, j), {})
                for k in range(n):
                    lhs: dict = {}
                    for l, c in ij.items():
                        d = self.mult.get((l, k))
                        if d:
                            _axpy(lhs, c, d)
                    rhs: dict = {}
                    for l, c in self.mult.get((j, k), {}).items():
                        d = self.mult.get((i, l))
                        if d:
                            _axpy(rhs, c, d)
                    if lhs != rhs:
                        raise NotAssociative((i, j, k))

    # -- derived algebras ---------------------------------------------------
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            mult = {(j, i): d for (i, j), d in self.mult.items()}
            name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
            op = Algebra(name, self.basis, self.unit, mult, check=False)
            op._opposite = self
            self._opposite = op
            if "idempotents" in self.__dict__:
                op.__dict__["idempotents"] = self.idempotents
        return self._opposite

    # -- radical --------------------------------------------------------------
    @cached_property
    def radical(self) -> Subspace:
        """Jacobson radical via the trace form: x with tr(L_{ax}) = 0 for all a."""
        n = self.dim
        tr = [sum(self.mult.get((k, j), {}).get(j, 0) for j in range(n)) for k in range(n)]
        rows = []
        for a in range(n):
            row = []
            for x in range(n):
                d = self.mult.get((a, x), {})
                row.append(sum(c * tr[k] for k, c in d.items()))
            rows.append(row)
        rad = Subspace(kernel_basis(Mat(rows, n)), n)
        self._check_radical(rad)
        return rad

    def _check_radical(self, rad: Subspace) -> None:
        for r in rad.basis:
            for i in range(self.dim):
                bi = self.e(i)
                if not rad.contains(self.mul(bi, r)) or not rad.contains(self.mul(r, bi)):
                    raise InternalInconsistency(f"{self.name}: trace radical is not an ideal")
        if self.radical_nilpotency_index(rad) is None:
            raise InternalInconsistency(f"{self.name}: trace radical is not nilpotent")

    def radical_nilpotency_index(self, rad: Subspace | None = None) -> int | None:
        """Smallest k with rad^k = 0, or None if the powers stabilise above 0."""
        rad = self.radical if rad is None else rad
        power = rad
        k = 1
        while power.dim:
            nxt = Subspace([self.mul(p, r) for p in power.basis for r in rad.basis], self.dim)
            if nxt.dim == power.dim:
                return None
            power = nxt
            k += 1
        return k

    @property
    def is_semisimple(self) -> bool:
        return self.radical.dim == 0

    # -- idempotents ----------------------------------------------------------
    def corner_space(self, e: Sequence) -> Subspace:
        return Subspace([self.mul(self.mul(e, self.e(i)), e) for i in range(self.dim)], self.dim)

    def corner_radical(self, e: Sequence, f: Sequence | None = None) -> Subspace:
        f = e if f is None else f
        return Subspace([self.mul(self.mul(f, r), e) for r in self.radical.basis], self.dim)

    @cached_property
    def idempotents(self) -> tuple[Vec, ...]:
        return tuple(_primitive_idempotents(self))

    @cached_property
    def vertex_classes(self) -> tuple[tuple[int, ...], ...]:
        """Partition of the primitive idempotents into isomorphism classes of A*e."""
        ids = self.idempotents
        rad = self.radical
        classes: list[list[int]] = []
        for i, ei in enumerate(ids):
            for cl in classes:
                ej = ids[cl[0]]
                if any(not rad.contains(self.mul(self.mul(ej, self.e(b)), ei)) for b in range(self.dim)):
                    cl.append(i)
                    break
            else:
                classes.append([i])
        return tuple(tuple(c) for c in classes)

    @property
    def vertex_reps(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.vertex_classes)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the algebra, as lists of class indices."""
        ids = self.idempotents
        ncl = len(self.vertex_classes)
        parent = list(range(ncl))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(ncl):
            for b in range(ncl):
                if a == b:
                    continue
                ea, eb = ids[self.vertex_reps[a]], ids[self.vertex_reps[b]]
                if any(any(self.mul(self.mul(ea, self.e(k)), eb)) for k in range(self.dim)):
                    parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for a in range(ncl):
            groups.setdefault(find(a), []).append(a)
        return tuple(tuple(g) for g in sorted(groups.values()))

    @cached_property
    def peirce_generators(self) -> tuple[tuple[int, int, Vec], ...]:
        """Elements ``(a, b, x)`` with ``x`` in ``e_a A e_b`` that, together with the
        primitive idempotents, generate the algebra."""
        ids = self.idempotents
        n = self.dim
        gens: list[tuple[int, int, Vec]] = []
        span = Subspace(list(ids), n)
        for l in range(n):
            bl = self.e(l)
            for a, ea in enumerate(ids):
                left = self.mul(ea, bl)
                if not any(left):
                    continue
                for b, eb in enumerate(ids):
                    c = self.mul(left, eb)
                    if not any(c) or span.contains(c):
                        continue
                    gens.append((a, b, c))
                    span = self._generated(list(ids), [g[2] for g in gens])
            if span.dim == n:
                break
        if span.dim != n:
            raise InternalInconsistency(f"{self.name}: Peirce components do not generate")
        return tuple(gens)

    def _generated(self, start: list, gens: list) -> Subspace:
        span = Subspace(start + gens, self.dim)
        while True:
            new = list(span.basis) + [self.mul(w, g) for w in span.basis for g in gens]
            nxt = Subspace(new, self.dim)
            if nxt.dim == span.dim:
                return span
            span = nxt


def _sparse(x: Sequence) -> dict:
    return {i: c for i, c in enumerate(x) if c}


def _dense(d: dict, n: int) -> Vec:
    out = [0] * n
    for k, v in d.items():
        out[k] = v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v
    return tuple(out)


# ---------------------------------------------------------------------------
# primitive idempotents


def _poly_eval(A: Algebra, coeffs: Sequence, x: Vec, e: Vec) -> Vec:
    """Evaluate a polynomial (coefficients low to high) at ``x`` inside ``eAe``."""
    acc = tuple(0 for _ in range(A.dim))
    for c in reversed(coeffs):
        acc = A.mul(acc, x)
        if c:
            acc = A.mul(tuple(a + c * b for a, b in zip(acc, e)), e)
    return acc


def minimal_polynomial(A: Algebra, x: Vec, e: Vec, corner: Subspace) -> list:
    """Monic minimal polynomial of ``x`` in the corner algebra with unit ``e``."""
    powers = [e]
    while True:
        nxt = A.mul(powers[-1], x)
        cols = [corner.coords(p) for p in powers]
        M = Mat.from_columns(cols, corner.dim)
        try:
            c = solve(M, corner.coords(nxt))
        except NoSolution:
            powers.append(nxt)
            continue
        return [-ci for ci in c] + [1]


def _split_by(A: Algebra, x: Vec, e: Vec, corner: Subspace):
    import sympy

    t = sympy.Symbol("t")
    mu = minimal_polynomial(A, x, e, corner)
    poly = sympy.Poly([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(mu)], t, domain="QQ")
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f1, m1 = factors[0]
    g = f1 ** m1
    h = sympy.Poly(1, t, domain="QQ")
    for f, m in factors[1:]:
        h = h * f ** m
    s, _, one = sympy.gcdex(h, g)
    if one != 1:
        raise InternalInconsistency("coprime factors with nontrivial gcd")
    proj = s * h
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(proj.all_coeffs())]
    E = _poly_eval(A, coeffs, x, e)
    F = tuple(a - b for a, b in zip(e, E))
    if A.mul(E, E) != E or not any(E) or not any(F):
        raise InternalInconsistency("polynomial idempotent failed")
    return E, F


def _split_quaternion_like(A: Algebra, e: Vec, corner: Subspace):
    """Split a corner whose semisimple quotient is 4-dimensional and simple.

    Such a quotient is M_2(Q) or a division algebra.  Every composition factor
    of the corner is then the same 2-dimensional simple, so the reduced trace
    is ``T(x) = 2 tr(L_x) / dim``.  An isotropic vector of the reduced norm on
    trace-zero elements is nilpotent modulo the radical, and some element of
    its right ideal has nonzero trace, hence a reducible minimal polynomial.
    Returns None when the norm form is anisotropic (a division algebra).
    """
    import sympy
    from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

    c = corner.dim
    rad = A.corner_radical(e)
    reps: list[Vec] = []
    span = Subspace(list(rad.basis), A.dim)
    for b in corner.basis:
        if not span.contains(b):
            reps.append(b)
            span = Subspace(list(span.basis) + [b], A.dim)
    if len(reps) != 4:
        return None

    def trace(x):
        tr = sum(corner.coords(A.mul(x, b))[j] for j, b in enumerate(corner.basis))
        return Fraction(2 * tr, c)

    t = [trace(u) for u in reps]
    G = [[(t[i] * t[j] - trace(A.mul(reps[i], reps[j]))) / 2 for j in range(4)] for i in range(4)]
    W = kernel_basis(Mat([t], 4))
    H = [[sum(W[a][i] * G[i][j] * W[b][j] for i in range(4) for j in range(4)) for b in range(3)]
         for a in range(3)]
    null = kernel_basis(Mat(H, 3))
    if null:
        v = null[0]
    else:
        xs = sympy.symbols("x0:3", integer=True)
        den = lcm(*(Fraction(h).denominator for row in H for h in row))
        form = sum(int(H[a][b] * den) * xs[a] * xs[b] for a in range(3) for b in range(3))
        sol = diop_ternary_quadratic(sympy.expand(form))
        if sol is None or sol[0] is None:
            return None
        v = tuple(int(s) for s in sol)
    y = [sum(v[a] * W[a][i] for a in range(3)) for i in range(4)]
    x = tuple(sum(y[i] * reps[i][k] for i in range(4)) for k in range(A.dim))
    for b in corner.basis:
        z = A.mul(x, b)
        if trace(z):
            return _split_by(A, z, e, corner)
    return None


def _primitive_idempotents(A: Algebra) -> list[Vec]:
    rng = random.Random(20240613)
    work = [A.unit]
    done: list[Vec] = []
    while work:
        e = work.pop()
        corner = A.corner_space(e)
        top = corner.dim - A.corner_radical(e).dim
        if top == 1:
            done.append(e)
            continue
        if top < 1:
            raise InternalInconsistency("zero idempotent reached in splitting")
        split = None
        candidates = list(corner.basis)
        candidates += [tuple(a + b for a, b in zip(u, v))
                       for i, u in enumerate(corner.basis) for v in corner.basis[i + 1:]]
        for x in candidates:
            split = _split_by(A, x, e, corner)
            if split:
                break
        if split is None and top == 4:
            split = _split_quaternion_like(A, e, corner)
        tries = 0
        while split is None and tries < SPLIT_RETRIES:
            coeffs = [rng.randint(-9, 9) for _ in corner.basis]
            x = corner.vector(coeffs)
            split = _split_by(A, x, e, corner)
            tries += 1
        if split is None:
            raise NotSplit(f"{A.name}: could not split an idempotent with semisimple corner of dim {top}")
        work.extend(split)

    def key(v):
        first = next(i for i, c in enumerate(v) if c)
        return (first, tuple(-Fraction(c) for c in v))

    return sorted(done, key=key)


@dataclass(frozen=True)
class IdemSpec:
    element: Vec

    @classmethod
    def of(cls, algebra: Algebra, element: Sequence) -> "IdemSpec":
        el = tuple(element)
        if len(el) != algebra.dim or algebra.mul(el, el) != el:
            raise NotIdempotent(f"element is not idempotent in {algebra.name}")
        return cls(el)


# ---------------------------------------------------------------------------
# constructors


def product_algebra(a: Algebra, b: Algebra) -> Algebra:
    n = a.dim
    mult = dict(a.mult)
    for (i, j), d in b.mult.items():
        mult[(i + n, j + n)] = {k + n: c for k, c in d.items()}
    basis = [f"({x},0)" for x in a.basis] + [f"(0,{y})" for y in b.basis]
    return Algebra(f"{a.name} x {b.name}", basis, a.unit + b.unit, mult)


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    m = b.dim
    mult: dict = {}
    for (i, k), da in a.mult.items():
        for (j, l), db in b.mult.items():
            d = {}
            for p, ca in da.items():
                for q, cb in db.items():
                    d[p * m + q] = ca * cb
            mult[(i * m + j, k * m + l)] = d
    basis = [f"{x}(x){y}" for x in a.basis for y in b.basis]
    unit = tuple(x * y for x in a.unit for y in b.unit)
    return Algebra(f"{a.name} (x) {b.name}", basis, unit, mult)


@dataclass
class CornerAlgebra:
    """``eAe`` together with its embedding in ``A``."""

    algebra: Algebra
    ambient: Algebra
    idempotent: Vec
    embedding: Subspace  # basis vectors of eAe inside A

    def include(self, x: Sequence) -> Vec:
        return self.embedding.vector(x)

    def left_module_eA(self):
        """``eA`` as a left ``eAe``-module."""
        from .modules import Module

        A, e = self.ambient, self.idempotent
        eA = Subspace([A.mul(e, A.e(i)) for i in range(A.dim)], A.dim)
        action = []
        for b in self.embedding.basis:
            cols = [eA.coords(A.mul(b, v)) for v in eA.basis]
            action.append(Mat.from_columns(cols, eA.dim))
        return Module(self.algebra, eA.dim, action, name=f"e{A.name}")

    def left_module_Ae_over_opposite(self):
        """``Ae`` with ``eAe`` acting on the right, i.e. a left ``(eAe)^op``-module."""
        from .modules import Module

        A, e = self.ambient, self.idempotent
        Ae = Subspace([A.mul(A.e(i), e) for i in range(A.dim)], A.dim)
        action = []
        for b in self.embedding.basis:
            cols = [Ae.coords(A.mul(v, b)) for v in Ae.basis]
            action.append(Mat.from_columns(cols, Ae.dim))
        return Module(self.algebra.opposite(), Ae.dim, action, name=f"{A.name}e")


def corner_algebra(a: Algebra, e: IdemSpec | Sequence, name: str | None = None) -> CornerAlgebra:
    el = e.element if isinstance(e, IdemSpec) else tuple(e)
    IdemSpec.of(a, el)
    sub = a.corner_space(el)
    mult = {}
    for i, x in enumerate(sub.basis):
        for j, y in enumerate(sub.basis):
            c = sub.coords(a.mul(x, y))
            d = {l: v for l, v in enumerate(c) if v}
            if d:
                mult[(i, j)] = d
    unit = sub.coords(el)
    labels = [_label_of(a, v) for v in sub.basis]
    alg = Algebra(name or f"e({a.name})e", labels, unit, mult)
    return CornerAlgebra(alg, a, el, sub)


def _label_of(a: Algebra, v: Sequence) -> str:
    nz = [(i, c) for i, c in enumerate(v) if c]
    if len(nz) == 1 and nz[0][1] == 1:
        return a.basis[nz[0][0]]
    return " + ".join(f"{c}*{a.basis[i]}" for i, c in nz)


def morita_context_zero(a: Algebra, e: IdemSpec | Sequence, f: IdemSpec | Sequence) -> Algebra:
    """The matrix algebra [[A, N], [N, A]] with N = Ae (x) fA and zero pairings N x N -> A.

    The bimodule N is Ae (x) fA over the ground field; the condition fAe = 0
    makes N (x)_A N vanish, so the zero pairings are the only compatible ones.
    """
    ev = e.element if isinstance(e, IdemSpec) else tuple(e)
    fv = f.element if isinstance(f, IdemSpec) else tuple(f)
    if any(ev):
        IdemSpec.of(a, ev)
    if any(fv):
        IdemSpec.of(a, fv)
    n = a.dim
    for i in range(n):
        w = a.mul(a.mul(fv, a.e(i)), ev)
        if any(w):
            raise ContextNotZero(w)
    Ae = Subspace([a.mul(a.e(i), ev) for i in range(n)], n)
    fA = Subspace([a.mul(fv, a.e(i)) for i in range(n)], n)
    p, q = Ae.dim, fA.dim
    nd = p * q
    # layout: A (block 11), N (block 12), N (block 21), A (block 22)
    off = {"11": 0, "12": n, "21": n + nd, "22": n + 2 * nd}

    def left_on_N(i: int) -> dict:
        # b_i . (u_s (x) v_t) for every N basis index
        out = {}
        for s, u in enumerate(Ae.basis):
            cu = Ae.coords(a.mul(a.e(i), u))
            for t in range(q):
                d = {}
                for s2, c in enumerate(cu):
                    if c:
                        d[s2 * q + t] = c
                out[s * q + t] = d
        return out

    def right_on_N(j: int) -> dict:
        out = {}
        for t, v in enumerate(fA.basis):
            cv = fA.coords(a.mul(v, a.e(j)))
            for s in range(p):
                d = {}
                for t2, c in enumerate(cv):
                    if c:
                        d[s * q + t2] = c
                out[s * q + t] = d
        return out

    lefts = [left_on_N(i) for i in range(n)]
    rights = [right_on_N(j) for j in range(n)]
    mult: dict = {}
    for (i, j), d in a.mult.items():
        mult[(i, j)] = dict(d)
        mult[(off["22"] + i, off["22"] + j)] = {off["22"] + k: c for k, c in d.items()}
    for i in range(n):
        for idx in range(nd):
            # [[a,0],[0,0]] * [[0,m],[0,0]] = [[0, a.m],[0,0]]
            d = lefts[i][idx]
            if d:
                mult[(i, off["12"] + idx)] = {off["12"] + k: c for k, c in d.items()}
            # [[0,0],[0,a']] * [[0,0],[m',0]] = [[0,0],[a'.m',0]]
            if d:
                mult[(off["22"] + i, off["21"] + idx)] = {off["21"] + k: c for k, c in d.items()}
            # [[0,n],[0,0]] * [[0,0],[0,b']] = [[0, n.b'],[0,0]]
            r = rights[i][idx]
            if r:
                mult[(off["12"] + idx, off["22"] + i)] = {off["12"] + k: c for k, c in r.items()}
                # [[0,0],[n',0]] * [[b,0],[0,0]] = [[0,0],[n'.b,0]]
                mult[(off["21"] + idx, i)] = {off["21"] + k: c for k, c in r.items()}
    labels = ([f"{x}[11]" for x in a.basis]
              + [f"{_label_of(a, u)}(x){_label_of(a, v)}[12]" for u in Ae.basis for v in fA.basis]
              + [f"{_label_of(a, u)}(x){_label_of(a, v)}[21]" for u in Ae.basis for v in fA.basis]
              + [f"{x}[22]" for x in a.basis])
    unit = a.unit + (0,) * (2 * nd) + a.unit
    return Algebra(f"Lambda00({a.name})", labels, unit, mult)


def algebra_from_structure_constants(doc: dict) -> Algebra:
    """Build and validate an algebra from an ``AlgebraDoc`` of kind structure_constants."""
    from .io import parse_structure_constants

    return parse_structure_constants(doc)
