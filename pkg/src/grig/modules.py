"""Left modules over an :class:`~grig.algebra.Algebra`, given by action matrices.

Hom spaces are solved blockwise: a homomorphism must map ``e_k M`` into
``e_k N`` for every primitive idempotent ``e_k``, and it is enough to
intertwine the Peirce generators of the algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .algebra import Algebra
from .errors import (
    AlgebraMismatch,
    DecompositionInconclusive,
    InternalInconsistency,
    InvalidModule,
    IsoTestInconclusive,
    NotSplit,
)
from .linalg import Mat, Subspace, inverse, kernel_basis, lin_comb, rank, rank_of_vectors

ISO_RETRIES = 32


class Module:
    """A finite-dimensional left module: one ``dim x dim`` matrix per basis element."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Mat], name: str = "",
                 check: bool = True, proj_summands: tuple | None = None,
                 inj_summands: tuple | None = None):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)
        self.name = name
        # indices into algebra.idempotents when the module is built as a sum of A e_t / D(e_t A)
        self.proj_summands = proj_summands
        self.inj_summands = inj_summands
        if len(self.action) != algebra.dim:
            raise InvalidModule(f"need {algebra.dim} action matrices, got {len(self.action)}")
        for m in self.action:
            if m.shape != (dim, dim):
                raise InvalidModule(f"action matrix of shape {m.shape}, expected {(dim, dim)}")
        if check:
            self.validate()

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Module{label} dim={self.dim} over {self.algebra.name}>"

    def act(self, x: Sequence) -> Mat:
        """Matrix of the algebra element ``x``."""
        return lin_comb(x, self.action, (self.dim, self.dim))

    def validate(self) -> None:
        """Unit acts as the identity and the action is multiplicative."""
        A = self.algebra
        if self.act(A.unit) != Mat.identity(self.dim):
            raise InvalidModule("unit does not act as the identity")
        try:
            ids = A.idempotents
            left = [e for e in ids] + [g[2] for g in A.peirce_generators]
        except NotSplit:
            left = [A.e(i) for i in range(A.dim)]
        for x in left:
            X = self.act(x)
            for j in range(A.dim):
                if X @ self.action[j] != self.act(A.mul(x, A.e(j))):
                    raise InvalidModule("action is not multiplicative")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except InvalidModule:
            return False
        return True

    # -- idempotent-adapted coordinates -------------------------------------
    @cached_property
    def peirce(self) -> list[tuple[Subspace, Mat]]:
        """For each primitive idempotent: the subspace ``e_k M`` and the matrix
        sending a vector of M to its coordinates in ``e_k M``."""
        out = []
        for e in self.algebra.idempotents:
            E = self.act(e)
            sub = Subspace(E.columns(), self.dim)
            C = Mat([E.data[p] for p in sub.pivots], self.dim) if sub.dim else Mat.zeros(0, self.dim)
            out.append((sub, C))
        return out

    def vertex_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s, _ in self.peirce)

    # -- structure -------------------------------------------------------------
    @cached_property
    def radical_space(self) -> Subspace:
        vecs = []
        for r in self.algebra.radical.basis:
            R = self.act(r)
            vecs.extend(R.columns())
        return Subspace(vecs, self.dim)

    @cached_property
    def socle_space(self) -> Subspace:
        rads = [self.act(r) for r in self.algebra.radical.basis]
        if not rads:
            return Subspace([tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim)], self.dim)
        return Subspace(kernel_basis(Mat.vstack(rads, self.dim)), self.dim)

    def top_multiplicities(self) -> tuple[int, ...]:
        A = self.algebra
        out = []
        for r in A.vertex_reps:
            E = self.act(A.idempotents[r])
            d_all = rank(E)
            d_rad = rank_of_vectors([E.apply(v) for v in self.radical_space.basis], self.dim)
            out.append(d_all - d_rad)
        return tuple(out)

    def socle_multiplicities(self) -> tuple[int, ...]:
        A = self.algebra
        return tuple(
            rank_of_vectors([self.act(A.idempotents[r]).apply(v) for v in self.socle_space.basis], self.dim)
            for r in A.vertex_reps
        )

    def radical_layers(self) -> tuple[int, ...]:
        dims = []
        cur = Subspace([tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim)], self.dim)
        rads = [self.act(r) for r in self.algebra.radical.basis]
        while cur.dim:
            nxt = Subspace([R.apply(v) for R in rads for v in cur.basis], self.dim)
            dims.append(nxt.dim)
            if nxt.dim == cur.dim:
                break
            cur = nxt
        return tuple(dims)

    @cached_property
    def fingerprint(self) -> tuple:
        return (self.dim, self.vertex_dims(), self.top_multiplicities(),
                self.socle_multiplicities(), self.radical_layers())

    # -- projective bookkeeping -----------------------------------------------
    def proj_components(self, v: Sequence) -> list[tuple]:
        """Split a vector of a projective module into its algebra components."""
        if self.proj_summands is None:
            raise ValueError("module is not presented as a sum of A e_t")
        out = []
        off = 0
        for t in self.proj_summands:
            sub = left_ideal(self.algebra, t)
            out.append(sub.vector(v[off:off + sub.dim]))
            off += sub.dim
        return out

    def proj_generators(self) -> list[tuple]:
        """The vectors ``e_t`` of each summand, in the module's coordinates."""
        A = self.algebra
        gens = []
        off = 0
        for t in self.proj_summands:
            sub = left_ideal(A, t)
            v = [0] * self.dim
            for k, c in enumerate(sub.coords(A.idempotents[t])):
                v[off + k] = c
            gens.append(tuple(v))
            off += sub.dim
        return gens


@dataclass(frozen=True)
class ModMap:
    source: Module
    target: Module
    matrix: Mat

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError("map matrix has the wrong shape")

    def is_homomorphism(self) -> bool:
        return all(
            self.matrix @ a == b @ self.matrix
            for a, b in zip(self.source.action, self.target.action)
        )

    def compose(self, other: "ModMap") -> "ModMap":
        """``self o other``."""
        return ModMap(other.source, self.target, self.matrix @ other.matrix)

    @property
    def rank(self) -> int:
        return rank(self.matrix)


@dataclass
class DecompCert:
    module: Module
    summands: list[tuple[Module, int]]
    injections: list[list[Mat]] = field(default_factory=list)  # per summand, one map X -> M per copy

    def total_dim(self) -> int:
        return sum(X.dim * m for X, m in self.summands)

    def iso_matrix(self) -> Mat:
        """The map from the direct sum of the summands (with multiplicity) to the module."""
        cols = [inj for injs in self.injections for inj in injs]
        return Mat.hstack(cols) if cols else Mat.zeros(self.module.dim, 0)


# ---------------------------------------------------------------------------
# basic constructions


def _same_algebra(m: Module, n: Module) -> None:
    if m.algebra is not n.algebra:
        raise AlgebraMismatch(f"{m.algebra.name} vs {n.algebra.name}")


def regular_module(a: Algebra) -> Module:
    return Module(a, a.dim, a.left_mult_matrices, name=a.name, check=False,
                  proj_summands=None)


_LEFT_IDEALS: dict = {}


def left_ideal(a: Algebra, t: int) -> Subspace:
    """The subspace ``A e_t`` for the primitive idempotent with index t."""
    key = (id(a), t)
    hit = _LEFT_IDEALS.get(key)
    if hit is None or hit[0] is not a:
        e = a.idempotents[t]
        sub = Subspace([a.mul(a.e(i), e) for i in range(a.dim)], a.dim)
        hit = (a, sub)
        _LEFT_IDEALS[key] = hit
    return hit[1]


def _restrict_action(a: Algebra, sub: Subspace, ambient_action: Sequence[Mat]) -> list[Mat]:
    out = []
    B = sub.basis_matrix()
    for M in ambient_action:
        img = M @ B
        out.append(Mat([img.data[p] for p in sub.pivots], sub.dim) if sub.dim else Mat.zeros(0, 0))
    return out


def projective_module(a: Algebra, summands: Sequence[int]) -> Module:
    """``A e_{t_1} + ... + A e_{t_r}`` (indices into ``a.idempotents``)."""
    parts = []
    for t in summands:
        sub = left_ideal(a, t)
        parts.append(_restrict_action(a, sub, a.left_mult_matrices))
    if not parts:
        return zero_module(a)
    action = [Mat.block_diag([p[i] for p in parts]) for i in range(a.dim)]
    dim = sum(left_ideal(a, t).dim for t in summands)
    return Module(a, dim, action, name="+".join(f"P{t}" for t in summands), check=False,
                  proj_summands=tuple(summands))


def zero_module(a: Algebra) -> Module:
    return Module(a, 0, [Mat.zeros(0, 0)] * a.dim, name="0", check=False, proj_summands=(),
                  inj_summands=())


def projective_indecomposables(a: Algebra) -> list[Module]:
    return [projective_module(a, [r]) for r in a.vertex_reps]


def simple_modules(a: Algebra) -> list[Module]:
    out = []
    for P in projective_indecomposables(a):
        S, _ = quotient(P, P.radical_space.basis)
        out.append(S)
    return out


def injective_module(a: Algebra, summands: Sequence[int]) -> Module:
    """``D(e_{t_1} A) + ...``, realised as duals of projective right modules."""
    P = projective_module(a.opposite(), summands)
    D = dual_module(P)
    D.inj_summands = tuple(summands)
    return D


def injective_indecomposables(a: Algebra) -> list[Module]:
    return [injective_module(a, [r]) for r in a.vertex_reps]


def dual_module(m: Module) -> Module:
    """``Hom_Q(M, Q)`` as a left module over the opposite algebra (transposed action)."""
    return Module(m.algebra.opposite(), m.dim, [x.T for x in m.action], name=f"D({m.name})", check=False)


def direct_sum(mods: Sequence[Module]) -> Module:
    if not mods:
        raise ValueError("empty direct sum")
    a = mods[0].algebra
    for m in mods:
        _same_algebra(m, mods[0])
    action = [Mat.block_diag([m.action[i] for m in mods]) for i in range(a.dim)]
    ps = None
    if all(m.proj_summands is not None for m in mods):
        ps = tuple(t for m in mods for t in m.proj_summands)
    return Module(a, sum(m.dim for m in mods), action, name=" + ".join(m.name or "?" for m in mods),
                  check=False, proj_summands=ps)


def direct_sum_injections(mods: Sequence[Module]) -> list[Mat]:
    n = sum(m.dim for m in mods)
    out = []
    off = 0
    for m in mods:
        out.append(Mat([[1 if (i == off + j) else 0 for j in range(m.dim)] for i in range(n)], m.dim))
        off += m.dim
    return out


def submodule(m: Module, vectors: Sequence[Sequence], name: str = "") -> tuple[Module, ModMap]:
    """The submodule spanned by (invariant) vectors, with its inclusion."""
    sub = Subspace(vectors, m.dim)
    action = _restrict_action(m.algebra, sub, m.action)
    B = sub.basis_matrix()
    for M, X in zip(m.action, action):
        if M @ B != B @ X:
            raise InvalidModule("subspace is not a submodule")
    S = Module(m.algebra, sub.dim, action, name=name, check=False)
    return S, ModMap(S, m, B)


def quotient(m: Module, vectors: Sequence[Sequence], name: str = "") -> tuple[Module, ModMap]:
    """``M / U`` for the submodule spanned by vectors, with the projection."""
    sub = Subspace(vectors, m.dim)
    comp = sub.complement_indices()
    k = len(comp)
    # projection: v -> reduce(v) read at the complement positions
    proj_cols = []
    for j in range(m.dim):
        ej = [0] * m.dim
        ej[j] = 1
        r = sub.reduce(ej)
        proj_cols.append(tuple(r[c] for c in comp))
    Pi = Mat.from_columns(proj_cols, k)
    action = []
    for M in m.action:
        # image of complement basis vector e_c under M, then projected
        action.append(Mat.from_columns([Pi.apply(M.col(c)) for c in comp], k) if k else Mat.zeros(0, 0))
    Q = Module(m.algebra, k, action, name=name, check=False)
    return Q, ModMap(m, Q, Pi)


# ---------------------------------------------------------------------------
# Hom spaces


def hom_space(m: Module, n: Module) -> list[ModMap]:
    """Basis of ``Hom_A(M, N)``."""
    _same_algebra(m, n)
    if m.dim == 0 or n.dim == 0:
        return []
    A = m.algebra
    pm, pn = m.peirce, n.peirce
    # unknown blocks f_k : e_k M -> e_k N
    offsets = []
    total = 0
    for (sm, _), (sn, _) in zip(pm, pn):
        offsets.append(total)
        total += sm.dim * sn.dim
    if total == 0:
        return []
    rows = []
    for a, b, g in A.peirce_generators:
        # g in e_a A e_b maps e_b M -> e_a M; need f_a G^M = G^N f_b
        sma, Cma = pm[a]
        smb, _ = pm[b]
        sna, Cna = pn[a]
        snb, _ = pn[b]
        if smb.dim == 0 or sna.dim == 0:
            continue
        GM = Cma @ (m.act(g) @ smb.basis_matrix()) if sma.dim else None
        GN = Cna @ (n.act(g) @ snb.basis_matrix()) if snb.dim else None
        da, db = sma.dim, snb.dim
        for i in range(sna.dim):
            for j in range(smb.dim):
                row = [0] * total
                if GM is not None:
                    # (f_a GM)[i, j] = sum_t f_a[i, t] GM[t, j]
                    for t in range(da):
                        c = GM.data[t][j]
                        if c:
                            row[offsets[a] + i * da + t] += c
                if GN is not None:
                    # (GN f_b)[i, j] = sum_s GN[i, s] f_b[s, j]
                    dbm = smb.dim
                    for s in range(db):
                        c = GN.data[i][s]
                        if c:
                            row[offsets[b] + s * dbm + j] -= c
                if any(row):
                    rows.append(row)
    sol = kernel_basis(Mat(rows, total)) if rows else [
        tuple(1 if i == j else 0 for j in range(total)) for i in range(total)]
    out = []
    for v in sol:
        acc = Mat.zeros(n.dim, m.dim)
        for k, ((sm, Cm), (sn, _)) in enumerate(zip(pm, pn)):
            if sm.dim == 0 or sn.dim == 0:
                continue
            blk = Mat.from_flat(sn.dim, sm.dim, v[offsets[k]:offsets[k] + sm.dim * sn.dim])
            if blk.is_zero():
                continue
            acc = acc + sn.basis_matrix() @ blk @ Cm
        out.append(ModMap(m, n, acc))
    return out


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


def flatten(M: Mat) -> tuple:
    return M.entries


@dataclass
class EndoAlgebra:
    """``End_A(M)`` with product ``f . g = f o g``."""

    algebra: Algebra
    module: Module
    maps: list[Mat]
    _space: Subspace

    def element_to_map(self, x: Sequence) -> Mat:
        return lin_comb(x, self.maps, (self.module.dim, self.module.dim))

    def map_to_element(self, f: Mat) -> tuple:
        v = flatten(f)
        if not self._space.contains(v):
            raise ValueError("not an endomorphism")
        return self._space.coords(v)

    def hom_functor(self, x: Module, name: str = "") -> Module:
        """``Hom_A(M, X)`` as a left module over ``End_A(M)^op`` (precomposition)."""
        _same_algebra(self.module, x)
        H = [h.matrix for h in hom_space(self.module, x)]
        sub = Subspace([flatten(h) for h in H], self.module.dim * x.dim)
        basis = [Mat.from_flat(x.dim, self.module.dim, b) for b in sub.basis]
        action = []
        for g in self.maps:
            cols = [sub.coords(flatten(h @ g)) for h in basis]
            action.append(Mat.from_columns(cols, sub.dim))
        return Module(self.algebra.opposite(), sub.dim, action, name=name or f"Hom({self.module.name},{x.name})",
                      check=False)

    def hom_functor_map(self, f: ModMap, source: Module, target: Module) -> ModMap:
        """``Hom_A(M, f)`` between modules previously built by :meth:`hom_functor`."""
        Hs = [h.matrix for h in hom_space(self.module, f.source)]
        Ht = [h.matrix for h in hom_space(self.module, f.target)]
        ss = Subspace([flatten(h) for h in Hs], self.module.dim * f.source.dim)
        st = Subspace([flatten(h) for h in Ht], self.module.dim * f.target.dim)
        cols = [st.coords(flatten(f.matrix @ Mat.from_flat(f.source.dim, self.module.dim, b))) for b in ss.basis]
        return ModMap(source, target, Mat.from_columns(cols, st.dim))


def endomorphism_algebra(m: Module, name: str | None = None, check: bool = True) -> EndoAlgebra:
    H = [h.matrix for h in hom_space(m, m)]
    n = m.dim
    sub = Subspace([flatten(h) for h in H], n * n)
    maps = [Mat.from_flat(n, n, b) for b in sub.basis]
    mult = {}
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            c = sub.coords(flatten(f @ g))
            d = {k: v for k, v in enumerate(c) if v}
            if d:
                mult[(i, j)] = d
    unit = sub.coords(flatten(Mat.identity(n)))
    labels = [f"f{i}" for i in range(len(maps))]
    alg = Algebra(name or f"End({m.name or 'M'})", labels, unit, mult, check=check)
    return EndoAlgebra(alg, m, maps, sub)


# ---------------------------------------------------------------------------
# covers, envelopes, syzygies


def is_invertible(M: Mat) -> bool:
    return M.nrows == M.ncols and rank(M) == M.nrows


def projective_cover(m: Module) -> ModMap:
    """Minimal surjection ``P -> M`` from a sum of indecomposable projectives."""
    A = m.algebra
    if m.dim == 0:
        return ModMap(zero_module(A), m, Mat.zeros(0, 0))
    rad = m.radical_space
    gens = []
    summands = []
    for r in A.vertex_reps:
        sub, _ = m.peirce[r]
        E = m.act(A.idempotents[r])
        span = Subspace([E.apply(v) for v in rad.basis], m.dim)
        chosen = list(span.basis)
        cur = span
        for v in sub.basis:
            if not cur.contains(v):
                gens.append(v)
                summands.append(r)
                chosen.append(v)
                cur = Subspace(chosen, m.dim)
    P = projective_module(A, summands)
    cols = []
    for t, g in zip(summands, gens):
        sub = left_ideal(A, t)
        for b in sub.basis:
            cols.append(m.act(b).apply(g))
    pi = Mat.from_columns(cols, m.dim) if cols else Mat.zeros(m.dim, 0)
    if rank(pi) != m.dim:
        raise InternalInconsistency("projective cover is not surjective")
    cover = ModMap(P, m, pi)
    ker = Subspace(kernel_basis(pi), P.dim)
    radP = P.radical_space
    if any(not radP.contains(v) for v in ker.basis):
        raise InternalInconsistency("projective cover kernel not in the radical")
    return cover


def injective_envelope(m: Module) -> ModMap:
    """Minimal injection ``M -> I``, dual to the projective cover of ``D M``."""
    dm = dual_module(m)
    cov = projective_cover(dm)
    I = dual_module(cov.source)
    I.inj_summands = cov.source.proj_summands
    iota = ModMap(m, I, cov.matrix.T)
    soc = I.socle_space
    img = Subspace(iota.matrix.columns(), I.dim)
    if any(not img.contains(v) for v in soc.basis):
        raise InternalInconsistency("injective envelope is not essential")
    return iota


def syzygy_with_inclusion(m: Module) -> tuple[ModMap, Module, ModMap]:
    """Returns ``(cover P -> M, Omega M, inclusion Omega M -> P)``."""
    cov = projective_cover(m)
    K, inc = submodule(cov.source, kernel_basis(cov.matrix), name=f"Omega({m.name})")
    return cov, K, inc


def syzygy(m: Module) -> Module:
    return syzygy_with_inclusion(m)[1]


def cosyzygy_with_projection(m: Module) -> tuple[ModMap, Module, ModMap]:
    """Returns ``(envelope M -> I, Omega^-1 M, projection I -> Omega^-1 M)``."""
    env = injective_envelope(m)
    C, pr = quotient(env.target, env.matrix.columns(), name=f"Omega^-1({m.name})")
    return env, C, pr


def cosyzygy(m: Module) -> Module:
    return cosyzygy_with_projection(m)[1]


def is_projective(m: Module) -> bool:
    return projective_cover(m).source.dim == m.dim


def is_injective(m: Module) -> bool:
    return injective_envelope(m).target.dim == m.dim


# ---------------------------------------------------------------------------
# isomorphism and decomposition


def _indecomposable_iso(x: Module, y: Module) -> Mat | None:
    """Exact test for modules with local endomorphism rings."""
    if x.dim != y.dim:
        return None
    H = hom_space(x, y)
    G = hom_space(y, x)
    for f in H:
        for g in G:
            if is_invertible(g.matrix @ f.matrix):
                return f.matrix
    return None


def is_isomorphic(m: Module, n: Module, indecomposable: bool = False) -> Mat | None:
    """An explicit isomorphism ``M -> N``, or None when the modules are not isomorphic."""
    _same_algebra(m, n)
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return Mat.zeros(0, 0)
    if m.fingerprint != n.fingerprint:
        return None
    if indecomposable:
        return _indecomposable_iso(m, n)
    H = [h.matrix for h in hom_space(m, n)]
    if not H or len(H) != len(hom_space(n, m)):
        return None
    for f in H:
        if is_invertible(f):
            return f
    rng = random.Random(len(H) * 7919 + m.dim)
    for _ in range(ISO_RETRIES):
        coeffs = [rng.randint(-(1 << 20), 1 << 20) for _ in H]
        f = lin_comb(coeffs, H, (n.dim, m.dim))
        if is_invertible(f):
            return f
    try:
        dm = indecomposable_summands(m)
        dn = indecomposable_summands(n)
    except DecompositionInconclusive as exc:
        raise IsoTestInconclusive(str(exc)) from exc
    return _iso_from_decompositions(dm, dn)


def _iso_from_decompositions(dm: DecompCert, dn: DecompCert) -> Mat | None:
    if len(dm.summands) != len(dn.summands):
        return None
    used = set()
    pairs = []
    for i, (X, mx) in enumerate(dm.summands):
        for j, (Y, my) in enumerate(dn.summands):
            if j in used or mx != my:
                continue
            phi = _indecomposable_iso(X, Y)
            if phi is not None:
                used.add(j)
                pairs.append((i, j, phi))
                break
        else:
            return None
    # M <- sum X^mx  ~  sum Y^my -> N
    cols_m = []
    cols_n = []
    for i, j, phi in pairs:
        for inj_x, inj_y in zip(dm.injections[i], dn.injections[j]):
            cols_m.append(inj_x)
            cols_n.append(inj_y @ phi)
    Phi_m = Mat.hstack(cols_m)
    Phi_n = Mat.hstack(cols_n)
    return Phi_n @ inverse(Phi_m)


def indecomposable_summands(m: Module) -> DecompCert:
    """Krull-Schmidt decomposition via primitive idempotents of ``End(M)``."""
    if m.dim == 0:
        return DecompCert(m, [], [])
    E = endomorphism_algebra(m, check=False)
    try:
        idems = E.algebra.idempotents
    except NotSplit as exc:
        raise DecompositionInconclusive(f"End({m.name}) does not split: {exc}") from exc
    parts: list[tuple[Module, Mat]] = []
    for pi in idems:
        P = E.element_to_map(pi)
        X, inc = submodule(m, P.columns())
        parts.append((X, inc.matrix))
    summands: list[tuple[Module, int]] = []
    injections: list[list[Mat]] = []
    for X, inc in parts:
        for k, (Y, _) in enumerate(summands):
            phi = _indecomposable_iso(Y, X)
            if phi is not None:
                summands[k] = (Y, summands[k][1] + 1)
                injections[k].append(inc @ phi)
                break
        else:
            summands.append((X, 1))
            injections.append([inc])
    cert = DecompCert(m, summands, injections)
    if cert.total_dim() != m.dim or not is_invertible(cert.iso_matrix()):
        raise InternalInconsistency("decomposition does not reassemble the module")
    return cert


def is_indecomposable(m: Module) -> bool:
    if m.dim == 0:
        return False
    E = endomorphism_algebra(m, check=False)
    return E.algebra.dim - E.algebra.radical.dim == 1


# ---------------------------------------------------------------------------
# modules over constructed algebras


def external_tensor(x: Module, y: Module, tensor: Algebra) -> Module:
    """``X (x) Y`` over ``A (x) B`` (tensor built by :func:`tensor_algebra`)."""
    if tensor.dim != x.algebra.dim * y.algebra.dim:
        raise AlgebraMismatch("tensor algebra does not match the factors")
    action = [ax.kron(ay) for ax in x.action for ay in y.action]
    return Module(tensor, x.dim * y.dim, action, name=f"{x.name}(x){y.name}", check=False)


def extend_to_product(x: Module, product: Algebra, side: int) -> Module:
    """A module over one factor, viewed over ``A x B`` with the other factor acting by 0."""
    zero = Mat.zeros(x.dim, x.dim)
    k = x.algebra.dim
    other = product.dim - k
    if side == 0:
        action = list(x.action) + [zero] * other
    else:
        action = [zero] * other + list(x.action)
    return Module(product, x.dim, action, name=f"{x.name}[{side}]", check=False)
