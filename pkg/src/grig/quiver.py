"""Bound quivers and their path algebras.

Orientation: paths and relation strings are written left to right in
diagram order, so ``"a*b"`` is the path "a, then b".  The algebra product is
composition, ``x . y`` = "first y, then x"; hence ``"a*b"`` equals
``b . a`` in the algebra, ``e_v`` fixes paths ending at ``v`` from the
left, and a left module is a covariant representation (the arrow ``a: i -> j``
maps ``e_i M`` to ``e_j M``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra
from .errors import MalformedDoc, NotAdmissible
from .linalg import Subspace, to_rat

Path = tuple  # (start_vertex, (arrow names...))


@dataclass
class BoundQuiver:
    vertices: list[str]
    arrows: list[tuple[str, str, str]]  # (name, src, tgt)
    relations: list[dict] = field(default_factory=list)  # path -> coefficient
    max_path_length: int = 2

    def __post_init__(self):
        self.vertices = [str(v) for v in self.vertices]
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise MalformedDoc("duplicate arrow names")
        if set(names) & set(self.vertices):
            raise MalformedDoc("arrow and vertex names overlap")
        for name, s, t in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise MalformedDoc(f"arrow {name} has unknown endpoint")
        rels = []
        for r in self.relations:
            rels.append(parse_relation(r, self) if isinstance(r, str) else dict(r))
        self.relations = rels
        for r in self.relations:
            ends = {(self.source(p), self.target(p)) for p in r}
            if len(ends) > 1:
                raise MalformedDoc(f"relation {r} mixes non-parallel paths")
        if self.max_path_length < 1:
            raise MalformedDoc("max_path_length must be positive")

    @property
    def arrow_map(self) -> dict:
        return {a[0]: (a[1], a[2]) for a in self.arrows}

    def source(self, p: Path) -> str:
        return p[0]

    def target(self, p: Path) -> str:
        v, arrows = p
        return self.arrow_map[arrows[-1]][1] if arrows else v

    def paths(self, max_len: int) -> list[Path]:
        """All paths of length <= max_len, by length then discovery order."""
        am = self.arrow_map
        layer = [(v, ()) for v in self.vertices]
        out = list(layer)
        for _ in range(max_len):
            nxt = []
            for p in layer:
                t = self.target(p)
                for name, s, _t in self.arrows:
                    if s == t:
                        nxt.append((p[0], p[1] + (name,)))
            out.extend(nxt)
            layer = nxt
        del am
        return out

    def label(self, p: Path) -> str:
        v, arrows = p
        return "*".join(arrows) if arrows else f"e_{v}"

    def concat(self, p: Path, q: Path) -> Path | None:
        """p then q, or None when not composable."""
        if self.target(p) != q[0]:
            return None
        return (p[0], p[1] + q[1])


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_relation(text: str, q: BoundQuiver) -> dict:
    """Parse e.g. ``"a*b - 1/2 c*d"`` into {path: coefficient}."""
    am = q.arrow_map
    out: dict = {}
    s = text.strip()
    if not s:
        raise MalformedDoc("empty relation")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise MalformedDoc(f"cannot parse relation {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        names = []
        for tok in re.split(r"[\s*]+", m.group(2).strip()):
            if not tok:
                continue
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
            elif tok in am:
                names.append(tok)
            else:
                raise MalformedDoc(f"unknown arrow {tok!r} in relation {text!r}")
        if not names:
            raise MalformedDoc(f"relation term without a path in {text!r}")
        for x, y in zip(names, names[1:]):
            if am[x][1] != am[y][0]:
                raise MalformedDoc(f"{x}*{y} is not a path")
        path = (am[names[0]][0], tuple(names))
        out[path] = out.get(path, 0) + coeff
        pos = m.end()
    return {p: to_rat(c) for p, c in out.items() if c}


def algebra_from_bound_quiver(q: BoundQuiver, name: str = "kQ/I") -> Algebra:
    L = q.max_path_length
    paths = q.paths(L)
    # columns ordered longest first, so relation pivots land on long paths
    cols = sorted(range(len(paths)), key=lambda i: (-len(paths[i][1]), i))
    colpos = {paths[i]: c for c, i in enumerate(cols)}
    ncol = len(paths)

    gens = []
    for rel in q.relations:
        rp = next(iter(rel))
        s, t = q.source(rp), q.target(rp)
        for u in paths:
            if q.target(u) != s:
                continue
            for v in paths:
                if v[0] != t:
                    continue
                vec = [0] * ncol
                hit = False
                for p, c in rel.items():
                    w = q.concat(q.concat(u, p), v)
                    if len(w[1]) <= L:
                        vec[colpos[w]] += c
                        hit = True
                if hit and any(vec):
                    gens.append(vec)
    ideal = Subspace(gens, ncol)
    for p in paths:
        if len(p[1]) == L:
            vec = [0] * ncol
            vec[colpos[p]] = 1
            if not ideal.contains(vec):
                raise NotAdmissible(f"path {q.label(p)} of length {L} is not in the relation ideal")
    pivset = set(ideal.pivots)
    basis_paths = [p for p in paths if colpos[p] not in pivset]
    index = {p: k for k, p in enumerate(basis_paths)}

    def normal_form(p: Path) -> dict:
        if len(p[1]) > L:
            return {}
        vec = [0] * ncol
        vec[colpos[p]] = 1
        r = ideal.reduce(vec)
        out = {}
        for bp in basis_paths:
            c = r[colpos[bp]]
            if c:
                out[index[bp]] = c
        return out

    mult = {}
    for i, x in enumerate(basis_paths):
        for j, y in enumerate(basis_paths):
            w = q.concat(y, x)  # x . y = first y, then x
            if w is None:
                continue
            d = normal_form(w)
            if d:
                mult[(i, j)] = d
    unit = tuple(1 if not p[1] else 0 for p in basis_paths)
    return Algebra(name, [q.label(p) for p in basis_paths], unit, mult, presentation=q)


def nakayama_quiver(n: int, l: int) -> BoundQuiver:
    """Cyclic quiver 1 -> 2 -> ... -> n -> 1 with all paths of length l as relations."""
    verts = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i), str(i % n + 1)) for i in range(1, n + 1)]
    rels = []
    for i in range(1, n + 1):
        names = [f"a{(i - 1 + k) % n + 1}" for k in range(l)]
        rels.append("*".join(names))
    return BoundQuiver(verts, arrows, rels, l)


def nakayama(n: int, l: int = 2) -> Algebra:
    return algebra_from_bound_quiver(nakayama_quiver(n, l), name=f"N({n},{l})")


def linear_a2() -> Algebra:
    """Upper triangular 2x2 matrices over Q, as the path algebra of 1 -> 2."""
    q = BoundQuiver(["1", "2"], [("a", "1", "2")], [], 2)
    return algebra_from_bound_quiver(q, name="T2(Q)")


def ground_field() -> Algebra:
    q = BoundQuiver(["1"], [], [], 1)
    return algebra_from_bound_quiver(q, name="Q")


def dual_numbers() -> Algebra:
    return Algebra("D2", ["1", "x"], (1, 0), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
