import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grig.algebra import (
    Algebra,
    IdemSpec,
    corner_algebra,
    morita_context_zero,
    product_algebra,
    tensor_algebra,
)
from grig.errors import (
    ContextNotZero,
    MalformedDoc,
    NoUnit,
    NotAdmissible,
    NotAssociative,
    NotIdempotent,
    NotSplit,
)
from grig.io import algebra_from_doc
from grig.linalg import Mat, Subspace
from grig.modules import direct_sum, endomorphism_algebra, regular_module, simple_modules
from grig.quiver import BoundQuiver, algebra_from_bound_quiver, dual_numbers, linear_a2, nakayama
from oracles import cyclic_paths, naive_rank

CORPUS = ["Q", "D2", "T2(Q)", "N(1,2)", "N(2,2)", "N(3,2)", "N(4,2)"]


def check_structure(a: Algebra) -> None:
    """Radical nilpotency and completeness of the primitive idempotents."""
    rad = a.radical
    ids = a.idempotents
    # complete orthogonal family summing to 1
    total = [sum(e[k] for e in ids) for k in range(a.dim)]
    assert tuple(total) == tuple(a.unit)
    for i, e in enumerate(ids):
        for j, f in enumerate(ids):
            prod = a.mul(e, f)
            assert prod == (e if i == j else a.zero())
    # each corner e A e is local: e A e / e J e is one-dimensional
    for e in ids:
        corner = a.corner_space(e)
        assert corner.dim - a.corner_radical(e).dim == 1
    # rad^k = 0 for the reported index and not before
    k = a.radical_nilpotency_index()
    power = Subspace(rad.basis, a.dim)
    for step in range(1, k):
        assert power.dim > 0, step
        power = Subspace([a.mul(x, r) for x in power.basis for r in rad.basis], a.dim)
    assert power.dim == 0
    # the radical is an ideal and A/J is a product of full matrix algebras over Q
    for x in rad.basis:
        for i in range(a.dim):
            assert rad.contains(a.mul(a.e(i), x)) and rad.contains(a.mul(x, a.e(i)))
    assert a.dim - rad.dim == sum(len(c) ** 2 for c in a.vertex_classes)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_structure(corpus, name):
    check_structure(corpus(name))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("l", [2, 3])
def test_nakayama_dimension_by_path_enumeration(n, l):
    a = nakayama(n, l)
    assert a.dim == len(cyclic_paths(n, l))
    assert a.radical.dim == len([p for p in cyclic_paths(n, l) if p[1] > 0])
    assert a.radical_nilpotency_index() == l
    assert len(a.idempotents) == n


@pytest.mark.parametrize("name,dim,simples", [("Q", 1, 1), ("D2", 2, 1), ("T2(Q)", 3, 2), ("N(3,2)", 6, 3)])
def test_corpus_dimensions(corpus, name, dim, simples):
    a = corpus(name)
    assert a.dim == dim
    assert len(simple_modules(a)) == simples


@pytest.mark.parametrize("name", CORPUS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_associativity_on_random_elements(corpus, name, data):
    a = corpus(name)
    el = st.lists(st.integers(-3, 3), min_size=a.dim, max_size=a.dim)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z))
    assert a.mul(a.unit, x) == tuple(x) == a.mul(x, a.unit)


@pytest.mark.parametrize("name", CORPUS)
def test_opposite_reverses_products(corpus, name):
    a = corpus(name)
    op = a.opposite()
    assert op.opposite() is a
    for i in range(a.dim):
        for j in range(a.dim):
            assert op.mul(a.e(i), a.e(j)) == a.mul(a.e(j), a.e(i))


def test_path_orientation():
    # "a*b" is the path a then b, which is b . a in the algebra
    q = BoundQuiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], [], 3)
    alg = algebra_from_bound_quiver(q)
    idx = {name: k for k, name in enumerate(alg.basis)}
    ab = alg.e(idx["a*b"])
    assert alg.mul(alg.e(idx["b"]), alg.e(idx["a"])) == ab
    assert not any(alg.mul(alg.e(idx["a"]), alg.e(idx["b"])))
    # e_v fixes paths ending at v from the left
    assert alg.mul(alg.e(idx["e_3"]), ab) == ab
    assert alg.mul(ab, alg.e(idx["e_1"])) == ab


def test_relation_with_coefficients():
    q = BoundQuiver(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")],
                    ["a*c - 1/2 b*c"], 3)
    alg = algebra_from_bound_quiver(q)
    # three vertices, three arrows, two length-2 paths glued by the relation
    assert alg.dim == 3 + 3 + 1
    idx = {name: k for k, name in enumerate(alg.basis)}
    ac = alg.mul(alg.e(idx["c"]), alg.e(idx["a"]))
    bc = alg.mul(alg.e(idx["c"]), alg.e(idx["b"]))
    assert tuple(2 * x for x in ac) == bc


def test_not_admissible():
    q = BoundQuiver(["1"], [("x", "1", "1")], [], 2)
    with pytest.raises(NotAdmissible):
        algebra_from_bound_quiver(q)


@pytest.mark.parametrize("rel", ["a*q", "a*a", "2", ""])
def test_bad_relations_rejected(rel):
    with pytest.raises(MalformedDoc):
        BoundQuiver(["1", "2"], [("a", "1", "2")], [rel], 2)


def test_structure_constant_errors():
    base = {"kind": "structure_constants", "name": "X", "dim": 2, "unit": ["1", "0"],
            "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}
    assert algebra_from_doc(base).dim == 2
    with pytest.raises(NoUnit):
        algebra_from_doc(dict(base, unit=["0", "1"]))
    golden = dict(base, mult=base["mult"] + [[1, 1, 1, "1"], [1, 1, 0, "1"]])
    assert algebra_from_doc(golden).dim == 2  # Q[x]/(x^2 - x - 1)
    nonassoc = {"kind": "structure_constants", "name": "Y", "dim": 3, "unit": ["1", "0", "0"],
                "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [0, 2, 2, "1"], [2, 0, 2, "1"],
                         [1, 1, 2, "1"], [1, 2, 1, "1"]]}
    with pytest.raises(NotAssociative):
        algebra_from_doc(nonassoc)
    with pytest.raises(MalformedDoc):
        algebra_from_doc(dict(base, mult=[[0, 0, 5, "1"]]))


def test_product_and_tensor_dimensions(corpus):
    a, b = corpus("N(3,2)"), corpus("D2")
    p = product_algebra(a, b)
    t = tensor_algebra(a, b)
    assert p.dim == a.dim + b.dim
    assert t.dim == a.dim * b.dim
    assert len(p.idempotents) == 4 and len(p.blocks) == 2
    assert len(t.idempotents) == 3 and len(t.blocks) == 1
    check_structure(p)
    check_structure(t)


def test_tensor_with_ground_field(corpus):
    t = tensor_algebra(corpus("Q"), corpus("N(3,2)"))
    assert t.dim == 6
    check_structure(t)


def test_corner_algebra(corpus):
    a = corpus("N(3,2)")
    e1 = a.idempotents[0]
    c = corner_algebra(a, e1)
    assert c.algebra.dim == 1
    whole = corner_algebra(a, a.unit)
    assert whole.algebra.dim == a.dim
    check_structure(whole.algebra)
    two = tuple(x + y for x, y in zip(a.idempotents[0], a.idempotents[1]))
    c2 = corner_algebra(a, two)
    assert c2.algebra.dim == 3  # e1, e2 and the arrow between them
    check_structure(c2.algebra)


def test_not_idempotent(corpus):
    a = corpus("D2")
    with pytest.raises(NotIdempotent):
        IdemSpec.of(a, (2, 0))
    with pytest.raises(NotIdempotent):
        corner_algebra(a, (0, 1))


def test_morita_context(corpus):
    a = corpus("N(3,2)")
    e1, e3 = a.idempotents[0], a.idempotents[2]
    # f A e = e3 A e1 must vanish
    assert not any(any(a.mul(a.mul(e3, a.e(i)), e1)) for i in range(a.dim))
    lam = morita_context_zero(a, e1, e3)
    ae = Subspace([a.mul(a.e(i), e1) for i in range(a.dim)], a.dim).dim
    fa = Subspace([a.mul(e3, a.e(i)) for i in range(a.dim)], a.dim).dim
    assert lam.dim == 2 * a.dim + 2 * ae * fa
    check_structure(lam)
    zero = morita_context_zero(a, a.zero(), a.zero())
    assert zero.dim == 2 * a.dim
    assert len(zero.blocks) == 2


def test_morita_context_not_zero(corpus):
    a = corpus("D2")
    with pytest.raises(ContextNotZero):
        morita_context_zero(a, a.unit, a.unit)


def test_endomorphism_algebra_structure(corpus):
    a = corpus("N(3,2)")
    m = direct_sum([regular_module(a), simple_modules(a)[0]])
    e = endomorphism_algebra(m)
    check_structure(e.algebra)
    check_structure(e.algebra.opposite())


def test_builtin_constructors():
    assert dual_numbers().radical.dim == 1
    t = linear_a2()
    assert t.dim == 3 and t.radical.dim == 1
    assert naive_rank([list(x) for x in t.radical.basis], 3) == 1


def algebra_of_matrices(name, mats):
    """Structure constants of the span of the given matrices, in exactly that basis."""
    from grig.linalg import solve

    n = mats[0].nrows
    cols = Mat.from_columns([m.entries for m in mats], n * n)
    mult = {}
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            c = solve(cols, (x @ y).entries)
            d = {k: v for k, v in enumerate(c) if v}
            if d:
                mult[(i, j)] = d
    unit = solve(cols, Mat.identity(n).entries)
    return Algebra(name, [f"b{i}" for i in range(len(mats))], unit, mult)


def test_matrix_algebra_in_a_basis_without_split_elements():
    # every basis element and pairwise sum has an irreducible quadratic minimal polynomial
    mats = [Mat([[0, 1], [-2, 0]], 2), Mat([[1, 1], [-1, 0]], 2), Mat([[0, 3], [-1, 1]], 2),
            Mat([[2, 1], [-5, 0]], 2)]
    a = algebra_of_matrices("M2", mats)
    assert len(a.idempotents) == 2
    check_structure(a)


def test_quaternions_do_not_split():
    one = Mat.identity(4)
    i = Mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], 4)
    j = Mat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], 4)
    h = algebra_of_matrices("H", [one, i, j, i @ j])
    with pytest.raises(NotSplit):
        h.idempotents
