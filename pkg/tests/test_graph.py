import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from prymatroid.graph import (
    GraphError,
    HalfEdgeGraph,
    betti1,
    boundary_matrix,
    canonical_orientation,
    component_count,
    connected_components,
    contract_edges,
    cycle_basis,
    cycle_space,
    delete_edges,
    genus,
    induced_subgraph,
    is_bridge,
    is_connected,
    spanning_tree,
)
from prymatroid.linalg import hnf_basis, int_kernel, matvec

TRIANGLE = HalfEdgeGraph(["a", "b", "c"], {"x": ("a", "b"), "y": ("b", "c"), "z": ("c", "a")})
THETA = HalfEdgeGraph(["u", "v"], {"a": ("u", "v"), "b": ("u", "v"), "c": ("u", "v")})
DUMBBELL = HalfEdgeGraph(["u", "v"], {"l1": ("u", "u"), "b": ("u", "v"), "l2": ("v", "v")})
TREE = HalfEdgeGraph(["a", "b", "c", "d"], {"x": ("a", "b"), "y": ("b", "c"), "z": ("b", "d")})
LOOP = HalfEdgeGraph(["u"], {"e": ("u", "u")})


def test_genus_examples():
    assert genus(HalfEdgeGraph(["u"], {})) == 0
    assert genus(THETA) == 2
    assert genus(DUMBBELL) == 2


def test_genus_rejects_disconnected():
    with pytest.raises(GraphError):
        genus(HalfEdgeGraph(["a", "b"], {}))


def test_components_examples():
    assert connected_components(HalfEdgeGraph([], {})) == []
    assert len(connected_components(HalfEdgeGraph(["a", "b"], {}))) == 2
    path = HalfEdgeGraph(["a", "b", "c"], {"x": ("a", "b"), "y": ("b", "c")})
    assert connected_components(path) == [["a", "b", "c"]]


def test_contract_nothing():
    g, vmap, emap = contract_edges(TRIANGLE, [])
    assert g == TRIANGLE
    assert vmap == {v: v for v in TRIANGLE.vertices}
    assert emap == {e: e for e in TRIANGLE.edges}


def test_contract_triangle_edge():
    g, vmap, _ = contract_edges(TRIANGLE, ["x"])
    assert len(g.vertices) == 2 and sorted(g.edges) == ["y", "z"]
    assert vmap["a"] == vmap["b"] == "{a,b}"
    assert {frozenset(g.ends[e]) for e in g.edges} == {frozenset({"{a,b}", "c"})}


def test_contract_dumbbell_bridge():
    g, _, _ = contract_edges(DUMBBELL, ["b"])
    assert g.vertices == ("{u,v}",)
    assert all(g.is_loop(e) for e in g.edges) and len(g.edges) == 2


def test_delete_and_induced():
    d = delete_edges(TRIANGLE, TRIANGLE.edges)
    assert d.vertices == TRIANGLE.vertices and d.edges == ()
    assert induced_subgraph(TRIANGLE, []).vertices == ()
    g = induced_subgraph(DUMBBELL, ["l1"])
    assert g.vertices == ("u",) and g.edges == ("l1",)


def test_unknown_edge_rejected():
    with pytest.raises(GraphError):
        delete_edges(TRIANGLE, ["nope"])


def test_bridges():
    assert is_bridge(DUMBBELL, "b")
    assert not any(is_bridge(TRIANGLE, e) for e in TRIANGLE.edges)
    assert not is_bridge(DUMBBELL, "l1")


def test_boundary_examples():
    assert boundary_matrix(LOOP) == [[0]]
    seg = HalfEdgeGraph(["a", "b"], {"e": ("a", "b")})
    assert boundary_matrix(seg) == [[-1], [1]]
    path = HalfEdgeGraph(["a", "b", "c"], {"x": ("a", "b"), "y": ("b", "c")})
    assert boundary_matrix(path) == [[-1, 0], [1, -1], [0, 1]]


def test_cycle_basis_examples():
    assert cycle_basis(TREE) == []
    assert cycle_basis(LOOP) == [[1]]
    basis = cycle_basis(THETA)
    assert len(basis) == 2
    assert all(abs(x) <= 1 for v in basis for x in v)
    assert hnf_basis(basis, 3) == int_kernel(boundary_matrix(THETA))


@pytest.mark.parametrize("g", [TREE, TRIANGLE, DUMBBELL])
def test_spanning_tree_examples(g):
    t = spanning_tree(g)
    assert len(t) == len(g.vertices) - 1
    sub = HalfEdgeGraph(g.vertices, {e: g.ends[e] for e in t})
    assert is_connected(sub) and betti1(sub) == 0


def test_canonical_orientation():
    o = canonical_orientation(LOOP)
    assert o[("e", 0)] == -1 and o[("e", 1)] == 1


@given(graphs())
def test_betti_additive(g):
    # betti1 = |E| - |V| + #components
    assert betti1(g) == len(g.edges) - len(g.vertices) + component_count(g)
    total = 0
    for comp in connected_components(g):
        cs = set(comp)
        sub = HalfEdgeGraph(comp, {e: g.ends[e] for e in g.edges if g.ends[e][0] in cs})
        total += genus(sub)
    assert total == betti1(g)


@given(graphs())
def test_cycle_space_is_closed_and_full(g):
    basis = cycle_space(g)
    bd = boundary_matrix(g)
    for z in basis:
        assert not any(matvec(bd, z))
    assert len(basis) == betti1(g)
    if g.edges:
        assert hnf_basis(basis, len(g.edges)) == int_kernel(bd, len(g.edges))


@given(graphs(), st.data())
def test_contraction_genus(g, data):
    f = data.draw(st.lists(st.sampled_from(g.edges), unique=True) if g.edges else st.just([]))
    h, vmap, _ = contract_edges(g, f)
    sub = HalfEdgeGraph(g.vertices, {e: g.ends[e] for e in f})
    # contracting a subgraph removes its own cycles and keeps the others
    assert betti1(h) == betti1(g) - betti1(sub)
    assert component_count(h) == component_count(g)
    assert set(vmap) == set(g.vertices)


@given(graphs(), st.data())
def test_delete_keeps_vertices(g, data):
    f = data.draw(st.lists(st.sampled_from(g.edges), unique=True) if g.edges else st.just([]))
    assert delete_edges(g, f).vertices == g.vertices
