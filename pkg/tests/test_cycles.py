import random

import pytest
from hypothesis import given

from conftest import covers, small_covers
from prymatroid import checks
from prymatroid.catalog import cover_a, cover_b, cover_c, cover_d, no_ogod_cover
from prymatroid.cover import reorient
from prymatroid.cycles import (
    all_fundamental_cycles,
    fundamental_cycle,
    is_closed,
    kernel_basis_direct,
    kernel_basis_total,
    kernel_condition_matrix,
    kernel_lattice,
    tau,
)
from prymatroid.graph import HalfEdgeGraph
from prymatroid.cover import DoubleCover, validate
from prymatroid.linalg import lattice_index, matvec, same_lattice
from prymatroid.matroid import MatroidError, SignedMatroidView


def cycle_of(c, edges):
    v = SignedMatroidView(c)
    circ = next(x for x in v.circuits if x.edges == tuple(edges))
    return fundamental_cycle(v, circ).as_dict(v.ground)


def test_tau_even_edge():
    g = HalfEdgeGraph(["u", "v"], {"e": ("u", "v"), "l": ("u", "u")})
    c = validate(DoubleCover(g, {"e": 1, "l": 1}, (), (), {"e": 1, "l": -1}))
    t = tau(c)
    assert (t[("e", 1)], t[("e", 0)]) == (1, -1)


def test_tau_odd_edge():
    t = tau(cover_a())
    assert (t[("e3", 1)], t[("e3", 0)]) == (-1, -1)


@given(covers)
def test_tau_product_law(c):
    t = tau(c)
    for e in c.undilated_edges:
        assert t[(e, 0)] * t[(e, 1)] == -c.sigma(e)


def test_fundamental_cycle_type_two():
    assert cycle_of(cover_c(), ["e1", "b", "e2"]) == {"e1": 1, "b": -2, "e2": -1}


def test_fundamental_cycle_cover_a():
    # magnitudes (1,1,1); the sign of the loop e1 is fixed by closedness at u
    assert cycle_of(cover_a(), ["e1", "e2", "e3"]) == {"e1": 1, "e2": -1, "e3": -1}


def test_fundamental_cycle_cover_b():
    assert cycle_of(cover_b(), ["f1", "f3"]) == {"f1": 2, "f3": 1}
    assert cycle_of(cover_b(), ["f1", "f2"]) == {"f1": 1, "f2": 1}


def test_cover_b_two_edges_up_to_orientation():
    # with f2 stored the other way round the kernel vector is f1 - f2
    c, _ = reorient(cover_b(), ["f2"])
    assert cycle_of(c, ["f1", "f2"]) == {"f1": 1, "f2": -1}


def test_kernel_lattice_cover_a():
    lat = kernel_lattice(SignedMatroidView(cover_a()))
    assert lat.provenance == "ogod" and lat.ogod == ("e3", "e4")
    assert lat.basis == [[-1, 1, 1, 0], [-1, 2, 0, 1]]


def test_kernel_lattice_cover_b():
    lat = kernel_lattice(SignedMatroidView(cover_b()), ["f2", "f3"])
    assert lat.basis == [[1, 1, 0], [2, 0, 1]]


def test_kernel_lattice_cover_d():
    for n in range(1, 5):
        v = SignedMatroidView(cover_d(n))
        lat = kernel_lattice(v)
        assert lat.basis == [[int(i == j) for j in range(n)] for i in range(n)]
        assert {c.type for c in v.circuits} == {"VI"}


def test_kernel_lattice_no_ogod():
    v = SignedMatroidView(no_ogod_cover())
    lat = kernel_lattice(v)
    assert lat.provenance == "hnf"
    n = len(v.ground)
    full = kernel_basis_direct(v.cover)
    assert same_lattice(lat.basis, full, n)
    assert all(o.index == 2 for o in v.ogods)
    for o in v.ogods:
        sub = kernel_lattice(v, o.edges)
        assert sub.provenance == "ogod-sublattice"
        # every circuit met here is halved (type VI) or has unit diagonal
        # entry, so each ogod still yields the whole kernel
        assert lattice_index(sub.basis, full, n) == 1


def test_index_two_ogod_can_lose_index():
    # three edges from a dilated vertex to a free vertex with an odd loop
    g = HalfEdgeGraph(
        ["w", "v"],
        {"e0": ("v", "w"), "e1": ("v", "w"), "e2": ("w", "v"), "e3": ("v", "v")},
    )
    c = validate(DoubleCover(g, {e: 1 for e in g.edges}, {"w"}, (), {"e3": -1}))
    v = SignedMatroidView(c)
    n = len(v.ground)
    full = kernel_basis_direct(c)
    got = {o.edges: (o.index, lattice_index(kernel_lattice(v, o.edges).basis, full, n)) for o in v.ogods}
    assert got[("e0", "e1", "e2")] == (2, 4)
    assert all(i == 1 for k, (_, i) in got.items() if k != ("e0", "e1", "e2"))


def test_kernel_lattice_rejects_non_ogod():
    with pytest.raises(MatroidError):
        kernel_lattice(SignedMatroidView(cover_a()), ["e1"])


@given(covers)
def test_fundamental_cycles_are_closed(c):
    v = SignedMatroidView(c)
    m = kernel_condition_matrix(c)
    for fc in all_fundamental_cycles(v):
        assert not any(matvec(m, fc.coefficients))
        assert is_closed(c, fc.coefficients)


@given(covers)
def test_direct_kernel_matches_total_graph(c):
    assert checks.kernel_oracle(c) == []


@given(covers)
def test_bridge_law_and_index_formula(c):
    assert checks.circuit_patterns(c) == []


@given(small_covers)
def test_oriented_circuit_axioms(c):
    assert checks.oriented_axioms(c) == []


@given(small_covers)
def test_orthogonality(c):
    assert checks.orthogonality(c) == []


@given(covers)
def test_lattice_is_orientation_independent(c):
    assert checks.reorientation(c, random.Random(7), trials=3) == []


@given(covers)
def test_kernel_lattice_spans_kernel(c):
    v = SignedMatroidView(c)
    lat = kernel_lattice(v)
    assert same_lattice(lat.basis, kernel_basis_total(c), len(v.ground))
