"""Harmonic double covers given by base data.

A cover is stored as a base graph, a set of dilated vertices, a set of
dilated edges, and a sign on every free edge (an undilated edge with both
ends undilated).  The total graph is always derived from this data.

Labels of the total graph:

* an undilated vertex ``v`` has lifts ``(v, 1)`` and ``(v, -1)``,
  a dilated vertex has the single lift ``(v, 0)``;
* an undilated edge ``e`` with tail ``u`` and head ``v`` has lifts
  ``(e, 1)`` from ``u+`` to ``v^sigma`` and ``(e, -1)`` from ``u-`` to
  ``v^-sigma``; a dilated edge has one lift ``(e, 0)`` of half length.

An integer chain ``a`` on undilated base edges stands for the upstairs chain
``sum a(e) * ((e, 1) - (e, -1))``.  These are exactly the chains that push
forward to zero, and we use this representation throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .graph import (
    GraphError,
    HalfEdgeGraph,
    UnionFind,
    betti1,
    component_count,
    connected_components,
    contract_edges,
    cycle_space,
    delete_edges,
    induced_subgraph,
    is_connected,
    spanning_forest,
)
from .linalg import matmul, matvec


class CoverError(ValueError):
    pass


class TrivialCoverError(CoverError):
    pass


def _as_length(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise CoverError(f"length {x!r} is not an exact rational")


class DoubleCover:
    """A degree-two harmonic cover ``(G, G_dil, sigma)`` with edge lengths.

    Construction checks the structural invariants only; global conditions
    (connected base, nontrivial cover) are checked by :func:`validate`, so
    restrictions to subgraphs are representable.
    """

    def __init__(self, base, lengths, dilated_vertices=(), dilated_edges=(), sign=None):
        if not isinstance(base, HalfEdgeGraph):
            raise CoverError("base must be a HalfEdgeGraph")
        self.base = base
        self.dilated_vertices = frozenset(dilated_vertices)
        self.dilated_edges = frozenset(dilated_edges)
        sign = dict(sign or {})
        if not self.dilated_vertices <= set(base.vertices):
            raise CoverError("dilated vertex outside the base graph")
        if not self.dilated_edges <= set(base.edges):
            raise CoverError("dilated edge outside the base graph")
        lengths = {e: _as_length(lengths[e]) for e in base.edges if e in lengths}
        for e in base.edges:
            if e not in lengths:
                raise CoverError(f"edge {e!r} has no length")
            if lengths[e] <= 0:
                raise CoverError(f"edge {e!r} has non-positive length {lengths[e]}")
        self.lengths = lengths
        for e in self.dilated_edges:
            for v in base.ends[e]:
                if v not in self.dilated_vertices:
                    raise CoverError(
                        f"dilated edge {e!r} has undilated end {v!r}"
                    )
        for e in base.edges:
            free = self.is_free_edge(e)
            if free and e not in sign:
                raise CoverError(f"free edge {e!r} needs a sign")
            if not free and e in sign:
                raise CoverError(f"edge {e!r} is not free and cannot carry a sign")
            if free and sign[e] not in (1, -1):
                raise CoverError(f"sign of {e!r} must be +1 or -1")
        self.sign = {e: sign[e] for e in base.edges if e in sign}

    def __repr__(self):
        return (
            f"DoubleCover(V={len(self.base.vertices)}, E={len(self.base.edges)}, "
            f"dilated={len(self.dilated_vertices)}+{len(self.dilated_edges)})"
        )

    def __eq__(self, other):
        return (
            isinstance(other, DoubleCover)
            and self.base == other.base
            and self.lengths == other.lengths
            and self.dilated_vertices == other.dilated_vertices
            and self.dilated_edges == other.dilated_edges
            and self.sign == other.sign
        )

    __hash__ = None

    def is_free_edge(self, e):
        if e in self.dilated_edges:
            return False
        a, b = self.base.ends[e]
        return a not in self.dilated_vertices and b not in self.dilated_vertices

    def sigma(self, e):
        """Sign of an undilated edge; ``+1`` when an end is dilated."""
        if e in self.dilated_edges:
            raise CoverError(f"dilated edge {e!r} has no sign")
        return self.sign.get(e, 1)

    @property
    def undilated_edges(self):
        return [e for e in self.base.edges if e not in self.dilated_edges]

    @property
    def undilated_vertices(self):
        return [v for v in self.base.vertices if v not in self.dilated_vertices]

    @property
    def is_free(self):
        return not self.dilated_vertices

    @cached_property
    def total_graph(self):
        return build_total_graph(self)

    @property
    def genus(self):
        return betti1(self.base)

    @property
    def total_genus(self):
        return betti1(self.total_graph.graph)

    @property
    def prym_dimension(self):
        return self.total_genus - self.genus

    @property
    def dilation_index(self):
        return dilation_index(self)

    def is_relatively_connected(self):
        return component_count(self.total_graph.graph) == component_count(self.base)

    def replace(self, **kw):
        data = dict(
            base=self.base,
            lengths=self.lengths,
            dilated_vertices=self.dilated_vertices,
            dilated_edges=self.dilated_edges,
            sign=self.sign,
        )
        data.update(kw)
        return DoubleCover(**data)


class TotalGraph:
    """The total graph with its projection to the base."""

    def __init__(self, graph, lengths, vertex_projection, edge_projection):
        self.graph = graph
        self.lengths = lengths
        self.vertex_projection = vertex_projection
        self.edge_projection = edge_projection

    def involution_vertex(self, x):
        v, s = x
        return (v, -s)

    def involution_edge(self, x):
        e, s = x
        return (e, -s)


def lift(c, v, s):
    return (v, 0) if v in c.dilated_vertices else (v, s)


def build_total_graph(c):
    g = c.base
    vertices = []
    for v in g.vertices:
        if v in c.dilated_vertices:
            vertices.append((v, 0))
        else:
            vertices += [(v, 1), (v, -1)]
    ends = {}
    lengths = {}
    for e in g.edges:
        u, v = g.ends[e]
        if e in c.dilated_edges:
            ends[(e, 0)] = ((u, 0), (v, 0))
            lengths[(e, 0)] = c.lengths[e] / 2
            continue
        s = c.sigma(e)
        ends[(e, 1)] = (lift(c, u, 1), lift(c, v, s))
        ends[(e, -1)] = (lift(c, u, -1), lift(c, v, -s))
        lengths[(e, 1)] = lengths[(e, -1)] = c.lengths[e]
    graph = HalfEdgeGraph(vertices, ends)
    vproj = {x: x[0] for x in vertices}
    eproj = {x: x[0] for x in ends}
    return TotalGraph(graph, lengths, vproj, eproj)


def validate(c):
    """Raise a :class:`CoverError` unless ``c`` is a valid input cover."""
    if not c.base.vertices:
        raise CoverError("base graph is empty")
    if not is_connected(c.base):
        comps = connected_components(c.base)
        raise CoverError(
            f"base graph is disconnected ({len(comps)} components; "
            f"vertex {comps[1][0]!r} is not reachable from {comps[0][0]!r})"
        )
    if c.is_free and not is_connected(c.total_graph.graph):
        raise TrivialCoverError("trivial cover: every cycle has even sign")
    return c


def switch(c, v):
    """Switch the sign at an undilated vertex."""
    if v in c.dilated_vertices:
        raise CoverError(f"cannot switch at dilated vertex {v!r}")
    sign = dict(c.sign)
    for e, (a, b) in c.base.ends.items():
        if e in sign and (a == v) != (b == v):
            sign[e] = -sign[e]
    return c.replace(sign=sign)


def normalize_signs(c):
    """Switch so that a BFS spanning forest of the free subgraph has sign +1."""
    free = [e for e in c.base.edges if c.is_free_edge(e)]
    sub = HalfEdgeGraph(c.undilated_vertices, {e: c.base.ends[e] for e in free})
    tree = spanning_forest(sub)
    # spanning_forest visits vertices breadth-first, so each tree edge has
    # exactly one end with a known switch when it is processed
    s = {}
    adj = {}
    for e in tree:
        a, b = c.base.ends[e]
        adj.setdefault(a, []).append((e, b))
        adj.setdefault(b, []).append((e, a))
    for root in sub.vertices:
        if root in s:
            continue
        s[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for e, y in adj.get(x, []):
                if y not in s:
                    s[y] = s[x] * c.sign[e]
                    stack.append(y)
    sign = {}
    for e in free:
        a, b = c.base.ends[e]
        sign[e] = c.sign[e] * s[a] * s[b]
    return c.replace(sign=sign)


def reorient(c, edges):
    """Reverse the stored orientation of ``edges``.

    Returns the new cover and, for each edge, the factor relating chain
    coordinates: a kernel chain ``a`` becomes ``a'(e) = factor(e) * a(e)``.
    """
    edges = set(edges)
    ends = {}
    factor = {}
    for e in c.base.edges:
        a, b = c.base.ends[e]
        if e in edges:
            ends[e] = (b, a)
            factor[e] = 1 if e in c.dilated_edges else -c.sigma(e)
        else:
            ends[e] = (a, b)
            factor[e] = 1
    base = HalfEdgeGraph(c.base.vertices, ends)
    return c.replace(base=base), factor


def restrict(c, f, mode="delete"):
    """Restriction of the cover over ``G \\ f`` (``delete``) or ``G[f]`` (``induced``).

    The result may be disconnected or trivial on some components.
    """
    if mode == "delete":
        base = delete_edges(c.base, f)
    elif mode == "induced":
        base = induced_subgraph(c.base, f)
    else:
        raise ValueError(f"unknown restriction mode {mode!r}")
    vs = set(base.vertices)
    es = set(base.edges)
    return DoubleCover(
        base,
        {e: c.lengths[e] for e in base.edges},
        c.dilated_vertices & vs,
        c.dilated_edges & es,
        {e: s for e, s in c.sign.items() if e in es},
    )


def _preimage_components(c, f):
    # union-find on total-graph vertices using lifts of edges in f
    tg = c.total_graph.graph
    uf = UnionFind(tg.vertices)
    for x, (a, b) in tg.ends.items():
        if x[0] in f:
            uf.union(a, b)
    return uf


def contract_cover(c, f):
    """Contract the edges ``f`` in base and total graph.

    Returns ``(cover, vertex_map, edge_map)`` where ``edge_map[e] = (e, s)``
    records the factor ``s`` relating kernel-chain coordinates on surviving
    undilated edges.  A contracted component becomes a dilated vertex exactly
    when its preimage is connected.
    """
    f = c.base.check_edges(f)
    base, vmap, _ = contract_edges(c.base, f)
    uf = _preimage_components(c, f)
    members = {}
    for v in c.base.vertices:
        members.setdefault(vmap[v], []).append(v)
    dilated = set()
    plus = {}
    for w, vs in members.items():
        roots = {uf.find(lift(c, v, s)) for v in vs for s in (1, -1)}
        if len(roots) == 1:
            dilated.add(w)
        else:
            first = next(v for v in vs if v not in c.dilated_vertices)
            plus[w] = uf.find((first, 1))

    def side(x, w):
        # label of upstairs vertex x inside the lift of contracted vertex w
        if w in dilated:
            return 0
        return 1 if uf.find(x) == plus[w] else -1

    tg = c.total_graph.graph
    sign = {}
    edge_map = {}
    for e in c.base.edges:
        if e in f:
            continue
        u, v = vmap[c.base.ends[e][0]], vmap[c.base.ends[e][1]]
        if e in c.dilated_edges:
            edge_map[e] = (e, 1)
            continue
        a, b = tg.ends[(e, 1)]
        su, sv = side(a, u), side(b, v)
        if su != 0:
            factor = su
        elif sv != 0:
            factor = sv
        else:
            factor = 1
        edge_map[e] = (e, factor)
        if su != 0 and sv != 0:
            # the lift labelled + after relabelling starts at u+
            sign[e] = su * sv
    new = DoubleCover(
        base,
        {e: c.lengths[e] for e in base.edges},
        dilated,
        {e for e in c.dilated_edges if e not in f},
        sign,
    )
    return new, vmap, edge_map


def edge_free_reduction(c):
    """Contract all dilated edges; returns ``(cover, vertex_map, edge_map)``."""
    return contract_cover(c, c.dilated_edges)


def free_resolution(c, loop_length=1):
    """Replace every dilated vertex by an undilated one carrying an odd loop.

    The cover is first made edge-free.  Every lift labelled ``+`` that used
    to end at a dilated vertex is attached to the new ``+`` vertex, so all
    old edges get sign ``+1``.  New loops are named ``("res", w)`` when the
    vertex ids are not strings and ``"res:" + w`` otherwise.
    """
    if c.dilated_edges:
        c = edge_free_reduction(c)[0]
    ends = dict(c.base.ends)
    lengths = dict(c.lengths)
    sign = {e: c.sigma(e) for e in c.base.edges}
    loops = {}
    for w in c.base.vertices:
        if w in c.dilated_vertices:
            name = f"res:{w}" if isinstance(w, str) else ("res", w)
            if name in ends:
                raise CoverError(f"edge id {name!r} already taken")
            ends[name] = (w, w)
            lengths[name] = Fraction(loop_length)
            sign[name] = -1
            loops[w] = name
    base = HalfEdgeGraph(c.base.vertices, ends)
    return DoubleCover(base, lengths, (), (), sign), loops


def dilation_index(c):
    if c.is_free:
        return 1
    sub = HalfEdgeGraph(
        sorted(c.dilated_vertices, key=c.base.vertex_index),
        {e: c.base.ends[e] for e in c.base.edges if e in c.dilated_edges},
    )
    return component_count(sub)


def pushforward_chain_matrix(c):
    """Base edges by total-graph edges: every lift maps to its edge."""
    tg = c.total_graph.graph
    m = [[0] * len(tg.edges) for _ in c.base.edges]
    for j, x in enumerate(tg.edges):
        m[c.base.edge_index(x[0])][j] = 1
    return m


def pullback_chain_matrix(c):
    tg = c.total_graph.graph
    m = [[0] * len(c.base.edges) for _ in tg.edges]
    for i, x in enumerate(tg.edges):
        m[i][c.base.edge_index(x[0])] = 2 if x[1] == 0 else 1
    return m


class PushPull:
    def __init__(self, base_basis, total_basis, pushforward, pullback):
        self.base_basis = base_basis
        self.total_basis = total_basis
        self.pushforward = pushforward
        self.pullback = pullback


def _coordinates(g, basis, chain):
    # basis comes from cycle_space: each element is 1 on its own non-tree
    # edge and 0 on the others, so coordinates are read off directly
    tree = set(spanning_forest(g))
    non_tree = [g.edge_index(e) for e in g.edges if e not in tree]
    coords = [chain[j] for j in non_tree]
    check = [0] * len(g.edges)
    for a, b in zip(coords, basis):
        if a:
            check = [x + a * y for x, y in zip(check, b)]
    if check != list(chain):
        raise GraphError("chain is not a cycle")
    return coords


def homology_maps(c):
    """Matrices of pushforward and pullback on ``H1`` in cycle-space bases.

    ``pushforward`` has one row per base basis cycle and one column per
    total basis cycle; ``pullback`` is the other way round.
    """
    tg = c.total_graph.graph
    if not is_connected(c.base):
        raise CoverError("homology maps need a connected base")
    if not is_connected(tg):
        raise TrivialCoverError("total graph is disconnected (trivial cover)")
    bb = cycle_space(c.base)
    tb = cycle_space(tg)
    push = pushforward_chain_matrix(c)
    pull = pullback_chain_matrix(c)
    pf_cols = [_coordinates(c.base, bb, matvec(push, z)) for z in tb]
    pb_cols = [_coordinates(tg, tb, matvec(pull, z)) for z in bb]
    pushforward = [[col[i] for col in pf_cols] for i in range(len(bb))]
    pullback = [[col[i] for col in pb_cols] for i in range(len(tb))]
    return PushPull(bb, tb, pushforward, pullback)


def check_push_pull(pp):
    n = len(pp.base_basis)
    prod = matmul(pp.pushforward, pp.pullback, n)
    return prod == [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def kernel_chain_to_total(c, chain):
    """Upstairs chain (total-graph edge order) of a base kernel chain."""
    tg = c.total_graph.graph
    coeff = dict(zip(c.base.edges, chain))
    return [x[1] * coeff[x[0]] if x[1] else 0 for x in tg.edges]


def total_to_kernel_chain(c, z):
    """Inverse of :func:`kernel_chain_to_total` on chains that push forward to 0."""
    tg = c.total_graph.graph
    coeff = dict(zip(tg.edges, z))
    out = []
    for e in c.base.edges:
        if e in c.dilated_edges:
            if coeff[(e, 0)]:
                raise CoverError("chain does not push forward to zero")
            out.append(0)
            continue
        if coeff[(e, 1)] != -coeff[(e, -1)]:
            raise CoverError("chain does not push forward to zero")
        out.append(coeff[(e, 1)])
    return out


def components_of_restriction(c, f):
    """Components of ``G \\ f`` with the number of upstairs components over each."""
    rest = restrict(c, f)
    tg = rest.total_graph.graph
    uf = UnionFind(tg.vertices)
    for a, b in tg.ends.values():
        uf.union(a, b)
    out = []
    for comp in connected_components(rest.base):
        roots = {uf.find(lift(rest, v, s)) for v in comp for s in (1, -1)}
        out.append((comp, len(roots)))
    return out
