"""Finite multigraphs stored through half-edges.

Every edge ``e`` owns two half-edges, ``(e, 0)`` and ``(e, 1)``; the
involution swaps them.  The stored orientation points from the first
half-edge to the second, so ``o((e, 0)) = -1`` and ``o((e, 1)) = +1``.
Loops and parallel edges are allowed, and so are disconnected graphs.
"""

from __future__ import annotations

from collections import deque


class GraphError(ValueError):
    pass


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.count = len(self.parent)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.count += 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.count -= 1
        return True


class HalfEdgeGraph:
    """Immutable multigraph.

    ``ends`` maps each edge id to ``(tail, head)``, i.e. the roots of its
    half-edges ``(e, 0)`` and ``(e, 1)``.  Vertex and edge order is the
    input order and is used for every matrix and vector in the package.
    """

    __slots__ = ("vertices", "edges", "ends", "_vpos", "_epos")

    def __init__(self, vertices, ends):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex id")
        ends = dict(ends)
        vset = set(vertices)
        for e, (a, b) in ends.items():
            if a not in vset or b not in vset:
                raise GraphError(f"edge {e!r} has an end outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(ends))
        object.__setattr__(self, "ends", {e: tuple(v) for e, v in ends.items()})
        object.__setattr__(self, "_vpos", {v: i for i, v in enumerate(vertices)})
        object.__setattr__(self, "_epos", {e: i for i, e in enumerate(self.edges)})

    def __setattr__(self, name, value):
        raise AttributeError("HalfEdgeGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HalfEdgeGraph)
            and self.vertices == other.vertices
            and self.ends == other.ends
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, tuple(self.ends.items())))

    def __repr__(self):
        return f"HalfEdgeGraph(V={len(self.vertices)}, E={len(self.edges)})"

    # half-edge view
    def half_edges(self):
        return [(e, s) for e in self.edges for s in (0, 1)]

    def root(self, h):
        return self.ends[h[0]][h[1]]

    @staticmethod
    def involution(h):
        return (h[0], 1 - h[1])

    def half_edges_at(self, v):
        """Tangent half-edges at ``v``; a loop contributes both of its halves."""
        return [h for h in self.half_edges() if self.root(h) == v]

    def valency(self, v):
        return sum(1 for a, b in self.ends.values() for x in (a, b) if x == v)

    def vertex_index(self, v):
        return self._vpos[v]

    def edge_index(self, e):
        return self._epos[e]

    def is_loop(self, e):
        a, b = self.ends[e]
        return a == b

    def check_edges(self, f):
        f = set(f)
        bad = f - set(self.edges)
        if bad:
            raise GraphError(f"unknown edge ids: {sorted(map(str, bad))}")
        return f


def canonical_orientation(g):
    return {h: (1 if h[1] == 1 else -1) for h in g.half_edges()}


def check_orientation(g, o):
    for e in g.edges:
        if o[(e, 0)] * o[(e, 1)] != -1:
            raise GraphError(f"orientation of {e!r} is not antisymmetric")


def component_count(g):
    uf = UnionFind(g.vertices)
    for a, b in g.ends.values():
        uf.union(a, b)
    return uf.count


def connected_components(g):
    """Vertex partition by reachability, ordered by first vertex."""
    uf = UnionFind(g.vertices)
    for a, b in g.ends.values():
        uf.union(a, b)
    groups = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return list(groups.values())


def is_connected(g):
    return component_count(g) <= 1


def betti1(g):
    return len(g.edges) - len(g.vertices) + component_count(g)


def genus(g):
    if not is_connected(g):
        raise GraphError("genus requires a connected graph")
    return betti1(g)


def merged_name(members):
    members = sorted(members, key=str)
    if len(members) == 1:
        return members[0]
    return "{" + ",".join(map(str, members)) + "}"


def contract_edges(g, f):
    """Contract every component of ``G[f]`` to a vertex.

    Returns ``(graph, vertex_map, edge_map)``.  ``vertex_map`` sends every
    old vertex to its image; ``edge_map`` sends each surviving edge to
    itself.  Merged vertices are named by their sorted member list.
    """
    f = g.check_edges(f)
    uf = UnionFind(g.vertices)
    for e in g.edges:
        if e in f:
            uf.union(*g.ends[e])
    groups = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    name = {r: merged_name(m) for r, m in groups.items()}
    vmap = {v: name[uf.find(v)] for v in g.vertices}
    new_vertices = [name[r] for r in groups]
    ends = {e: (vmap[a], vmap[b]) for e, (a, b) in g.ends.items() if e not in f}
    emap = {e: e for e in ends}
    return HalfEdgeGraph(new_vertices, ends), vmap, emap


def delete_edges(g, f):
    f = g.check_edges(f)
    return HalfEdgeGraph(g.vertices, {e: g.ends[e] for e in g.edges if e not in f})


def induced_subgraph(g, f):
    """The minimal subgraph ``G[f]`` containing the edges ``f``."""
    f = g.check_edges(f)
    used = {v for e in f for v in g.ends[e]}
    return HalfEdgeGraph(
        [v for v in g.vertices if v in used],
        {e: g.ends[e] for e in g.edges if e in f},
    )


def is_bridge(g, e):
    if g.is_loop(e):
        return False
    return component_count(delete_edges(g, [e])) > component_count(g)


def boundary_matrix(g, orientation=None):
    """Vertex-by-edge incidence matrix, ``+o(h)`` at the root of ``h``."""
    o = orientation or canonical_orientation(g)
    m = [[0] * len(g.edges) for _ in g.vertices]
    for j, e in enumerate(g.edges):
        for s in (0, 1):
            h = (e, s)
            m[g.vertex_index(g.root(h))][j] += o[h]
    return m


def spanning_forest(g):
    """BFS spanning forest as a set of edges."""
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        a, b = g.ends[e]
        if a != b:
            adj[a].append((e, b))
            adj[b].append((e, a))
    seen = set()
    tree = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    tree.append(e)
                    queue.append(w)
    return tree


def spanning_tree(g):
    if not is_connected(g):
        raise GraphError("spanning tree requires a connected graph")
    return spanning_forest(g)


def _tree_paths(g, tree):
    # parent pointers for each forest component, with the sign of the
    # step from a vertex towards its parent relative to the edge orientation
    adj = {v: [] for v in g.vertices}
    for e in tree:
        a, b = g.ends[e]
        adj[a].append((e, b, 1))
        adj[b].append((e, a, -1))
    parent = {}
    depth = {}
    for s in g.vertices:
        if s in depth:
            continue
        depth[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e, w, sgn in adj[v]:
                if w not in depth:
                    depth[w] = depth[v] + 1
                    # moving w -> v traverses e with sign -sgn
                    parent[w] = (v, e, -sgn)
                    queue.append(w)
    return parent, depth


def cycle_space(g, orientation=None):
    """Fundamental cycles of a spanning forest, as edge-ordered vectors.

    Works on disconnected graphs; the result is a basis of the integer
    kernel of the boundary matrix.
    """
    o = orientation or canonical_orientation(g)
    tree = spanning_forest(g)
    tset = set(tree)
    parent, depth = _tree_paths(g, tree)
    basis = []
    for e in g.edges:
        if e in tset:
            continue
        vec = [0] * len(g.edges)
        # traverse e along the stored orientation, then return in the tree
        vec[g.edge_index(e)] += 1
        a, b = g.ends[e]
        # path from b back to a: climb both to their common ancestor
        up_b, up_a = [], []
        x, y = b, a
        while depth[x] > depth[y]:
            up_b.append(parent[x])
            x = parent[x][0]
        while depth[y] > depth[x]:
            up_a.append(parent[y])
            y = parent[y][0]
        while x != y:
            up_b.append(parent[x])
            x = parent[x][0]
            up_a.append(parent[y])
            y = parent[y][0]
        for _, te, sgn in up_b:
            vec[g.edge_index(te)] += sgn
        for _, te, sgn in up_a:
            vec[g.edge_index(te)] -= sgn
        basis.append(_reorient_vector(g, vec, o))
    return basis


def _reorient_vector(g, vec, o):
    # vec is written in the stored orientation; flip coordinates of edges
    # whose orientation in o is reversed
    return [(-x if o[(e, 1)] == -1 else x) for e, x in zip(g.edges, vec)]


def cycle_basis(g, orientation=None):
    """Integer basis of ``H1(g)`` in edge-ordered coordinates."""
    if not is_connected(g):
        raise GraphError("cycle basis requires a connected graph")
    return cycle_space(g, orientation)
