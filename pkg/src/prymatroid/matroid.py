"""The signed cographic matroid of a double cover and its dual.

Ground set: undilated edges, in base edge order.

* ``F`` is independent in ``M*`` when removing ``F`` from the base (and its
  preimage from the total graph) leaves every component with a connected
  preimage.
* ``F`` is independent in ``M`` when the pushforward on ``H1`` of the cover
  restricted to ``G[F]`` is injective.  Because pushforward after pullback
  is multiplication by two, that kernel has rank ``b1(upstairs) - b1(G[F])``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .cover import DoubleCover, contract_cover, dilation_index, edge_free_reduction, restrict
from .graph import (
    HalfEdgeGraph,
    UnionFind,
    betti1,
    connected_components,
    cycle_space,
    induced_subgraph,
    is_bridge,
    is_connected,
)


class MatroidError(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


class CircuitRecord:
    """A circuit of ``M`` (``side="M"``) or of ``M*`` (``side="M*"``)."""

    __slots__ = ("edges", "side", "type")

    def __init__(self, edges, side, type=None):
        self.edges = tuple(edges)
        self.side = side
        self.type = type

    def __repr__(self):
        return f"CircuitRecord({list(self.edges)}, {self.side}, {self.type})"

    def __eq__(self, other):
        return (
            isinstance(other, CircuitRecord)
            and self.edges == other.edges
            and self.side == other.side
            and self.type == other.type
        )

    def __hash__(self):
        return hash((self.edges, self.side, self.type))


class IndexedSubset:
    __slots__ = ("edges", "index")

    def __init__(self, edges, index):
        self.edges = tuple(edges)
        self.index = index

    def __repr__(self):
        return f"IndexedSubset({list(self.edges)}, index={self.index})"

    def __eq__(self, other):
        return (
            isinstance(other, IndexedSubset)
            and self.edges == other.edges
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.edges, self.index))


class SignedMatroidView:
    """Independence oracles, enumeration and the index function of a cover."""

    def __init__(self, cover):
        if not isinstance(cover, DoubleCover):
            raise MatroidError("expected a DoubleCover")
        if not is_connected(cover.base):
            raise MatroidError("the base graph must be connected")
        self.cover = cover
        self.ground = tuple(cover.undilated_edges)
        self._pos = {e: i for i, e in enumerate(self.ground)}
        g = cover.base
        tg = cover.total_graph.graph
        self._base_ends = [(e, g.ends[e]) for e in g.edges]
        self._lifts = {}
        for x, ends in tg.ends.items():
            self._lifts.setdefault(x[0], []).append(ends)
        self._tvertices = tg.vertices
        self._vertices = g.vertices

    def sorted_edges(self, f):
        try:
            return tuple(sorted(f, key=self._pos.__getitem__))
        except KeyError as exc:
            raise MatroidError(f"edge {exc.args[0]!r} is not in the ground set") from None

    # oracles
    def _counts_without(self, f):
        base = UnionFind(self._vertices)
        total = UnionFind(self._tvertices)
        for e, (a, b) in self._base_ends:
            if e in f:
                continue
            base.union(a, b)
            for x, y in self._lifts[e]:
                total.union(x, y)
        return base.count, total.count

    def is_independent_dual(self, f):
        f = set(self.sorted_edges(f))
        b, t = self._counts_without(f)
        return b == t

    def kernel_rank(self, f):
        """Rank of the kernel of pushforward for the cover over ``G[f]``."""
        f = self.sorted_edges(f)
        if not f:
            return 0
        base_v = set()
        tot_v = set()
        base = UnionFind()
        total = UnionFind()
        for e in f:
            a, b = self.cover.base.ends[e]
            base_v.update((a, b))
            for x in (a, b):
                base.add(x)
            base.union(a, b)
            for x, y in self._lifts[e]:
                total.add(x)
                total.add(y)
                total.union(x, y)
                tot_v.update((x, y))
        b1 = len(f) - len(base_v) + base.count
        t1 = 2 * len(f) - len(tot_v) + total.count
        return t1 - b1

    def is_independent(self, f):
        return self.kernel_rank(f) == 0

    @cached_property
    def rank(self):
        """Rank of ``M*``, which equals the Prym dimension."""
        return self.cover.prym_dimension

    @property
    def rank_M(self):
        return len(self.ground) - self.rank

    def greedy_basis_dual(self):
        basis = []
        for e in self.ground:
            if self.is_independent_dual(basis + [e]):
                basis.append(e)
        return basis

    def index(self, f):
        f = set(self.sorted_edges(f))
        b, t = self._counts_without(f)
        if b != t:
            raise MatroidError(f"{sorted(map(str, f))} is dependent in the dual matroid")
        return b

    @cached_property
    def dilation_index(self):
        return dilation_index(self.cover)

    @cached_property
    def edge_free(self):
        """Edge-free reduction; circuit shapes and bridges are read here."""
        if not self.cover.dilated_edges:
            return self.cover
        return edge_free_reduction(self.cover)[0]

    # enumeration
    @cached_property
    def ogods(self):
        out = []
        for f in combinations(self.ground, self.rank):
            if self.is_independent_dual(f):
                out.append(IndexedSubset(f, self.index(f)))
        for o in out:
            if not all(is_elementary(r) for r in component_covers(self.cover, o.edges)):
                raise MatroidError(f"basis {list(o.edges)} leaves a non-elementary component")
        return out

    def bases_M(self):
        return [
            tuple(e for e in self.ground if e not in set(o.edges)) for o in self.ogods
        ]

    @cached_property
    def circuits(self):
        """All circuits of ``M`` with their type tags."""
        found = []
        for k in range(1, self.rank_M + 2):
            for f in combinations(self.ground, k):
                fs = set(f)
                if any(set(c) <= fs for c in found):
                    continue
                if not self.is_independent(f):
                    found.append(f)
        ef = self.edge_free
        return [CircuitRecord(c, "M", classify_circuit(ef, c)) for c in found]

    def circuits_M(self):
        return list(self.circuits)

    @cached_property
    def circuits_dual(self):
        found = []
        for k in range(1, self.rank + 2):
            for f in combinations(self.ground, k):
                fs = set(f)
                if any(set(c) <= fs for c in found):
                    continue
                if not self.is_independent_dual(f):
                    found.append(f)
        out = []
        for c in found:
            tag = {1: "1-circuit", 2: "2-circuit"}.get(len(c), "larger")
            out.append(CircuitRecord(c, "M*", tag))
        return out

    def multiplicity(self, e):
        """``2 ** (ind({e}) - 1)``; defined when ``{e}`` is independent in ``M*``."""
        return 2 ** (self.index([e]) - 1)

    def circuits_dual_small(self):
        ones = [
            CircuitRecord((e,), "M*", "1-circuit")
            for e in self.ground
            if not self.is_independent_dual([e])
        ]
        loops = {c.edges[0] for c in ones}
        twos = []
        mult = {}
        for a, b in combinations(self.ground, 2):
            if a in loops or b in loops:
                continue
            if not self.is_independent_dual([a, b]):
                twos.append(CircuitRecord((a, b), "M*", "2-circuit"))
                mult.setdefault(a, self.multiplicity(a))
                mult.setdefault(b, self.multiplicity(b))
        return ones, twos, mult

    def is_simple_dual(self):
        ones, twos, _ = self.circuits_dual_small()
        return not ones and not twos


def component_covers(cover, f):
    """Restricted covers over the components of ``G \\ f``."""
    rest = restrict(cover, f)
    out = []
    for comp in connected_components(rest.base):
        cs = set(comp)
        edges = [e for e in rest.base.edges if rest.base.ends[e][0] in cs]
        base = HalfEdgeGraph(comp, {e: rest.base.ends[e] for e in edges})
        out.append(
            DoubleCover(
                base,
                {e: rest.lengths[e] for e in edges},
                rest.dilated_vertices & cs,
                rest.dilated_edges & set(edges),
                {e: s for e, s in rest.sign.items() if e in set(edges)},
            )
        )
    return out


def is_elementary(c):
    """Structural test for an elementary cover of a connected graph."""
    if not is_connected(c.base):
        return False
    if c.dilated_vertices:
        dil = HalfEdgeGraph(
            [v for v in c.base.vertices if v in c.dilated_vertices],
            {e: c.base.ends[e] for e in c.base.edges if e in c.dilated_edges},
        )
        return is_connected(dil) and betti1(dil) == betti1(c.base)
    return betti1(c.base) == 1 and is_connected(c.total_graph.graph)


# circuit classification

def _cycle_signs(c, sub):
    # sign products along the fundamental cycles of sub; when every block
    # is a single cycle these are exactly the block cycles
    out = []
    for z in cycle_space(sub):
        p = 1
        for e, x in zip(sub.edges, z):
            if x:
                p *= c.sigma(e)
        out.append(p)
    return out


def classify_circuit(c, edges):
    """Tag an ``M``-circuit with its type ``I`` to ``VI``.

    The tag is decided from the number of dilated vertices of ``G[C]``,
    their valencies, the genus, and the valencies of the undilated branch
    points.  Raises :class:`ClassificationError` if nothing matches.
    """
    sub = induced_subgraph(c.base, edges)
    if not is_connected(sub):
        raise ClassificationError(f"circuit {list(edges)} is disconnected")
    dil = [v for v in sub.vertices if v in c.dilated_vertices]
    val = {v: sub.valency(v) for v in sub.vertices}
    und = [v for v in sub.vertices if v not in c.dilated_vertices]
    if any(val[v] == 1 for v in und):
        raise ClassificationError(f"circuit {list(edges)} has an undilated leaf")
    branch = sorted(val[v] for v in und if val[v] > 2)
    g = betti1(sub)
    tag = None
    if not dil:
        if g == 1 and not branch and _cycle_signs(c, sub) == [1]:
            tag = "I"
        elif g == 2 and branch == [3, 3] and _cycle_signs(c, sub) == [-1, -1]:
            if any(is_bridge(sub, e) for e in sub.edges):
                tag = "II"
        elif g == 2 and branch == [4] and _cycle_signs(c, sub) == [-1, -1]:
            tag = "III"
    elif len(dil) == 1:
        d = val[dil[0]]
        if g == 1 and d == 1 and branch == [3] and _cycle_signs(c, sub) == [-1]:
            tag = "IV"
        elif g == 1 and d == 2 and not branch:
            tag = "V"
    elif len(dil) == 2:
        if g == 0 and all(val[v] == 1 for v in dil) and not branch:
            tag = "VI"
    if tag is None:
        raise ClassificationError(f"circuit {list(edges)} matches no circuit type")
    return tag


# simplification

class SimplificationStep:
    __slots__ = ("kind", "contracted", "kept", "factor", "old_length", "new_length")

    def __init__(self, kind, contracted, kept=None, factor=None, old_length=None, new_length=None):
        self.kind = kind
        self.contracted = contracted
        self.kept = kept
        self.factor = factor
        self.old_length = old_length
        self.new_length = new_length

    def as_dict(self):
        d = {"kind": self.kind, "contracted": self.contracted}
        if self.kept is not None:
            d.update(
                kept=self.kept,
                factor=str(self.factor),
                old_length=str(self.old_length),
                new_length=str(self.new_length),
            )
        return d


def simplify(cover):
    """Contract 1-circuits of ``M*`` and one edge of each 2-circuit.

    Returns ``(cover, edge_map, transcript)``.  ``edge_map`` sends every
    surviving undilated edge to ``(edge, s)`` where ``s`` relates kernel-chain
    coordinates before and after; contracted edges are absent.
    """
    current = cover
    edge_map = {e: (e, 1) for e in cover.base.edges}
    transcript = []

    def apply(f, new_lengths=None):
        nonlocal current, edge_map
        new, _, emap = contract_cover(current, f)
        if new_lengths:
            new = new.replace(lengths={**new.lengths, **new_lengths})
        edge_map = {
            e: (emap[t][0], s * emap[t][1])
            for e, (t, s) in edge_map.items()
            if t in emap
        }
        current = new

    while True:
        view = SignedMatroidView(current)
        ones, twos, mult = view.circuits_dual_small()
        if ones:
            f = [c.edges[0] for c in ones]
            for e in f:
                transcript.append(SimplificationStep("1-circuit", e))
            apply(f)
            continue
        if not twos:
            break
        a, b = twos[0].edges
        if mult[a] == mult[b]:
            f1, f2 = a, b
        elif mult[a] == 2:
            f1, f2 = a, b
        else:
            f1, f2 = b, a
        factor = Fraction(mult[f1] ** 2, mult[f2] ** 2)
        old = current.lengths[f2]
        new_len = old + factor * current.lengths[f1]
        transcript.append(SimplificationStep("2-circuit", f1, f2, factor, old, new_len))
        apply([f1], {f2: new_len})
    return current, edge_map, transcript
