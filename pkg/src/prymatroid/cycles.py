"""Fundamental cycles and the kernel lattice of the pushforward.

Kernel elements are integer chains on the base, indexed by the ground set
of the matroid view (undilated edges in base order).
"""

from __future__ import annotations

from itertools import product
from math import gcd

from .cover import kernel_chain_to_total, total_to_kernel_chain
from .graph import boundary_matrix, canonical_orientation, check_orientation, is_bridge, induced_subgraph
from .linalg import hnf_basis, int_kernel, matvec, same_lattice
from .matroid import MatroidError


class CycleError(RuntimeError):
    pass


def tau(c, orientation=None):
    """``tau(h) = sigma(e)`` if ``o(h) = +1`` and ``-1`` otherwise, on undilated half-edges."""
    o = orientation or canonical_orientation(c.base)
    check_orientation(c.base, o)
    out = {}
    for e in c.undilated_edges:
        s = c.sigma(e)
        for h in ((e, 0), (e, 1)):
            out[h] = s if o[h] == 1 else -1
    return out


def kernel_condition_matrix(c, edges=None, orientation=None):
    """Rows: undilated vertices; columns: ``edges``; entries ``sum tau(h)`` at the root.

    With a non-canonical orientation the chain coordinates refer to the
    lifts labelled by that orientation.
    """
    t = tau(c, orientation)
    edges = list(c.undilated_edges if edges is None else edges)
    rows = c.undilated_vertices
    pos = {v: i for i, v in enumerate(rows)}
    m = [[0] * len(edges) for _ in rows]
    for j, e in enumerate(edges):
        for s in (0, 1):
            v = c.base.ends[e][s]
            if v in pos:
                m[pos[v]][j] += t[(e, s)]
    return m


def kernel_basis_direct(c):
    """Integer kernel of the closedness conditions, HNF-reduced."""
    return int_kernel(kernel_condition_matrix(c), len(c.undilated_edges))


def kernel_basis_total(c):
    """Oracle: chains on the total graph that are closed and push forward to zero."""
    tg = c.total_graph.graph
    bd = boundary_matrix(tg)
    proj = [[1 if x[0] == e else 0 for x in tg.edges] for e in c.base.edges]
    vecs = int_kernel(bd + proj, len(tg.edges))
    ground = c.undilated_edges
    idx = [c.base.edge_index(e) for e in ground]
    out = []
    for z in vecs:
        full = total_to_kernel_chain(c, z)
        out.append([full[i] for i in idx])
    return hnf_basis(out, len(ground))


def to_total(c, chain):
    """Upstairs chain of a ground-set-indexed kernel chain."""
    coeff = dict(zip(c.undilated_edges, chain))
    full = [coeff.get(e, 0) for e in c.base.edges]
    return kernel_chain_to_total(c, full)


def is_closed(c, chain):
    return not any(matvec(kernel_condition_matrix(c), chain))


class FundamentalCycle:
    """Fundamental cycle of an ``M``-circuit as a ground-set-indexed chain."""

    __slots__ = ("circuit", "coefficients")

    def __init__(self, circuit, coefficients):
        self.circuit = circuit
        self.coefficients = tuple(coefficients)

    def __repr__(self):
        return f"FundamentalCycle({list(self.circuit.edges)}, {list(self.coefficients)})"

    def as_dict(self, ground):
        return {e: x for e, x in zip(ground, self.coefficients) if x}


def _kernel_route(view, edges):
    c = view.cover
    m = kernel_condition_matrix(c, edges)
    ker = int_kernel(m, len(edges))
    if len(ker) != 1 or any(x == 0 for x in ker[0]):
        raise CycleError(f"{list(edges)} is not a circuit of M")
    return ker[0]


def choose_ogod(view, edges, e):
    """Ogod ``F`` with ``edges - {e}`` outside ``F``: smallest index, then first in order."""
    rest = set(edges) - {e}
    cands = [o for o in view.ogods if not rest & set(o.edges)]
    if not cands:
        raise CycleError(f"no ogod avoids {sorted(map(str, rest))}")
    return min(cands, key=lambda o: (o.index, [view._pos[x] for x in o.edges]))


def index_magnitudes(view, edges, index=None, ogods=None):
    """Magnitudes ``2 ** (ind(F) - ind(F - e))`` before gcd normalization.

    ``index`` and ``ogods`` may be supplied to run the formula from stored
    matroid data instead of the cover.
    """
    out = []
    for e in edges:
        if ogods is None:
            f = choose_ogod(view, edges, e)
            fe = [x for x in f.edges if x != e]
            out.append(2 ** (f.index - view.index(fe)))
        else:
            rest = set(edges) - {e}
            cands = [o for o in ogods if not rest & set(o[0])]
            f, ind = min(cands, key=lambda o: (o[1], o[0]))
            fe = tuple(x for x in f if x != e)
            out.append(2 ** (ind - index[fe]))
    return out


def solve_signs(cond, magnitudes):
    """Sign vector (first entry +1) making ``sum s_i m_i col_i = 0``; ``None`` if none."""
    n = len(magnitudes)
    found = None
    for rest in product((1, -1), repeat=n - 1):
        signs = (1,) + rest
        v = [s * m for s, m in zip(signs, magnitudes)]
        if not any(matvec(cond, v)):
            if found is not None:
                raise CycleError("sign pattern is not unique")
            found = v
    return found


def _normalize(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    return v if v[0] > 0 else [-x for x in v]


def fundamental_cycle(view, circuit):
    """Fundamental cycle of an ``M``-circuit, computed by two routes.

    Route (a) is the primitive integer kernel of the closedness conditions on
    ``G[C]``.  Route (b) takes magnitudes from the index function and signs
    from closedness.  They must agree; the first support edge gets a positive
    coefficient.
    """
    edges = view.sorted_edges(circuit.edges)
    c = view.cover
    a = _normalize(_kernel_route(view, edges))
    mags = index_magnitudes(view, edges)
    sub = induced_subgraph(view.edge_free.base, edges)
    for e, mg in zip(edges, mags):
        if (mg == 2) != is_bridge(sub, e):
            raise CycleError(f"magnitude of {e!r} disagrees with the bridge test")
    signed = solve_signs(kernel_condition_matrix(c, edges), mags)
    if signed is None:
        raise CycleError(f"no closed sign pattern for {list(edges)}")
    b = _normalize(signed)
    if a != b:
        raise CycleError(f"routes disagree on {list(edges)}: {a} vs {b}")
    coeff = dict(zip(edges, a))
    return FundamentalCycle(circuit, [coeff.get(e, 0) for e in view.ground])


class KernelLattice:
    __slots__ = ("basis", "provenance", "ogod")

    def __init__(self, basis, provenance, ogod=None):
        self.basis = basis
        self.provenance = provenance
        self.ogod = ogod


def unique_circuit(view, independent, e):
    """The circuit of ``M`` inside ``independent + [e]`` that contains ``e``."""
    for c in view.circuits:
        s = set(c.edges)
        if e in s and s <= set(independent) | {e}:
            return c
    raise CycleError(f"no circuit through {e!r}")


def default_ogod(view):
    """Index-one ogod whose complement comes first in edge order."""
    ones = [o for o in view.ogods if o.index == 1]
    if not ones:
        return None

    def key(o):
        fs = set(o.edges)
        return [view._pos[x] for x in view.ground if x not in fs]

    return min(ones, key=key)


def ogod_basis(view, ogod):
    """Fundamental cycles of the circuits ``C_i`` in ``(E - F) + e_i``, with ``gamma(e_i) = +1``."""
    f = view.sorted_edges(ogod)
    comp = [x for x in view.ground if x not in set(f)]
    basis = []
    for e in f:
        circ = unique_circuit(view, comp, e)
        v = list(fundamental_cycle(view, circ).coefficients)
        i = view._pos[e]
        if v[i] < 0:
            v = [-x for x in v]
        basis.append(v)
    return basis


def all_fundamental_cycles(view):
    return [fundamental_cycle(view, c) for c in view.circuits]


def kernel_lattice(view, ogod=None):
    """Basis of the kernel of pushforward, as chains on the ground set.

    With an index-one ogod (the given one, or the default choice) the basis
    is the ogod's fundamental cycles.  Otherwise it is the HNF of the span of
    all fundamental cycles.  Either way the lattice is checked against the
    direct integer kernel.
    """
    c = view.cover
    n = len(view.ground)
    direct = kernel_basis_direct(c)
    if ogod is not None:
        fs = view.sorted_edges(ogod)
        match = [o for o in view.ogods if o.edges == fs]
        if not match:
            raise MatroidError(f"{list(fs)} is not an ogod")
        chosen = match[0]
    else:
        chosen = default_ogod(view)
    if chosen is not None and chosen.index == 1:
        basis = ogod_basis(view, chosen.edges)
        lat = KernelLattice(basis, "ogod", chosen.edges)
    elif chosen is not None:
        basis = ogod_basis(view, chosen.edges)
        return KernelLattice(basis, "ogod-sublattice", chosen.edges)
    else:
        cycles = [fc.coefficients for fc in all_fundamental_cycles(view)]
        lat = KernelLattice(hnf_basis(cycles, n), "hnf")
    if len(lat.basis) != view.rank or not same_lattice(lat.basis, direct, n):
        raise CycleError("kernel lattice does not match the integer kernel")
    return lat
