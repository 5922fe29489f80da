"""Executable invariants, shared by the fuzz command and the test suite.

Every check returns a list of failure messages; an empty list means pass.
"""

from __future__ import annotations

import random
from itertools import combinations

from .cover import check_push_pull, homology_maps, reorient
from .cycles import (
    all_fundamental_cycles,
    index_magnitudes,
    kernel_basis_direct,
    kernel_basis_total,
    kernel_condition_matrix,
)
from .graph import induced_subgraph, is_bridge
from .linalg import hnf_basis, int_kernel
from .matroid import SignedMatroidView
from .prym import (
    gram_matrix,
    matroid_package,
    prym_data,
    prym_from_matroid,
    prym_volume_det,
    prym_volume_ogod,
    verify_simplification_invariance,
)


def rank_law(c):
    view = SignedMatroidView(c)
    out = []
    if view.rank != c.total_genus - c.genus:
        out.append(f"rank {view.rank} != {c.total_genus} - {c.genus}")
    if len(view.greedy_basis_dual()) != view.rank:
        out.append("greedy basis size differs from rank")
    if len(kernel_basis_direct(c)) != view.rank:
        out.append("kernel rank differs from rank")
    if c.genus > 0 or c.total_genus > 0:
        pp = homology_maps(c)
        if not check_push_pull(pp):
            out.append("pushforward after pullback is not 2")
        n = len(pp.total_basis)
        if len(int_kernel(pp.pushforward, n)) != view.rank:
            out.append("kernel of the pushforward matrix has the wrong rank")
    return out


def kernel_oracle(c):
    n = len(c.undilated_edges)
    if hnf_basis(kernel_basis_direct(c), n) != kernel_basis_total(c):
        return ["closedness kernel differs from the total-graph kernel"]
    return []


def volume_identity(c):
    view = SignedMatroidView(c)
    p = prym_data(c)
    a = prym_volume_det(p)
    b = prym_volume_ogod(view)[0]
    return [] if a == b else [f"determinant volume {a} != ogod volume {b}"]


def polarization(c):
    p = prym_data(c)
    h, d = p.dimension, p.dilation_index
    expected = [1] * (d - 1) + [2] * (h - d + 1) if h else []
    return [] if p.polarization == expected else [f"type {p.polarization} != {expected}"]


def simplification(c):
    r = verify_simplification_invariance(c)
    return [] if r.ok else [r.message]


def reconstruction(c):
    view = SignedMatroidView(c)
    direct = prym_data(c)
    rebuilt = prym_from_matroid(matroid_package(view))
    out = []
    if rebuilt.gram != direct.gram:
        out.append("Gram from matroid data differs from the direct Gram")
    if rebuilt.volume_squared != direct.volume_squared:
        out.append("volume from matroid data differs")
    n = len(view.ground)
    if hnf_basis(rebuilt.basis, n) != hnf_basis(direct.basis, n):
        out.append("lattice from matroid data differs")
    return out


def canonical_prym(c, p=None):
    """Orientation-free summary: HNF lattice, its Gram, volume, type, dilation index."""
    p = p or prym_data(c)
    n = len(p.ground)
    basis = hnf_basis(p.basis, n)
    lengths = [c.lengths[e] for e in p.ground]
    return (
        tuple(map(tuple, basis)),
        tuple(map(tuple, gram_matrix(basis, lengths))),
        p.volume_squared,
        tuple(p.polarization or ()),
        p.dilation_index,
    )


def reoriented_prym(c, flips):
    """Prym data of ``c`` with ``flips`` reversed, mapped back to the original coordinates."""
    c2, factor = reorient(c, flips)
    p2 = prym_data(c2)
    p2.basis = [[factor[e] * x for e, x in zip(p2.ground, v)] for v in p2.basis]
    return canonical_prym(c, p2)


def reorientation(c, rng=None, trials=5):
    rng = rng or random.Random(0)
    ref = canonical_prym(c)
    out = []
    for _ in range(trials):
        flips = [e for e in c.base.edges if rng.random() < 0.5]
        if reoriented_prym(c, flips) != ref:
            out.append(f"Prym data changed after reversing {flips}")
    return out


def all_independent_dual(view):
    return [set(f) for k in range(len(view.ground) + 1) for f in combinations(view.ground, k) if view.is_independent_dual(f)]


def matroid_axioms(c):
    view = SignedMatroidView(c)
    out = []
    indep = all_independent_dual(view)
    fam = {frozenset(f) for f in indep}
    if frozenset() not in fam:
        out.append("empty set is dependent")
    for f in fam:
        for e in f:
            if f - {e} not in fam:
                out.append(f"not hereditary at {sorted(map(str, f))}")
                break
    for a in fam:
        for b in fam:
            if len(a) < len(b) and not any(a | {x} in fam for x in b - a):
                out.append(f"exchange fails for {sorted(map(str, a))}, {sorted(map(str, b))}")
    r = max(len(f) for f in fam)
    if r != view.rank:
        out.append(f"maximal independent size {r} != rank {view.rank}")
    bases_dual = {f for f in fam if len(f) == r}
    ground = frozenset(view.ground)
    bases_m = {
        frozenset(f)
        for f in combinations(view.ground, len(ground) - r)
        if view.is_independent(f)
    }
    if {ground - b for b in bases_dual} != bases_m:
        out.append("complements of dual bases are not the bases of M")
    # M is a matroid too
    indep_m = {frozenset(f) for k in range(len(ground) + 1) for f in combinations(view.ground, k) if view.is_independent(f)}
    if max(len(f) for f in indep_m) != len(ground) - r:
        out.append("rank of M is not |E| - rank(M*)")
    if {frozenset(o.edges) for o in view.ogods} != bases_dual:
        out.append("ogods differ from dual bases")
    return out


def index_properties(c):
    view = SignedMatroidView(c)
    out = []
    fam = all_independent_dual(view)
    ind = {frozenset(f): view.index(f) for f in fam}
    for f, i in ind.items():
        if i > view.rank + 1:
            out.append(f"index {i} exceeds rank + 1")
        for e in f:
            if ind[f - {e}] > i:
                out.append("index is not monotone")
    bases = [frozenset(o.edges) for o in view.ogods]
    for o in view.ogods:
        if o.index < view.dilation_index:
            out.append("ogod index below the dilation index")
    if min(o.index for o in view.ogods) != view.dilation_index:
        out.append("minimal ogod index differs from the dilation index")
    for a, b in combinations(bases, 2):
        if len(a ^ b) == 2 and abs(ind[a] - ind[b]) > 1:
            out.append("index jumps by more than one across a basis exchange")
    return out


def circuit_patterns(c):
    """Types are unique and coefficients follow the bridge law."""
    view = SignedMatroidView(c)
    out = []
    for fc in all_fundamental_cycles(view):
        circ = fc.circuit
        edges = view.sorted_edges(circ.edges)
        sub = induced_subgraph(view.edge_free.base, edges)
        coeff = dict(zip(view.ground, fc.coefficients))
        raw = [2 if is_bridge(sub, e) else 1 for e in edges]
        g = 2 if all(x == 2 for x in raw) else 1
        if [abs(coeff[e]) for e in edges] != [x // g for x in raw]:
            out.append(f"coefficients of {list(edges)} break the bridge law")
        if index_magnitudes(view, edges) != raw:
            out.append(f"index magnitudes of {list(edges)} differ from the bridge law")
        if (circ.type == "VI") != (g == 2):
            out.append(f"halving rule fails on {list(edges)} of type {circ.type}")
        if circ.type in ("I", "III", "V") and any(x == 2 for x in raw):
            out.append(f"type {circ.type} circuit {list(edges)} has a bridge")
        if circ.type in ("II", "IV") and not any(x == 2 for x in raw):
            out.append(f"type {circ.type} circuit {list(edges)} has no bridge")
    return out


def _signs(v):
    return {i: (1 if x > 0 else -1) for i, x in enumerate(v) if x}


def oriented_axioms(c):
    view = SignedMatroidView(c)
    circuits = []
    for fc in all_fundamental_cycles(view):
        s = _signs(fc.coefficients)
        circuits.append(s)
        circuits.append({i: -x for i, x in s.items()})
    out = []
    keys = {tuple(sorted(s.items())) for s in circuits}
    if () in keys:
        out.append("empty oriented circuit")
    for s in circuits:
        if tuple(sorted((i, -x) for i, x in s.items())) not in keys:
            out.append("oriented circuits not closed under negation")
    for s in circuits:
        for t in circuits:
            if set(s) <= set(t) and s != t and s != {i: -x for i, x in t.items()}:
                out.append("two oriented circuits share a support with different signs")
    for s in circuits:
        for t in circuits:
            if s == {i: -x for i, x in t.items()}:
                continue
            for e in s:
                if s[e] == 1 and t.get(e) == -1:
                    pos = ({i for i, x in s.items() if x == 1} | {i for i, x in t.items() if x == 1}) - {e}
                    neg = ({i for i, x in s.items() if x == -1} | {i for i, x in t.items() if x == -1}) - {e}
                    if not any(
                        {i for i, x in u.items() if x == 1} <= pos and {i for i, x in u.items() if x == -1} <= neg
                        for u in circuits
                    ):
                        out.append("elimination axiom fails")
    return out


def cocircuit_vector(c, view, support):
    """Row-space vector of the closedness matrix supported on ``support``."""
    m = kernel_condition_matrix(c)
    outside = [j for j, e in enumerate(view.ground) if e not in set(support)]
    cols = [[row[j] for row in m] for j in outside]
    ys = int_kernel(cols, len(m)) if cols else [[int(i == k) for i in range(len(m))] for k in range(len(m))]
    for y in ys:
        v = [sum(y[i] * m[i][j] for i in range(len(m))) for j in range(len(view.ground))]
        if any(v):
            return v
    return None


def orthogonality(c):
    view = SignedMatroidView(c)
    out = []
    cycles = [fc.coefficients for fc in all_fundamental_cycles(view)]
    for d in view.circuits_dual:
        v = cocircuit_vector(c, view, d.edges)
        if v is None:
            out.append(f"no row-space vector on {list(d.edges)}")
            continue
        supp = {view.ground[j] for j, x in enumerate(v) if x}
        if supp != set(d.edges):
            out.append(f"dual circuit {list(d.edges)} is not a minimal row-space support")
            continue
        for g in cycles:
            prods = {g[j] * v[j] for j in range(len(g)) if g[j] and v[j]}
            prods = {1 if x > 0 else -1 for x in prods}
            if prods and prods != {1, -1}:
                out.append(f"orthogonality fails for {list(d.edges)}")
    return out


SUITE = {
    "rank_law": rank_law,
    "kernel_oracle": kernel_oracle,
    "volume_identity": volume_identity,
    "polarization": polarization,
    "simplification": simplification,
    "reconstruction": reconstruction,
    "reorientation": reorientation,
    "circuit_patterns": circuit_patterns,
}

SMALL_SUITE = {
    "matroid_axioms": matroid_axioms,
    "index_properties": index_properties,
    "oriented_axioms": oriented_axioms,
    "orthogonality": orthogonality,
}


def run_suite(c, small_limit=6):
    """Run every check; exhaustive ones only when the ground set is small."""
    results = {}
    for name, fn in SUITE.items():
        results[name] = _safe(fn, c)
    if len(c.undilated_edges) <= small_limit:
        for name, fn in SMALL_SUITE.items():
            results[name] = _safe(fn, c)
    return results


def _safe(fn, c):
    try:
        return fn(c)
    except Exception as exc:  # a crash is a failed property
        return [f"{type(exc).__name__}: {exc}"]
