"""Gram matrix, volumes and polarization of the principalized Prym.

Gram convention: ``G[i][j] = sum_e 2 * g_i(e) * g_j(e) * l(e)`` over
undilated edges.  With this convention

    det(G) = 2 ** (h + 1 - d) * V

where ``V = 2 ** (1 - d) * sum_F 4 ** (ind(F) - 1) * prod_{e in F} l(e)``
sums over ogods, ``h`` is the Prym dimension and ``d`` the dilation index.
``2 ** (h + 1 - d)`` is also the determinant of the polarization map, so
``V`` is reported as the squared volume.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt

import sympy

from .cover import homology_maps, kernel_chain_to_total, _coordinates
from .cycles import fundamental_cycle, index_magnitudes, kernel_lattice
from .graph import betti1, cycle_space, delete_edges, is_connected
from .linalg import det, hnf_basis, int_kernel, matmul, same_lattice, snf, transpose
from .matroid import SignedMatroidView, simplify


class PrymError(RuntimeError):
    pass


def gram_matrix(basis, lengths):
    """``2 * sum gamma_i(e) gamma_j(e) l(e)``; ``lengths`` is aligned with the chains.

    Lengths may be Fractions or sympy expressions.
    """
    n = len(basis)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = 0
            for a, b, l in zip(basis[i], basis[j], lengths):
                if a and b:
                    s += 2 * a * b * l
            g[i][j] = g[j][i] = s
    return g


def symbols_for(edges):
    return [sympy.Symbol(str(e), positive=True) for e in edges]


class VolumePolynomial:
    """Monomials as sorted tuples of edge ids, with Fraction coefficients."""

    def __init__(self, terms, order):
        self.terms = {k: v for k, v in terms.items() if v}
        self.order = list(order)

    def evaluate(self, lengths):
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            p = Fraction(coeff)
            for e in mono:
                p *= lengths[e]
            total += p
        return total

    def to_sympy(self):
        syms = dict(zip(self.order, symbols_for(self.order)))
        expr = sympy.Integer(0)
        for mono, coeff in self.terms.items():
            t = sympy.Rational(coeff.numerator, coeff.denominator)
            for e in mono:
                t *= syms[e]
            expr += t
        return sympy.expand(expr)

    def as_dict(self):
        return {"*".join(map(str, k)) if k else "1": str(v) for k, v in sorted(
            self.terms.items(), key=lambda kv: [self.order.index(e) for e in kv[0]]
        )}

    def __eq__(self, other):
        return isinstance(other, VolumePolynomial) and self.terms == other.terms

    def __repr__(self):
        return f"VolumePolynomial({self.as_dict()})"


def polarization_matrix(c, basis):
    """Matrix of the map from the kernel to the torsion-free cokernel of pullback."""
    pp = homology_maps(c)
    tg = c.total_graph.graph
    ground = c.undilated_edges
    coords = []
    for v in basis:
        coeff = dict(zip(ground, v))
        z = kernel_chain_to_total(c, [coeff.get(e, 0) for e in c.base.edges])
        coords.append(_coordinates(tg, pp.total_basis, z))
    gt = len(pp.total_basis)
    phi = int_kernel(transpose(pp.pullback, len(pp.base_basis)), gt)
    return matmul(phi, transpose(coords, gt), len(basis)) if coords else [[] for _ in phi]


def polarization_type(c, basis=None):
    """Invariant factors of the induced polarization, checked against ``(1^(d-1), 2^(h-d+1))``."""
    view = SignedMatroidView(c)
    if basis is None:
        basis = kernel_lattice(view).basis
    h = len(basis)
    if h == 0:
        return []
    factors = snf(polarization_matrix(c, basis), h)
    d = view.dilation_index
    expected = [1] * (d - 1) + [2] * (h - d + 1)
    if factors != expected:
        raise PrymError(f"polarization type {factors} differs from {expected}")
    return factors


class PrymData:
    def __init__(self, cover, basis, gram, volume_squared, polarization, dilation_index,
                 provenance=None, ground=None, ogod=None):
        self.cover = cover
        self.basis = basis
        self.gram = gram
        self.volume_squared = volume_squared
        self.polarization = polarization
        self.dilation_index = dilation_index
        self.provenance = provenance
        self.ground = ground
        self.ogod = ogod

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def gram_det(self):
        return det(self.gram)


def gram_det_scale(h, d):
    return Fraction(2) ** (h + 1 - d) if h else Fraction(1)


def prym_data(c, ogod=None):
    view = SignedMatroidView(c)
    lat = kernel_lattice(view, ogod)
    lengths = [c.lengths[e] for e in view.ground]
    gram = gram_matrix(lat.basis, lengths)
    h = len(lat.basis)
    d = view.dilation_index
    vol = det(gram) / gram_det_scale(h, d)
    pol = polarization_type(c, lat.basis) if lat.provenance != "ogod-sublattice" else None
    return PrymData(c, lat.basis, gram, vol, pol, d, lat.provenance, view.ground, lat.ogod)


def prym_volume_det(p):
    """Squared volume from the Gram determinant, normalized as in the module docstring."""
    return det(p.gram) / gram_det_scale(p.dimension, p.dilation_index)


def prym_volume_polynomial(view):
    d = view.dilation_index
    terms = {}
    for o in view.ogods:
        terms[o.edges] = terms.get(o.edges, Fraction(0)) + Fraction(2) ** (1 - d) * 4 ** (o.index - 1)
    return VolumePolynomial(terms, view.ground)


def prym_volume_ogod(view, lengths=None):
    """Squared volume as a sum over ogods; returns ``(value, polynomial)``."""
    poly = prym_volume_polynomial(view)
    lengths = lengths or view.cover.lengths
    return poly.evaluate(lengths), poly


def jacobian_polynomial(g):
    if not is_connected(g):
        raise PrymError("jacobian volume needs a connected graph")
    k = betti1(g)
    terms = {}
    for f in combinations(g.edges, k):
        rest = delete_edges(g, f)
        if is_connected(rest) and betti1(rest) == 0:
            terms[f] = Fraction(1)
    return VolumePolynomial(terms, g.edges)


def jacobian_volume(g, lengths):
    """Sum over complements of spanning trees; returns ``(value, polynomial)``."""
    poly = jacobian_polynomial(g)
    return poly.evaluate(lengths), poly


def jacobian_gram(g, lengths):
    basis = cycle_space(g)
    n = len(basis)
    ls = [lengths[e] for e in g.edges]
    return [[sum(a * b * l for a, b, l in zip(basis[i], basis[j], ls)) for j in range(n)] for i in range(n)]


# reconstruction from matroid data

def matroid_package(view):
    """Matroid data needed to rebuild the Prym, indexed by ground positions.

    Contains signed circuits, the ogods with their indices, the index of
    every ``F - e`` for an ogod ``F``, and the lengths.
    """
    pos = {e: i for i, e in enumerate(view.ground)}
    circuits = []
    for circ in view.circuits:
        fc = fundamental_cycle(view, circ)
        signs = {pos[e]: (1 if x > 0 else -1) for e, x in zip(view.ground, fc.coefficients) if x}
        circuits.append(signs)
    ogods = [(tuple(pos[e] for e in o.edges), o.index) for o in view.ogods]
    index = {}
    for o in view.ogods:
        for e in o.edges:
            fe = tuple(x for x in o.edges if x != e)
            index[tuple(pos[x] for x in fe)] = view.index(fe)
        index[tuple(pos[x] for x in o.edges)] = o.index
    return {
        "size": len(view.ground),
        "circuits": circuits,
        "ogods": ogods,
        "index": index,
        "lengths": [view.cover.lengths[e] for e in view.ground],
        "dilation_index": min((o[1] for o in ogods), default=1),
    }


def _package_cycle(pkg, signs):
    edges = sorted(signs)
    mags = index_magnitudes(None, edges, pkg["index"], pkg["ogods"])
    g = 0
    for m in mags:
        g = gcd(g, m)
    v = [0] * pkg["size"]
    for e, m in zip(edges, mags):
        v[e] = signs[e] * (m // g)
    return v


def prym_from_matroid(pkg):
    """Rebuild lattice basis, Gram matrix and squared volume from a package alone."""
    n = pkg["size"]
    cycles = [_package_cycle(pkg, s) for s in pkg["circuits"]]
    ones = [o for o in pkg["ogods"] if o[1] == 1]
    if ones:
        f = min(ones, key=lambda o: [i for i in range(n) if i not in o[0]])[0]
        basis = []
        comp = set(range(n)) - set(f)
        for e in f:
            circ = next(
                v for v in cycles if v[e] and all(v[i] == 0 or i in comp or i == e for i in range(n))
            )
            basis.append(circ if circ[e] > 0 else [-x for x in circ])
        provenance = "ogod"
    else:
        basis = hnf_basis(cycles, n)
        provenance = "hnf"
    gram = gram_matrix(basis, pkg["lengths"])
    h = len(basis)
    d = pkg["dilation_index"]
    vol = det(gram) / gram_det_scale(h, d)
    return PrymData(None, basis, gram, vol, None, d, provenance)


# comparison

def _inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _qform(g, x, y):
    return sum(g[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])


SEARCH_LIMIT = 200_000


def short_vector_norms(g, bound, limit=SEARCH_LIMIT):
    """Sorted norms ``x^T G x <= bound`` over nonzero integer ``x`` (up to sign).

    Returns ``None`` when the search box holds more than ``limit`` points.
    """
    n = len(g)
    if n == 0:
        return []
    inv = _inverse(g)
    box = []
    size = 1
    for i in range(n):
        r = Fraction(bound) * inv[i][i]
        box.append(isqrt(r.numerator // r.denominator) + 1)
        size *= 2 * box[-1] + 1
    if size > limit:
        return None
    norms = []
    for x in product(*[range(-b, b + 1) for b in box]):
        if not any(x):
            continue
        first = next(v for v in x if v)
        if first < 0:
            continue
        q = _qform(g, x, x)
        if q <= bound:
            norms.append(q)
    return sorted(norms)


def find_congruence(a, b, bound=3):
    """Unimodular ``U`` with ``U^T A U = B`` and entries in ``[-bound, bound]``, or ``None``."""
    n = len(a)
    rng = range(-bound, bound + 1)
    cols = []
    cands = [list(v) for v in product(rng, repeat=n)]

    def rec(j):
        if j == n:
            u = transpose(cols)
            return u if abs(det(u)) == 1 else None
        for v in cands:
            if _qform(a, v, v) != b[j][j]:
                continue
            if any(_qform(a, cols[i], v) != b[i][j] for i in range(j)):
                continue
            cols.append(v)
            r = rec(j + 1)
            if r is not None:
                return r
            cols.pop()
        return None

    return rec(0)


class Verdict:
    def __init__(self, kind, witness=None):
        self.kind = kind
        self.witness = witness or {}

    def __repr__(self):
        return f"Verdict({self.kind}, {self.witness})"


def compare_pryms(a, b, bound=3, max_dim=4):
    ga, gb = a.gram, b.gram
    if len(ga) != len(gb):
        return Verdict("distinct", {"dimension": [len(ga), len(gb)]})
    if ga == gb:
        return Verdict("equal-gram", {"gram": ga})
    da, db = det(ga), det(gb)
    if da != db:
        return Verdict("distinct", {"det": [da, db]})
    if len(ga) <= max_dim:
        u = find_congruence(ga, gb, bound)
        if u is not None:
            return Verdict("congruent", {"U": u})
    n = max([ga[i][i] for i in range(len(ga))] + [gb[i][i] for i in range(len(gb))], default=0)
    na, nb = short_vector_norms(ga, n), short_vector_norms(gb, n)
    if na is None or nb is None:
        return Verdict("undecided", {"det": da, "reason": "short vector search too large"})
    if na != nb:
        return Verdict("distinct", {"norm_bound": n, "norms": [na, nb]})
    return Verdict("undecided", {"det": da, "norm_bound": n})


# simplification invariance

class SimplificationReport:
    def __init__(self, ok, original, simplified, mapped_gram, transcript, edge_map, message=""):
        self.ok = ok
        self.original = original
        self.simplified = simplified
        self.mapped_gram = mapped_gram
        self.transcript = transcript
        self.edge_map = edge_map
        self.message = message


def verify_simplification_invariance(c):
    """Compare Grams before and after :func:`simplify` under the induced basis map."""
    before = prym_data(c)
    new, emap, transcript = simplify(c)
    after_view = SignedMatroidView(new)
    ground_after = after_view.ground
    pos_after = {e: i for i, e in enumerate(ground_after)}
    mapped = []
    for v in before.basis:
        w = [0] * len(ground_after)
        for e, x in zip(before.ground, v):
            if x and e in emap and emap[e][0] in pos_after:
                w[pos_after[emap[e][0]]] += emap[e][1] * x
        mapped.append(w)
    lengths = [new.lengths[e] for e in ground_after]
    gram = gram_matrix(mapped, lengths)
    after = prym_data(new)
    msgs = []
    if gram != before.gram:
        msgs.append("Gram matrix changed under the edge map")
    if not same_lattice(mapped, after.basis, len(ground_after)):
        msgs.append("mapped basis does not span the new kernel lattice")
    if not after_view.is_simple_dual():
        msgs.append("simplified matroid still has 1- or 2-circuits")
    if after.dilation_index != before.dilation_index:
        msgs.append("dilation index changed")
    return SimplificationReport(not msgs, before, after, gram, transcript, emap, "; ".join(msgs))
