"""Small named covers used in tests, demos and the shipped documents."""

from __future__ import annotations

from fractions import Fraction

from .cover import DoubleCover, validate
from .graph import HalfEdgeGraph


def _lengths(names, values):
    if values is None:
        values = [1] * len(names)
    return {e: Fraction(x) for e, x in zip(names, values)}


def cover_a(x=None):
    """Two free vertices joined by an even and an odd edge, an odd loop at each."""
    g = HalfEdgeGraph(
        ["u", "v"],
        {"e1": ("u", "u"), "e2": ("u", "v"), "e3": ("u", "v"), "e4": ("v", "v")},
    )
    sign = {"e1": -1, "e2": 1, "e3": -1, "e4": -1}
    return validate(DoubleCover(g, _lengths(g.edges, x), (), (), sign))


def cover_b(y=None):
    """A dilated vertex joined twice to a free vertex that carries an odd loop."""
    g = HalfEdgeGraph(
        ["w", "v"],
        {"f1": ("w", "v"), "f2": ("v", "w"), "f3": ("v", "v")},
    )
    return validate(DoubleCover(g, _lengths(g.edges, y), {"w"}, (), {"f3": -1}))


def cover_c(lengths=None):
    """Dumbbell: odd loops at both ends of a bridge."""
    g = HalfEdgeGraph(
        ["u", "v"],
        {"e1": ("u", "u"), "b": ("u", "v"), "e2": ("v", "v")},
    )
    sign = {"e1": -1, "b": 1, "e2": -1}
    return validate(DoubleCover(g, _lengths(g.edges, lengths), (), (), sign))


def cover_d(n, lengths=None):
    """Path with ``n`` undilated edges and every vertex dilated."""
    vs = [f"w{i}" for i in range(n + 1)]
    ends = {f"e{i + 1}": (vs[i], vs[i + 1]) for i in range(n)}
    g = HalfEdgeGraph(vs, ends)
    return validate(DoubleCover(g, _lengths(g.edges, lengths), vs, (), {}))


def cover_e(length=1):
    """A single odd loop."""
    g = HalfEdgeGraph(["u"], {"e": ("u", "u")})
    return validate(DoubleCover(g, {"e": Fraction(length)}, (), (), {"e": -1}))


def no_ogod_cover(lengths=None):
    """Two dilated and two free vertices where every ogod has index two."""
    g = HalfEdgeGraph(
        ["w1", "p", "q", "w2"],
        {
            "a": ("w1", "p"),
            "b": ("p", "q"),
            "c": ("q", "w2"),
            "d": ("w1", "q"),
            "f": ("p", "w2"),
        },
    )
    return validate(DoubleCover(g, _lengths(g.edges, lengths), {"w1", "w2"}, (), {"b": 1}))


def even_cycle_cover():
    """A balanced two-edge cycle with an odd loop attached; the cycle is a type I circuit."""
    g = HalfEdgeGraph(["u", "v"], {"a": ("u", "v"), "b": ("u", "v"), "l": ("u", "u")})
    return validate(DoubleCover(g, _lengths(g.edges, None), (), (), {"a": 1, "b": 1, "l": -1}))


def pendant_tree_cover():
    """An odd loop with a dilation-free tree hanging off it."""
    g = HalfEdgeGraph(
        ["u", "t1", "t2", "t3"],
        {"l": ("u", "u"), "p": ("u", "t1"), "q": ("t1", "t2"), "r": ("t1", "t3")},
    )
    sign = {"l": -1, "p": 1, "q": 1, "r": 1}
    return validate(DoubleCover(g, _lengths(g.edges, [2, 1, 3, 1]), (), (), sign))


def figure_eight_cover():
    """Two odd loops at one free vertex."""
    g = HalfEdgeGraph(["u"], {"a": ("u", "u"), "b": ("u", "u")})
    return validate(DoubleCover(g, _lengths(g.edges, [1, 2]), (), (), {"a": -1, "b": -1}))


def theta_cover():
    """Theta graph with one odd path."""
    g = HalfEdgeGraph(["u", "v"], {"a": ("u", "v"), "b": ("u", "v"), "c": ("u", "v")})
    return validate(DoubleCover(g, _lengths(g.edges, [1, 2, 3]), (), (), {"a": 1, "b": 1, "c": -1}))


def dilated_edge_cover():
    """A dilated path of two edges, an undilated edge parallel to it, and an odd cycle."""
    g = HalfEdgeGraph(
        ["w1", "w2", "w3", "u", "v"],
        {
            "d1": ("w1", "w2"),
            "d2": ("w2", "w3"),
            "x": ("w1", "w3"),
            "y": ("w3", "u"),
            "z": ("u", "v"),
            "s": ("v", "u"),
        },
    )
    sign = {"z": 1, "s": -1}
    return validate(DoubleCover(g, _lengths(g.edges, [2, 2, 1, 3, 1, 1]), {"w1", "w2", "w3"}, {"d1", "d2"}, sign))


def dilated_loop_cover():
    """A dilated vertex with a dilated loop, an undilated loop, and a pendant odd loop."""
    g = HalfEdgeGraph(
        ["w", "u"],
        {"dl": ("w", "w"), "ul": ("w", "w"), "b": ("w", "u"), "o": ("u", "u")},
    )
    return validate(DoubleCover(g, _lengths(g.edges, [4, 1, 2, 1]), {"w"}, {"dl"}, {"o": -1}))


def two_sided_bridge_cover():
    """A bridge between two dilated vertices, each carrying an odd loop through a free vertex."""
    g = HalfEdgeGraph(
        ["w1", "w2", "p", "q"],
        {"b": ("w1", "w2"), "a1": ("w1", "p"), "a2": ("p", "w1"), "c1": ("w2", "q"), "c2": ("q", "q")},
    )
    return validate(DoubleCover(g, _lengths(g.edges, None), {"w1", "w2"}, (), {"c2": -1}))


def corpus():
    """Named covers with at most six undilated edges covering every circuit type."""
    from fractions import Fraction as Q

    return {
        "cover_a": cover_a([1, 1, 1, 2]),
        "cover_b": cover_b([Q(3, 2), Q(3, 2), 1]),
        "cover_c": cover_c([1, 2, 3]),
        "cover_d1": cover_d(1),
        "cover_d2": cover_d(2),
        "cover_d3": cover_d(3, [1, 2, 3]),
        "cover_e": cover_e(),
        "no_ogod": no_ogod_cover([1, 2, 3, 4, 5]),
        "even_cycle": even_cycle_cover(),
        "pendant_tree": pendant_tree_cover(),
        "figure_eight": figure_eight_cover(),
        "theta": theta_cover(),
        "dilated_edge": dilated_edge_cover(),
        "dilated_loop": dilated_loop_cover(),
        "two_sided_bridge": two_sided_bridge_cover(),
    }
