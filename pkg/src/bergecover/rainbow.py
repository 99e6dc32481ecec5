"""Covering hypergraphs as bounded edge colorings of the complete graph.

Coloring each pair by the index of a hyperedge containing it turns a covering
k-graph into a coloring of K_n in which every color class has at most C(k, 2)
edges.  A rainbow subgraph of that coloring uses distinct colors, hence
distinct hyperedges, so it is a Berge copy of itself in the hypergraph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .berge import BergeCycle, verify_cycle
from .errors import ColoringMismatch, InternalInvariantViolation, NotCovering, NotRainbow
from .hypergraph import Hypergraph, pair


@dataclass(frozen=True)
class EdgeColoredClique:
    n: int
    color: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        expected = self.n * (self.n - 1) // 2
        if len(self.color) != expected or any(
            not (1 <= u < v <= self.n) for u, v in self.color
        ):
            raise ColoringMismatch(f"coloring must assign exactly the {expected} pairs of 1..{self.n}")

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.color.items()))))

    def of(self, u: int, v: int) -> int:
        return self.color[pair(u, v)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs": [{"u": u, "v": v, "color": c} for (u, v), c in sorted(self.color.items())],
        }


def to_coloring(h: Hypergraph) -> EdgeColoredClique:
    """Color each pair by the lowest index of a hyperedge containing it."""
    color: dict[tuple[int, int], int] = {}
    for u in range(1, h.n + 1):
        for v in range(u + 1, h.n + 1):
            containing = h.containing(u, v)
            if not containing:
                raise NotCovering(f"pair {{{u}, {v}}} lies in no hyperedge")
            color[(u, v)] = containing[0]
    g = EdgeColoredClique(h.n, color)
    limit = comb(h.max_size, 2) if h.edges else 0
    if boundedness(g) > limit:
        raise InternalInvariantViolation(
            "color class larger than the pairs of its hyperedge",
            {"n": h.n, "edges": [list(e) for e in h.edges]},
        )
    return g


def boundedness(g: EdgeColoredClique) -> int:
    """Size of the largest color class (0 for the empty clique)."""
    return max(Counter(g.color.values()).values(), default=0)


def rainbow_to_berge(g: EdgeColoredClique, h: Hypergraph, cycle) -> BergeCycle:
    """Embed a rainbow cycle of ``g`` as a Berge cycle of ``h`` via its colors."""
    base = tuple(cycle)
    if g.n != h.n:
        raise ColoringMismatch(f"coloring has {g.n} vertices, hypergraph has {h.n}")
    s = len(base)
    colors = [g.of(base[i], base[(i + 1) % s]) for i in range(s)]
    if len(set(colors)) != s:
        raise NotRainbow(f"cycle {list(base)} repeats a color: {colors}")
    for i, c in enumerate(colors):
        if not 0 <= c < h.m or not {base[i], base[(i + 1) % s]} <= h.edge_sets[c]:
            raise ColoringMismatch(f"color {c} does not name a hyperedge containing its pair")
    cert = BergeCycle(base, tuple(colors))
    if not verify_cycle(h, cert):
        raise InternalInvariantViolation("rainbow cycle does not verify", {"cycle": cert.to_json()})
    return cert


def berge_to_rainbow(g: EdgeColoredClique, cert: BergeCycle) -> tuple[int, ...] | None:
    """The base cycle, if every certificate edge is the color of its pair; else None.

    ``None`` signals a certificate that uses some hyperedge other than the
    lowest-index container of its pair; no recoloring is attempted.
    """
    s = len(cert.base)
    for i, e in enumerate(cert.edges):
        if g.of(cert.base[i], cert.base[(i + 1) % s]) != e:
            return None
    return tuple(cert.base)
