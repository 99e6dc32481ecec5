"""Simple R-uniform hypergraphs on vertices 1..n, with shadow, trace and I/O.

A :class:`Hypergraph` is immutable.  Edges are stored as strictly increasing
tuples in input order; the position of an edge in ``edges`` is its index and
certificates refer to edges by that index.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeSizeOutOfRange,
    EmptySubset,
    PreconditionError,
    RepeatedVertexInEdge,
    VertexOutOfRange,
)

Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]
    sizes: frozenset[int] = field(default=frozenset())

    def __post_init__(self) -> None:
        if not self.sizes:
            object.__setattr__(self, "sizes", frozenset(len(e) for e in self.edges))
        _check(self.n, self.edges, self.sizes)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Iterable[int]], sizes: Iterable[int] | None = None
    ) -> "Hypergraph":
        return validate([list(e) for e in edges], n, sizes)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def max_size(self) -> int:
        return max(self.sizes, default=0)

    @property
    def uniformity(self) -> int | None:
        """The common edge size k, or None if the hypergraph is not uniform."""
        present = {len(e) for e in self.edges}
        if len(present) == 1:
            return present.pop()
        if not present and len(self.sizes) == 1:
            return next(iter(self.sizes))
        return None

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def _pair_index(self) -> dict[Pair, tuple[int, ...]]:
        idx: dict[Pair, list[int]] = defaultdict(list)
        for i, e in enumerate(self.edges):
            for p in combinations(e, 2):
                idx[p].append(i)
        return {p: tuple(v) for p, v in idx.items()}

    def containing(self, u: int, v: int) -> tuple[int, ...]:
        """Indices (ascending) of the hyperedges containing both u and v."""
        return self._pair_index.get(pair(u, v), ())

    def codegree(self, u: int, v: int) -> int:
        return len(self.containing(u, v))

    def induced(self, keep: Iterable[int]) -> "Hypergraph":
        """Induced subhypergraph on ``keep``, vertex labels preserved."""
        ks = set(keep)
        return Hypergraph(self.n, tuple(e for e in self.edges if ks.issuperset(e)), self.sizes)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply the vertex map ``v -> perm[v-1]`` (perm is a permutation of 1..n)."""
        return Hypergraph(
            self.n, tuple(tuple(sorted(perm[v - 1] for v in e)) for e in self.edges), self.sizes
        )

    def with_isolated(self, extra: int) -> "Hypergraph":
        return Hypergraph(self.n + extra, self.edges, self.sizes)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend("e " + " ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"


def _check(n: int, edges: Sequence[tuple[int, ...]], sizes: frozenset[int]) -> None:
    if n < 0:
        raise PreconditionError(f"negative vertex count {n}")
    if any(s < 2 for s in sizes):
        raise EdgeSizeOutOfRange(f"allowed sizes {sorted(sizes)} must all be >= 2")
    seen: dict[tuple[int, ...], int] = {}
    for i, e in enumerate(edges):
        if len(e) not in sizes:
            raise EdgeSizeOutOfRange(f"edge {i} {list(e)} has size {len(e)} not in {sorted(sizes)}")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise RepeatedVertexInEdge(f"edge {i} {list(e)} is not strictly increasing")
        if e and (e[0] < 1 or e[-1] > n):
            raise VertexOutOfRange(f"edge {i} {list(e)} leaves 1..{n}")
        if e in seen:
            raise DuplicateEdge(f"edge {i} {list(e)} duplicates edge {seen[e]}")
        seen[e] = i


def validate(
    raw_edges: Iterable[Iterable[int]], n: int, sizes: Iterable[int] | None = None
) -> Hypergraph:
    """Normalize raw vertex lists into a :class:`Hypergraph`.

    Duplicates are reported, never merged.  When ``sizes`` is omitted the
    allowed sizes are the sizes that occur.
    """
    normalized = []
    for i, raw in enumerate(raw_edges):
        verts = [int(v) for v in raw]
        if len(set(verts)) != len(verts):
            raise RepeatedVertexInEdge(f"edge {i} {verts} repeats a vertex")
        for v in verts:
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"edge {i} {verts}: vertex {v} not in 1..{n}")
        normalized.append(tuple(sorted(verts)))
    allowed = frozenset(sizes) if sizes is not None else frozenset(len(e) for e in normalized)
    if sizes is not None and not allowed:
        raise EdgeSizeOutOfRange("empty size set")
    return Hypergraph(n, tuple(normalized), allowed)


@dataclass(frozen=True)
class Shadow:
    n: int
    pairs: frozenset[Pair]

    @property
    def is_complete(self) -> bool:
        return len(self.pairs) == self.n * (self.n - 1) // 2


def shadow(h: Hypergraph) -> Shadow:
    return Shadow(h.n, frozenset(h._pair_index))


def is_covering(h: Hypergraph) -> bool:
    return shadow(h).is_complete


def min_codegree(h: Hypergraph) -> int:
    """Minimum number of hyperedges containing a vertex pair (0 when n < 2)."""
    if h.n < 2:
        return 0
    return min(h.codegree(u, v) for u, v in combinations(h.vertices, 2))


@dataclass(frozen=True)
class TraceResult:
    """Trace of a host hypergraph on a vertex subset.

    ``vertex_map[i-1]`` is the host vertex behind trace vertex ``i``;
    ``origin[j]`` is the host index of a hyperedge whose intersection with the
    subset is trace edge ``j`` (the lowest such index).
    """

    trace: Hypergraph
    vertex_map: tuple[int, ...]
    origin: tuple[int, ...]

    def host_vertex(self, v: int) -> int:
        return self.vertex_map[v - 1]


def trace(h: Hypergraph, subset: Iterable[int]) -> TraceResult:
    s = sorted(set(subset))
    if len(s) < 2:
        raise EmptySubset(f"trace needs at least 2 vertices, got {s}")
    if s[0] < 1 or s[-1] > h.n:
        raise VertexOutOfRange(f"subset {s} leaves 1..{h.n}")
    local = {v: i + 1 for i, v in enumerate(s)}
    first: dict[tuple[int, ...], int] = {}
    for idx, e in enumerate(h.edges):
        inter = tuple(local[v] for v in e if v in local)
        if len(inter) >= 2 and inter not in first:
            first[inter] = idx
    edges = tuple(first)
    sizes = frozenset(len(e) for e in edges) or frozenset({2})
    return TraceResult(Hypergraph(len(s), edges, sizes), tuple(s), tuple(first.values()))


# --- text / JSON formats -------------------------------------------------


def parse_text(text: str) -> Hypergraph:
    n = None
    edges: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "n":
                if len(rest) != 1 or n is not None:
                    raise PreconditionError(f"line {lineno}: malformed or repeated 'n' line")
                n = int(rest[0])
            elif head == "e":
                edges.append([int(v) for v in rest])
            else:
                raise PreconditionError(f"line {lineno}: unknown record {head!r}")
        except ValueError as exc:
            if isinstance(exc, PreconditionError):
                raise
            raise PreconditionError(f"line {lineno}: {exc}") from None
    if n is None:
        raise PreconditionError("missing 'n <N>' line")
    return validate(edges, n)


def parse_json(data: str | dict) -> Hypergraph:
    obj = json.loads(data) if isinstance(data, str) else data
    try:
        return validate(obj["edges"], int(obj["n"]))
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"bad hypergraph JSON: {exc}") from None


def load(path: str | Path) -> Hypergraph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)
