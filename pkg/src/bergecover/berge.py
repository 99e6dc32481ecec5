"""Berge path and cycle certificates.

A certificate is a base-vertex sequence plus, for each consecutive base pair,
the index of the host hyperedge embedding it.  Validation is a pure check
against a host :class:`~bergecover.hypergraph.Hypergraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange, InvalidCertificate, PreconditionError
from .hypergraph import Hypergraph, TraceResult


@dataclass(frozen=True)
class BergePath:
    base: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.base:
            raise InvalidCertificate("a Berge path needs at least one base vertex")
        if len(self.edges) != len(self.base) - 1:
            raise InvalidCertificate(
                f"path with {len(self.base)} base vertices needs {len(self.base) - 1} edges"
            )

    def __len__(self) -> int:
        return len(self.base)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.base, self.base[1:]))

    def to_json(self) -> dict:
        return {"kind": "path", "base": list(self.base), "edges": list(self.edges)}


@dataclass(frozen=True)
class BergeCycle:
    base: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.base) < 3:
            raise InvalidCertificate(f"a Berge cycle has length >= 3, got {len(self.base)}")
        if len(self.edges) != len(self.base):
            raise InvalidCertificate("a Berge cycle needs one edge per base vertex")

    def __len__(self) -> int:
        return len(self.base)

    def pairs(self) -> list[tuple[int, int]]:
        b = self.base
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def to_json(self) -> dict:
        return {"kind": "cycle", "base": list(self.base), "edges": list(self.edges)}


def _check_indices(h: Hypergraph, edges: Sequence[int]) -> None:
    for i in edges:
        if not 0 <= i < h.m:
            raise IndexOutOfRange(f"edge index {i} outside 0..{h.m - 1}")


def _embeds(h: Hypergraph, pairs, edges) -> bool:
    sets = h.edge_sets
    return all(u in sets[e] and v in sets[e] for (u, v), e in zip(pairs, edges))


def verify_path(h: Hypergraph, p: BergePath) -> bool:
    _check_indices(h, p.edges)
    if len(set(p.base)) != len(p.base) or len(set(p.edges)) != len(p.edges):
        return False
    if any(not 1 <= v <= h.n for v in p.base):
        return False
    return _embeds(h, p.pairs(), p.edges)


def verify_cycle(h: Hypergraph, c: BergeCycle) -> bool:
    _check_indices(h, c.edges)
    if len(set(c.base)) != len(c.base) or len(set(c.edges)) != len(c.edges):
        return False
    if any(not 1 <= v <= h.n for v in c.base):
        return False
    return _embeds(h, c.pairs(), c.edges)


def lift(h: Hypergraph, tr: TraceResult, cert: BergeCycle | BergePath) -> BergeCycle | BergePath:
    """Carry a certificate on ``tr.trace`` back to the host ``h``.

    Base vertices go through the relabeling and each trace edge is replaced by
    its recorded origin; origins are injective, so edge distinctness survives.
    """
    check = verify_cycle if isinstance(cert, BergeCycle) else verify_path
    try:
        ok = check(tr.trace, cert)
    except IndexOutOfRange as exc:
        raise InvalidCertificate(str(exc)) from None
    if not ok:
        raise InvalidCertificate("certificate does not verify against the trace")
    base = tuple(tr.host_vertex(v) for v in cert.base)
    edges = tuple(tr.origin[e] for e in cert.edges)
    return type(cert)(base, edges)


def certificate_from_json(obj: dict) -> BergeCycle | BergePath:
    try:
        base, edges = list(obj["base"]), list(obj["edges"])
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"bad certificate JSON: {exc}") from None
    kind = obj.get("kind")
    if kind is None:
        kind = "cycle" if len(edges) == len(base) else "path"
    if kind == "cycle":
        return BergeCycle(tuple(base), tuple(edges))
    if kind == "path":
        return BergePath(tuple(base), tuple(edges))
    raise PreconditionError(f"unknown certificate kind {kind!r}")


def verify(h: Hypergraph, cert: BergeCycle | BergePath) -> bool:
    if isinstance(cert, BergeCycle):
        return verify_cycle(h, cert)
    return verify_path(h, cert)
