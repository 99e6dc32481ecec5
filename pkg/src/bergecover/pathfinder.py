"""Hamiltonian Berge paths in covering [3]-graphs.

The path is grown one vertex at a time.  An outside vertex ``u`` is attached
at whichever end has a free hyperedge through it; when both ends are blocked
the blocking hyperedges are forced to be {u, v1, v2} and {u, v_{t-1}, v_t},
every hyperedge through {v1, v_t} is then free, and rotating the path to
``v2 .. v_t v1 u`` gains a vertex.
"""

from __future__ import annotations

from .berge import BergePath, verify_path
from .errors import InternalInvariantViolation, NotCovering, NotThreeBounded, TooFewVertices
from .hypergraph import Hypergraph, is_covering


def check_covering_3graph(h: Hypergraph, min_n: int) -> None:
    if h.n < min_n:
        raise TooFewVertices(f"need n >= {min_n}, got n = {h.n}")
    if any(len(e) > 3 for e in h.edges):
        raise NotThreeBounded("hyperedges must have size at most 3")
    if not is_covering(h):
        raise NotCovering("some vertex pair lies in no hyperedge")


def _first_free(h: Hypergraph, u: int, v: int, used: set[int]) -> int | None:
    for e in h.containing(u, v):
        if e not in used:
            return e
    return None


def _dump(h: Hypergraph, base: list[int], emb: list[int], **extra) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges], "base": list(base), "emb": list(emb), **extra}


def find_hamiltonian_path(h: Hypergraph) -> BergePath:
    check_covering_3graph(h, 4)
    first = h.edges[0]
    base = [first[0], first[1]]
    emb = [0]
    used = {0}
    inside = set(base)

    for _ in range(h.n - 2):
        t = len(base)
        outside = [v for v in h.vertices if v not in inside]
        if t == 2:
            # A single edge blocks both ends for at most one outside vertex.
            for u in outside:
                if (e := _first_free(h, u, base[0], used)) is not None:
                    base.insert(0, u)
                    emb.insert(0, e)
                    break
                if (e := _first_free(h, u, base[-1], used)) is not None:
                    base.append(u)
                    emb.append(e)
                    break
            else:
                raise InternalInvariantViolation(
                    "no outside vertex attaches to a one-edge path", _dump(h, base, emb)
                )
        else:
            u = outside[0]
            v1, vt = base[0], base[-1]
            if (e := _first_free(h, u, v1, used)) is not None:
                base.insert(0, u)
                emb.insert(0, e)
            elif (e := _first_free(h, u, vt, used)) is not None:
                base.append(u)
                emb.append(e)
            else:
                h1 = h.containing(u, v1)[0]
                ht = h.containing(u, vt)[0]
                if h1 != emb[0] or ht != emb[-1]:
                    raise InternalInvariantViolation(
                        "blocked end edge does not embed the end pair",
                        _dump(h, base, emb, u=u, h1=h1, ht=ht),
                    )
                hp = _first_free(h, v1, vt, used)
                if hp is None:
                    raise InternalInvariantViolation(
                        "no free edge through the path ends", _dump(h, base, emb, u=u)
                    )
                # v2 .. vt v1 u : {vt, v1} -> hp, {v1, u} -> h1
                base = base[1:] + [v1, u]
                emb = emb[1:] + [hp, h1]
        used = set(emb)
        inside.update(base)
        if len(base) != t + 1:
            raise InternalInvariantViolation("path did not grow", _dump(h, base, emb))

    path = BergePath(tuple(base), tuple(emb))
    if not verify_path(h, path):
        raise InternalInvariantViolation("constructed path fails verification", _dump(h, base, emb))
    return path
