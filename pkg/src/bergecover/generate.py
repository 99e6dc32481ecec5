"""Random covering hypergraphs.

Sampling is deliberately non-uniform: a loose chain of triples along a random
vertex order seeds the edge set, uncovered pairs are then patched one at a
time, and optional extra edges or pruning push instances towards the dense
or the sparse end.  Covering holds by construction.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InvalidParameters
from .hypergraph import Hypergraph, is_covering


def random_covering_3graph(
    n: int,
    rng: random.Random | int | None = None,
    *,
    pair_prob: float = 0.0,
    extra: int = 0,
    prune: bool = False,
) -> Hypergraph:
    """Covering [3]-graph on ``n >= 3`` vertices.

    ``pair_prob`` is the chance that an uncovered pair (or an extra edge) is
    added as a 2-edge instead of a triple.  With ``prune`` redundant edges are
    removed in random order, leaving a minimal covering hypergraph.
    """
    if n < 3:
        raise InvalidParameters(f"need n >= 3, got {n}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges: set[tuple[int, ...]] = set()
    for i in range(0, n - 2, 2):
        edges.add(tuple(sorted(order[i : i + 3])))

    def covered() -> set[tuple[int, int]]:
        return {p for e in edges for p in combinations(e, 2)}

    cov = covered()
    missing = [p for p in combinations(range(1, n + 1), 2) if p not in cov]
    while missing:
        u, v = rng.choice(missing)
        if rng.random() < pair_prob:
            new = (u, v)
        else:
            x = rng.choice([z for z in range(1, n + 1) if z not in (u, v)])
            new = tuple(sorted((u, v, x)))
        edges.add(new)
        cov.update(combinations(new, 2))
        missing = [p for p in missing if p not in cov]

    all_edges = [e for k in (2, 3) for e in combinations(range(1, n + 1), k)]
    for _ in range(extra):
        pool = [e for e in all_edges if e not in edges and (len(e) == 3) != (rng.random() < pair_prob)]
        if not pool:
            break
        edges.add(rng.choice(pool))

    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    if prune:
        for e in list(edge_list):
            trial = [f for f in edge_list if f != e]
            if is_covering(Hypergraph(n, tuple(trial), frozenset({2, 3}))):
                edge_list = trial
    return Hypergraph(n, tuple(edge_list), frozenset({2, 3}))


def random_uniform_covering(n: int, k: int, rng: random.Random | int | None = None, extra: int = 0) -> Hypergraph:
    """Covering k-graph: patch uncovered pairs with random k-sets, then add ``extra`` more."""
    if not 2 <= k <= n:
        raise InvalidParameters(f"need 2 <= k <= n, got k={k}, n={n}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    verts = list(range(1, n + 1))
    edges: set[tuple[int, ...]] = set()
    cov: set[tuple[int, int]] = set()
    missing = list(combinations(verts, 2))
    while missing:
        u, v = rng.choice(missing)
        rest = rng.sample([z for z in verts if z not in (u, v)], k - 2)
        new = tuple(sorted([u, v, *rest]))
        edges.add(new)
        cov.update(combinations(new, 2))
        missing = [p for p in missing if p not in cov]
    pool = [e for e in combinations(verts, k) if e not in edges]
    rng.shuffle(pool)
    edges.update(pool[:extra])
    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    return Hypergraph(n, tuple(edge_list), frozenset({k}))
