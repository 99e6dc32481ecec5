"""Hypergraphs built around a prescribed red/blue state.

The (n-1)-cycle is 1 2 .. n-1, the missing vertex is n, red pairs get
{v_i, v_{i+1}, w} and blue pairs get a triple whose third vertex is drawn at
random; remaining pairs are covered by free edges that avoid every bridge.
"""

from __future__ import annotations

import random
from itertools import combinations

from bergecover.berge import BergeCycle
from bergecover.cyclefinder import RedBlueState
from bergecover.hypergraph import Hypergraph, is_covering


def bridges(colors: str) -> set[tuple[int, int]]:
    m = len(colors)
    reds = [i for i, c in enumerate(colors) if c == "R"]
    out = set()
    for i, j in combinations(reds, 2):
        if (j - i) % m in (0, 1, m - 1):
            continue
        for a, b in ((i, j), (i + 1, j + 1)):
            u, v = a % m + 1, b % m + 1
            out.add((min(u, v), max(u, v)))
    return out


def build_state(colors: str, rng: random.Random, triples_only: bool = False, tries: int = 2000):
    """Return (H, state) or None if no completion blocking all bridges was found."""
    m = len(colors)
    n = m + 1
    w = n
    br = bridges(colors)
    for _ in range(tries):
        cyc = []
        for i, c in enumerate(colors):
            a, b = i + 1, (i + 1) % m + 1
            if c == "R":
                cyc.append(tuple(sorted((a, b, w))))
            else:
                x = rng.choice([v for v in range(1, m + 1) if v not in (a, b)] + ([None] if not triples_only else []))
                cyc.append(tuple(sorted((a, b) if x is None else (a, b, x))))
        if len(set(cyc)) != m:
            continue
        covered = {p for e in cyc for p in combinations(e, 2)}
        if not br <= covered:
            continue
        edges = list(cyc)
        pool = [t for t in combinations(range(1, n + 1), 3)
                if t not in edges and not any(p in br for p in combinations(t, 2))]
        rng.shuffle(pool)
        for t in pool:
            if any(p not in covered for p in combinations(t, 2)) and rng.random() < 0.7:
                edges.append(t)
                covered.update(combinations(t, 2))
        for p in combinations(range(1, n + 1), 2):
            if p not in covered:
                if triples_only:
                    break
                edges.append(p)
                covered.add(p)
        h = Hypergraph(n, tuple(edges), frozenset({2, 3}))
        if not is_covering(h):
            continue
        cycle = BergeCycle(tuple(range(1, m + 1)), tuple(range(m)))
        st = RedBlueState.build(h, cycle, w)
        assert st.colors == colors
        return h, st
    return None
