"""Brute-force ground truth.

Berge cycle/path existence is decided by enumerating base sequences in the
2-shadow (one representative per rotation/reflection class) and, for each
sequence, looking for a system of distinct representatives between its
consecutive pairs and the hyperedges containing them.  A plain backtracking
assignment is kept as a second, independent decision procedure.

Small hypergraphs are enumerated as bitmasks over a fixed list of candidate
edges; isomorphism classes are the orbits under all n! vertex permutations,
represented by the minimum mask in the orbit.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .berge import BergeCycle, BergePath
from .errors import CapExceeded, InvalidParameters, LengthOutOfRange
from .hypergraph import Hypergraph, is_covering

# Labeled enumeration materializes all 2**bits masks.
MAX_LABELED_BITS = 22
# Orderly (edge-by-edge) generation is used for sparse bands beyond that.
MAX_ORDERLY_CLASSES = 400_000
# Vectorized canonical forms build one table per permutation.
MAX_CANON_N = 7


# --- distinct representatives ---------------------------------------------


def assign_matching(h: Hypergraph, pairs: Sequence[tuple[int, int]]) -> list[int] | None:
    """Distinct hyperedges for ``pairs`` via augmenting paths, or None."""
    cand = [h.containing(u, v) for u, v in pairs]
    if any(not c for c in cand):
        return None
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for e in cand[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = i
                return True
        return False

    for i in range(len(pairs)):
        if not augment(i, set()):
            return None
    out = [0] * len(pairs)
    for e, i in owner.items():
        out[i] = e
    return out


def assign_backtrack(h: Hypergraph, pairs: Sequence[tuple[int, int]]) -> list[int] | None:
    """Same question as :func:`assign_matching`, by exhaustive backtracking."""
    cand = [h.containing(u, v) for u, v in pairs]
    chosen: list[int] = []
    used: set[int] = set()

    def go(i: int) -> bool:
        if i == len(pairs):
            return True
        for e in cand[i]:
            if e not in used:
                used.add(e)
                chosen.append(e)
                if go(i + 1):
                    return True
                used.discard(e)
                chosen.pop()
        return False

    return list(chosen) if go(0) else None


_ASSIGNERS = {"matching": assign_matching, "backtrack": assign_backtrack}


def _adjacency(h: Hypergraph) -> dict[int, list[int]]:
    adj: dict[int, set[int]] = {v: set() for v in h.vertices}
    for e in h.edges:
        for u, v in combinations(e, 2):
            adj[u].add(v)
            adj[v].add(u)
    return {v: sorted(a) for v, a in adj.items()}


def cycle_sequences(h: Hypergraph, s: int) -> Iterator[tuple[int, ...]]:
    """Cyclic base sequences of length s in the shadow, one per rotation/reflection class.

    The first vertex is the smallest and the second is smaller than the last.
    """
    adj = _adjacency(h)
    for v1 in h.vertices:
        seq = [v1]
        on = {v1}

        def grow() -> Iterator[tuple[int, ...]]:
            last = seq[-1]
            if len(seq) == s:
                if seq[1] < seq[-1] and v1 in adj[last]:
                    yield tuple(seq)
                return
            for u in adj[last]:
                if u > v1 and u not in on:
                    seq.append(u)
                    on.add(u)
                    yield from grow()
                    seq.pop()
                    on.discard(u)

        yield from grow()


def path_sequences(h: Hypergraph, t: int) -> Iterator[tuple[int, ...]]:
    """Base sequences of t distinct vertices in the shadow, one per reversal class."""
    adj = _adjacency(h)
    for v1 in h.vertices:
        seq = [v1]
        on = {v1}

        def grow() -> Iterator[tuple[int, ...]]:
            if len(seq) == t:
                if t == 1 or seq[0] < seq[-1]:
                    yield tuple(seq)
                return
            for u in adj[seq[-1]]:
                if u not in on:
                    seq.append(u)
                    on.add(u)
                    yield from grow()
                    seq.pop()
                    on.discard(u)

        yield from grow()


def exists_cycle(h: Hypergraph, s: int, method: str = "matching") -> BergeCycle | None:
    if not 3 <= s <= h.n:
        raise LengthOutOfRange(f"cycle length {s} outside 3..{h.n}")
    if h.m < s:
        return None
    assign = _ASSIGNERS[method]
    for seq in cycle_sequences(h, s):
        pairs = [(seq[i], seq[(i + 1) % s]) for i in range(s)]
        got = assign(h, pairs)
        if got is not None:
            return BergeCycle(seq, tuple(got))
    return None


def exists_path(h: Hypergraph, t: int, method: str = "matching") -> BergePath | None:
    if not 2 <= t <= h.n:
        raise LengthOutOfRange(f"path base count {t} outside 2..{h.n}")
    if h.m < t - 1:
        return None
    assign = _ASSIGNERS[method]
    for seq in path_sequences(h, t):
        got = assign(h, list(zip(seq, seq[1:])))
        if got is not None:
            return BergePath(seq, tuple(got))
    return None


def cycle_lengths(h: Hypergraph) -> set[int]:
    return {s for s in range(3, h.n + 1) if exists_cycle(h, s) is not None}


# --- edge spaces, masks and canonical forms --------------------------------


@dataclass(frozen=True)
class EdgeSpace:
    """Candidate edges for (n, sizes), ordered by size then lexicographically."""

    n: int
    sizes: tuple[int, ...]

    @cached_property
    def candidates(self) -> tuple[tuple[int, ...], ...]:
        verts = range(1, self.n + 1)
        return tuple(e for k in self.sizes for e in combinations(verts, k))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.candidates)}

    @property
    def bits(self) -> int:
        return len(self.candidates)

    @cached_property
    def pair_masks(self) -> list[int]:
        out = []
        for p in combinations(range(1, self.n + 1), 2):
            out.append(sum(1 << i for i, e in enumerate(self.candidates) if p[0] in e and p[1] in e))
        return out

    def encode(self, h: Hypergraph) -> int:
        return sum(1 << self.index[e] for e in h.edges)

    def decode(self, mask: int) -> Hypergraph:
        edges = tuple(e for i, e in enumerate(self.candidates) if mask >> i & 1)
        return Hypergraph(self.n, edges, frozenset(self.sizes))

    @cached_property
    def perm_images(self) -> np.ndarray:
        """``images[p, i]``: index of candidate i under the p-th vertex permutation."""
        rows = []
        for perm in permutations(range(1, self.n + 1)):
            rows.append([self.index[tuple(sorted(perm[v - 1] for v in e))] for e in self.candidates])
        return np.array(rows, dtype=np.int64).reshape(-1, self.bits)

    @cached_property
    def _tables(self) -> np.ndarray:
        if self.n > MAX_CANON_N:
            raise CapExceeded(f"vectorized canonical forms limited to n <= {MAX_CANON_N}")
        if self.bits > 62:
            raise CapExceeded("edge space does not fit in 62 bits")
        img = self.perm_images
        nperm, nchunks = img.shape[0], (self.bits + 7) // 8
        vals = np.arange(256, dtype=np.int64)
        tab = np.zeros((nchunks, nperm, 256), dtype=np.int64)
        for c in range(nchunks):
            for b in range(8):
                i = 8 * c + b
                if i >= self.bits:
                    break
                on = (vals >> b) & 1
                tab[c] |= on[None, :] * (np.int64(1) << img[:, i])[:, None]
        return tab

    def canonical_masks(self, masks: np.ndarray) -> np.ndarray:
        """Minimum image of each mask over all vertex permutations."""
        masks = np.asarray(masks, dtype=np.int64)
        tab = self._tables
        chunks = [((masks >> (8 * c)) & 255) for c in range(tab.shape[0])]
        best = np.full(masks.shape, np.iinfo(np.int64).max, dtype=np.int64)
        for p in range(tab.shape[1]):
            img = tab[0, p][chunks[0]]
            for c in range(1, tab.shape[0]):
                img |= tab[c, p][chunks[c]]
            np.minimum(best, img, out=best)
        return best

    def covering_filter(self, masks: np.ndarray) -> np.ndarray:
        keep = np.ones(masks.shape, dtype=bool)
        for pm in self.pair_masks:
            keep &= (masks & np.int64(pm)) != 0
        return keep

    @cached_property
    def _edge_pair_ids(self) -> list[list[int]]:
        pid = {p: j for j, p in enumerate(combinations(range(1, self.n + 1), 2))}
        return [[pid[p] for p in combinations(e, 2)] for e in self.candidates]

    def irredundant_filter(self, masks: np.ndarray) -> np.ndarray:
        """True where every edge of the mask covers some pair no other edge covers."""
        masks = np.asarray(masks, dtype=np.int64)
        private = np.stack(
            [np.bitwise_count(masks & np.int64(pm)) == 1 for pm in self.pair_masks], axis=1
        )
        keep = np.ones(masks.shape, dtype=bool)
        for i, ids in enumerate(self._edge_pair_ids):
            absent = ((masks >> np.int64(i)) & 1) == 0
            keep &= absent | private[:, ids].any(axis=1)
        return keep


@lru_cache(maxsize=None)
def edge_space(n: int, sizes: tuple[int, ...]) -> EdgeSpace:
    return EdgeSpace(n, tuple(sorted(sizes)))


def canonical_form(h: Hypergraph, sizes: Iterable[int] | None = None) -> tuple[int, int]:
    """``(n, mask)`` with mask minimal over all n! relabelings (pure Python)."""
    space = edge_space(h.n, tuple(sorted(sizes or h.sizes)))
    idx = space.index
    best = None
    for perm in permutations(range(1, h.n + 1)):
        mask = 0
        for e in h.edges:
            mask |= 1 << idx[tuple(sorted(perm[v - 1] for v in e))]
        if best is None or mask < best:
            best = mask
    return (h.n, best or 0)


def canonical_hypergraph(h: Hypergraph, sizes: Iterable[int] | None = None) -> Hypergraph:
    srt = tuple(sorted(sizes or h.sizes))
    return edge_space(h.n, srt).decode(canonical_form(h, srt)[1])


def _labeled_masks(space: EdgeSpace, m_min: int, m_max: int) -> np.ndarray:
    masks = np.arange(1 << space.bits, dtype=np.int64)
    pc = np.bitwise_count(masks)
    masks = masks[(pc >= m_min) & (pc <= m_max)]
    return masks[space.covering_filter(masks)]


def _orderly_classes(space: EdgeSpace, m_min: int, m_max: int, irredundant: bool = False) -> np.ndarray:
    """Canonical masks of all hypergraphs with m_min..m_max edges, grown edge by edge.

    With ``irredundant`` only families in which every edge owns a private pair
    are kept; the property is inherited by subfamilies, so pruning is safe.
    """
    level = np.zeros(1, dtype=np.int64)
    keep = [level] if m_min == 0 else []
    for m in range(1, m_max + 1):
        children = []
        for i in range(space.bits):
            bit = np.int64(1) << i
            parents = level[(level & bit) == 0]
            children.append(parents | bit)
        children = np.concatenate(children)
        if irredundant:
            children = children[space.irredundant_filter(children)]
        level = np.unique(space.canonical_masks(children))
        if not len(level):
            break
        if m >= m_min:
            keep.append(level)
    return np.concatenate(keep) if keep else np.zeros(0, dtype=np.int64)


def enumerate_covering(
    n: int,
    sizes: Iterable[int],
    m_min: int = 0,
    m_max: int | None = None,
    canonical: bool = True,
    *,
    minimal: bool = False,
    max_labeled_bits: int = MAX_LABELED_BITS,
    max_classes: int = MAX_ORDERLY_CLASSES,
) -> Iterator[Hypergraph]:
    """Covering hypergraphs on n vertices with edge sizes in ``sizes``.

    Yields one canonical representative per isomorphism class (in increasing
    mask order) when ``canonical``, otherwise every labeled hypergraph.
    With ``minimal`` only edge-minimal covering hypergraphs are produced
    (canonical, via the irredundant-family search); since Berge paths and
    cycles survive adding edges, these settle existence questions for all
    covering hypergraphs on n vertices.
    Raises :class:`CapExceeded` instead of truncating.
    """
    sz = tuple(sorted(set(sizes)))
    if not sz or min(sz) < 2:
        raise InvalidParameters(f"edge sizes must be >= 2, got {sz}")
    space = edge_space(n, sz)
    hi = space.bits if m_max is None else min(m_max, space.bits)
    if minimal:
        if n > MAX_CANON_N:
            raise CapExceeded(f"minimal enumeration limited to n <= {MAX_CANON_N}")
        masks = _orderly_classes(space, m_min, hi, irredundant=True)
        masks = masks[space.covering_filter(masks)]
    elif space.bits <= max_labeled_bits:
        masks = _labeled_masks(space, m_min, hi)
        if canonical:
            masks = np.unique(space.canonical_masks(masks))
    else:
        labeled = sum(math.comb(space.bits, m) for m in range(m_min, hi + 1))
        est = labeled / math.factorial(n)
        if not canonical or est > max_classes or n > MAX_CANON_N:
            raise CapExceeded(
                f"n={n}, sizes={list(sz)}, m in [{m_min}, {hi}]: ~{labeled:.3g} labeled "
                f"(~{est:.3g} classes) exceeds the enumeration cap"
            )
        masks = _orderly_classes(space, m_min, hi)
        masks = masks[space.covering_filter(masks)]
    for mask in masks.tolist():
        yield space.decode(mask)


def count_covering_bruteforce(n: int, sizes: Iterable[int]) -> int:
    """Isomorphism classes of covering hypergraphs by plain subset filtering (tiny n only)."""
    sz = tuple(sorted(set(sizes)))
    cands = [e for k in sz for e in combinations(range(1, n + 1), k)]
    seen = set()
    for r in range(len(cands) + 1):
        for sub in combinations(cands, r):
            h = Hypergraph(n, sub, frozenset(sz))
            if is_covering(h):
                seen.add(canonical_form(h, sz))
    return len(seen)


# --- experiments ----------------------------------------------------------


def missing_lengths(h: Hypergraph, upto: int | None = None) -> list[int]:
    """Lengths s in 3..min(m, n) (or ..upto) with no Berge cycle of length s."""
    top = min(h.m, h.n) if upto is None else upto
    return [s for s in range(3, top + 1) if exists_cycle(h, s) is None]


def _check_batch(hs: list[Hypergraph]) -> list[dict]:
    out = []
    for h in hs:
        miss = missing_lengths(h)
        if miss:
            out.append({"hypergraph": h.to_json(), "missing": miss})
    return out


def _run_batches(hs: list[Hypergraph], jobs: int) -> list[dict]:
    if jobs <= 1 or len(hs) < 2:
        return _check_batch(hs)
    shards = [hs[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_check_batch, shards))
    return [f for part in parts for f in part]


def _sort_failures(failures: list[dict]) -> list[dict]:
    def key(f):
        h = Hypergraph.from_edges(f["hypergraph"]["n"], f["hypergraph"]["edges"])
        return (h.n, canonical_form(h, (2, 3) if h.max_size <= 3 else (h.max_size,)))

    return sorted(failures, key=key)


def remark5_experiment(n_range: Iterable[int] = (3, 4, 5), jobs: int = 1) -> dict:
    """Covering {2,3}-graphs with m >= 3: report every class missing a length in 3..min(m, n)."""
    checked = 0
    failures: list[dict] = []
    for n in n_range:
        hs = list(enumerate_covering(n, (2, 3), m_min=3))
        checked += len(hs)
        failures.extend(_run_batches(hs, jobs))
    return {"checked": checked, "failures": _sort_failures(failures)}


def conjecture_search(
    k: int,
    n: int,
    mode: str = "exhaustive",
    budget: int = 10_000,
    seed: int = 0,
    m_min: int = 3,
    jobs: int = 1,
) -> dict:
    """Probe: does every covering k-graph with m >= 3 edges have all Berge cycle lengths 3..min(m, n)?"""
    if k < 4:
        raise InvalidParameters("the probe targets k >= 4")
    if n < k:
        raise InvalidParameters(f"n = {n} < k = {k}")
    if mode == "exhaustive":
        if not (k == 4 and n <= 6):
            raise CapExceeded("exhaustive mode is limited to k = 4, n <= 6")
        hs = list(enumerate_covering(n, (k,), m_min=max(m_min, 3)))
    elif mode == "random":
        from .generate import random_uniform_covering

        rng = random.Random(seed)
        total = math.comb(n, k)
        hs = []
        while len(hs) < budget:
            h = random_uniform_covering(n, k, rng, extra=rng.randint(0, total))
            if h.m >= max(m_min, 3):
                hs.append(h)
    else:
        raise InvalidParameters(f"unknown mode {mode!r}")
    failures = _run_batches(hs, jobs)
    return {"k": k, "n": n, "mode": mode, "checked": len(hs), "failures": _sort_failures(failures)}
