import random
from itertools import combinations

import numpy as np
import pytest
from conftest import FIVE_FOUR, complete, covering_3graphs
from hypothesis import given, strategies as st

from bergecover.berge import verify_cycle, verify_path
from bergecover.errors import CapExceeded, InvalidParameters, LengthOutOfRange
from bergecover.generate import random_covering_3graph
from bergecover.hypergraph import Hypergraph, is_covering
from bergecover.oracle import (
    assign_backtrack,
    assign_matching,
    canonical_form,
    conjecture_search,
    count_covering_bruteforce,
    cycle_lengths,
    cycle_sequences,
    edge_space,
    enumerate_covering,
    exists_cycle,
    exists_path,
    missing_lengths,
    remark5_experiment,
)

STAR_PLUS_TRIPLE = Hypergraph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3, 4)])


def test_no_hamiltonian_cycle_in_star_plus_triple():
    assert exists_cycle(STAR_PLUS_TRIPLE, 4) is None
    assert exists_cycle(STAR_PLUS_TRIPLE, 3) is not None


def test_pigeonhole_five_four():
    assert exists_cycle(FIVE_FOUR, 5) is None


@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_k36_all_lengths(s):
    h = complete(6)
    c = exists_cycle(h, s)
    assert c is not None and len(c) == s and verify_cycle(h, c)


def test_paths():
    assert exists_path(Hypergraph.from_edges(3, [(1, 2, 3)]), 3) is None
    h = Hypergraph.from_edges(4, [(1, 2, 3), (1, 2, 4)])
    p = exists_path(h, 3)
    assert p is not None and verify_path(h, p)


def test_length_errors():
    with pytest.raises(LengthOutOfRange):
        exists_cycle(complete(4), 5)
    with pytest.raises(LengthOutOfRange):
        exists_cycle(complete(4), 2)
    with pytest.raises(LengthOutOfRange):
        exists_path(complete(4), 1)


def test_cycle_sequences_are_unique_up_to_symmetry():
    seqs = list(cycle_sequences(complete(5, k=2), 5))
    # (5-1)!/2 Hamiltonian cycles of K5
    assert len(seqs) == 12
    keys = set()
    for s in seqs:
        rots = [s[i:] + s[:i] for i in range(5)]
        rots += [tuple(reversed(r)) for r in rots]
        keys.add(min(rots))
    assert len(keys) == 12


def test_backtrack_method_gives_same_answers():
    for s in (3, 4):
        a = exists_cycle(STAR_PLUS_TRIPLE, s)
        b = exists_cycle(STAR_PLUS_TRIPLE, s, method="backtrack")
        assert (a is None) == (b is None)


@given(st.integers(0, 10**9))
def test_matching_agrees_with_backtracking(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    cands = [e for k in (2, 3) for e in combinations(range(1, n + 1), k)]
    h = Hypergraph(n, tuple(rng.sample(cands, rng.randint(1, min(len(cands), 9)))), frozenset({2, 3}))
    s = rng.randint(2, n)
    base = rng.sample(range(1, n + 1), s)
    pairs = list(zip(base, base[1:] + base[:1])) if s >= 3 else list(zip(base, base[1:]))
    a, b = assign_matching(h, pairs), assign_backtrack(h, pairs)
    assert (a is None) == (b is None)
    for got in (a, b):
        if got is not None:
            assert len(set(got)) == len(pairs)
            assert all(set(p) <= h.edge_sets[e] for p, e in zip(pairs, got))


def test_enumeration_counts_match_bruteforce():
    assert sum(1 for _ in enumerate_covering(4, (3,))) == count_covering_bruteforce(4, (3,)) == 2
    assert sum(1 for _ in enumerate_covering(3, (2, 3))) == count_covering_bruteforce(3, (2, 3)) == 5
    assert sum(1 for _ in enumerate_covering(4, (2, 3))) == count_covering_bruteforce(4, (2, 3)) == 50


def test_enumeration_regression_values():
    assert sum(1 for _ in enumerate_covering(5, (3,))) == 14
    assert sum(1 for _ in enumerate_covering(5, (2, 3))) == 6232
    assert sum(1 for _ in enumerate_covering(6, (3,))) == 964


def test_small_space_contains_triangle_and_supersets():
    hs = list(enumerate_covering(3, (2, 3), m_min=3))
    assert any(h.edges == ((1, 2), (1, 3), (2, 3)) for h in hs)
    assert all(h.m >= 3 and is_covering(h) for h in hs)


def test_orderly_and_labeled_enumeration_agree():
    labeled = {canonical_form(h) for h in enumerate_covering(5, (2, 3), m_max=6)}
    orderly = {canonical_form(h) for h in enumerate_covering(5, (2, 3), m_max=6, max_labeled_bits=0)}
    assert labeled == orderly and len(labeled) > 0


def test_noncanonical_enumeration_counts_labeled_sets():
    # covering 3-graphs on 4 labeled vertices: any 3 or 4 of the 4 triples
    assert sum(1 for _ in enumerate_covering(4, (3,), canonical=False)) == 5


def test_cap_is_a_hard_error():
    with pytest.raises(CapExceeded):
        next(enumerate_covering(6, (2, 3)))
    with pytest.raises(InvalidParameters):
        next(enumerate_covering(4, (1, 2)))


def _is_minimal(h):
    return all(not is_covering(Hypergraph(h.n, h.edges[:i] + h.edges[i + 1 :], h.sizes)) for i in range(h.m))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_minimal_enumeration_matches_filtered_full(n):
    full = {canonical_form(h, (2, 3)) for h in enumerate_covering(n, (2, 3)) if _is_minimal(h)}
    minimal = [canonical_form(h, (2, 3)) for h in enumerate_covering(n, (2, 3), minimal=True)]
    assert set(minimal) == full and len(minimal) == len(full)


def test_minimal_enumeration_n6():
    hs = list(enumerate_covering(6, (2, 3), minimal=True))
    assert len(hs) == 117
    assert all(_is_minimal(h) for h in hs)


@given(covering_3graphs(min_n=3, max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(h, rnd):
    perm = list(range(1, h.n + 1))
    rnd.shuffle(perm)
    g = h.relabel(perm)
    sizes = (2, 3)
    assert canonical_form(h, sizes) == canonical_form(g, sizes)
    space = edge_space(h.n, sizes)
    vec = space.canonical_masks(np.array([space.encode(h), space.encode(g)], dtype=np.int64))
    assert vec[0] == vec[1] == canonical_form(h, sizes)[1]


def test_canonical_form_separates_nonisomorphic():
    # same size profile: the star {14, 24, 34} is isomorphic to STAR_PLUS_TRIPLE, the path {12, 14, 34} is not
    star = Hypergraph.from_edges(4, [(1, 2, 3), (1, 4), (2, 4), (3, 4)])
    path = Hypergraph.from_edges(4, [(1, 2, 3), (1, 2), (1, 4), (3, 4)])
    assert canonical_form(star, (2, 3)) == canonical_form(STAR_PLUS_TRIPLE, (2, 3))
    assert canonical_form(path, (2, 3)) != canonical_form(STAR_PLUS_TRIPLE, (2, 3))


def test_missing_lengths():
    assert missing_lengths(STAR_PLUS_TRIPLE) == [4]
    assert missing_lengths(complete(6)) == []
    assert cycle_lengths(FIVE_FOUR) == {3, 4}


def test_remark5_is_deterministic_across_jobs():
    a = remark5_experiment(n_range=(3, 4))
    b = remark5_experiment(n_range=(3, 4), jobs=2)
    assert a == b
    assert [f["hypergraph"]["n"] for f in a["failures"]] == [4]


def test_conjecture_parameter_checks():
    with pytest.raises(InvalidParameters):
        conjecture_search(3, 6)
    with pytest.raises(CapExceeded):
        conjecture_search(5, 7, mode="exhaustive")
    with pytest.raises(InvalidParameters):
        conjecture_search(4, 6, mode="sideways")


def test_conjecture_triangles_k4_n6():
    for h in enumerate_covering(6, (4,), m_min=3, m_max=3):
        assert exists_cycle(h, 3) is not None


def test_random_covering_instances_have_all_cycles():
    rng = random.Random(11)
    for _ in range(25):
        h = random_covering_3graph(rng.randint(6, 8), rng, pair_prob=0.3, prune=True)
        assert missing_lengths(h) == []
