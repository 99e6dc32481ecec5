import random

import pytest
from conftest import FIVE_FOUR, complete, covering_3graphs
from constructions import build_state
from hypothesis import given

from bergecover import cyclefinder as cf
from bergecover.berge import BergeCycle, verify_cycle
from bergecover.errors import LengthOutOfRange, NotCovering, TooFewVertices
from bergecover.hypergraph import Hypergraph
from bergecover.oracle import enumerate_covering, exists_cycle


def test_k36_hamiltonian():
    h = complete(6)
    c = cf.find_hamiltonian_cycle(h)
    assert len(c) == 6 and verify_cycle(h, c)


def test_five_vertices_rejected_and_really_has_no_hamiltonian_cycle():
    with pytest.raises(TooFewVertices):
        cf.find_hamiltonian_cycle(FIVE_FOUR)
    assert exists_cycle(FIVE_FOUR, 5) is None


def test_length_out_of_range():
    with pytest.raises(LengthOutOfRange):
        cf.find_cycle_of_length(complete(6), 7)
    with pytest.raises(LengthOutOfRange):
        cf.find_cycle_of_length(complete(6), 2)


def test_not_covering():
    h = Hypergraph.from_edges(6, [(1, 2, 3), (4, 5, 6)])
    with pytest.raises(NotCovering):
        cf.find_hamiltonian_cycle(h)


def test_triangle_examples():
    pairs = complete(4, k=2)
    c = cf.find_triangle(pairs)
    assert len(c) == 3 and verify_cycle(pairs, c)
    assert verify_cycle(FIVE_FOUR, cf.find_triangle(FIVE_FOUR))
    assert verify_cycle(complete(6), cf.find_cycle_of_length(complete(6), 3))
    with pytest.raises(TooFewVertices):
        cf.find_triangle(complete(3))


def test_triangle_second_branch():
    # v2 lies in the edge through v1 v4, so the triangle must use v3
    h = Hypergraph.from_edges(4, [(1, 2, 3), (1, 2, 4), (3, 4)])
    c = cf.find_triangle(h)
    assert verify_cycle(h, c) and set(c.base) == {1, 3, 4}


def test_all_lengths_k36():
    h = complete(6)
    cycles = cf.find_all_cycles(h)
    assert sorted(cycles) == [3, 4, 5, 6]
    assert all(len(c) == s and verify_cycle(h, c) for s, c in cycles.items())


def test_red_count_strictly_increases():
    rng = random.Random(5)
    from bergecover.generate import random_covering_3graph

    for _ in range(200):
        h = random_covering_3graph(rng.randint(6, 11), rng, pair_prob=0.3, prune=True)
        counts = [s.red_count for s in cf.hamiltonian_trajectory(h)]
        assert all(a < b for a, b in zip(counts, counts[1:]))


def test_close_path_yields_state_or_cycle():
    h = Hypergraph.from_edges(
        6, [(1, 2, 3), (3, 4, 5), (5, 6, 1), (2, 4, 6), (1, 4), (2, 5), (3, 6)]
    )
    out = cf._close_path(h)
    if isinstance(out, cf.RedBlueState):
        out.check(h)
        assert len(out.cycle) == 5
    else:
        assert verify_cycle(h, out)


def test_state_check_detects_stale_colors():
    h, st = build_state("RBRBB", random.Random(0))
    bad = cf.RedBlueState(st.cycle, st.w, "BBRBB")
    with pytest.raises(cf.InternalInvariantViolation):
        bad.check(h)


def test_red_segments():
    assert sorted(cf._red_segments("RRBRB")) == [1, 2]
    assert cf._red_segments("BBB") == []
    assert cf._red_segments("RRR") == [3]
    assert sorted(cf._red_segments("RBBRR")) == [3]


def _reflect(h, st):
    b, e = st.cycle.base, st.cycle.edges
    m = len(b)
    rb = tuple(reversed(b))
    re_ = tuple(e[(m - 2 - k) % m] for k in range(m))
    return cf.RedBlueState.build(h, BergeCycle(rb, re_), st.w)


def _terminal_instances(pattern, triples_only, want=6, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(400):
        got = build_state(pattern, rng, triples_only)
        if got is None:
            continue
        h, st = got
        if cf._free_bridge(h, st) is None and cf._blue_run(h, st) is None:
            out.append((h, st))
            if len(out) >= want:
                break
    return out


@pytest.mark.parametrize("pattern", list(cf.TERMINAL_PATTERNS))
@pytest.mark.parametrize("triples_only", [False, True])
def test_terminal_patterns(pattern, triples_only):
    found = _terminal_instances(pattern, triples_only)
    assert found, f"no terminal instance constructed for {pattern}"
    for h, st in found:
        assert cf.augment(h, st) is not None
        for state in (st, _reflect(h, st)):
            c = cf.augment_to_hamiltonian(h, state)
            assert len(c) == h.n and verify_cycle(h, c)


def test_terminal_pattern_can_raise_red_count():
    # h1 = h2 = {v3, v6, w} in the 7-vertex pattern gives a red-increasing move
    seen = False
    for h, st in _terminal_instances("RBBRBB", False, want=60, seed=3):
        out = cf._terminal(h, st)
        if isinstance(out, cf.RedBlueState):
            assert out.red_count > st.red_count
            seen = True
    assert seen


def test_unknown_coloring_is_an_invariant_violation():
    h, st = build_state("RBRBB", random.Random(1))
    fake = cf.RedBlueState(st.cycle, st.w, "RRRRB")
    with pytest.raises(cf.InternalInvariantViolation):
        cf._check_consequences(h, fake)


@pytest.mark.parametrize("n, sizes", [(6, (3,))])
def test_exhaustive_n6_uniform(n, sizes):
    for h in enumerate_covering(n, sizes):
        cycles = cf.find_all_cycles(h)
        assert all(len(c) == s and verify_cycle(h, c) for s, c in cycles.items())


def test_exhaustive_n6_minimal_mixed():
    for h in enumerate_covering(6, (2, 3), minimal=True):
        cycles = cf.find_all_cycles(h)
        assert sorted(cycles) == [3, 4, 5, 6]
        assert all(verify_cycle(h, c) for c in cycles.values())


@given(covering_3graphs(min_n=6, max_n=12))
def test_random_all_lengths(h):
    cycles = cf.find_all_cycles(h)
    assert sorted(cycles) == list(range(3, h.n + 1))
    for s, c in cycles.items():
        assert len(c) == s and verify_cycle(h, c)


def test_fallback_flag_is_harmless_on_success():
    h = complete(7)
    assert cf.find_cycle_of_length(h, 5, fallback_oracle=True) == cf.find_cycle_of_length(h, 5)
