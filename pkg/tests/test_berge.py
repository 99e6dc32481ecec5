import pytest
from conftest import complete, covering_3graphs
from hypothesis import given, strategies as st

from bergecover.berge import (
    BergeCycle,
    BergePath,
    certificate_from_json,
    lift,
    verify,
    verify_cycle,
    verify_path,
)
from bergecover.cyclefinder import find_hamiltonian_cycle
from bergecover.errors import IndexOutOfRange, InvalidCertificate
from bergecover.hypergraph import Hypergraph, trace


def test_path_on_two_pairs():
    h = Hypergraph.from_edges(3, [(1, 2), (2, 3)])
    assert verify_path(h, BergePath((1, 2, 3), (0, 1)))


def test_path_with_repeated_edge_is_rejected():
    h = Hypergraph.from_edges(3, [(1, 2, 3), (2, 3)])
    assert not verify_path(h, BergePath((1, 2, 3), (0, 0)))


def test_path_through_triples():
    h = Hypergraph.from_edges(4, [(1, 2, 3), (1, 3, 4)])
    assert verify_path(h, BergePath((2, 1, 4), (0, 1)))


def test_path_with_repeated_vertex_is_rejected():
    h = Hypergraph.from_edges(3, [(1, 2), (2, 3), (1, 2, 3)])
    assert not verify_path(h, BergePath((1, 2, 1), (0, 2)))


def test_cycle_containment_violation():
    h = Hypergraph.from_edges(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
    assert not verify_cycle(h, BergeCycle((1, 2, 3), (0, 1, 2)))


def test_cycle_on_three_triples():
    h = Hypergraph.from_edges(4, [(1, 2, 3), (2, 3, 4), (1, 3, 4)])
    assert verify_cycle(h, BergeCycle((1, 2, 3), (0, 1, 2)))


def test_short_cycle_rejected_at_construction():
    with pytest.raises(InvalidCertificate):
        BergeCycle((1, 2), (0, 1))
    with pytest.raises(InvalidCertificate):
        BergePath((1, 2, 3), (0,))


def test_bad_index_raises():
    h = Hypergraph.from_edges(3, [(1, 2, 3)])
    with pytest.raises(IndexOutOfRange):
        verify_cycle(h, BergeCycle((1, 2, 3), (0, 1, 2)))
    with pytest.raises(IndexOutOfRange):
        verify_path(h, BergePath((1, 2), (-1,)))


def test_json_roundtrip():
    c = BergeCycle((1, 2, 3), (0, 1, 2))
    p = BergePath((2, 1, 4), (0, 1))
    assert certificate_from_json(c.to_json()) == c
    assert certificate_from_json(p.to_json()) == p
    assert certificate_from_json({"base": [1, 2, 3], "edges": [0, 1, 2]}) == c
    with pytest.raises(InvalidCertificate):
        certificate_from_json({"base": [1, 2], "edges": [0, 1, 2]})


def test_lift_identity_trace():
    h = complete(6)
    c = find_hamiltonian_cycle(h)
    tr = trace(h, range(1, 7))
    local = BergeCycle(c.base, tuple(tr.origin.index(e) for e in c.edges))
    assert lift(h, tr, local) == c


def test_lift_triangle_from_small_trace():
    h = complete(5)
    tr = trace(h, {2, 4, 5})
    # the trace on 3 vertices is {123, 12, 13, 23}; use the three pairs
    idx = {e: j for j, e in enumerate(tr.trace.edges)}
    local = BergeCycle((1, 2, 3), (idx[(1, 2)], idx[(2, 3)], idx[(1, 3)]))
    assert verify_cycle(tr.trace, local)
    up = lift(h, tr, local)
    assert up.base == (2, 4, 5)
    assert verify_cycle(h, up)


def test_lift_rejects_invalid_input():
    h = complete(5)
    tr = trace(h, {1, 2, 3})
    with pytest.raises(InvalidCertificate):
        lift(h, tr, BergeCycle((1, 2, 3), (0, 0, 0)))


@given(covering_3graphs(min_n=6, max_n=11), st.randoms(use_true_random=False))
def test_lifted_hamiltonian_cycles_of_traces_verify(h, rnd):
    s = rnd.randint(6, h.n)
    subset = rnd.sample(range(1, h.n + 1), s)
    tr = trace(h, subset)
    local = find_hamiltonian_cycle(tr.trace)
    up = lift(h, tr, local)
    assert len(up) == s
    assert up.base == tuple(tr.host_vertex(v) for v in local.base)
    assert verify(h, up)
