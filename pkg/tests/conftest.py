from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bergecover.generate import random_covering_3graph  # noqa: E402
from bergecover.hypergraph import Hypergraph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def complete(n: int, k: int = 3, on=None) -> Hypergraph:
    verts = range(1, n + 1) if on is None else sorted(on)
    return Hypergraph(n, tuple(combinations(verts, k)), frozenset({k}))


FIVE_FOUR = Hypergraph(5, ((1, 2, 3), (1, 4, 5), (2, 4, 5), (3, 4, 5)), frozenset({3}))


@st.composite
def covering_3graphs(draw, min_n: int = 6, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    pair_prob = draw(st.sampled_from([0.0, 0.2, 0.5]))
    extra = draw(st.integers(0, 6))
    prune = draw(st.booleans())
    return random_covering_3graph(n, seed, pair_prob=pair_prob, extra=extra, prune=prune)


@pytest.fixture
def k36() -> Hypergraph:
    return complete(6)


@pytest.fixture
def five_four() -> Hypergraph:
    return FIVE_FOUR


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
