from __future__ import annotations

import itertools
import os
import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from lovasz_cx.graph import Graph, from_edges

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FULL = os.environ.get("LOVASZ_FULL") == "1"


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def brute_alpha(g: Graph, excluded: int = 0) -> int:
    verts = [v for v in range(g.order) if not excluded >> v & 1]
    for size in range(len(verts), 0, -1):
        for combo in itertools.combinations(verts, size):
            if g.is_independent(combo):
                return size
    return 0


def random_cubic(rng: random.Random, n: int) -> Graph:
    return from_nx(nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30)))


@pytest.fixture
def rng():
    return random.Random(12345)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
