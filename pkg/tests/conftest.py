"""Shared builders: small named graphs, seeded random corpora, and the
20-vertex fullerene patch used across the acceptance suite."""

from __future__ import annotations

import random

import pytest

from szegedcut import Graph, HexSpec, WeightAssignment, build_graph


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def random_connected_graph(
    rng: random.Random, min_n: int = 2, max_n: int = 12, extra: float = 0.25
) -> Graph:
    """Random spanning tree plus extra edges; always connected."""
    n = rng.randint(min_n, max_n)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    existing = {(min(u, v), max(u, v)) for u, v in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in existing and rng.random() < extra:
                edges.append((u, v))
                existing.add((u, v))
    return build_graph(n, edges)


def random_tree(rng: random.Random, min_n: int = 2, max_n: int = 12) -> Graph:
    n = rng.randint(min_n, max_n)
    return build_graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_bipartite_connected(
    rng: random.Random, max_side: int = 6, extra: float = 0.3
) -> Graph:
    """Connected bipartite graph: sides 0..a-1 and a..a+b-1."""
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    n = a + b
    edges = []
    touched_left = [0]
    touched_right: list[int] = []
    for v in range(a, n):  # attach every right vertex to a seen left vertex
        edges.append((rng.choice(touched_left), v))
        touched_right.append(v)
    for v in range(1, a):
        edges.append((v, rng.choice(touched_right)))
        touched_left.append(v)
    existing = {(min(u, v), max(u, v)) for u, v in edges}
    for u in range(a):
        for v in range(a, n):
            if (u, v) not in existing and rng.random() < extra:
                edges.append((u, v))
                existing.add((u, v))
    return build_graph(n, edges)


def random_weight_assignment(
    rng: random.Random, g: Graph, lo: int = 0, hi: int = 5
) -> WeightAssignment:
    return WeightAssignment(
        tuple(rng.randint(lo, hi) for _ in range(g.n)),
        tuple(rng.randint(lo, hi) for _ in range(g.m)),
        tuple(rng.randint(lo, hi) for _ in range(g.m)),
    )


# ---------------------------------------------------------------------------
# fullerene patch: a pentagon surrounded by five hexagons (a patch of
# buckminsterfullerene). 20 vertices, 25 edges, not a partial cube.
#
# ids: pentagon 0..4, spoke tips 5..9, rim pairs (s_i, t_i) = (10+2i, 11+2i);
# rim cycle is r_0 s_0 t_0 r_1 s_1 t_1 ... r_4 s_4 t_4.
# ---------------------------------------------------------------------------

def fullerene_patch() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]          # central pentagon
    edges += [(i, 5 + i) for i in range(5)]               # spokes
    for i in range(5):
        r, s, t, rn = 5 + i, 10 + 2 * i, 11 + 2 * i, 5 + (i + 1) % 5
        edges += [(r, s), (s, t), (t, rn)]                # outer rim
    return build_graph(20, edges)


# the big Theta*-class: the pentagon plus the five outermost rim edges
FULLERENE_BIG_CLASS = frozenset({0, 1, 2, 3, 4, 11, 14, 17, 20, 23})
FULLERENE_TOTALS = (9200, 2400, 10760, 2760)


@pytest.fixture
def patch() -> Graph:
    return fullerene_patch()


# ---------------------------------------------------------------------------
# molecule corpora shared by the molgen tests and the acceptance suite
# ---------------------------------------------------------------------------

RING_CELLS = frozenset([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
# eight cells around the two-cell hole {(0,0), (1,0)}: the hole interrupts
# cut lines, so two direction quotients gain cycles
WIDE_RING_CELLS = frozenset(
    [(-1, 0), (2, 0), (0, -1), (1, -1), (2, -1), (-1, 1), (0, 1), (1, 1)]
)
CORONENE = HexSpec(RING_CELLS | {(0, 0)})
TRIANGLE_CLUSTER = HexSpec(frozenset([(0, 0), (1, 0), (0, 1)]))
ZIGZAG4 = HexSpec(frozenset([(0, 0), (1, 0), (1, 1), (2, 1)]))
Y_BRANCH = HexSpec(frozenset([(0, 0), (1, 0), (-1, 1), (0, -1)]))

BENZENOID_SPECS = [
    HexSpec.linear_chain(1),
    HexSpec.linear_chain(2),
    HexSpec.linear_chain(4),
    TRIANGLE_CLUSTER,
    ZIGZAG4,
    CORONENE,
]
PHENYLENE_SPECS = [
    HexSpec.linear_chain(1),
    HexSpec.linear_chain(2),
    HexSpec.linear_chain(5),
    ZIGZAG4,
    Y_BRANCH,
]
