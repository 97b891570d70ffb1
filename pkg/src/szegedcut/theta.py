"""Djokovic-Winkler relation, Theta*-classes, c-partitions, partial cubes.

Two edges e1 = u1v1 and e2 = u2v2 are Theta-related when
d(u1,u2) + d(v1,v2) != d(u1,v2) + d(u2,v1). Theta is reflexive and
symmetric but not transitive in general; its transitive closure Theta*
partitions the edge set. A partition whose classes are unions of
Theta*-classes is called a c-partition and is the input the cut method
requires.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    IncompleteGroupingError,
    InvalidCPartitionError,
    PartitionNotCoveringError,
)
from .graph import DistanceMatrix, Graph, all_pairs_distances, require_connected


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class EdgePartition:
    """A partition of the edge ids 0..m-1 into disjoint nonempty classes.

    Classes are canonically ordered by their smallest edge id. The
    `refined_by_theta_star` flag asserts that every class is a union of
    Theta*-classes; generators that know this by construction set it so
    index pipelines can skip the quadratic validation.
    """

    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]
    refined_by_theta_star: bool = False

    @classmethod
    def from_classes(
        cls,
        classes: Iterable[Iterable[int]],
        m: int,
        refined_by_theta_star: bool = False,
    ) -> "EdgePartition":
        canon = sorted((frozenset(c) for c in classes), key=min)
        class_of = [-1] * m
        total = 0
        for idx, members in enumerate(canon):
            if not members:
                raise ValueError("empty partition class")
            for e in members:
                if not 0 <= e < m:
                    raise PartitionNotCoveringError(f"edge id {e} outside 0..{m - 1}")
                if class_of[e] >= 0:
                    raise ValueError(f"edge id {e} in two classes")
                class_of[e] = idx
            total += len(members)
        if total != m:
            raise PartitionNotCoveringError(
                f"classes cover {total} of {m} edges"
            )
        return cls(tuple(canon), tuple(class_of), refined_by_theta_star)

    @property
    def num_edges(self) -> int:
        return len(self.class_of)

    def __len__(self) -> int:
        return len(self.classes)


def single_class_partition(m: int) -> EdgePartition:
    """The coarsest partition {E(G)}; trivially a c-partition."""
    if m == 0:
        return EdgePartition((), (), refined_by_theta_star=True)
    return EdgePartition.from_classes([range(m)], m, refined_by_theta_star=True)


def theta_related(g: Graph, dm: DistanceMatrix, e1: int, e2: int) -> bool:
    """Test the Djokovic-Winkler relation between two edges.

    Orientation-independent: swapping the endpoint naming of either edge
    swaps the two compared pairings, leaving the inequality unchanged.
    """
    u1, v1 = g.edges[e1]
    u2, v2 = g.edges[e2]
    r1, r2 = dm.rows[u1], dm.rows[v1]
    return r1[u2] + r2[v2] != r1[v2] + r2[u2]


def theta_star_partition(g: Graph) -> EdgePartition:
    """Theta*-classes via the pairwise O(m^2) test over a distance matrix."""
    require_connected(g)
    dm = all_pairs_distances(g)
    m = g.m
    uf = _UnionFind(m)
    edges = g.edges
    rows = dm.rows
    for i in range(m):
        u1, v1 = edges[i]
        r1, r2 = rows[u1], rows[v1]
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if r1[u2] + r2[v2] != r1[v2] + r2[u2]:
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(uf.find(e), []).append(e)
    return EdgePartition.from_classes(
        groups.values(), m, refined_by_theta_star=True
    )


def validate_c_partition(g: Graph, p: EdgePartition) -> bool:
    """True iff every Theta*-class of g lies inside a single class of p."""
    if p.num_edges != g.m:
        raise PartitionNotCoveringError(
            f"partition covers {p.num_edges} edges, graph has {g.m}"
        )
    star = theta_star_partition(g)
    for members in star.classes:
        it = iter(members)
        target = p.class_of[next(it)]
        if any(p.class_of[e] != target for e in it):
            return False
    return True


def coarsen(p: EdgePartition, grouping: Mapping[int, int]) -> EdgePartition:
    """Merge classes of a Theta*-refined partition according to `grouping`.

    `grouping` maps each class index of p to a group; classes mapped to
    the same group are unioned. The result stays a valid c-partition.
    """
    if not p.refined_by_theta_star:
        raise InvalidCPartitionError("coarsen requires a Theta*-refined partition")
    missing = [i for i in range(len(p.classes)) if i not in grouping]
    if missing:
        raise IncompleteGroupingError(f"grouping misses class indices {missing}")
    merged: dict[int, set[int]] = {}
    for idx, members in enumerate(p.classes):
        merged.setdefault(grouping[idx], set()).update(members)
    return EdgePartition.from_classes(
        merged.values(), p.num_edges, refined_by_theta_star=True
    )


def is_bipartite(g: Graph) -> bool:
    """2-coloring BFS; assumes nothing about connectivity."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            cx = color[x]
            for y, _ in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - cx
                    queue.append(y)
                elif color[y] == cx:
                    return False
    return True


def is_partial_cube(g: Graph) -> bool:
    """Partial-cube test: bipartite and Theta transitive.

    Transitivity is checked by verifying that every Theta*-class is
    pairwise Theta-related.
    """
    require_connected(g)
    if not is_bipartite(g):
        return False
    dm = all_pairs_distances(g)
    star = theta_star_partition(g)
    for members in star.classes:
        ids = sorted(members)
        for i, a in enumerate(ids):
            for b in ids[i + 1 :]:
                if not theta_related(g, dm, a, b):
                    return False
    return True
