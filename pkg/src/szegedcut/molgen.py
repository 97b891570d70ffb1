"""Generators for benzenoid systems and phenylenes on the hexagonal lattice.

Cells are axial coordinates (q, r) of pointy-top hexagons. Corners live
on a scaled integer grid (no floating point): the cell center is
(2q + r, 3r) and the six corners are fixed offsets from it, so shared
corners between neighbouring cells match exactly.

Every produced edge carries a direction label: 1 for vertical edges and
2/3 for the two diagonal families; phenylenes additionally use label 4
for the edges that join hexagon copies across an inserted square. The
label classes form a c-partition whose quotients are trees, which is
what makes the cut method linear on these families.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from .errors import (
    CellsNotTreeError,
    DisconnectedCellsError,
    NotATreeError,
    NotCatacondensedError,
    NTooSmallError,
    ParseError,
)
from .graph import Graph
from .indices import IndexReport
from .quotient import QuotientGraph, WeightAssignment, quotient_graph
from .theta import EdgePartition

Cell = tuple[int, int]
Point = tuple[int, int]

_AXIAL_NEIGHBORS: tuple[Cell, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
# corners of a pointy-top hexagon, counterclockwise from the east corner
_CORNER_OFFSETS: tuple[Point, ...] = ((1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1))


def _center(cell: Cell) -> Point:
    q, r = cell
    return (2 * q + r, 3 * r)


def _corners(cell: Cell) -> list[Point]:
    cx, cy = _center(cell)
    return [(cx + ox, cy + oy) for ox, oy in _CORNER_OFFSETS]


def _direction(p1: Point, p2: Point) -> int:
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    if dx == 0:
        return 1
    return 2 if dx == dy else 3


@dataclass(frozen=True)
class HexSpec:
    """A set of hexagon cells in axial coordinates."""

    cells: frozenset[Cell]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("hex spec needs at least one cell")

    @classmethod
    def linear_chain(cls, h: int) -> "HexSpec":
        if h < 1:
            raise NTooSmallError("chain needs at least one cell")
        return cls(frozenset((i, 0) for i in range(h)))

    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def adjacent_pairs(self) -> tuple[tuple[int, int], ...]:
        """Index pairs (i, j), i < j, of cells sharing an edge."""
        cells = self.sorted_cells()
        index = {c: i for i, c in enumerate(cells)}
        pairs = []
        for i, (q, r) in enumerate(cells):
            for dq, dr in _AXIAL_NEIGHBORS:
                j = index.get((q + dq, r + dr))
                if j is not None and i < j:
                    pairs.append((i, j))
        return tuple(sorted(pairs))

    def is_connected(self) -> bool:
        cells = self.cells
        start = next(iter(cells))
        seen = {start}
        queue = deque([start])
        while queue:
            q, r = queue.popleft()
            for dq, dr in _AXIAL_NEIGHBORS:
                nb = (q + dq, r + dr)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(cells)

    def has_holes(self) -> bool:
        """True if the complement of the cell set has a bounded component."""
        qs = [q for q, _ in self.cells]
        rs = [r for _, r in self.cells]
        qlo, qhi = min(qs) - 1, max(qs) + 1
        rlo, rhi = min(rs) - 1, max(rs) + 1
        outside: set[Cell] = set()
        start = (qlo, rlo)
        queue = deque([start])
        outside.add(start)
        while queue:
            q, r = queue.popleft()
            for dq, dr in _AXIAL_NEIGHBORS:
                nb = (q + dq, r + dr)
                if (
                    qlo <= nb[0] <= qhi
                    and rlo <= nb[1] <= rhi
                    and nb not in self.cells
                    and nb not in outside
                ):
                    outside.add(nb)
                    queue.append(nb)
        box = (qhi - qlo + 1) * (rhi - rlo + 1)
        return len(outside) + len(self.cells) < box


def parse_hex_spec(text: str) -> HexSpec:
    """Parse one `q r` pair per line; `#` comments and blanks ignored."""
    cells: list[Cell] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'q r', got {line!r}")
        try:
            cell = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise ParseError(f"non-integer cell line {line!r}") from None
        if cell in cells:
            raise ParseError(f"duplicate cell {cell}")
        cells.append(cell)
    if not cells:
        raise ParseError("hex spec contains no cells")
    return HexSpec(frozenset(cells))


def format_hex_spec(spec: HexSpec) -> str:
    return "\n".join(f"{q} {r}" for q, r in spec.sorted_cells()) + "\n"


@dataclass(frozen=True)
class DirectionLabeledGraph:
    """A generated molecular graph with per-edge direction labels.

    `cell_of[e]` records the originating cells: one cell for a hexagon
    edge, the adjacent cell pair for a square-connecting (label 4) edge.
    `points[v]` is the scaled lattice corner of vertex v (phenylene copies
    of a shared corner repeat the same point).
    """

    graph: Graph
    direction_of: tuple[int, ...]
    cell_of: tuple[tuple[Cell, ...], ...]
    cells: tuple[Cell, ...]
    points: tuple[Point, ...]
    kind: str  # "benzenoid" | "phenylene"
    nonstandard_region: bool = False

    def direction_partition(self) -> EdgePartition:
        """Edge classes by direction label, flagged as Theta*-refined.

        For benzenoids and phenylenes every Theta*-class stays inside one
        direction class, so the flag is sound by construction.
        """
        by_label: dict[int, list[int]] = {}
        for eid, label in enumerate(self.direction_of):
            by_label.setdefault(label, []).append(eid)
        classes = [by_label[k] for k in sorted(by_label)]
        return EdgePartition.from_classes(
            classes, self.graph.m, refined_by_theta_star=True
        )

    def edges_with_label(self, label: int) -> tuple[int, ...]:
        return tuple(
            eid for eid, lab in enumerate(self.direction_of) if lab == label
        )


def build_benzenoid(spec: HexSpec) -> DirectionLabeledGraph:
    """Graph of all lattice vertices and edges of the chosen cells.

    Corners shared between cells are merged by exact integer coordinates.
    Cell sets enclosing holes are accepted but flagged `nonstandard_region`.
    """
    if not spec.is_connected():
        raise DisconnectedCellsError("cells do not form a connected region")
    cells = spec.sorted_cells()
    point_ids: dict[Point, int] = {}
    points: list[Point] = []
    edge_ids: dict[tuple[Point, Point], int] = {}
    edges: list[tuple[int, int]] = []
    direction: list[int] = []
    cell_of: list[list[Cell]] = []

    for cell in cells:
        corners = _corners(cell)
        vids = []
        for pt in corners:
            vid = point_ids.get(pt)
            if vid is None:
                vid = len(points)
                point_ids[pt] = vid
                points.append(pt)
            vids.append(vid)
        for k in range(6):
            p1, p2 = corners[k], corners[(k + 1) % 6]
            key = (p1, p2) if p1 < p2 else (p2, p1)
            eid = edge_ids.get(key)
            if eid is None:
                edge_ids[key] = len(edges)
                edges.append((point_ids[key[0]], point_ids[key[1]]))
                direction.append(_direction(*key))
                cell_of.append([cell])
            else:
                cell_of[eid].append(cell)

    return DirectionLabeledGraph(
        graph=Graph(len(points), edges),
        direction_of=tuple(direction),
        cell_of=tuple(tuple(c) for c in cell_of),
        cells=cells,
        points=tuple(points),
        kind="benzenoid",
        nonstandard_region=spec.has_holes(),
    )


def build_phenylene(spec: HexSpec) -> DirectionLabeledGraph:
    """Disjoint hexagon per cell, plus a square between adjacent cells.

    Each adjacency contributes two label-4 edges joining the two cells'
    copies of the shared corners; together with the two retained hexagon
    edges they bound the inserted square.
    """
    cells = spec.sorted_cells()
    corner_lists = [_corners(c) for c in cells]

    use_count: dict[Point, int] = {}
    for corners in corner_lists:
        for pt in corners:
            use_count[pt] = use_count.get(pt, 0) + 1
    if any(c >= 3 for c in use_count.values()):
        raise NotCatacondensedError("a lattice corner lies in three cells")

    pairs = HexSpec(frozenset(cells)).adjacent_pairs()
    if len(pairs) != len(cells) - 1 or not spec.is_connected():
        raise CellsNotTreeError("cell adjacency graph is not a tree")

    points: list[Point] = []
    edges: list[tuple[int, int]] = []
    direction: list[int] = []
    cell_of: list[tuple[Cell, ...]] = []
    for i, corners in enumerate(corner_lists):
        points.extend(corners)
        base = 6 * i
        for k in range(6):
            edges.append((base + k, base + (k + 1) % 6))
            direction.append(_direction(corners[k], corners[(k + 1) % 6]))
            cell_of.append((cells[i],))

    corner_index = [{pt: k for k, pt in enumerate(corners)} for corners in corner_lists]
    for i, j in pairs:
        shared = sorted(set(corner_lists[i]) & set(corner_lists[j]))
        # adjacent hexagons share exactly one lattice edge, i.e. two corners
        if len(shared) != 2:
            raise CellsNotTreeError(
                f"cells {cells[i]} and {cells[j]} share {len(shared)} corners"
            )
        for pt in shared:
            edges.append((6 * i + corner_index[i][pt], 6 * j + corner_index[j][pt]))
            direction.append(4)
            cell_of.append((cells[i], cells[j]))

    return DirectionLabeledGraph(
        graph=Graph(6 * len(cells), edges),
        direction_of=tuple(direction),
        cell_of=tuple(cell_of),
        cells=cells,
        points=tuple(points),
        kind="phenylene",
    )


def linear_phenylene(n: int) -> DirectionLabeledGraph:
    """The straight chain of n hexagons with n-1 squares in between."""
    if n < 2:
        raise NTooSmallError("linear phenylene needs n >= 2 hexagons")
    return build_phenylene(HexSpec.linear_chain(n))


def benzenoid_quotient_trees(
    b: DirectionLabeledGraph, starred: bool = False
) -> tuple[QuotientGraph, QuotientGraph, QuotientGraph]:
    """Quotients by the three direction classes, each asserted to be a tree."""
    wa = WeightAssignment.degree_weighted(b.graph, starred)
    out = []
    for label in (1, 2, 3):
        q = quotient_graph(b.graph, wa, b.edges_with_label(label))
        if q.graph.m != q.graph.n - 1:
            raise NotATreeError(f"direction-{label} quotient contains a cycle")
        out.append(q)
    return tuple(out)


def inner_dual(spec: HexSpec) -> Graph:
    """Cell adjacency graph: one vertex per sorted cell, edges by shared edges."""
    return Graph(len(spec.cells), spec.adjacent_pairs())


def ph_closed_formulas(n: int) -> IndexReport:
    """Closed-form index values for the linear phenylene with n hexagons."""
    if n < 2:
        raise NTooSmallError("closed formulas are stated for n >= 2")
    w_sz = 300 * n**3 - 36 * n**2 - 84 * n + 36
    w_pi_v = 264 * n**2 - 120 * n
    numerator = 1348 * n**3 - 1860 * n**2 + 812 * n - 12
    w_sz_e, remainder = divmod(numerator, 3)
    if remainder:
        raise ValueError(f"edge-Szeged numerator not divisible by 3 at n={n}")
    w_pi = 328 * n**2 - 304 * n + 72
    return IndexReport("formula", False, w_sz, w_pi_v, w_sz_e, w_pi)
