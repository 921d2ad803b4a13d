"""Structured facet enumeration: pivot, X path, and a disjoint pair of Y paths."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ClassificationError, DomainError
from .grid import (
    LOWER_START,
    UPPER_START,
    Cell,
    GridShape,
    Layer,
    LatticePath,
    Region,
    Vertex,
    classify_region,
    enumerate_paths,
    pivot_pairs,
)
from .ideal import is_face


@dataclass(frozen=True)
class FacetProfile:
    """A facet split into pivot ``mu``, its X path and its two Y paths."""

    shape: GridShape
    mu: Cell
    x_path: LatticePath
    y_upper: LatticePath
    y_lower: LatticePath

    def __post_init__(self):
        m, n = self.shape.m, self.shape.n
        i, j = self.mu
        if (i, j) == (m, n):
            raise ClassificationError("pivot may not be the corner (m, n)")
        expected = (
            (self.x_path, Layer.X, (i, j), (m, n)),
            (self.y_upper, Layer.Y, UPPER_START, (i, n)),
            (self.y_lower, Layer.Y, LOWER_START, (m, j)),
        )
        for path, layer, start, end in expected:
            if (path.layer, path.start, path.end) != (layer, start, end):
                raise ClassificationError(f"path {path} should run {layer.symbol}{start}->{end}")
        if not set(self.y_upper.cells).isdisjoint(self.y_lower.cells):
            raise ClassificationError("Y paths intersect")

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        return self.x_path.vertices | self.y_upper.vertices | self.y_lower.vertices

    @cached_property
    def mask(self) -> int:
        return self.shape.mask(self.vertices)

    @cached_property
    def order_key(self) -> tuple:
        """Sort key of the shelling order (smaller comes first)."""
        i, j = self.mu
        return (
            -i,
            -j,
            self.x_path.entry_columns,
            self.y_upper.entry_columns,
            self.y_lower.entry_columns,
        )

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self.vertices)

    def __str__(self) -> str:
        return (
            f"mu={self.mu} x={self.x_path.steps or '-'} "
            f"upper={self.y_upper.steps or '-'} lower={self.y_lower.steps or '-'}"
        )


def enumerate_facets(shape: GridShape) -> Iterator[FacetProfile]:
    """Stream every facet in shelling order.

    Pivots go row-descending then column-descending. Within a pivot the
    paths come south-west first, which is the canonical R<D order reversed.
    """
    m, n = shape.m, shape.n
    for i, j in shape.pivots():
        x_paths = enumerate_paths(shape, Layer.X, (i, j), (m, n))[::-1]
        pairs = pivot_pairs(shape, (i, j))[::-1]
        for xp in x_paths:
            for up, lo in pairs:
                yield FacetProfile(shape, (i, j), xp, up, lo)


def facet_vertex_set(profile: FacetProfile) -> frozenset[Vertex]:
    return profile.vertices


def _as_path(layer: Layer, cells: list[Cell]) -> LatticePath | None:
    cells = sorted(cells)
    try:
        return LatticePath.from_cells(layer, cells)
    except DomainError:
        return None


def y_decompositions(
    shape: GridShape, pivot: Cell, y_cells: Iterable[Cell]
) -> list[tuple[LatticePath, LatticePath]]:
    """Every split of ``y_cells`` into disjoint paths ``(1,1)->(i,n)`` and ``(2,1)->(m,j)``."""
    i, j = pivot
    cells = frozenset(y_cells)
    upper_end, lower_end = (i, shape.n), (shape.m, j)
    if UPPER_START not in cells or upper_end not in cells:
        return []
    found = []
    route = [UPPER_START]

    def walk(cell):
        if cell == upper_end:
            rest = cells.difference(route)
            lower = _as_path(Layer.Y, list(rest))
            if lower is not None and (lower.start, lower.end) == (LOWER_START, lower_end):
                found.append((LatticePath.from_cells(Layer.Y, list(route)), lower))
            return
        r, c = cell
        for nxt in ((r, c + 1), (r + 1, c)):
            if nxt in cells and nxt[0] <= upper_end[0] and nxt[1] <= upper_end[1]:
                route.append(nxt)
                walk(nxt)
                route.pop()

    walk(UPPER_START)
    return found


def decompose(shape: GridShape, facet: Iterable[Vertex]) -> FacetProfile:
    """Recover the profile of a facet given as a vertex set.

    Raises :class:`ClassificationError` naming the first structural check
    that fails.
    """
    vs = frozenset(shape.check_vertex(Vertex(*v)) for v in facet)
    m, n = shape.m, shape.n
    if len(vs) != shape.facet_size:
        raise ClassificationError(
            f"expected {shape.facet_size} vertices, got {len(vs)}", reason="cardinality"
        )
    x_cells = sorted(v.cell for v in vs if v.layer is Layer.X)
    y_cells = [v.cell for v in vs if v.layer is Layer.Y]
    if (m, n) not in x_cells:
        raise ClassificationError(f"missing x[{m},{n}]", reason="missing_corner")
    if len(x_cells) < 2:
        raise ClassificationError("fewer than two X vertices", reason="x_not_path")
    x_path = _as_path(Layer.X, x_cells)
    if x_path is None:
        raise ClassificationError("X vertices are not a single path", reason="x_not_path")
    mu = x_path.start
    splits = y_decompositions(shape, mu, y_cells)
    if not splits:
        raise ClassificationError(
            f"Y vertices do not split into paths ending at {(mu[0], n)} and {(m, mu[1])}",
            reason="y_not_decomposable",
        )
    upper, lower = min(splits, key=lambda s: (s[0].entry_columns, s[1].entry_columns))
    profile = FacetProfile(shape, mu, x_path, upper, lower)
    if not is_face(shape, profile.mask):
        raise ClassificationError("vertex set contains a generator", reason="not_a_face")
    return profile


def forced_vertex_report(profile: FacetProfile) -> dict[str, bool]:
    """Structural facts every facet must satisfy, keyed by a short name."""
    m, n = profile.shape.m, profile.shape.n
    i, j = profile.mu
    vs = profile.vertices
    xs = [v for v in vs if v.layer is Layer.X]
    return {
        "has_corner": Vertex(Layer.X, m, n) in vs,
        "two_x": len(xs) >= 2,
        "mu_northwest": all(i <= v.row and j <= v.col for v in xs),
        "has_y_in": Vertex(Layer.Y, i, n) in vs,
        "has_y_mj": Vertex(Layer.Y, m, j) in vs,
        "no_y_in_r4": all(
            classify_region((i, j), v.cell) is not Region.R4 for v in vs if v.layer is Layer.Y
        ),
        "pure": len(vs) == profile.shape.facet_size,
    }
