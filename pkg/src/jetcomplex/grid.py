"""Grid coordinates, vertices, monotone lattice paths and the region partition.

Everything is 1-based: ``x[i,j]`` is row ``i``, column ``j`` of the X layer.
Bit positions inside vertex masks are the only 0-based quantity and never
leak out of :class:`GridShape`.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError

Cell = tuple[int, int]


class Layer(enum.IntEnum):
    X = 0
    Y = 1

    @property
    def symbol(self) -> str:
        return self.name.lower()


class Vertex(NamedTuple):
    """A variable ``x[i,j]`` or ``y[i,j]``; tuple order is (layer, row, col)."""

    layer: Layer
    row: int
    col: int

    @property
    def cell(self) -> Cell:
        return (self.row, self.col)

    def __str__(self) -> str:
        return f"{self.layer.symbol}[{self.row},{self.col}]"

    def __repr__(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        match = _VERTEX_RE.fullmatch(text.strip())
        if match is None:
            raise DomainError(f"cannot parse vertex {text!r}")
        layer = Layer.X if match.group(1) == "x" else Layer.Y
        return cls(layer, int(match.group(2)), int(match.group(3)))


_VERTEX_RE = re.compile(r"([xy])\[(\d+),(\d+)\]")


def x(i: int, j: int) -> Vertex:
    return Vertex(Layer.X, i, j)


def y(i: int, j: int) -> Vertex:
    return Vertex(Layer.Y, i, j)


@dataclass(frozen=True, order=True)
class GridShape:
    """An ``m x n`` grid with ``2 <= m <= n``."""

    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise DomainError(f"grid dimensions must be integers, got {self.m!r}, {self.n!r}")
        if not 2 <= self.m <= self.n:
            raise DomainError(f"need 2 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def num_cells(self) -> int:
        return self.m * self.n

    @property
    def num_vertices(self) -> int:
        return 2 * self.m * self.n

    @property
    def facet_size(self) -> int:
        return 2 * (self.m + self.n) - 2

    def contains(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= r <= self.m and 1 <= c <= self.n

    def check_cell(self, cell: Cell) -> Cell:
        if not self.contains(cell):
            raise DomainError(f"cell {tuple(cell)} outside {self.m}x{self.n} grid")
        return (int(cell[0]), int(cell[1]))

    def check_vertex(self, v: Vertex) -> Vertex:
        self.check_cell((v.row, v.col))
        return v

    def cells(self) -> Iterable[Cell]:
        return itertools.product(range(1, self.m + 1), range(1, self.n + 1))

    def vertices(self) -> list[Vertex]:
        """All ``2mn`` vertices in canonical order."""
        return [Vertex(layer, r, c) for layer in Layer for r, c in self.cells()]

    def pivots(self) -> list[Cell]:
        """Cells other than ``(m, n)``, in shelling order (row, then column, descending)."""
        return [
            (i, j)
            for i in range(self.m, 0, -1)
            for j in range(self.n, 0, -1)
            if (i, j) != (self.m, self.n)
        ]

    # bitmask helpers
    def bit(self, v: Vertex) -> int:
        self.check_vertex(v)
        return int(v.layer) * self.num_cells + (v.row - 1) * self.n + (v.col - 1)

    def vertex_at(self, bit: int) -> Vertex:
        layer, rest = divmod(bit, self.num_cells)
        r, c = divmod(rest, self.n)
        return Vertex(Layer(layer), r + 1, c + 1)

    def mask(self, vertices: Iterable[Vertex]) -> int:
        out = 0
        for v in vertices:
            out |= 1 << self.bit(v)
        return out

    def unmask(self, mask: int) -> list[Vertex]:
        out = []
        bit = 0
        while mask:
            if mask & 1:
                out.append(self.vertex_at(bit))
            mask >>= 1
            bit += 1
        return out


class Region(enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"


def classify_region(pivot: Cell, cell: Cell, shape: GridShape | None = None) -> Region:
    """Quadrant of ``cell`` relative to ``pivot``.

    R1 is north(-or-level)-east, R2 north-west including the pivot itself,
    R3 south-west, R4 strictly south-east.
    """
    if shape is not None:
        shape.check_cell(pivot)
        shape.check_cell(cell)
    i, j = pivot
    s, t = cell
    if s <= i:
        return Region.R1 if t > j else Region.R2
    return Region.R3 if t <= j else Region.R4


@dataclass(frozen=True)
class LatticePath:
    """A monotone right/down path inside one layer.

    ``steps`` is a string over ``"R"`` and ``"D"``.
    """

    layer: Layer
    start: Cell
    end: Cell
    steps: str

    def __post_init__(self):
        (a, b), (c, d) = self.start, self.end
        if a > c or b > d:
            raise DomainError(f"inverted path endpoints {self.start} -> {self.end}")
        if self.steps.count("D") != c - a or self.steps.count("R") != d - b:
            raise DomainError(f"steps {self.steps!r} do not join {self.start} to {self.end}")
        if set(self.steps) - {"R", "D"}:
            raise DomainError(f"bad step alphabet in {self.steps!r}")

    @classmethod
    def from_cells(cls, layer: Layer, cells: list[Cell]) -> "LatticePath":
        steps = []
        for (r0, c0), (r1, c1) in zip(cells, cells[1:]):
            if (r1, c1) == (r0, c0 + 1):
                steps.append("R")
            elif (r1, c1) == (r0 + 1, c0):
                steps.append("D")
            else:
                raise DomainError(f"cells {(r0, c0)} -> {(r1, c1)} are not a unit step")
        return cls(layer, tuple(cells[0]), tuple(cells[-1]), "".join(steps))

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        r, c = self.start
        out = [(r, c)]
        for s in self.steps:
            if s == "R":
                c += 1
            else:
                r += 1
            out.append((r, c))
        return tuple(out)

    @cached_property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(Vertex(self.layer, r, c) for r, c in self.cells)

    @cached_property
    def entry_columns(self) -> tuple[int, ...]:
        """Column at which the path first reaches each of its rows, top to bottom."""
        out = [self.start[1]]
        for (r0, _), (r1, c1) in zip(self.cells, self.cells[1:]):
            if r1 != r0:
                out.append(c1)
        return tuple(out)

    def last_column(self, row: int) -> int:
        cols = [c for r, c in self.cells if r == row]
        if not cols:
            raise DomainError(f"path does not visit row {row}")
        return cols[-1]

    def right_turns(self) -> list[Cell]:
        """Interior cells entered by a Right step and left by a Down step."""
        return [
            self.cells[k]
            for k in range(1, len(self.steps))
            if self.steps[k - 1] == "R" and self.steps[k] == "D"
        ]

    def is_right_of(self, other: "LatticePath") -> bool:
        """True if this path runs on the walker's right of ``other``.

        Walking from the shared start towards the shared end (south-east),
        the right-hand side is south-west: every entry column is weakly
        smaller and the paths differ.
        """
        if (self.start, self.end) != (other.start, other.end):
            raise DomainError("paths with different endpoints are incomparable")
        a, b = self.entry_columns, other.entry_columns
        return a != b and all(p <= q for p, q in zip(a, b))

    def has_on_left(self, cell: Cell) -> bool:
        """True if ``cell`` lies strictly on the walker's left (north-east) in its row."""
        return cell[1] > self.last_column(cell[0])

    def __str__(self) -> str:
        return f"{self.layer.symbol}{self.start}->{self.end}:{self.steps or '-'}"


def _step_key(steps: str) -> str:
    # R sorts before D
    return steps.replace("R", "0").replace("D", "1")


@lru_cache(maxsize=None)
def _paths(layer: Layer, start: Cell, end: Cell) -> tuple[LatticePath, ...]:
    downs, rights = end[0] - start[0], end[1] - start[1]
    total = downs + rights
    strings = []
    for pos in itertools.combinations(range(total), downs):
        s = ["R"] * total
        for k in pos:
            s[k] = "D"
        strings.append("".join(s))
    strings.sort(key=_step_key)
    return tuple(LatticePath(layer, start, end, s) for s in strings)


def enumerate_paths(shape: GridShape, layer: Layer, start: Cell, end: Cell) -> tuple[LatticePath, ...]:
    """All monotone paths from ``start`` to ``end``, lexicographic with R < D."""
    start, end = shape.check_cell(start), shape.check_cell(end)
    if start[0] > end[0] or start[1] > end[1]:
        raise DomainError(f"inverted path endpoints {start} -> {end}")
    return _paths(Layer(layer), start, end)


UPPER_START: Cell = (1, 1)
LOWER_START: Cell = (2, 1)


@lru_cache(maxsize=None)
def _pairs(shape: GridShape, upper_end: Cell, lower_end: Cell):
    uppers = enumerate_paths(shape, Layer.Y, UPPER_START, upper_end)
    lowers = enumerate_paths(shape, Layer.Y, LOWER_START, lower_end)
    lower_cells = [(p, frozenset(p.cells)) for p in lowers]
    out = []
    for up in uppers:
        ucells = frozenset(up.cells)
        out.extend((up, lo) for lo, lc in lower_cells if ucells.isdisjoint(lc))
    return tuple(out)


def enumerate_nonintersecting_pairs(
    shape: GridShape, upper_end: Cell, lower_end: Cell
) -> tuple[tuple[LatticePath, LatticePath], ...]:
    """Vertex-disjoint Y-layer pairs ``(1,1)->upper_end`` and ``(2,1)->lower_end``.

    Ordered by the upper path's canonical position, then the lower's.
    """
    upper_end, lower_end = shape.check_cell(upper_end), shape.check_cell(lower_end)
    return _pairs(shape, upper_end, lower_end)


def pivot_pairs(shape: GridShape, pivot: Cell):
    """Pairs ending at ``(i, n)`` and ``(m, j)`` for pivot ``(i, j)``."""
    i, j = shape.check_cell(pivot)
    return enumerate_nonintersecting_pairs(shape, (i, shape.n), (shape.m, j))
