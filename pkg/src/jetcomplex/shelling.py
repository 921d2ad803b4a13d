"""Shelling order on the facets, the definition check, witnesses and the h-vector.

Order: pivot row descending, pivot column descending, then the X path,
the upper Y path and the lower Y path, each with south-west paths first.
A path lies "to the right" of another with the same endpoints when it runs
on the walker's right-hand (south-west) side; see
:meth:`jetcomplex.grid.LatticePath.is_right_of`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np

from . import kernels
from .errors import ClassificationError, DomainError, InternalConsistencyError, PreconditionError
from .facets import FacetProfile, decompose, enumerate_facets
from .grid import GridShape, Vertex, x, y

WITNESS_CASES = ("mu", "mu_cascade", "mu_special", "x_turn", "upper_turn", "upper_double", "lower_turn")


def compare(p: FacetProfile, q: FacetProfile) -> int:
    """-1, 0 or 1 as ``p`` comes before, coincides with, or follows ``q``."""
    if p.shape != q.shape:
        raise DomainError(f"cannot compare facets of {p.shape} and {q.shape}")
    if p.vertices == q.vertices:
        return 0
    return -1 if p.order_key < q.order_key else 1


# the five generating rules of the partial order, each standalone


def rule_mu_row_below(p: FacetProfile, q: FacetProfile) -> bool:
    return p.mu[0] > q.mu[0]


def rule_mu_col_right(p: FacetProfile, q: FacetProfile) -> bool:
    return p.mu[0] == q.mu[0] and p.mu[1] > q.mu[1]


def rule_x_path_right(p: FacetProfile, q: FacetProfile) -> bool:
    return p.mu == q.mu and p.x_path.is_right_of(q.x_path)


def rule_upper_right(p: FacetProfile, q: FacetProfile) -> bool:
    return p.x_path == q.x_path and p.y_upper.is_right_of(q.y_upper)


def rule_lower_right(p: FacetProfile, q: FacetProfile) -> bool:
    return (
        p.x_path == q.x_path
        and p.y_upper == q.y_upper
        and p.y_lower.is_right_of(q.y_lower)
    )


PARTIAL_ORDER_RULES = (
    rule_mu_row_below,
    rule_mu_col_right,
    rule_x_path_right,
    rule_upper_right,
    rule_lower_right,
)


def forced_before(p: FacetProfile, q: FacetProfile) -> bool:
    """True when one of the five partial-order rules puts ``p`` before ``q``."""
    return any(rule(p, q) for rule in PARTIAL_ORDER_RULES)


@dataclass(frozen=True)
class ShellingOrder:
    shape: GridShape
    facets: tuple[FacetProfile, ...]

    def __len__(self) -> int:
        return len(self.facets)

    def __getitem__(self, k: int) -> FacetProfile:
        return self.facets[k]

    @cached_property
    def position(self) -> dict[int, int]:
        """0-based position of each facet, keyed by vertex mask."""
        return {f.mask: k for k, f in enumerate(self.facets)}

    def position_of(self, facet) -> int:
        mask = facet.mask if isinstance(facet, FacetProfile) else self.shape.mask(facet)
        return self.position[mask]

    @cached_property
    def words(self) -> np.ndarray:
        return kernels.pack_masks([f.mask for f in self.facets], self.shape.num_vertices)

    @cached_property
    def _restriction(self):
        return kernels.restriction(self.words)


def shelling_sequence(shape: GridShape) -> ShellingOrder:
    return ShellingOrder(shape, tuple(sorted(enumerate_facets(shape), key=lambda f: f.order_key)))


@dataclass(frozen=True)
class ShellingResult:
    """Outcome of :func:`verify_shelling`.

    Positions are 1-based. ``failing_pair`` is ``(j, i)`` with ``j < i``.
    A certificate ``(j, i, v, k)`` says ``F_i \\ F_k = {v}`` with
    ``v`` in ``F_i \\ F_j`` and ``k < i``.
    """

    ok: bool
    facets: int
    pairs_checked: int
    failing_pair: tuple[int, int] | None = None
    certificates: list[tuple[int, int, Vertex, int]] | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.ok


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _unpack(row: np.ndarray) -> int:
    return sum(int(w) << (64 * k) for k, w in enumerate(row))


def verify_shelling(order: ShellingOrder, certificates: bool = False) -> ShellingResult:
    """Check the shelling condition for every pair ``j < i`` of ``order``."""
    e = len(order)
    U, fi, fj = order._restriction
    pairs = e * (e - 1) // 2
    if fi >= 0:
        # count pairs up to and including the failing one
        checked = fi * (fi - 1) // 2 + fj + 1
        return ShellingResult(False, e, checked, failing_pair=(fj + 1, fi + 1))
    certs = None
    if certificates:
        certs = []
        masks = [f.mask for f in order.facets]
        for i in range(e):
            ridge = {}
            for k in range(i):
                d = masks[i] & ~masks[k]
                if d and d & (d - 1) == 0:
                    ridge.setdefault(d, k)
            u = _unpack(U[i])
            for j in range(i):
                hit = masks[i] & ~masks[j] & u
                v = 1 << _lowest_bit(hit)
                certs.append((j + 1, i + 1, order.shape.vertex_at(_lowest_bit(hit)), ridge[v] + 1))
    return ShellingResult(True, e, pairs, certificates=certs)


def restriction_face(order: ShellingOrder, index: int) -> frozenset[Vertex]:
    """Vertices ``v`` of ``F_index`` whose removal lands inside an earlier facet (1-based)."""
    if not 1 <= index <= len(order):
        raise IndexError(f"facet index {index} outside 1..{len(order)}")
    U = order._restriction[0]
    return frozenset(order.shape.unmask(_unpack(U[index - 1])))


def restriction_sizes(order: ShellingOrder) -> np.ndarray:
    U = order._restriction[0]
    return np.bitwise_count(U).sum(axis=1)


def h_vector(order: ShellingOrder) -> list[int]:
    """``h[k]`` = number of facets whose restriction face has ``k`` vertices."""
    result = verify_shelling(order)
    if not result.ok:
        raise PreconditionError(f"order is not a shelling; first failing pair {result.failing_pair}")
    d = order.shape.facet_size
    counts = np.bincount(restriction_sizes(order), minlength=d + 1)
    return [int(c) for c in counts[: d + 1]]


def f_from_h(h: list[int], d: int) -> list[int]:
    """Face counts by size ``0..d`` of a pure complex of facet size ``d``."""
    return [sum(h[j] * comb(d - j, k - j) for j in range(min(k, len(h) - 1) + 1)) for k in range(d + 1)]


def h_from_f(f: list[int], d: int) -> list[int]:
    """Inverse of :func:`f_from_h`; ``f[k]`` counts faces with ``k`` vertices."""
    return [
        sum((-1) ** (j - k) * comb(d - k, j - k) * f[k] for k in range(j + 1))
        for j in range(d + 1)
    ]


@dataclass(frozen=True)
class ShellingWitness:
    """``later \\ intermediate == {pivot_vertex}`` with ``intermediate`` before ``later``."""

    later: FacetProfile
    earlier: FacetProfile
    pivot_vertex: Vertex
    intermediate: FacetProfile
    case: str

    def check(self) -> dict[str, bool]:
        q, p, r, v = self.later, self.earlier, self.intermediate, self.pivot_vertex
        return {
            "v_in_later_not_earlier": v in q.vertices and v not in p.vertices,
            "single_difference": q.vertices - r.vertices == {v},
            "intermediate_first": compare(r, q) < 0,
        }


def _pick_move(p: FacetProfile, q: FacetProfile) -> tuple[str, Vertex, Vertex]:
    """Choose ``(case, removed, added)`` following the four-case argument."""
    m, n = q.shape.m, q.shape.n
    qv = q.vertices
    if p.mu != q.mu:
        i, j = q.mu
        if (i, j) == (m - 1, n):
            return "mu_special", x(i, j), x(m, n - 1)
        if q.x_path.cells[1] == (i, j + 1):
            add, cascade = y(m, j + 1), y(m - 1, j + 2)
        else:
            add, cascade = y(i + 1, n), y(i + 2, n - 1)
        if add in qv:
            # the extended Y path would run into the other one; shift it one cell
            return "mu_cascade", x(i, j), cascade
        return "mu", x(i, j), add
    if q.x_path != p.x_path:
        for a, b in q.x_path.right_turns():
            if x(a, b) not in p.vertices:
                return "x_turn", x(a, b), x(a + 1, b - 1)
    elif q.y_upper != p.y_upper:
        for c, d in q.y_upper.right_turns():
            if p.y_upper.has_on_left((c, d)):
                if (c + 1, d - 1) in q.y_lower.cells:
                    return "upper_double", y(c, d), y(c + 2, d - 2)
                return "upper_turn", y(c, d), y(c + 1, d - 1)
    elif q.y_lower != p.y_lower:
        for e, f in q.y_lower.right_turns():
            if p.y_lower.has_on_left((e, f)):
                return "lower_turn", y(e, f), y(e + 1, f - 1)
    raise InternalConsistencyError(f"no witness move found for P={p} Q={q}")


def construct_witness(
    p: FacetProfile, q: FacetProfile, order: ShellingOrder | None = None
) -> ShellingWitness:
    """Build ``v`` in ``Q \\ P`` and a facet ``R`` before ``Q`` with ``Q \\ R = {v}``."""
    if order is not None:
        before = order.position_of(p) < order.position_of(q)
    else:
        before = compare(p, q) < 0
    if not before:
        raise PreconditionError(f"need P before Q, got P={p} Q={q}")
    case, v, added = _pick_move(p, q)
    try:
        r = decompose(q.shape, (q.vertices - {v}) | {added})
    except (ClassificationError, DomainError) as exc:
        raise InternalConsistencyError(f"case {case}: constructed set is not a facet ({exc})") from exc
    witness = ShellingWitness(q, p, v, r, case)
    failed = [name for name, ok in witness.check().items() if not ok]
    if order is not None and r.mask not in order.position:
        failed.append("intermediate_listed")
    if failed:
        raise InternalConsistencyError(f"case {case}: witness fails {failed} for P={p} Q={q}")
    return witness


def validate_all_witnesses(order: ShellingOrder) -> Counter:
    """Construct and check a witness for every ordered pair; returns case counts."""
    cases = Counter()
    facets = order.facets
    for i, q in enumerate(facets):
        for p in facets[:i]:
            cases[construct_witness(p, q, order).case] += 1
    return cases
