"""The squarefree generators A-E of the leading-term ideal and face membership."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .grid import GridShape, Vertex, x, y

FAMILY_TAGS = ("A", "B", "C", "D", "E")


class Monomial(tuple):
    """A squarefree monomial as a canonically sorted tuple of distinct vertices."""

    def __new__(cls, vertices: Iterable[Vertex]):
        vs = sorted(set(vertices))
        return super().__new__(cls, vs)

    def __str__(self) -> str:
        return "*".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Monomial({self})"


@dataclass(frozen=True)
class GeneratorFamily:
    tag: str
    members: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class Generators:
    shape: GridShape
    families: tuple[GeneratorFamily, ...]

    def family(self, tag: str) -> GeneratorFamily:
        return self.families[FAMILY_TAGS.index(tag)]

    @cached_property
    def tagged(self) -> tuple[tuple[str, Monomial], ...]:
        return tuple((fam.tag, mono) for fam in self.families for mono in fam)

    @cached_property
    def merged(self) -> tuple[Monomial, ...]:
        seen = {}
        for _, mono in self.tagged:
            seen.setdefault(mono, None)
        return tuple(seen)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(self.shape.mask(mono) for _, mono in self.tagged)

    def mask_array(self) -> np.ndarray:
        """Generator masks as ``uint64``; only valid when ``2mn <= 64``."""
        if self.shape.num_vertices > 64:
            raise OverflowError("vertex masks exceed 64 bits")
        return np.array(self.masks, dtype=np.uint64)


def _family_a(m, n):
    for i, j in itertools.combinations(range(1, m + 1), 2):
        for k, l in itertools.combinations(range(1, n + 1), 2):
            yield Monomial((x(i, l), x(j, k)))


def _family_b(m, n):
    for i, j in itertools.combinations(range(1, m + 1), 2):
        for k, l in itertools.combinations(range(1, n + 1), 2):
            yield Monomial((x(i, k), y(j, l)))


def _family_c(m, n):
    # i < j <= k
    rows = [(i, j, k) for i in range(1, m + 1) for j in range(i + 1, m + 1) for k in range(j, m + 1)]
    for i, j, k in rows:
        for p, q, r in itertools.combinations(range(1, n + 1), 3):
            yield Monomial((x(k, p), y(j, q), y(i, r)))


def _family_d(m, n):
    # p < q <= r
    cols = [(p, q, r) for p in range(1, n + 1) for q in range(p + 1, n + 1) for r in range(q, n + 1)]
    for i, j, k in itertools.combinations(range(1, m + 1), 3):
        for p, q, r in cols:
            yield Monomial((x(i, r), y(j, q), y(k, p)))


def _family_e(m, n):
    for i, j, k in itertools.combinations(range(1, m + 1), 3):
        for p, q, r in itertools.combinations(range(1, n + 1), 3):
            yield Monomial((y(i, r), y(j, q), y(k, p)))


_BUILDERS = dict(zip(FAMILY_TAGS, (_family_a, _family_b, _family_c, _family_d, _family_e)))


@lru_cache(maxsize=None)
def generators(shape: GridShape) -> Generators:
    """The five generator families for ``shape``, each sorted canonically."""
    fams = tuple(
        GeneratorFamily(tag, tuple(sorted(set(_BUILDERS[tag](shape.m, shape.n)))))
        for tag in FAMILY_TAGS
    )
    return Generators(shape, fams)


def _candidate_mask(shape: GridShape, candidate) -> int:
    if isinstance(candidate, int):
        return candidate
    return shape.mask(candidate)


def is_face(shape: GridShape, candidate) -> bool:
    """True iff no generator divides the monomial of ``candidate``.

    ``candidate`` is an iterable of vertices or an integer vertex mask.
    """
    c = _candidate_mask(shape, candidate)
    return all(g & c != g for g in generators(shape).masks)


def violating_generators(shape: GridShape, candidate) -> list[tuple[str, Monomial]]:
    c = _candidate_mask(shape, candidate)
    gens = generators(shape)
    return [tm for tm, g in zip(gens.tagged, gens.masks) if g & c == g]
