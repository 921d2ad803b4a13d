"""Brute-force ground truth: every face and every facet straight from the definition."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import CapacityError
from .grid import GridShape, Vertex
from .ideal import generators

MAX_ORACLE_VERTICES = 24


@dataclass(frozen=True)
class FaceCensus:
    shape: GridShape
    faces_by_dim: dict[int, int]
    facet_masks: tuple[int, ...]

    @cached_property
    def facets(self) -> frozenset[frozenset[Vertex]]:
        return frozenset(frozenset(self.shape.unmask(f)) for f in self.facet_masks)

    @property
    def f_vector(self) -> list[int]:
        """Face counts for dimensions ``-1, 0, 1, ...``."""
        return [self.faces_by_dim[d] for d in sorted(self.faces_by_dim)]

    @property
    def num_faces(self) -> int:
        return sum(self.faces_by_dim.values())


def _check_capacity(shape: GridShape):
    if shape.num_vertices > MAX_ORACLE_VERTICES:
        raise CapacityError(
            f"{shape.m}x{shape.n} grid has {shape.num_vertices} vertices; "
            f"MAX_ORACLE_VERTICES={MAX_ORACLE_VERTICES}"
        )


def face_masks(shape: GridShape, prune: bool = False) -> np.ndarray:
    """Sorted masks of every face.

    ``prune=False`` tests all ``2**(2mn)`` subsets against every generator;
    ``prune=True`` only extends faces, which skips every superset of a
    non-face. Both must agree.
    """
    _check_capacity(shape)
    gens = generators(shape).mask_array()
    nverts = shape.num_vertices
    if prune:
        return kernels.grow_faces(nverts, gens)
    flags = kernels.scan_faces(nverts, gens)
    return np.flatnonzero(flags).astype(np.uint64)


def enumerate_faces_bruteforce(shape: GridShape, prune: bool = False) -> FaceCensus:
    faces = face_masks(shape, prune=prune)
    sizes = np.bitwise_count(faces)
    top = shape.num_vertices
    counts = np.bincount(sizes, minlength=top + 1)
    faces_by_dim = {k - 1: int(counts[k]) for k in range(top + 1)}
    # trim trailing empty dimensions, keeping at least the facet dimension
    while len(faces_by_dim) > shape.facet_size + 1 and faces_by_dim[max(faces_by_dim)] == 0:
        del faces_by_dim[max(faces_by_dim)]
    maximal = faces[kernels.maximal_flags(faces, shape.num_vertices)]
    return FaceCensus(shape, faces_by_dim, tuple(int(f) for f in maximal))


def enumerate_facets_bruteforce(shape: GridShape, prune: bool = False) -> frozenset[frozenset[Vertex]]:
    return enumerate_faces_bruteforce(shape, prune=prune).facets
