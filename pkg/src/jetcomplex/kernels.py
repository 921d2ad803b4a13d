"""Bitmask kernels behind the oracle and the shelling check.

Each kernel has a numba implementation (``*_nb``) and a numpy twin
(``*_np``) that must return identical arrays. The public names dispatch on
:data:`jetcomplex._accel.USE_NUMBA`; ``BACKENDS`` exposes both sides for
tests and benchmarks.

Vertex sets are ``uint64`` masks. The face kernels need ``2mn <= 64``;
the shelling kernel takes ``(e, W)`` word arrays of any width.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

ONE = np.uint64(1)
ZERO = np.uint64(0)


def index_by_top_bit(nverts: int, gens: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Group generator masks by their highest set bit (CSR layout)."""
    gens = np.asarray(gens, dtype=np.uint64)
    tops = np.array([int(g).bit_length() - 1 for g in gens], dtype=np.int64)
    order = np.argsort(tops, kind="stable")
    counts = np.bincount(tops, minlength=nverts) if gens.size else np.zeros(nverts, np.int64)
    offsets = np.zeros(nverts + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(counts)
    return offsets, gens[order]


def pack_masks(masks, nverts: int) -> np.ndarray:
    """Python-int masks to an ``(e, W)`` uint64 word array."""
    words = max(1, -(-nverts // 64))
    out = np.zeros((len(masks), words), dtype=np.uint64)
    low = (1 << 64) - 1
    for r, mask in enumerate(masks):
        for w in range(words):
            out[r, w] = (mask >> (64 * w)) & low
    return out


# full subset scan


@njit
def _scan_faces_nb(total, gens):
    flags = np.zeros(total, np.uint8)
    for s in range(total):
        su = np.uint64(s)
        ok = 1
        for t in range(gens.shape[0]):
            g = gens[t]
            if su & g == g:
                ok = 0
                break
        flags[s] = ok
    return flags


def _scan_faces_np(total, gens, chunk=1 << 20):
    flags = np.empty(total, np.uint8)
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        s = np.arange(lo, hi, dtype=np.uint64)
        ok = np.ones(hi - lo, dtype=bool)
        for g in gens:
            ok &= (s & g) != g
        flags[lo:hi] = ok
    return flags


# pruned growth: only faces are ever visited


@njit
def _grow_faces_nb(nverts, offsets, gmasks):
    cap = 1024
    out = np.empty(cap, np.uint64)
    out[0] = ZERO
    cnt = 1
    stack_mask = np.zeros(nverts + 1, np.uint64)
    stack_next = np.zeros(nverts + 1, np.int64)
    depth = 0
    while depth >= 0:
        v = stack_next[depth]
        if v >= nverts:
            depth -= 1
            continue
        stack_next[depth] = v + 1
        new = stack_mask[depth] | (ONE << np.uint64(v))
        ok = True
        for t in range(offsets[v], offsets[v + 1]):
            g = gmasks[t]
            if new & g == g:
                ok = False
                break
        if ok:
            if cnt == cap:
                grown = np.empty(cap * 2, np.uint64)
                grown[:cap] = out
                out = grown
                cap *= 2
            out[cnt] = new
            cnt += 1
            depth += 1
            stack_mask[depth] = new
            stack_next[depth] = v + 1
    return np.sort(out[:cnt])


def _grow_faces_np(nverts, offsets, gmasks):
    layer = np.zeros(1, dtype=np.uint64)
    tops = np.full(1, -1, dtype=np.int64)
    found = [layer]
    while layer.size:
        next_faces, next_tops = [], []
        for v in range(nverts):
            cand = layer[tops < v] | (ONE << np.uint64(v))
            ok = np.ones(cand.size, dtype=bool)
            for g in gmasks[offsets[v]:offsets[v + 1]]:
                ok &= (cand & g) != g
            cand = cand[ok]
            next_faces.append(cand)
            next_tops.append(np.full(cand.size, v, dtype=np.int64))
        layer = np.concatenate(next_faces)
        tops = np.concatenate(next_tops)
        found.append(layer)
    return np.sort(np.concatenate(found))


# maximality by single-vertex extension


@njit
def _maximal_flags_nb(faces, nverts):
    out = np.ones(faces.shape[0], np.bool_)
    nf = faces.shape[0]
    for idx in range(nf):
        f = faces[idx]
        for v in range(nverts):
            b = ONE << np.uint64(v)
            if f & b:
                continue
            t = f | b
            pos = np.searchsorted(faces, t)
            if pos < nf and faces[pos] == t:
                out[idx] = False
                break
    return out


def _maximal_flags_np(faces, nverts):
    out = np.ones(faces.size, dtype=bool)
    if faces.size == 0:
        return out
    for v in range(nverts):
        b = ONE << np.uint64(v)
        absent = (faces & b) == 0
        cand = faces | b
        pos = np.minimum(np.searchsorted(faces, cand), faces.size - 1)
        out &= ~(absent & (faces[pos] == cand))
    return out


# shelling: restriction masks and the pairwise definition check


@njit
def _restriction_nb(F):
    e, W = F.shape
    U = np.zeros((e, W), np.uint64)
    fail_i = -1
    fail_j = -1
    for i in range(e):
        for k in range(i):
            word = -1
            single = True
            for w in range(W):
                d = F[i, w] & ~F[k, w]
                if d != ZERO:
                    if word >= 0 or (d & (d - ONE)) != ZERO:
                        single = False
                        break
                    word = w
            if single and word >= 0:
                U[i, word] |= F[i, word] & ~F[k, word]
        if fail_i < 0:
            for j in range(i):
                hit = False
                for w in range(W):
                    if F[i, w] & ~F[j, w] & U[i, w] != ZERO:
                        hit = True
                        break
                if not hit:
                    fail_i = i
                    fail_j = j
                    break
    return U, fail_i, fail_j


def _restriction_np(F):
    e, W = F.shape
    U = np.zeros((e, W), dtype=np.uint64)
    fail_i = fail_j = -1
    for i in range(1, e):
        D = F[i] & ~F[:i]
        singles = D[np.bitwise_count(D).sum(axis=1) == 1]
        if singles.size:
            U[i] = np.bitwise_or.reduce(singles, axis=0)
        if fail_i < 0:
            bad = np.flatnonzero(~(D & U[i]).any(axis=1))
            if bad.size:
                fail_i, fail_j = i, int(bad[0])
    return U, fail_i, fail_j


BACKENDS = {
    "numba": {
        "scan_faces": _scan_faces_nb,
        "grow_faces": _grow_faces_nb,
        "maximal_flags": _maximal_flags_nb,
        "restriction": _restriction_nb,
    },
    "numpy": {
        "scan_faces": _scan_faces_np,
        "grow_faces": _grow_faces_np,
        "maximal_flags": _maximal_flags_np,
        "restriction": _restriction_np,
    },
}

_ACTIVE = BACKENDS["numba" if USE_NUMBA else "numpy"]


def scan_faces(nverts: int, gens: np.ndarray) -> np.ndarray:
    """``uint8`` face flag for every subset mask in ``[0, 2**nverts)``."""
    return _ACTIVE["scan_faces"](1 << nverts, np.asarray(gens, dtype=np.uint64))


def grow_faces(nverts: int, gens: np.ndarray) -> np.ndarray:
    """Sorted masks of all faces, growing only from faces."""
    offsets, gmasks = index_by_top_bit(nverts, gens)
    return _ACTIVE["grow_faces"](nverts, offsets, gmasks)


def maximal_flags(faces: np.ndarray, nverts: int) -> np.ndarray:
    """For sorted, downward-closed ``faces``: which ones are maximal."""
    return _ACTIVE["maximal_flags"](np.asarray(faces, dtype=np.uint64), nverts)


def restriction(F: np.ndarray):
    """Restriction masks of an ordered facet list plus the first failing ``(i, j)``.

    ``U[i]`` collects every ``v`` with ``F[i] \\ F[k] == {v}`` for some
    ``k < i``. Pair ``j < i`` satisfies the shelling condition iff
    ``(F[i] \\ F[j]) & U[i]`` is non-empty; the first pair without it is
    reported as ``(i, j)`` (``(-1, -1)`` when none).
    """
    U, i, j = _ACTIVE["restriction"](np.ascontiguousarray(F, dtype=np.uint64))
    return U, int(i), int(j)
