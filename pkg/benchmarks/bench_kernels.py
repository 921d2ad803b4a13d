"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is run once untimed (JIT warm-up), then ``--repeat`` times;
the best wall time is reported. Outputs of both backends are compared.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from jetcomplex import GridShape, generators, shelling_sequence
from jetcomplex._accel import HAVE_NUMBA
from jetcomplex.kernels import BACKENDS, index_by_top_bit


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    scan_shape = GridShape(2, 6)
    nv = scan_shape.num_vertices
    gens = generators(scan_shape).mask_array()
    yield f"scan_faces {scan_shape.m}x{scan_shape.n} (2^{nv} subsets)", "scan_faces", (1 << nv, gens)

    grow_shape = GridShape(3, 4)
    nv = grow_shape.num_vertices
    offsets, gm = index_by_top_bit(nv, generators(grow_shape).mask_array())
    yield f"grow_faces {grow_shape.m}x{grow_shape.n}", "grow_faces", (nv, offsets, gm)

    faces = BACKENDS["numpy"]["grow_faces"](nv, offsets, gm)
    yield f"maximal_flags {grow_shape.m}x{grow_shape.n} ({faces.size} faces)", "maximal_flags", (faces, nv)

    order = shelling_sequence(GridShape(4, 5))
    yield f"restriction 4x5 ({len(order)} facets)", "restriction", (order.words,)


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba not importable; only the numpy backend can be timed")
    print(f"{'kernel':44} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  match")
    for label, name, fargs in cases():
        t_np, out_np = best_of(lambda: BACKENDS["numpy"][name](*fargs), args.repeat)
        if HAVE_NUMBA:
            t_nb, out_nb = best_of(lambda: BACKENDS["numba"][name](*fargs), args.repeat)
            print(f"{label:44} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}  {same(out_nb, out_np)}")
        else:
            print(f"{label:44} {'-':>10} {t_np:10.4f} {'-':>8}  -")


if __name__ == "__main__":
    main()
