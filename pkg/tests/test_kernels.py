import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from jetcomplex import GridShape, _accel, kernels
from jetcomplex.facets import enumerate_facets
from jetcomplex.ideal import generators

BACKENDS = ["numpy"] + (["numba"] if _accel.HAVE_NUMBA else [])


def both(name):
    return [kernels.BACKENDS[b][name] for b in BACKENDS]


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (2, 4)])
def test_face_kernels_agree(m, n):
    shape = GridShape(m, n)
    gens = generators(shape).mask_array()
    nv = shape.num_vertices
    scans = [np.flatnonzero(f(1 << nv, gens)).astype(np.uint64) for f in both("scan_faces")]
    offsets, gm = kernels.index_by_top_bit(nv, gens)
    grown = [f(nv, offsets, gm) for f in both("grow_faces")]
    for a in scans + grown:
        assert np.array_equal(a, scans[0])
    flags = [f(scans[0], nv) for f in both("maximal_flags")]
    for a in flags:
        assert np.array_equal(a, flags[0])


def test_index_by_top_bit():
    gens = np.array([0b11, 0b101, 0b110, 0b1000_0001], dtype=np.uint64)
    offsets, gm = kernels.index_by_top_bit(8, gens)
    assert offsets.tolist() == [0, 0, 1, 3, 3, 3, 3, 3, 4]
    assert gm.tolist() == [0b11, 0b101, 0b110, 0b1000_0001]


def test_pack_masks_multiword():
    words = kernels.pack_masks([1, 1 << 64 | 3, (1 << 70) - 1], 71)
    assert words.shape == (3, 2)
    assert words[1].tolist() == [3, 1]
    assert words[2].tolist() == [2**64 - 1, 2**6 - 1]


@pytest.mark.parametrize("m, n, prefix", [(3, 4, None), (5, 7, 400)])
def test_restriction_kernels_agree(m, n, prefix):
    shape = GridShape(m, n)
    facets = list(itertools.islice(enumerate_facets(shape), prefix))
    F = kernels.pack_masks([f.mask for f in facets], shape.num_vertices)
    results = [f(F) for f in both("restriction")]
    for U, i, j in results:
        assert (i, j) == (-1, -1)
        assert np.array_equal(U, results[0][0])
    # reversed order fails at the same pair on every backend
    bad = [f(F[::-1].copy()) for f in both("restriction")]
    assert len({(int(i), int(j)) for _, i, j in bad}) == 1
    assert bad[0][1] >= 0


def test_env_flag_selects_numpy():
    code = "from jetcomplex import _accel, kernels; print(_accel.backend_name(), kernels._ACTIVE is kernels.BACKENDS['numpy'])"
    env = dict(os.environ, **{_accel.ENV_FLAG: "1"})
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]
    env[_accel.ENV_FLAG] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == ("numba" if _accel.HAVE_NUMBA else "numpy")


def test_pure_numpy_cli_matches_default(tmp_path):
    args = [sys.executable, "-m", "jetcomplex", "check", "-m", "2", "-n", "4"]
    default = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    env = dict(os.environ, **{_accel.ENV_FLAG: "1"})
    pure = subprocess.run(args, env=env, capture_output=True, text=True, check=True).stdout
    assert default == pure
