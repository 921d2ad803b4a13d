"""Backend selection for the hot kernels.

Numba is used when importable unless ``JETCOMPLEX_PURE_NUMPY`` is set to a
truthy value, in which case every kernel dispatches to its numpy twin.
"""
import os

ENV_FLAG = "JETCOMPLEX_PURE_NUMPY"


def _flag_set():
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")


try:
    import numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _flag_set()


def njit(*args, **kwargs):
    """``numba.njit`` with caching, or an identity decorator without numba."""
    bare = len(args) == 1 and callable(args[0]) and not kwargs
    if not HAVE_NUMBA:
        return args[0] if bare else (lambda fn: fn)
    kwargs.setdefault("cache", True)
    if bare:
        return numba.njit(**kwargs)(args[0])
    return numba.njit(*args, **kwargs)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
