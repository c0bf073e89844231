"""Search-kernel backend selection.

The compiled kernel is used when it was built and ``RAINBOWCONN_PURE_PYTHON``
is unset; otherwise the pure-Python kernel runs.  Both share one contract.
"""
from __future__ import annotations

import os

from . import _pysearch

FOUND, EXHAUSTED, BUDGET = _pysearch.FOUND, _pysearch.EXHAUSTED, _pysearch.BUDGET

try:
    if os.environ.get("RAINBOWCONN_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
COMPILED_MAX_COLOURS = 64


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def run_search(ep_ptr, ep_idx, path_pair, pair_alive, n_seeds, k, node_limit, deadline,
               leaf_check=None, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython" and _compiled is None:
        raise RuntimeError("compiled kernel is not built")
    if backend == "cython" and k <= COMPILED_MAX_COLOURS:
        return _compiled.search(ep_ptr, ep_idx, path_pair, pair_alive, n_seeds, k, node_limit, deadline, leaf_check)
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    return _pysearch.search(ep_ptr, ep_idx, path_pair, pair_alive, n_seeds, k, node_limit, deadline, leaf_check)
