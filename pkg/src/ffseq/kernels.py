"""Selection layer for the F_q linear-algebra and polynomial kernels.

The compiled extension (``ffseq._core``) and the pure-Python module
(``ffseq._core_py``) implement the same operations; the compiled one is
preferred when it imported cleanly.  Set ``FFSEQ_PURE_PYTHON=1`` in the
environment to force the fallback.  Every public function also accepts an
explicit ``backend`` argument so tests and benchmarks can compare both.
"""

from __future__ import annotations

import os

import numpy as np

from . import _core_py

if os.environ.get("FFSEQ_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _core as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


class GFTables:
    """Dense lookup tables for one field, shared by both kernel backends.

    ``add`` and ``mul`` are q-by-q uint16 arrays over element indices,
    ``neg`` and ``inv`` are length-q vectors (``inv[0]`` is unused).
    """

    __slots__ = ("q", "add", "mul", "neg", "inv", "_lists")

    def __init__(self, q, add, mul, neg, inv):
        self.q = q
        self.add = np.ascontiguousarray(add, dtype=np.uint16)
        self.mul = np.ascontiguousarray(mul, dtype=np.uint16)
        self.neg = np.ascontiguousarray(neg, dtype=np.uint16)
        self.inv = np.ascontiguousarray(inv, dtype=np.uint16)
        self._lists = None

    def lists(self):
        """Nested-list views of the tables, cached for the Python backend."""
        if self._lists is None:
            self._lists = (
                self.add.tolist(),
                self.mul.tolist(),
                self.neg.tolist(),
                self.inv.tolist(),
            )
        return self._lists


def get_backend() -> str:
    return BACKEND


def _resolve(backend):
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel backend is not available")
        return _compiled, "cython"
    if backend == "python":
        return _core_py, "python"
    raise ValueError(f"unknown backend {backend!r}")


def _as_mat(mat):
    arr = np.ascontiguousarray(mat, dtype=np.uint16)
    if arr.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    return arr


def _as_vec(v):
    arr = np.ascontiguousarray(v, dtype=np.uint16)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional coefficient vector")
    return arr


def rank(mat, tables: GFTables, backend=None) -> int:
    """Rank of a matrix of element indices over the field of ``tables``."""
    impl, name = _resolve(backend)
    mat = _as_mat(mat)
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return 0
    if name == "cython":
        return impl.rank(mat.copy(), tables.add, tables.mul, tables.neg, tables.inv)
    return impl.rank(mat, tables)


def matmul(a, b, tables: GFTables, backend=None) -> np.ndarray:
    """Matrix product over F_q; operands and result hold element indices."""
    impl, name = _resolve(backend)
    a, b = _as_mat(a), _as_mat(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions do not match")
    if name == "cython":
        return impl.matmul(a, b, tables.add, tables.mul)
    return impl.matmul(a, b, tables)


def poly_mul(a, b, tables: GFTables, backend=None) -> np.ndarray:
    """Coefficient convolution over F_q (little-endian index vectors)."""
    impl, name = _resolve(backend)
    a, b = _as_vec(a), _as_vec(b)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.uint16)
    if name == "cython":
        return impl.poly_mul(a, b, tables.add, tables.mul)
    return impl.poly_mul(a, b, tables)


def padic_expand(f, p, K: int, tables: GFTables, backend=None) -> np.ndarray:
    """First K residue rows of the expansion of f in powers of monic p.

    Row k holds the coefficient indices (constant term first, ``deg p`` of
    them) of the k-th residue.  ``p`` must be monic of degree >= 1.
    """
    impl, name = _resolve(backend)
    f, p = _as_vec(f), _as_vec(p)
    if p.shape[0] < 2 or p[-1] != 1:
        raise ValueError("expansion modulus must be monic of degree >= 1")
    if K < 0:
        raise ValueError("residue count must be nonnegative")
    if name == "cython":
        return impl.padic_expand(f, p, K, tables.add, tables.mul, tables.neg)
    return impl.padic_expand(f, p, K, tables)
