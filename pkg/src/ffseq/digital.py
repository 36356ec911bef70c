"""The digital method: points of [0,1)^s from generating matrices.

The n-th point's i-th coordinate is read off the matrix-vector product
of the i-th generating matrix with the base-q digit vector of n, mapping
digits through the field's digit/element bijection in both directions.
Truncation to m digits happens on the digit vectors, before any real
number is formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .construct import GenMatrix
from .gf import digit_to_element, element_to_digit


@dataclass(frozen=True)
class DigitPoint:
    """One point as exact per-coordinate digit vectors in base q."""

    q: int
    digits: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.digits)

    def fractions(self) -> tuple[Fraction, ...]:
        out = []
        for coord in self.digits:
            num = 0
            for d in coord:
                num = num * self.q + d
            out.append(Fraction(num, self.q ** len(coord)))
        return tuple(out)

    def values(self) -> tuple[float, ...]:
        return tuple(float(f) for f in self.fractions())

    def digit_strings(self) -> tuple[str, ...]:
        if self.q <= 10:
            return tuple("".join(str(d) for d in coord) for coord in self.digits)
        return tuple(".".join(str(d) for d in coord) for coord in self.digits)


def _digit_columns(start: int, count: int, q: int, R: int) -> np.ndarray:
    """Base-q digit vectors of start..start+count-1 as an R x count array."""
    ns = np.arange(start, start + count, dtype=np.int64)
    if count and ns[-1] >= q**R:
        raise ValueError(f"index {int(ns[-1])} needs more than {R} digits in base {q}")
    out = np.empty((R, count), dtype=np.uint16)
    for j in range(R):
        ns, rem = np.divmod(ns, q)
        out[j] = rem
    return out


def _coerce_arrays(matrices) -> list[np.ndarray]:
    out = []
    for mat in matrices:
        if isinstance(mat, GenMatrix):
            out.append(mat.array)
        else:
            out.append(np.ascontiguousarray(mat, dtype=np.uint16))
    return out


def generate_point(n: int, matrices, m: int, ctx=None) -> DigitPoint:
    """The n-th point, truncated to m output digits per coordinate."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    ctx = _resolve_ctx(matrices, ctx)
    arrays = _coerce_arrays(matrices)
    _check_m(arrays, m)
    tables = ctx.tables()
    R = arrays[0].shape[1]
    ncol = _digit_columns(n, 1, ctx.q, R)
    ncol = np.array([[digit_to_element(ctx, int(d)).index] for d in ncol[:, 0]], dtype=np.uint16)
    coords = []
    for arr in arrays:
        y = kernels.matmul(arr[:m, :], ncol, tables)[:, 0]
        coords.append(tuple(element_to_digit(ctx.element(int(v))) for v in y))
    return DigitPoint(ctx.q, tuple(coords))


def block_digit_arrays(k: int, m: int, matrices, ctx=None) -> list[np.ndarray]:
    """Digit matrices (m x q^m) of the k-th block, one per coordinate.

    Row j holds the (j+1)-st output digit of every point of the block
    k*q^m <= n < (k+1)*q^m, in index order.
    """
    if k < 0:
        raise ValueError("block index must be nonnegative")
    ctx = _resolve_ctx(matrices, ctx)
    arrays = _coerce_arrays(matrices)
    _check_m(arrays, m)
    tables = ctx.tables()
    q = ctx.q
    R = arrays[0].shape[1]
    count = q**m
    dig = _digit_columns(k * count, count, q, R)
    if ctx.p != q:
        lift = np.array([digit_to_element(ctx, d).index for d in range(q)], dtype=np.uint16)
        dig = lift[dig]
    out = []
    for arr in arrays:
        y = kernels.matmul(arr[:m, :], dig, tables)
        if ctx.p != q:
            drop = np.zeros(ctx.q, dtype=np.uint16)
            for idx in range(ctx.q):
                drop[idx] = element_to_digit(ctx.element(idx))
            y = drop[y]
        out.append(y)
    return out


def generate_block(k: int, m: int, matrices, ctx=None) -> list[DigitPoint]:
    """All q^m points of the k-th block, in index order."""
    ctx = _resolve_ctx(matrices, ctx)
    arrays = block_digit_arrays(k, m, matrices, ctx)
    count = arrays[0].shape[1]
    points = []
    for t in range(count):
        coords = tuple(tuple(int(d) for d in arr[:, t]) for arr in arrays)
        points.append(DigitPoint(ctx.q, coords))
    return points


def _resolve_ctx(matrices, ctx):
    if ctx is not None:
        return ctx
    for mat in matrices:
        if isinstance(mat, GenMatrix):
            return mat.ctx
    raise ValueError("a field context is required with raw matrix arrays")


def _check_m(arrays, m):
    if m < 1:
        raise ValueError("at least one output digit is required")
    for arr in arrays:
        if m > arr.shape[0]:
            raise ValueError("more output digits requested than matrix rows")
    if len({arr.shape for arr in arrays}) != 1:
        raise ValueError("matrices must share dimensions")
