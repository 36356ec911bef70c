"""Columnwise construction of generating matrices from a function field.

Column r of the i-th matrix holds the coordinate vectors of the local
expansion coefficients of y_r at the i-th place, where y_r is the
echelon-canonical Riemann-Roch basis element of pole order n_r at the
infinite place.  Two selection modes are supported: ``plain`` takes y_r
from L(n_r * P_inf); ``finite_row`` additionally forces zeros of
prescribed multiplicity at the P_i, which caps every row at a finite
length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .funcfield import (
    Divisor,
    FieldInstance,
    Place,
    RATIONAL,
    local_expansion,
    nr_index,
    place_enumerate,
    pole_order,
    rr_basis,
)
from .gf import FieldElement, vector_decompose
from .polyring import Polynomial

MODES = ("plain", "finite_row")


@dataclass(frozen=True)
class SeqSpec:
    """A validated construction request: field, places, selection mode."""

    field: FieldInstance
    places: tuple[Place, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not self.places:
            raise ValueError("at least one place is required")
        if len(set(self.places)) != len(self.places):
            raise ValueError("places must be pairwise distinct")
        for p in self.places:
            if p.is_infinite:
                raise ValueError("the distinguished infinite place cannot be used")
            if p.field_kind != self.field.kind:
                raise ValueError("place does not belong to the field")
            if p.field_kind == RATIONAL and p.data.ctx is not self.field.ctx:
                raise ValueError("place does not belong to the field")

    @property
    def s(self) -> int:
        return len(self.places)

    @property
    def e(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.places)

    @property
    def v(self) -> int:
        return math.lcm(*self.e)

    @property
    def u(self) -> int:
        return self.field.genus

    @property
    def q(self) -> int:
        return self.field.ctx.q


def make_spec(field: FieldInstance, s: int | None = None, mode: str = "plain",
              places=None) -> SeqSpec:
    """Build a SeqSpec, defaulting to the first s canonical finite places."""
    if places is None:
        if s is None:
            raise ValueError("either s or an explicit place list is required")
        places = place_enumerate(field, s)
    places = tuple(places)
    if s is not None and len(places) != s:
        raise ValueError("place list length does not match s")
    return SeqSpec(field, places, mode)


def li_decompose(r: int, g: int, s: int, v: int) -> tuple[int, ...]:
    """Split r - g by cascaded division: r - g = sum_j j*v*l_j + w_1.

    Returns (l_1, ..., l_s, w_1).  Division with remainder is applied
    top-down: r - g = s*v*l_s + w_s with 0 <= w_s < s*v, then
    w_j = (j-1)*v*l_{j-1} + w_{j-1} down to w_1 in [0, v).
    """
    if r <= g:
        raise ValueError("decomposition applies to indices beyond the genus")
    if s < 1 or v < 1:
        raise ValueError("dimension and lcm must be positive")
    w = r - g
    ls = []
    for j in range(s, 0, -1):
        l, w = divmod(w, j * v)
        ls.append(l)
    ls.reverse()
    return (*ls, w)


def divisor_pair(spec: SeqSpec, r: int) -> tuple[Divisor, Divisor]:
    """The divisors whose Riemann-Roch spaces the finite-row y_r separates."""
    field = spec.field
    parts = li_decompose(r, field.genus, spec.s, spec.v)
    ls = parts[:-1]
    coeffs = {}
    for i, place in enumerate(spec.places):
        mult = sum(ls[i:]) * (spec.v // place.degree)
        if mult:
            coeffs[place] = -mult
    hi = dict(coeffs)
    hi[field.p_inf] = nr_index(field, r)
    lo = dict(coeffs)
    lo[field.p_inf] = nr_index(field, r - 1)
    return Divisor(hi), Divisor(lo)


def select_yr(spec: SeqSpec, r: int):
    """Echelon-canonical y_r with pole order exactly n_r at the infinite place."""
    field = spec.field
    target = nr_index(field, r)
    if spec.mode == "finite_row" and r > field.genus:
        D, _ = divisor_pair(spec, r)
    else:
        D = Divisor({field.p_inf: target})
    basis = rr_basis(field, D)
    y = basis[-1]
    if pole_order(y, field) != target:
        raise RuntimeError("basis element with the expected pole order is missing")
    return y


class GenMatrix:
    """A J x R generating matrix over F_q with per-row length metadata.

    Entries are stored as element indices in a read-only array; rows and
    columns are 0-indexed.  ``row_lengths[j]`` is 1 + the largest column
    index holding a nonzero entry in row j, or 0 for an all-zero row,
    measured on the materialized columns.
    """

    __slots__ = ("ctx", "place_degree", "array", "__dict__")

    def __init__(self, ctx, place_degree: int, array: np.ndarray):
        self.ctx = ctx
        self.place_degree = place_degree
        arr = np.ascontiguousarray(array, dtype=np.uint16)
        arr.flags.writeable = False
        self.array = arr

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        mask = self.array != 0
        reach = mask * np.arange(1, self.cols + 1, dtype=np.int64)[None, :]
        return tuple(int(x) for x in reach.max(axis=1, initial=0))

    def entry(self, j: int, r: int) -> FieldElement:
        return self.ctx.element(int(self.array[j, r]))

    def column(self, r: int) -> list[FieldElement]:
        return [self.ctx.element(int(x)) for x in self.array[:, r]]

    def __repr__(self):
        return f"GenMatrix({self.rows}x{self.cols} over GF{self.ctx.q})"


def build_matrices(spec: SeqSpec, J: int, R: int | None = None) -> list[GenMatrix]:
    """Build the s generating matrices with J rows and R columns (R = J default).

    Deterministic, and prefix-stable: rebuilding with larger J or R
    extends the previous matrices without changing existing entries.
    """
    if R is None:
        R = J
    if J < 1 or R < 1:
        raise ValueError("matrix dimensions must be positive")
    if spec.field.kind == RATIONAL:
        arrays = _build_rational(spec, J, R)
    else:
        arrays = _build_generic(spec, J, R)
    return [GenMatrix(spec.field.ctx, p.degree, arr)
            for p, arr in zip(spec.places, arrays)]


def _build_rational(spec: SeqSpec, J: int, R: int) -> list[np.ndarray]:
    ctx = spec.field.ctx
    tables = ctx.tables()
    neg = tables.neg
    e = spec.e
    depths = [-(-J // ei) for ei in e]
    place_polys = [np.array(p.data.coeffs, dtype=np.uint16) for p in spec.places]
    pow_cache: list[dict[int, np.ndarray]] = [
        {0: np.array([1], dtype=np.uint16), 1: arr} for arr in place_polys
    ]

    def place_power(i: int, c: int) -> np.ndarray:
        cache = pow_cache[i]
        if c not in cache:
            cache[c] = kernels.poly_mul(place_power(i, c - 1), place_polys[i], tables)
        return cache[c]

    out = [np.zeros((J, R), dtype=np.uint16) for _ in e]
    finite_row = spec.mode == "finite_row"
    for r in range(R):
        n = nr_index(spec.field, r)
        if finite_row and r > 0:
            parts = li_decompose(r, 0, spec.s, spec.v)
            ls = parts[:-1]
            exps = [sum(ls[i:]) * (spec.v // e[i]) for i in range(spec.s)]
        else:
            exps = [0] * spec.s
        if any(exps):
            modulus = place_power(0, exps[0])
            for i in range(1, spec.s):
                if exps[i]:
                    modulus = kernels.poly_mul(modulus, place_power(i, exps[i]), tables)
            # canonical y_r = x^n - (x^n mod prod p_i^{c_i})
            xn = np.zeros(n + 1, dtype=np.uint16)
            xn[n] = 1
            rem = kernels.padic_expand(xn, modulus, 1, tables)[0]
            y = xn
            y[: rem.shape[0]] = neg[rem]
        else:
            y = np.zeros(n + 1, dtype=np.uint16)
            y[n] = 1
        for i in range(spec.s):
            block = kernels.padic_expand(y, place_polys[i], depths[i], tables)
            out[i][:, r] = block.reshape(-1)[:J]
    return out


def _build_generic(spec: SeqSpec, J: int, R: int) -> list[np.ndarray]:
    e = spec.e
    depths = [-(-J // ei) for ei in e]
    out = [np.zeros((J, R), dtype=np.uint16) for _ in e]
    for r in range(R):
        y = select_yr(spec, r)
        for i, place in enumerate(spec.places):
            coords = []
            for res in local_expansion(y, place, depths[i]):
                coords.extend(el.index for el in vector_decompose(res, e[i]))
            out[i][:, r] = coords[:J]
    return out


def dump_matrices(spec: SeqSpec, matrices: list[GenMatrix]) -> str:
    """Serialize matrices in the text interchange format."""
    ctx = spec.field.ctx
    first = matrices[0]
    lines = [f"{ctx.q} {spec.s} {first.rows} {first.cols} {spec.mode}"]
    for i, mat in enumerate(matrices, start=1):
        lines.append(f"matrix {i} {mat.place_degree}")
        for j in range(mat.rows):
            lines.append(" ".join(str(int(x)) for x in mat.array[j]))
        lines.append("rowlens: " + " ".join(str(x) for x in mat.row_lengths))
    return "\n".join(lines) + "\n"
