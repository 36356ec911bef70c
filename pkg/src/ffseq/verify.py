"""Independent brute-force verification of net and sequence properties.

Everything here works from first principles on the finished matrices or
points: rank checks over F_q, exact interval counting on digit vectors,
quality-parameter scans, row-length audits, and exact star discrepancy
in rational arithmetic.  Nothing is shared with the construction logic
beyond the field tables, so a construction bug cannot hide behind its
own verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

import numpy as np

from . import kernels
from .construct import GenMatrix
from .digital import DigitPoint, block_digit_arrays


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check, carrying a counterexample when it fails."""

    name: str
    passed: bool
    m: int | None = None
    d: tuple[int, ...] | None = None
    interval: str | None = None
    block: int | None = None
    detail: str | None = None

    def __str__(self):
        if self.passed:
            return "PASS"
        parts = ["FAIL"]
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.d is not None:
            parts.append("d=(" + ",".join(str(x) for x in self.d) + ")")
        if self.interval is not None:
            parts.append(f"interval={self.interval}")
        if self.block is not None:
            parts.append(f"k={self.block}")
        if self.detail is not None:
            parts.append(f"[{self.detail}]")
        return " ".join(parts)

    def __bool__(self):
        return self.passed


def _resolve(matrices, ctx):
    arrays = []
    for mat in matrices:
        if isinstance(mat, GenMatrix):
            if ctx is None:
                ctx = mat.ctx
            arrays.append(mat.array)
        else:
            arrays.append(np.ascontiguousarray(mat, dtype=np.uint16))
    if ctx is None:
        raise ValueError("a field context is required with raw matrix arrays")
    if len({a.shape for a in arrays}) != 1:
        raise ValueError("matrices must share dimensions")
    return arrays, ctx


def _dvectors(e, total, exact=False):
    """(d_1..d_s) with e_i | d_i, sum <= total (or == total), ascending lex."""
    ranges = [range(0, total + 1, ei) for ei in e]
    for d in product(*ranges):
        t = sum(d)
        if t == 0 or t > total:
            continue
        if exact and t != total:
            continue
        yield d


def _stack_rank_full(arrays, d, m, tables) -> bool:
    rows = [arr[: d[i], :m] for i, arr in enumerate(arrays) if d[i]]
    stacked = np.vstack(rows)
    want = stacked.shape[0]
    if want > m:
        return False
    return kernels.rank(stacked, tables) == want


def net_rank_check(matrices, u, e, m=None, ctx=None) -> VerifyReport:
    """Joint row independence for all admissible d-vectors at a single m."""
    arrays, ctx = _resolve(matrices, ctx)
    if m is None:
        m = arrays[0].shape[0]
    if not (0 <= u <= m):
        raise ValueError("u must lie in [0, m]")
    if len(e) != len(arrays) or any(ei < 1 for ei in e):
        raise ValueError("bad e-vector")
    if m > arrays[0].shape[0] or m > arrays[0].shape[1]:
        raise ValueError("matrices too small for the requested m")
    tables = ctx.tables()
    for d in _dvectors(e, m - u):
        if not _stack_rank_full(arrays, d, m, tables):
            return VerifyReport("net_rank_check", False, m=m, d=d)
    return VerifyReport("net_rank_check", True, m=m)


def seq_rank_check(matrices, u, e, M, ctx=None) -> VerifyReport:
    """Rank criterion for every u < m <= M and admissible nonzero d-vector.

    Because appending columns never lowers the rank of a row selection,
    each d-vector is decided at its smallest admissible m = u + sum(d);
    the first failure reported is the lexicographically first over (m, d).
    """
    arrays, ctx = _resolve(matrices, ctx)
    if u < 0 or M <= u:
        raise ValueError("need 0 <= u < M")
    if arrays[0].shape[0] < M or arrays[0].shape[1] < M:
        raise ValueError("matrices too small for the requested M")
    tables = ctx.tables()
    for total in range(1, M - u + 1):
        m = u + total
        for d in _dvectors(e, total, exact=True):
            if not _stack_rank_full(arrays, d, m, tables):
                return VerifyReport("seq_rank_check", False, m=m, d=d)
    return VerifyReport("seq_rank_check", True, m=M)


def classical_rank_check(matrices, t, M, ctx=None) -> VerifyReport:
    """Classical (t,s) criterion: all d >= 0 with sum(d) = m - t, t < m <= M."""
    arrays, ctx = _resolve(matrices, ctx)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if arrays[0].shape[0] < M or arrays[0].shape[1] < M:
        raise ValueError("matrices too small for the requested M")
    s = len(arrays)
    tables = ctx.tables()
    for m in range(t + 1, M + 1):
        for d in _dvectors((1,) * s, m - t, exact=True):
            if not _stack_rank_full(arrays, d, m, tables):
                return VerifyReport("classical_rank_check", False, m=m, d=d)
    return VerifyReport("classical_rank_check", True, m=M)


def minimal_t(matrices, M, ctx=None) -> tuple[int, VerifyReport]:
    """Smallest t whose classical criterion holds for all m <= M.

    This is an observation at precision M, not a certificate for larger
    m: the scan reports the first t with no violation up to M.
    """
    for t in range(M + 1):
        rep = classical_rank_check(matrices, t, M, ctx=ctx)
        if rep.passed:
            return t, VerifyReport("minimal_t", True, m=M, detail=f"observed minimal t={t} up to M={M}")
    raise RuntimeError("t = M must pass vacuously")  # unreachable


def t_from_ue(u: int, e, m: int | None = None) -> int:
    """Quality parameter implied by (u, e): u + sum(e_i - 1), capped at m."""
    if u < 0 or any(ei < 1 for ei in e):
        raise ValueError("need u >= 0 and e_i >= 1")
    t = u + sum(ei - 1 for ei in e)
    if m is None:
        return t
    if u > m:
        raise ValueError("u must not exceed m")
    return min(t, m)


# ---------------------------------------------------------------------------
# geometric (interval-counting) checks


def _coerce_digits(points, q):
    """Per-coordinate digit arrays (m x N) from DigitPoints or raw arrays."""
    if isinstance(points, (list, tuple)) and points and isinstance(points[0], DigitPoint):
        q = points[0].q
        s = points[0].s
        arrays = [
            np.array([p.digits[i] for p in points], dtype=np.int64).T for i in range(s)
        ]
        return arrays, q
    arrays = [np.asarray(a, dtype=np.int64) for a in points]
    if q is None:
        raise ValueError("q is required with raw digit arrays")
    return arrays, q


def geometric_net_check(points, u, m, e, q=None, volume_reading="at_least") -> VerifyReport:
    """Count points in every admissible elementary interval, exactly.

    ``volume_reading`` selects which intervals are required: "at_least"
    takes every d-vector with sum(d) <= m - u (volume >= q^(u-m)), the
    definition used everywhere in this package; "exact" restricts to
    sum(d) = m - u and exists to demonstrate why the broader reading is
    the right one.
    """
    if volume_reading not in ("at_least", "exact"):
        raise ValueError("unknown volume_reading")
    arrays, q = _coerce_digits(points, q)
    if not (0 <= u <= m):
        raise ValueError("u must lie in [0, m]")
    N = arrays[0].shape[1]
    if N != q**m:
        raise ValueError(f"expected {q**m} points, got {N}")
    if any(arr.shape[0] < m for arr in arrays):
        raise ValueError("points carry fewer than m digits")
    if len(e) != len(arrays) or any(ei < 1 for ei in e):
        raise ValueError("bad e-vector")
    for d in _dvectors(e, m - u, exact=(volume_reading == "exact")):
        keys = np.zeros(N, dtype=np.int64)
        for i, di in enumerate(d):
            for j in range(di):
                keys = keys * q + arrays[i][j]
        total = sum(d)
        counts = np.bincount(keys, minlength=q**total)
        expected = q ** (m - total)
        bad = np.nonzero(counts != expected)[0]
        if bad.size:
            return VerifyReport(
                "geometric_net_check", False, m=m, d=d,
                interval=_interval_str(int(bad[0]), d, q),
                detail=f"count={int(counts[bad[0]])} expected={expected}",
            )
    return VerifyReport("geometric_net_check", True, m=m)


def _interval_str(key: int, d, q: int) -> str:
    digits_total = sum(d)
    parts = []
    for di in reversed(d):
        key, a = divmod(key, q**di) if di else (key, 0)
        parts.append((a, di))
    parts.reverse()
    return "x".join(f"[{a}/{q**di},{a + 1}/{q**di})" for a, di in parts)


def sequence_block_check(matrices, u, e, M, Kmax=2, ctx=None) -> VerifyReport:
    """Interval counts for every truncated block: u < m <= M, 0 <= k <= Kmax."""
    arrays, ctx = _resolve(matrices, ctx)
    if M <= u:
        raise ValueError("need M > u")
    for m in range(u + 1, M + 1):
        for k in range(Kmax + 1):
            digits = block_digit_arrays(k, m, arrays, ctx)
            rep = geometric_net_check(digits, u, m, e, q=ctx.q)
            if not rep.passed:
                return VerifyReport(
                    "sequence_block_check", False, m=m, d=rep.d,
                    interval=rep.interval, block=k, detail=rep.detail,
                )
    return VerifyReport("sequence_block_check", True, m=M)


def row_length_audit(matrices, g, v, ctx=None) -> VerifyReport:
    """Check every materialized row length against the finite-row cap."""
    if not all(isinstance(mat, GenMatrix) for mat in matrices):
        raise ValueError("row-length metadata requires GenMatrix inputs")
    s = len(matrices)
    for i, mat in enumerate(matrices, start=1):
        lengths = mat.row_lengths
        for drow in range(1, mat.rows + 1):
            bound = g + s * v * ((drow - 1) // v) + i * v
            if lengths[drow - 1] > bound:
                return VerifyReport(
                    "row_length_audit", False, d=(drow,),
                    detail=f"matrix {i} row {drow} length {lengths[drow - 1]} > {bound}",
                )
    return VerifyReport("row_length_audit", True)


# ---------------------------------------------------------------------------
# exact star discrepancy

_DISCREPANCY_CAPS = {1: 4096, 2: 512, 3: 128}


def _as_fractions(points):
    out = []
    for p in points:
        if isinstance(p, DigitPoint):
            out.append(p.fractions())
        else:
            out.append(tuple(Fraction(c) for c in p))
    return out


def star_discrepancy_exact(points) -> Fraction:
    """Exact star discrepancy of up to dimension 3, in rational arithmetic.

    Evaluates both one-sided suprema over the grid of critical corners
    (coordinate values and 1): open counts x < t against the volume from
    below, closed counts x <= t against the volume from above.
    """
    pts = _as_fractions(points)
    if not pts:
        raise ValueError("at least one point is required")
    s = len(pts[0])
    if s not in _DISCREPANCY_CAPS:
        raise ValueError("only dimensions 1..3 are supported")
    N = len(pts)
    if N > _DISCREPANCY_CAPS[s]:
        raise ValueError(f"at most {_DISCREPANCY_CAPS[s]} points in dimension {s}")
    for p in pts:
        if len(p) != s:
            raise ValueError("inconsistent dimensions")
        if any(c < 0 or c >= 1 for c in p):
            raise ValueError("points must lie in [0, 1)")

    grids = []
    for i in range(s):
        grids.append(sorted({p[i] for p in pts} | {Fraction(1)}))
    index = [{v: a for a, v in enumerate(grid)} for grid in grids]
    shape = tuple(len(grid) for grid in grids)

    hist = np.zeros(shape, dtype=np.int64)
    coords = tuple(
        np.array([index[i][p[i]] for p in pts], dtype=np.int64) for i in range(s)
    )
    np.add.at(hist, coords, 1)

    closed = hist
    for ax in range(s):
        closed = np.cumsum(closed, axis=ax)
    opened = closed
    for ax in range(s):
        pad = [(0, 0)] * s
        pad[ax] = (1, 0)
        opened = np.pad(opened, pad)[tuple(
            slice(0, shape[a]) for a in range(s)
        )]

    dens = [math.lcm(*(v.denominator for v in grid)) for grid in grids]
    nums = [
        np.array([v.numerator * (dens[i] // v.denominator) for v in grid], dtype=object)
        for i, grid in enumerate(grids)
    ]
    den_total = N * reduce(lambda a, b: a * b, dens, 1)
    if den_total < 2**62 and all(d < 2**20 for d in dens):
        nums = [arr.astype(np.int64) for arr in nums]
        vol = reduce(
            lambda acc, arr: acc[..., None] * arr,
            nums[1:],
            nums[0],
        )
        scale = den_total // N
        over = closed * scale - N * vol
        under = N * vol - opened * scale
        best = max(int(over.max()), int(under.max()))
        return Fraction(best, den_total)

    best = Fraction(-1)
    for corner in product(*(range(n) for n in shape)):
        vol = Fraction(1)
        for i, a in enumerate(corner):
            vol *= grids[i][a]
        best = max(best, Fraction(int(closed[corner]), N) - vol,
                   vol - Fraction(int(opened[corner]), N))
    return best


# ---------------------------------------------------------------------------
# the volume-reading demonstration


@dataclass(frozen=True)
class VolumeReadingWitness:
    """A digital point set separating the two readings of the volume rule."""

    q: int
    m: int
    e: tuple[int, ...]
    matrices: tuple[np.ndarray, ...]
    equality_report: VerifyReport
    required_report: VerifyReport


def find_volume_reading_anomaly(m: int = 4):
    """Search small digital sets for one that looks strong under the
    equality-only interval rule yet fails the counts a weaker claim needs.

    Returns a witness whose k=0 block passes every interval count with
    volume exactly q^(u-m) for u = m-3 and e = (2,3), but fails some
    required count at u = m-2 under the full rule.
    """
    from .gf import field_create

    if m < 3:
        raise ValueError("need m >= 3")
    ctx = field_create(2, 1)
    e = (2, 3)
    eye = np.eye(m, dtype=np.uint16)
    zero = np.zeros((m, m), dtype=np.uint16)
    rev = eye[::-1].copy()
    shift = np.zeros((m, m), dtype=np.uint16)
    for j in range(m - 1):
        shift[j + 1, j] = 1
    pascal = np.zeros((m, m), dtype=np.uint16)
    for j in range(m):
        for r in range(m):
            pascal[j, r] = math.comb(r, j) % 2
    family = [zero, eye, rev, shift, pascal]
    for a in family:
        for b in family:
            digits = block_digit_arrays(0, m, [a, b], ctx)
            eq = geometric_net_check(digits, m - 3, m, e, q=2, volume_reading="exact")
            if not eq.passed:
                continue
            req = geometric_net_check(digits, m - 2, m, e, q=2, volume_reading="at_least")
            if not req.passed:
                return VolumeReadingWitness(2, m, e, (a, b), eq, req)
    raise RuntimeError("no witness found in the candidate family")
