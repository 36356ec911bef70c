"""Independent reference implementations used only by the test suite.

Each oracle recomputes a quantity through a different route than the
package: ranks by fraction-free elimination on field elements, star
discrepancy by direct corner enumeration, bound constants in decimal
arithmetic, curve points by exhaustive search.  Agreement between the
two routes is the evidence the tests rely on.
"""

from __future__ import annotations

from decimal import Decimal, getcontext
from fractions import Fraction

from ffseq import FieldCtx, field_create


def element_rank(rows: list[list[int]], ctx: FieldCtx) -> int:
    """Gaussian elimination on FieldElement objects, no lookup tables."""
    mat = [[ctx.element(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def corner_star_discrepancy(points: list[tuple]) -> Fraction:
    """O(N^2 * s) star discrepancy: test every corner built from the
    coordinate values and 1, counting open and closed boxes directly."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    N = len(pts)
    s = len(pts[0])
    axes = [sorted({p[i] for p in pts} | {Fraction(1)}) for i in range(s)]

    def prod(vals):
        out = Fraction(1)
        for v in vals:
            out *= v
        return out

    corners = [()]
    for ax in axes:
        corners = [c + (v,) for c in corners for v in ax]
    best = Fraction(0)
    for corner in corners:
        vol = prod(corner)
        n_open = sum(1 for p in pts if all(p[i] < corner[i] for i in range(s)))
        n_closed = sum(1 for p in pts if all(p[i] <= corner[i] for i in range(s)))
        best = max(best, vol - Fraction(n_open, N), Fraction(n_closed, N) - vol)
    return best


# ---------------------------------------------------------------------------
# decimal evaluations of the bound constants (independent of mpmath)

getcontext().prec = 60


def _dec_factorial(s: int) -> Decimal:
    out = Decimal(1)
    for i in range(2, s + 1):
        out *= i
    return out


def dec_c_fk(b: int, s: int, t: int) -> Decimal:
    logb = Decimal(b).ln()
    if b % 2 == 0:
        head = Decimal(b * b) / (2 * (b * b - 1))
    else:
        head = Decimal(1) / 2
    return Decimal(b) ** t / _dec_factorial(s) * head * ((Decimal(b - 1) / (2 * logb)) ** s)


def dec_c_tez(b: int, s: int, u: int, e) -> Decimal:
    logb = Decimal(b).ln()
    out = Decimal(b) ** u / _dec_factorial(s)
    for ei in e:
        out *= Decimal(b**ei // 2) / (Decimal(ei) * logb)
    return out


def dec_c_tez_upper(b: int, s: int, u: int, e) -> Decimal:
    logb = Decimal(b).ln()
    prod_e = 1
    for ei in e:
        prod_e *= ei
    return (
        Decimal(b) ** (u + sum(e))
        / _dec_factorial(s)
        / ((2 * logb) ** s)
        / Decimal(prod_e)
    )


def dec_ratio_lower(q: int, e) -> Decimal:
    prod_e = 1
    for ei in e:
        prod_e *= ei
    return Decimal(prod_e * (q - 1) ** len(e)) / Decimal(2 * q ** len(e))


# ---------------------------------------------------------------------------
# brute-force curve data

def curve_points(d: int) -> list[tuple[int, int]]:
    """All affine points of y^2 + y = x^3 with coordinates in F_{2^d}."""
    sub = field_create(2, d)
    out = []
    for x in range(sub.q):
        for y in range(sub.q):
            lhs = sub.add_index(sub.mul_index(y, y), y)
            if lhs == sub.pow_index(x, 3):
                out.append((x, y))
    return out


def brute_irreducible_count(p: int, k: int, d: int) -> int:
    """Count monic irreducibles of degree d by exhaustive trial division."""
    ctx = field_create(p, k)
    q = ctx.q

    def coeffs_of(idx, deg):
        out = []
        for _ in range(deg):
            idx, r = divmod(idx, q)
            out.append(r)
        return out + [1]

    def times(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = ctx.add_index(out[i + j], ctx.mul_index(ai, bj))
        return out

    monics = {deg: [coeffs_of(i, deg) for i in range(q**deg)] for deg in range(1, d)}
    products = set()
    for a_deg in range(1, d):
        b_deg = d - a_deg
        if b_deg < 1:
            continue
        for a in monics[a_deg]:
            for b in monics[b_deg]:
                products.add(tuple(times(a, b)))
    return q**d - len(products)
