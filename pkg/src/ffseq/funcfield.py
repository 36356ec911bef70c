"""Global function fields backing the digital sequence constructions.

Two instances are provided: the rational function field F_q(x) (genus 0,
finite places = monic irreducibles, distinguished place at infinity with
valuation -deg) and the genus-1 curve y^2 + y = x^3 over F_2 (finite
places = Frobenius orbits of affine points, one place above x = infinity
with v(x) = -2 and v(y) = -3).  The module computes valuations, local
expansions at finite places, and Riemann-Roch bases in a canonical
echelon form ordered by pole order at the infinite place.
"""

from __future__ import annotations

import math

from .gf import FieldCtx, FieldElement, field_create, vector_decompose
from .polyring import Polynomial, irreducible_enumerate, poly_gcd

RATIONAL = "rational"
ELLIPTIC_F2 = "elliptic_f2"


# ---------------------------------------------------------------------------
# places and divisors


class Place:
    """A place of one of the supported function fields.

    ``data`` is the monic irreducible for finite rational places, or a
    ``(subfield_ctx, orbit)`` pair for finite places of the curve, where
    ``orbit`` is the sorted tuple of (x, y) index pairs of a Frobenius
    orbit of affine points.  The infinite place carries no data.
    """

    __slots__ = ("field_kind", "kind", "degree", "data", "_key")

    def __init__(self, field_kind, kind, degree, data):
        self.field_kind = field_kind
        self.kind = kind
        self.degree = degree
        self.data = data
        if kind == "infinite":
            self._key = (field_kind, "infinite")
        elif field_kind == RATIONAL:
            self._key = (field_kind, "finite", data.coeffs)
        else:
            self._key = (field_kind, "finite", degree, data[1])

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def serialize(self) -> str:
        if self.is_infinite:
            return "1:inf"
        if self.field_kind == RATIONAL:
            return f"{self.degree}:{self.data.serialize()}"
        x0, y0 = self.data[1][0]
        return f"{self.degree}:({x0},{y0})"

    def __eq__(self, other):
        if isinstance(other, Place):
            return self._key == other._key
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Place({self.serialize()})"


class Divisor:
    """Formal integer combination of places."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = {p: int(n) for p, n in dict(coeffs).items() if n}

    def coefficient(self, place: Place) -> int:
        return self._coeffs.get(place, 0)

    def items(self):
        return sorted(
            self._coeffs.items(),
            key=lambda pn: (0 if pn[0].is_infinite else 1, pn[0].degree, pn[0].serialize()),
        )

    def degree(self) -> int:
        return sum(n * p.degree for p, n in self._coeffs.items())

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "Divisor(0)"
        parts = [f"{n}*({p.serialize()})" for p, n in self.items()]
        return "Divisor(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# field elements


class RationalFunction:
    """Element of F_q(x): a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.ctx)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Polynomial.one(num.ctx)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading()
            if lead.index != 1:
                inv = lead.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_rational(self.ctx, other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rational(self.ctx, other))

    def __rsub__(self, other):
        return _as_rational(self.ctx, other) + (-self)

    def __mul__(self, other):
        other = _as_rational(self.ctx, other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(self.ctx, other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Polynomial, FieldElement, int)):
            other = _as_rational(self.ctx, other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"


def _as_rational(ctx, value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    if isinstance(value, (FieldElement, int)):
        return RationalFunction(Polynomial.constant(ctx, value))
    raise TypeError(f"cannot interpret {value!r} as a rational function")


class CurveFunction:
    """Element a(x) + b(x)*y of the coordinate ring of y^2 + y = x^3 / F_2."""

    __slots__ = ("a", "b")

    def __init__(self, a: Polynomial, b: Polynomial | None = None):
        if b is None:
            b = Polynomial.zero(a.ctx)
        self.a = a
        self.b = b

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other):
        other = _as_curve(self.ctx, other)
        return CurveFunction(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_as_curve(self.ctx, other))

    def __rsub__(self, other):
        return _as_curve(self.ctx, other) + (-self)

    def __mul__(self, other):
        other = _as_curve(self.ctx, other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        cross = b1 * b2
        # reduce with y^2 = x^3 + y (characteristic 2)
        a = a1 * a2 + cross * Polynomial.monomial(self.ctx, 3)
        b = a1 * b2 + a2 * b1 + cross
        return CurveFunction(a, b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = CurveFunction(Polynomial.one(self.ctx))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (CurveFunction, Polynomial, FieldElement, int)):
            other = _as_curve(self.ctx, other)
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.b.is_zero():
            return f"({self.a})"
        return f"({self.a}) + ({self.b})*y"


def _as_curve(ctx, value) -> CurveFunction:
    if isinstance(value, CurveFunction):
        return value
    if isinstance(value, Polynomial):
        return CurveFunction(value)
    if isinstance(value, (FieldElement, int)):
        return CurveFunction(Polynomial.constant(ctx, value))
    raise TypeError(f"cannot interpret {value!r} as a curve function")


# ---------------------------------------------------------------------------
# field instances


class FieldInstance:
    """One of the supported function fields over its constant field."""

    __slots__ = ("kind", "ctx", "genus", "gaps", "p_inf", "_finite_places", "_orbit_degree")

    def __init__(self, kind, ctx, genus, gaps):
        self.kind = kind
        self.ctx = ctx
        self.genus = genus
        self.gaps = gaps
        self.p_inf = Place(kind, "infinite", 1, None)
        self._finite_places: list[Place] = []
        self._orbit_degree = 0

    def __repr__(self):
        return f"FieldInstance({self.kind}, q={self.ctx.q}, genus={self.genus})"


def _pole_orders_attainable(n: int) -> set[int]:
    # pole orders of the curve's monomials x^a y^b, b <= 1, at infinity
    out = set()
    for b in (0, 1):
        k = 3 * b
        while k <= n:
            out.add(k)
            k += 2
    return out


def ff_create(kind: str, ctx: FieldCtx) -> FieldInstance:
    """Create a function field instance over the given constant field."""
    if kind == RATIONAL:
        return FieldInstance(RATIONAL, ctx, 0, frozenset())
    if kind == ELLIPTIC_F2:
        if ctx.q != 2:
            raise ValueError("the curve y^2 + y = x^3 is only provided over F_2")
        genus = 1
        attainable = _pole_orders_attainable(2 * genus)
        gaps = frozenset(i for i in range(1, 2 * genus) if i not in attainable)
        return FieldInstance(ELLIPTIC_F2, ctx, genus, gaps)
    raise ValueError(f"unknown function field kind {kind!r}")


def nr_index(field: FieldInstance, r: int) -> int:
    """The r-th pole order not excluded by the gap numbers (0-indexed)."""
    if r < 0:
        raise ValueError("index must be nonnegative")
    n, seen = 0, 0
    while True:
        if n not in field.gaps:
            if seen == r:
                return n
            seen += 1
        n += 1


def _on_curve(sub: FieldCtx, x: int, y: int) -> bool:
    return sub.add_index(sub.mul_index(y, y), y) == sub.pow_index(x, 3)


def _curve_orbits(degree: int) -> list[tuple[tuple[int, int], ...]]:
    """Frobenius orbits of exact size ``degree`` of affine curve points."""
    sub = field_create(2, degree)
    seen = set()
    orbits = []
    for x in range(sub.q):
        x3 = sub.pow_index(x, 3)
        for y in range(sub.q):
            if (x, y) in seen or sub.add_index(sub.mul_index(y, y), y) != x3:
                continue
            orbit = []
            px, py = x, y
            while (px, py) not in orbit:
                orbit.append((px, py))
                px, py = sub.mul_index(px, px), sub.mul_index(py, py)
            seen.update(orbit)
            if len(orbit) == degree:
                orbits.append(tuple(sorted(orbit)))
    orbits.sort()
    return orbits


def place_enumerate(field: FieldInstance, count: int) -> list[Place]:
    """First ``count`` finite places in the canonical order.

    Rational field: monic irreducibles in their canonical order.  Curve:
    orbits of affine points, degree ascending, each degree sorted by the
    coordinate indices of its smallest point.  The infinite place is not
    part of the enumeration; it is ``field.p_inf``.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    cache = field._finite_places
    if field.kind == RATIONAL:
        if len(cache) < count:
            polys = irreducible_enumerate(field.ctx, count)
            cache[:] = [Place(RATIONAL, "finite", f.degree, f) for f in polys]
    else:
        while len(cache) < count:
            d = field._orbit_degree + 1
            for orbit in _curve_orbits(d):
                cache.append(Place(ELLIPTIC_F2, "finite", d, (field_create(2, d), orbit)))
            field._orbit_degree = d
    return cache[:count]


# ---------------------------------------------------------------------------
# valuations


def _poly_multiplicity(f: Polynomial, p: Polynomial) -> int:
    m = 0
    while True:
        q, r = divmod(f, p)
        if not r.is_zero():
            return m
        m += 1
        f = q


def valuation(f, P: Place):
    """Normalized valuation of f at the place P (math.inf for f = 0)."""
    if P.field_kind == RATIONAL:
        if not isinstance(f, RationalFunction):
            f = _as_rational(P.data.ctx if not P.is_infinite else f.ctx, f)
        if f.is_zero():
            return math.inf
        if P.is_infinite:
            return f.den.degree - f.num.degree
        return _poly_multiplicity(f.num, P.data) - _poly_multiplicity(f.den, P.data)
    if not isinstance(f, CurveFunction):
        raise TypeError("curve place needs a curve function")
    if f.is_zero():
        return math.inf
    if P.is_infinite:
        cands = []
        if not f.a.is_zero():
            cands.append(-2 * f.a.degree)
        if not f.b.is_zero():
            cands.append(-3 - 2 * f.b.degree)
        return min(cands)
    pole = -_curve_inf_valuation(f)
    bound = pole // P.degree + 1
    series = _curve_series(f, P, bound + 1)
    for k, c in enumerate(series):
        if c:
            return k
    raise RuntimeError("valuation exceeded its pole-degree bound")  # unreachable


def _curve_inf_valuation(f: CurveFunction) -> int:
    cands = []
    if not f.a.is_zero():
        cands.append(-2 * f.a.degree)
    if not f.b.is_zero():
        cands.append(-3 - 2 * f.b.degree)
    return min(cands) if cands else 0


# ---------------------------------------------------------------------------
# local expansions


def _poly_modinv(a: Polynomial, m: Polynomial) -> Polynomial:
    ctx = a.ctx
    r0, r1 = m, a % m
    t0, t1 = Polynomial.zero(ctx), Polynomial.one(ctx)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible modulo m")
    return (t0 * r0.leading().inverse()) % m


def _series_mul(a, b, K, sub: FieldCtx):
    out = [0] * K
    add, mul = sub.add_index, sub.mul_index
    for i, ai in enumerate(a):
        if ai:
            top = min(K - i, len(b))
            for j in range(top):
                if b[j]:
                    out[i + j] = add(out[i + j], mul(ai, b[j]))
    return out


def _curve_series(f: CurveFunction, P: Place, K: int) -> list[int]:
    """Coefficients of f in powers of z = x - x0 at the orbit point of P."""
    sub, orbit = P.data
    x0, y0 = orbit[0]
    mul = sub.mul_index
    # (x0 + z)^3 in characteristic 2
    x3 = [sub.pow_index(x0, 3), mul(x0, x0), x0, 1][:K]
    x3 = x3 + [0] * (K - len(x3))
    ys = [y0] + [0] * (K - 1)
    prec = 1
    while prec < K:
        sq = [0] * K
        for i, c in enumerate(ys):
            if c and 2 * i < K:
                sq[2 * i] = mul(c, c)
        ys = [sub.add_index(x3[i], sq[i]) for i in range(K)]
        prec *= 2

    def poly_series(poly: Polynomial) -> list[int]:
        acc = [0] * K
        for c in reversed(poly.coeffs):
            # acc * (x0 + z) + c
            nxt = [0] * K
            for i, ai in enumerate(acc):
                if ai:
                    nxt[i] = sub.add_index(nxt[i], mul(ai, x0))
                    if i + 1 < K:
                        nxt[i + 1] = sub.add_index(nxt[i + 1], ai)
            nxt[0] = sub.add_index(nxt[0], c)
            acc = nxt
        return acc

    out = poly_series(f.a)
    if not f.b.is_zero():
        bs = _series_mul(poly_series(f.b), ys, K, sub)
        out = [sub.add_index(out[i], bs[i]) for i in range(K)]
    return out


def local_expansion(f, P: Place, K: int) -> list[Polynomial]:
    """First K residues of f at P in powers of the canonical local parameter.

    Residues are polynomials over the constant field of degree < deg(P);
    f must be regular at P.  The parameter is the place's irreducible for
    finite rational places, 1/x at the rational infinite place, and
    x - x0 (over the residue field) at finite places of the curve.
    """
    if K < 1:
        raise ValueError("residue count must be >= 1")
    if P.field_kind == RATIONAL:
        if isinstance(f, (RationalFunction, Polynomial)):
            ctx = f.ctx
        elif not P.is_infinite:
            ctx = P.data.ctx
        else:
            raise TypeError("cannot infer the constant field from a bare scalar")
        f = _as_rational(ctx, f)
        if P.is_infinite:
            if f.den.degree < f.num.degree:
                raise ValueError("f has a pole at P")
            num_rev = Polynomial(ctx, tuple(reversed(f.num.coeffs)))
            den_rev = Polynomial(ctx, tuple(reversed(f.den.coeffs)))
            z = Polynomial.x(ctx)
            zK = z**K
            h = (num_rev.shifted(f.den.degree - f.num.degree) % zK) * _poly_modinv(den_rev, zK) % zK
            return [Polynomial.constant(ctx, c) for c in _first_k_coeffs(h, K)]
        p = P.data
        if _poly_multiplicity(f.den, p) > 0:
            raise ValueError("f has a pole at P")
        if f.den.degree == 0:
            h = f.num
        else:
            pK = p**K
            h = (f.num % pK) * _poly_modinv(f.den, pK) % pK
        out = []
        for _ in range(K):
            h, r = divmod(h, p)
            out.append(r)
        return out
    f = _as_curve(f.ctx if isinstance(f, CurveFunction) else field_create(2, 1), f)
    if P.is_infinite:
        if _curve_inf_valuation(f) < 0 and not f.is_zero():
            raise ValueError("f has a pole at P")
        const = f.a.coefficient_index(0)
        base = f.a.ctx
        return [Polynomial.constant(base, const)] + [Polynomial.zero(base)] * (K - 1)
    series = _curve_series(f, P, K)
    sub = P.data[0]
    base = f.ctx
    return [Polynomial(base, sub.digits(c)[: P.degree]) for c in series]


def _first_k_coeffs(h: Polynomial, K: int) -> list[int]:
    return [h.coefficient_index(i) for i in range(K)]


# ---------------------------------------------------------------------------
# Riemann-Roch bases


def pole_order(f, field: FieldInstance) -> int:
    """Pole order at the infinite place (0 for nonzero constants)."""
    v = valuation(f, field.p_inf)
    if v is math.inf:
        raise ValueError("the zero function has no pole order")
    return -min(v, 0)


def _monomials(field: FieldInstance, n: int):
    """Monomial basis of L(n * P_inf), ordered by increasing pole order."""
    ctx = field.ctx
    if field.kind == RATIONAL:
        return [(j, RationalFunction(Polynomial.monomial(ctx, j))) for j in range(n + 1)]
    out = []
    for b in (0, 1):
        a = 0
        while 2 * a + 3 * b <= n:
            out.append((2 * a + 3 * b, CurveFunction(Polynomial.monomial(ctx, a)) if b == 0
                        else CurveFunction(Polynomial.zero(ctx), Polynomial.monomial(ctx, a))))
            a += 1
    out.sort(key=lambda t: t[0])
    return out


def _nullspace(rows: list[list[int]], ncols: int, ctx: FieldCtx) -> list[list[int]]:
    """Basis of the solution space of A w = 0 over F_q."""
    add, mul, neg, inv = ctx.add_index, ctx.mul_index, ctx.neg_index, ctx.inv_index
    work = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        s = inv(work[r][c])
        if s != 1:
            work[r] = [mul(s, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:

                f = neg(work[i][c])
                row = work[i]
                pr = work[r]
                work[i] = [add(row[j], mul(f, pr[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row_idx, pc in enumerate(pivots):
            coeff = work[row_idx][free]
            if coeff:
                vec[pc] = neg(coeff)
        basis.append(vec)
    return basis


def _rref_trailing(vectors: list[list[int]], ctx: FieldCtx) -> list[list[int]]:
    """Reduced echelon form with pivots at each vector's trailing nonzero."""
    add, mul, neg, inv = ctx.add_index, ctx.mul_index, ctx.neg_index, ctx.inv_index
    def clear(v, pivot, pivot_row):
        if not v[pivot]:
            return v
        f = neg(v[pivot])
        return [add(v[j], mul(f, pivot_row[j])) for j in range(len(v))]

    work = [v[:] for v in vectors if any(v)]
    done: list[list[int]] = []
    while work:
        best = max(work, key=lambda v: max(i for i, x in enumerate(v) if x))
        work.remove(best)
        pivot = max(i for i, x in enumerate(best) if x)
        s = inv(best[pivot])
        if s != 1:
            best = [mul(s, x) for x in best]
        work = [w for w in (clear(v, pivot, best) for v in work) if any(w)]
        done = [clear(v, pivot, best) for v in done]
        done.append(best)
    done.sort(key=lambda v: max(i for i, x in enumerate(v) if x))
    return done


def rr_basis(field: FieldInstance, D: Divisor):
    """Canonical basis of L(D) for divisors n*P_inf - sum c_i P_i.

    The basis is in echelon form with strictly increasing pole order at
    the infinite place, each leading pole order normalized to leading
    coefficient 1 and occurring in exactly one element.
    """
    n = 0
    constraints = []
    for place, coeff in D.items():
        if place.field_kind != field.kind:
            raise ValueError("divisor supported on a different field")
        if place.is_infinite:
            if coeff < 0:
                raise ValueError("unsupported divisor shape")
            n = coeff
        else:
            if coeff > 0:
                raise ValueError("unsupported divisor shape")
            constraints.append((place, -coeff))
    monomials = _monomials(field, n)
    nmon = len(monomials)
    cols: list[list[int]] = [[] for _ in range(nmon)]
    for place, c in constraints:
        for j, (_, mono) in enumerate(monomials):
            coords = []
            for res in local_expansion(mono, place, c):
                coords.extend(el.index for el in vector_decompose(res, place.degree))
            cols[j].extend(coords)
    ncon = len(cols[0]) if nmon else 0
    if ncon:
        rows = [[cols[j][i] for j in range(nmon)] for i in range(ncon)]
        kernel = _nullspace(rows, nmon, field.ctx)
    else:
        kernel = [[1 if i == j else 0 for j in range(nmon)] for i in range(nmon)]
    kernel = _rref_trailing(kernel, field.ctx)
    out = []
    for vec in kernel:
        elem = None
        for j, w in enumerate(vec):
            if w:
                term = monomials[j][1] * field.ctx.element(w)
                elem = term if elem is None else elem + term
        out.append(elem)
    return out
