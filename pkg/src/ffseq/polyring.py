"""Dense univariate polynomials over F_q.

Coefficients are stored as element indices, constant term first, with no
trailing zeros; the zero polynomial has an empty coefficient tuple and
degree -1 (the conventional sentinel for "minus infinity").  The module
also enumerates monic irreducibles in the canonical order (degree
ascending, then lexicographic on the coefficient vector read from the
highest degree down), counts them by the Moebius formula, and expands
polynomials in powers of a monic irreducible.
"""

from __future__ import annotations

from .gf import FieldCtx, FieldElement

_SIEVE: dict[tuple[int, int], list[list["Polynomial"]]] = {}


class Polynomial:
    """Immutable polynomial over a :class:`FieldCtx`."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        cs = [ctx._check(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx, n, coeff=1):
        return cls(ctx, (0,) * n + (coeff,))

    @classmethod
    def constant(cls, ctx, c):
        if isinstance(c, FieldElement):
            c = c.index
        return cls(ctx, (c,))

    # -- structure -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient_index(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.ctx, self.coefficient_index(i))

    def leading(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.ctx, self.coeffs[-1])

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = self.ctx.inv_index(self.coeffs[-1])
        mul = self.ctx.mul_index
        return Polynomial(self.ctx, [mul(c, inv) for c in self.coeffs])

    def shifted(self, n: int) -> "Polynomial":
        """Multiplication by x**n."""
        if self.is_zero():
            return self
        return Polynomial(self.ctx, (0,) * n + self.coeffs)

    # -- ring operations ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx:
                raise ValueError("polynomials over different field contexts")
            return other
        if isinstance(other, FieldElement):
            return Polynomial.constant(self.ctx, other)
        if isinstance(other, int):
            return Polynomial.constant(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        add = self.ctx.add_index
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg_index
        return Polynomial(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial.zero(self.ctx)
        add, mul = self.ctx.add_index, self.ctx.mul_index
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        add, mul, neg = ctx.add_index, ctx.mul_index, ctx.neg_index
        dg = o.degree
        ginv = ctx.inv_index(o.coeffs[-1])
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = mul(rem[i], ginv)
            if c:
                quot[i - dg] = c
                nc = neg(c)
                base = i - dg
                for j in range(dg + 1):
                    gj = o.coeffs[j]
                    if gj:
                        rem[base + j] = add(rem[base + j], mul(nc, gj))
        return Polynomial(ctx, quot), Polynomial(ctx, rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Polynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = 0
        mul, add = self.ctx.mul_index, self.ctx.add_index
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x.index), c)
        return FieldElement(self.ctx, acc)

    # -- misc ----------------------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                lead = "" if c == 1 else f"{c}*"
                parts.append(f"{lead}x" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly(q={self.ctx.q}, [{', '.join(map(str, self.coeffs))}])"

    def serialize(self) -> str:
        """Degree-prefixed coefficient indices, constant term first."""
        return " ".join([str(self.degree)] + [str(c) for c in self.coeffs])


def parse_polynomial(ctx: FieldCtx, text: str) -> Polynomial:
    parts = text.split()
    if not parts:
        raise ValueError("empty polynomial serialization")
    deg = int(parts[0])
    coeffs = [int(c) for c in parts[1:]]
    if deg == -1 and not coeffs:
        return Polynomial.zero(ctx)
    if len(coeffs) != deg + 1 or (coeffs and coeffs[-1] == 0):
        raise ValueError("inconsistent polynomial serialization")
    return Polynomial(ctx, coeffs)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# irreducibles

def _monic_of_degree(ctx: FieldCtx, d: int, idx: int) -> Polynomial:
    # canonical order within a degree: lexicographic on (c_{d-1}, ..., c_0)
    q = ctx.q
    coeffs = []
    t = idx
    for _ in range(d):
        coeffs.append(t % q)
        t //= q
    coeffs.append(1)
    return Polynomial(ctx, coeffs)


def _sieve_through(ctx: FieldCtx, dmax: int) -> list[list[Polynomial]]:
    """Monic irreducibles by degree, 1..dmax, each degree in canonical order."""
    key = (ctx.p, ctx.k)
    levels = _SIEVE.setdefault(key, [])
    while len(levels) < dmax:
        d = len(levels) + 1
        trials = [f for lvl in levels[: d // 2] for f in lvl]
        found = []
        for idx in range(ctx.q**d):
            f = _monic_of_degree(ctx, d, idx)
            if all((f % g).coeffs for g in trials):
                found.append(f)
        levels.append(found)
    return levels


def is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over F_q by trial division (desk-scale degrees)."""
    d = f.degree
    if d < 1:
        return False
    levels = _sieve_through(f.ctx, max(d // 2, 1) if d > 1 else 1)
    for lvl in levels[: d // 2]:
        for g in lvl:
            if not (f % g).coeffs:
                return False
    return True


def irreducible_enumerate(ctx: FieldCtx, count: int) -> list[Polynomial]:
    """First ``count`` monic irreducibles in the canonical order."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = []
    d = 0
    while len(out) < count:
        d += 1
        for f in _sieve_through(ctx, d)[d - 1]:
            out.append(f)
            if len(out) == count:
                break
    return out


def _mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def irreducible_count(ctx: FieldCtx, e: int) -> int:
    """Number of monic irreducibles of degree e over F_q (Moebius formula)."""
    if e < 1:
        raise ValueError("degree must be >= 1")
    q = ctx.q
    total = 0
    for d in range(1, e + 1):
        if e % d == 0:
            total += _mobius(d) * q ** (e // d)
    assert total % e == 0
    return total // e


def padic_expansion(f: Polynomial, p: Polynomial, K: int) -> list[Polynomial]:
    """First K residues of f expanded in powers of the monic irreducible p.

    Returns residues beta_0, ..., beta_{K-1} with f congruent to
    sum(beta_i * p**i) modulo p**K and deg(beta_i) < deg(p).
    """
    if K < 1:
        raise ValueError("residue count must be >= 1")
    if not p.is_monic() or not is_irreducible(p):
        raise ValueError("expansion modulus must be monic irreducible")
    out = []
    for _ in range(K):
        f, r = divmod(f, p)
        out.append(r)
    return out
