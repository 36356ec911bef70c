"""Finite fields F_q for prime powers q = p^k up to 2^16.

Elements are identified with their index in {0, ..., q-1}: the base-p
digits of the index are the coordinates in the polynomial basis of F_q
over F_p, so index 0 is the additive and index 1 the multiplicative
identity.  The reduction modulus is the lexicographically least monic
irreducible of degree k (coefficients compared from degree k-1 down to
the constant term), which makes every context reproducible from (p, k)
alone.  Elements serialize as their decimal index.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .kernels import GFTables

Q_LIMIT = 1 << 16
_EXPLOG_LIMIT = 4096  # exp/log tables are built up to this q
_TABLE_LIMIT = 1024   # dense q-by-q kernel tables up to this q


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# modulus search on raw coefficient lists over F_p (constant term first)

def _plist_remainder_is_zero(f: list[int], g: list[int], p: int) -> bool:
    # g monic; synthetic division, checking only the remainder
    f = f[:]
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            base = i - dg
            for j in range(dg):
                if g[j]:
                    f[base + j] = (f[base + j] - c * g[j]) % p
    return not any(f[:dg])


def _monic_coeffs(p: int, d: int, idx: int) -> list[int]:
    # idx enumerates monic degree-d polynomials in the canonical order:
    # lexicographic on the vector (c_{d-1}, ..., c_0)
    c = []
    t = idx
    for _ in range(d):
        c.append(t % p)
        t //= p
    c.append(1)
    return c


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    divisors = []
    for d in range(1, k // 2 + 1):
        for idx in range(p**d):
            divisors.append(_monic_coeffs(p, d, idx))
    for idx in range(p**k):
        f = _monic_coeffs(p, k, idx)
        if not any(_plist_remainder_is_zero(f, g, p) for g in divisors):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Shared arithmetic context for one field F_{p^k}.

    Index-level operations (``add_index`` etc.) work on plain integers and
    back the :class:`FieldElement` operators.  Contexts are interned, so
    ``field_create(p, k)`` always returns the same object.
    """

    __slots__ = ("p", "k", "q", "modulus", "_exp", "_log", "_tables")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._tables = None

    def __repr__(self):
        return f"FieldCtx(q={self.q})"

    # -- index helpers -----------------------------------------------------

    def digits(self, index: int) -> list[int]:
        """Base-p digits of an index: polynomial-basis coordinates."""
        p, k = self.p, self.k
        out = []
        for _ in range(k):
            out.append(index % p)
            index //= p
        return out

    def index_of_digits(self, digits) -> int:
        p = self.p
        out = 0
        for d in reversed(list(digits)):
            out = out * p + d % p
        return out

    def _check(self, index: int) -> int:
        index = int(index)
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for F_{self.q}")
        return index

    # -- raw arithmetic (no table requirements) -----------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        conv[i + j] = (conv[i + j] + ai * bj) % p
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i]
            if c:
                base = i - k
                for j in range(k):
                    if mod[j]:
                        conv[base + j] = (conv[base + j] - c * mod[j]) % p
        return self.index_of_digits(conv[:k])

    def _pow_raw(self, a: int, n: int) -> int:
        out = 1
        base = a
        while n:
            if n & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            n >>= 1
        return out

    def _inv_raw(self, a: int) -> int:
        # extended Euclid on coefficient lists over F_p
        p = self.p

        def trim(f):
            while f and f[-1] == 0:
                f.pop()
            return f

        def divmod_lists(f, g):
            f = f[:]
            dg = len(g) - 1
            ginv = pow(g[-1], p - 2, p)
            quot = [0] * max(len(f) - dg, 0)
            for i in range(len(f) - 1, dg - 1, -1):
                c = (f[i] * ginv) % p
                if c:
                    quot[i - dg] = c
                    for j in range(dg + 1):
                        if g[j]:
                            f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
            return quot, trim(f)

        r0, r1 = list(self.modulus), trim(self.digits(a))
        t0, t1 = [], [1]
        while r1:
            q, r = divmod_lists(r0, r1)
            r0, r1 = r1, r
            prod = [0] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        if tj:
                            prod[i + j] = (prod[i + j] + qi * tj) % p
            width = max(len(t0), len(prod))
            nxt = [((t0[i] if i < len(t0) else 0) - (prod[i] if i < len(prod) else 0)) % p
                   for i in range(width)]
            t0, t1 = t1, trim(nxt)
        # r0 is a nonzero constant gcd; scale t0 by its inverse
        scale = pow(r0[0], p - 2, p)
        t0 = [(c * scale) % p for c in t0]
        return self.index_of_digits(t0 + [0] * (self.k - len(t0)))

    # -- exp/log tables ------------------------------------------------------

    def _ensure_explog(self):
        if self._exp is not None:
            return
        q = self.q
        gen = None
        factors = _prime_factors(q - 1)
        for cand in range(2, q):
            if all(self._pow_raw(cand, (q - 1) // f) != 1 for f in factors):
                gen = cand
                break
        if gen is None:  # q == 2
            gen = 1
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_raw(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

    # -- public index arithmetic ---------------------------------------------

    def add_index(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        while a or b:
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg_index(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        shift = 1
        while a:
            out += ((p - a % p) % p) * shift
            a //= p
            shift *= p
        return out

    def sub_index(self, a: int, b: int) -> int:
        return self.add_index(a, self.neg_index(b))

    def mul_index(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        if self.q <= _EXPLOG_LIMIT:
            self._ensure_explog()
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_raw(a, b)

    def inv_index(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _EXPLOG_LIMIT:
            self._ensure_explog()
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._inv_raw(a)

    def pow_index(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow_index(self.inv_index(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul_index(out, base)
            base = self.mul_index(base, base)
            n >>= 1
        return out

    # -- object layer ----------------------------------------------------------

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, self._check(index))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for i in range(self.q):
            yield FieldElement(self, i)

    def tables(self) -> GFTables:
        """Dense kernel tables; only supported for q <= 1024 (desk scale)."""
        if self._tables is not None:
            return self._tables
        q, p, k = self.q, self.p, self.k
        if q > _TABLE_LIMIT:
            raise ValueError(f"kernel tables unsupported for q = {q} > {_TABLE_LIMIT}")
        ar = np.arange(q, dtype=np.int64)
        if k == 1:
            add = (ar[:, None] + ar[None, :]) % q
            mul = (ar[:, None] * ar[None, :]) % q
            neg = (-ar) % q
            inv = np.array([0] + [pow(int(i), q - 2, q) for i in range(1, q)])
        else:
            dig = np.empty((q, k), dtype=np.int64)
            t = ar.copy()
            for j in range(k):
                dig[:, j] = t % p
                t //= p
            weights = p ** np.arange(k, dtype=np.int64)
            add = np.empty((q, q), dtype=np.int64)
            for a in range(q):
                add[a] = ((dig[a] + dig) % p) @ weights
            neg = ((p - dig) % p) @ weights
            self._ensure_explog()
            exp = np.array(self._exp, dtype=np.int64)
            log = np.array(self._log, dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            nz = log[1:]
            mul[1:, 1:] = exp[(nz[:, None] + nz[None, :]) % (q - 1)]
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(q - 1 - nz) % (q - 1)]
        self._tables = GFTables(q, add, mul, neg, inv)
        return self._tables


class FieldElement:
    """An element of F_q, wrapping its canonical index."""

    __slots__ = ("ctx", "index")

    def __init__(self, ctx: FieldCtx, index: int):
        self.ctx = ctx
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.ctx.digits(self.index))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("elements from different field contexts")
            return other.index
        if isinstance(other, int):
            return self.ctx._check(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add_index(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_index(self.index, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub_index(o, self.index))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_index(self.index))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_index(self.index, o))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv_index(self.index))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_index(self.index, self.ctx.inv_index(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul_index(o, self.ctx.inv_index(self.index)))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.pow_index(self.index, n))

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.index == other.index
        if isinstance(other, int):
            return 0 <= other < self.ctx.q and self.index == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.index))

    def __repr__(self):
        return f"GF{self.ctx.q}({self.index})"


def field_create(p: int, k: int = 1) -> FieldCtx:
    """Create (or fetch) the canonical context for F_{p^k}.

    Contexts are interned: repeated calls with the same (p, k) return
    the same object, so element context checks can compare identity.
    """
    return _field_create(p, k)


@lru_cache(maxsize=None)
def _field_create(p: int, k: int) -> FieldCtx:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > Q_LIMIT:
        raise ValueError(f"field size {p}^{k} exceeds the supported limit 2^16")
    return FieldCtx(p, k, _canonical_modulus(p, k))


def digit_to_element(ctx: FieldCtx, z: int) -> FieldElement:
    """The digit-to-field bijection: digit z maps to the element of index z."""
    return ctx.element(z)


def element_to_digit(y: FieldElement) -> int:
    """Inverse of :func:`digit_to_element`."""
    return y.index


def vector_decompose(beta, e: int) -> list[FieldElement]:
    """Coordinates of a residue in the monomial basis, constant term first.

    ``beta`` is a polynomial residue of degree < e over some F_q (an
    :class:`FieldElement` counts as a constant residue); the result is the
    length-e coordinate vector over F_q.  For e = 1 the single element is
    returned unchanged.
    """
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if isinstance(beta, FieldElement):
        return [beta] + [beta.ctx.zero] * (e - 1)
    ctx = beta.ctx
    if beta.degree >= e:
        raise ValueError(f"residue degree {beta.degree} not below {e}")
    coeffs = beta.coeffs
    out = []
    for j in range(e):
        out.append(FieldElement(ctx, coeffs[j] if j < len(coeffs) else 0))
    return out
