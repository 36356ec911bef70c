"""Leading constants of star-discrepancy bounds and their comparison.

Two constant families are computed at 60 significant digits: the
classical-parameter constant c_fk(b, s, t) and the place-degree-aware
constant c_tez(b, s, u, e).  The comparison helpers decide, exactly in
integer arithmetic where possible, when the second beats the first.
"""

from __future__ import annotations

import math

import mpmath

WORK_DPS = 60


def _factorial(s: int) -> int:
    return math.factorial(s)


def c_fk(b: int, s: int, t: int) -> mpmath.mpf:
    """Constant of the classical bound: (b^t/s!) * A(b) * ((b-1)/(2 log b))^s.

    A(b) is b^2/(2(b^2-1)) for even b and 1/2 for odd b.
    """
    if b < 2 or s < 1 or t < 0:
        raise ValueError("need b >= 2, s >= 1, t >= 0")
    with mpmath.workdps(WORK_DPS):
        logb = mpmath.log(b)
        if b % 2 == 0:
            head = mpmath.mpf(b * b) / (2 * (b * b - 1))
        else:
            head = mpmath.mpf(1) / 2
        ratio = (b - 1) / (2 * logb)
        return mpmath.mpf(b) ** t / _factorial(s) * head * ratio**s


def c_tez(b: int, s: int, u: int, e) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Constant of the degree-aware bound, with its closed-form upper estimate.

    Value: (b^u/s!) * prod_i floor(b^{e_i}/2) / (e_i * log b).  Estimate:
    (b^u/s!) * b^{sum e_i} / ((2 log b)^s * prod e_i).  The value never
    exceeds the estimate (floor(b^e/2) <= b^e/2), with equality iff
    every b^{e_i} is even.
    """
    if b < 2 or s < 1 or u < 0:
        raise ValueError("need b >= 2, s >= 1, u >= 0")
    if len(e) != s or any(ei < 1 for ei in e):
        raise ValueError("e must list s degrees >= 1")
    with mpmath.workdps(WORK_DPS):
        logb = mpmath.log(b)
        value = mpmath.mpf(b) ** u / _factorial(s)
        for ei in e:
            value *= mpmath.mpf(b**ei // 2) / (ei * logb)
        estimate = (
            mpmath.mpf(b) ** (u + sum(e))
            / _factorial(s)
            / (2 * logb) ** s
            / math.prod(e)
        )
        if value > estimate * (1 + mpmath.mpf(10) ** (-50)):
            raise AssertionError("upper estimate fell below the exact constant")
        return value, estimate


def compare_condition(q: int, e) -> tuple[mpmath.mpf, bool]:
    """Lower bound on c_fk/c_tez for matched parameters, and the win test.

    With t = u + sum(e_i - 1) the ratio is independent of u and is at
    least (1/2) * ((q-1)/q)^s * prod(e_i).  The boolean reports whether
    prod(e_i) * (q-1)^s > 2 * q^s, decided exactly in integers; when it
    holds, the bound above exceeds 1, so the degree-aware constant wins.
    """
    if q < 2 or not e or any(ei < 1 for ei in e):
        raise ValueError("need q >= 2 and degrees >= 1")
    s = len(e)
    prod_e = math.prod(e)
    wins = prod_e * (q - 1) ** s > 2 * q**s
    with mpmath.workdps(WORK_DPS):
        ratio = mpmath.mpf(prod_e * (q - 1) ** s) / (2 * q**s)
        return ratio, wins


def bound_eval(c, N: int, s: int) -> mpmath.mpf:
    """Leading term c * (log N)^s / N of the discrepancy bound shape.

    Lower-order terms carry unspecified constants and are omitted; this
    is a comparison value, not a rigorous bound for concrete N.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    if s < 1:
        raise ValueError("need s >= 1")
    with mpmath.workdps(WORK_DPS):
        return mpmath.mpf(c) * mpmath.log(N) ** s / N


def degree_product_demo(field, s: int, epsilon: float) -> tuple[int, mpmath.mpf, bool]:
    """Product of the first s place degrees against (log_q s)^((1/q - eps) s).

    A finite-s data point for an asymptotic statement: returns the exact
    integer product, the threshold, and whether the product exceeds it.
    No claim is made beyond the evaluated s.
    """
    from .funcfield import place_enumerate

    q = field.ctx.q
    if not 0 < epsilon < 1 / q:
        raise ValueError("epsilon must lie strictly between 0 and 1/q")
    if s < 2:
        raise ValueError("need s >= 2")
    lhs = math.prod(p.degree for p in place_enumerate(field, s))
    with mpmath.workdps(WORK_DPS):
        logq_s = mpmath.log(s) / mpmath.log(q)
        rhs = logq_s ** ((mpmath.mpf(1) / q - mpmath.mpf(epsilon)) * s)
        return lhs, rhs, lhs > rhs
