"""Double-double ("dd") compensated arithmetic on unevaluated float pairs.

A dd number is a pair (hi, lo) with hi + lo representing the value and
|lo| <= ulp(hi)/2, giving roughly 32 significant digits.  The recurrence
and series sweeps in this package accumulate through tens of steps whose
intermediate terms can exceed 1e18 while the result stays O(1); plain
doubles lose everything there, dd keeps ~1e-15 relative accuracy.

Only the handful of operations the evaluators need are provided.  All of
them rely on round-to-nearest IEEE doubles; no fma is assumed.
"""

from __future__ import annotations

_SPLIT = 134217729.0  # 2**27 + 1, Dekker split constant for 53-bit doubles

DD = tuple[float, float]


def two_sum(a: float, b: float) -> DD:
    # Knuth: exact error of a float addition, no magnitude ordering assumed
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> DD:
    # valid only when |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> DD:
    # Dekker split: exact error of a float multiplication
    p = a * b
    ca = _SPLIT * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLIT * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def dd_add(x: DD, y: DD) -> DD:
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return quick_two_sum(s, e)


def dd_sub(x: DD, y: DD) -> DD:
    return dd_add(x, (-y[0], -y[1]))


def dd_mul(x: DD, y: DD) -> DD:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def dd_mul_d(x: DD, d: float) -> DD:
    p, e = two_prod(x[0], d)
    e += x[1] * d
    return quick_two_sum(p, e)


def dd_div(x: DD, y: DD) -> DD:
    # one Newton correction on the float quotient is enough for dd accuracy
    q1 = x[0] / y[0]
    r = dd_sub(x, dd_mul_d(y, q1))
    q2 = r[0] / y[0]
    r = dd_sub(r, dd_mul_d(y, q2))
    q3 = r[0] / y[0]
    s, e = quick_two_sum(q1, q2)
    return dd_add((s, e), (q3, 0.0))


def dd_div_d(x: DD, d: float) -> DD:
    return dd_div(x, (d, 0.0))


def dd_from(d: float) -> DD:
    return (d, 0.0)
