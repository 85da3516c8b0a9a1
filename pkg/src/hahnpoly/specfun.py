"""Special-function building blocks: Pochhammer symbols, terminating 3F2
series, and generalized-binomial weight products.
"""

from __future__ import annotations

import math

from . import _compensated as dd
from .errors import DomainError, NonTerminatingError, ZeroDenominatorError

# series longer than this are outside the intended problem sizes
_MAX_TERMS = 200


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    out = 1.0
    for j in range(k):
        out *= a + j
    return out


def terminating_3f2(
    num: tuple[float, float, float],
    den: tuple[float, float],
    z: float = 1.0,
) -> float:
    """Sum of the hypergeometric series 3F2(num; den; z), which must terminate.

    The first numerator parameter num[0] has to be a nonpositive integer -n;
    the series then has exactly n + 1 terms.  Terms are generated by the
    ratio update

        t_{k+1} = t_k * (a1+k)(a2+k)(a3+k) / ((b1+k)(b2+k)(1+k)) * z

    and accumulated in double-double arithmetic: individual terms can be
    ~1e18 while the sum is O(1), so plain doubles (even with exact
    summation of rounded terms) are not accurate enough.
    """
    a1, a2, a3 = num
    b1, b2 = den
    if a1 != round(a1) or a1 > 0:
        raise NonTerminatingError(f"leading parameter {a1} is not a nonpositive integer")
    n = int(round(-a1))
    if n > _MAX_TERMS:
        raise DomainError(f"series length {n + 1} exceeds supported maximum {_MAX_TERMS + 1}")
    for k in range(n):
        if b1 + k == 0.0 or b2 + k == 0.0:
            raise ZeroDenominatorError(f"denominator parameter hits zero at term {k + 1}")

    term = dd.dd_from(1.0)
    total = dd.dd_from(1.0)
    for k in range(n):
        term = dd.dd_mul_d(term, a1 + k)
        term = dd.dd_mul_d(term, a2 + k)
        term = dd.dd_mul_d(term, a3 + k)
        term = dd.dd_div_d(term, b1 + k)
        term = dd.dd_div_d(term, b2 + k)
        term = dd.dd_div_d(term, float(k + 1))
        if z != 1.0:
            term = dd.dd_mul_d(term, z)
        total = dd.dd_add(total, term)
    return total[0] + total[1]


def _binomial_dd(a: float, k: int) -> dd.DD:
    # C(a+k, k) = prod_{i=1..k} (a+i)/i, a finite product for integer k
    out = dd.dd_from(1.0)
    for i in range(1, k + 1):
        out = dd.dd_mul(out, dd.two_sum(a, float(i)))
        out = dd.dd_div_d(out, float(i))
    return out


def binomial_weight(x: int, alpha: float, beta: float, N: int) -> float:
    """Weight C(alpha+x, x) * C(beta+N-x, N-x) at grid point x in 0..N.

    For integer alpha, beta this is an exact binomial product (computed in
    integer arithmetic and converted once); otherwise each generalized
    binomial is the finite product prod (alpha+i)/i, accumulated in
    double-double so the returned value is correctly rounded for practical
    purposes.  Orthogonality defects are proportional to the weight error
    times the largest weight, which makes the last digits here matter.
    """
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError(f"weight needs alpha, beta > -1, got ({alpha}, {beta})")
    if not 0 <= x <= N:
        raise DomainError(f"grid point {x} outside 0..{N}")
    if float(alpha).is_integer() and float(beta).is_integer() and alpha >= 0 and beta >= 0:
        a = int(alpha)
        b = int(beta)
        return float(math.comb(a + x, x) * math.comb(b + N - x, N - x))
    left = _binomial_dd(alpha, x)
    right = _binomial_dd(beta, N - x)
    prod = dd.dd_mul(left, right)
    return prod[0] + prod[1]
