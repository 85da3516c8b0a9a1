"""Exact rational reference route, deliberately independent of the float
modules: no shared helpers, plain Fraction arithmetic, modest sizes only.
The float implementations are tested against these values; keep the two
routes separate so a bug cannot cancel itself out.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError

_MAX_EXACT_N = 40

RationalLike = Fraction | int


def _check(alpha: Fraction, beta: Fraction, N: int) -> None:
    if alpha <= -1 or beta <= -1:
        raise DomainError(f"need alpha, beta > -1, got ({alpha}, {beta})")
    if not 1 <= N <= _MAX_EXACT_N:
        raise DomainError(f"exact route supports N in 1..{_MAX_EXACT_N}, got {N}")


def exact_pochhammer(a: RationalLike, k: int) -> Fraction:
    """(a)_k as an exact rational."""
    if k < 0:
        raise DomainError(f"need k >= 0, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def exact_hahn_eval(
    n: int, x: RationalLike, alpha: RationalLike, beta: RationalLike, N: int
) -> Fraction:
    """Q_n(x) as an exact rational, summed term by term."""
    alpha, beta, x = Fraction(alpha), Fraction(beta), Fraction(x)
    _check(alpha, beta, N)
    if not 0 <= n <= N:
        raise DomainError(f"degree {n} outside 0..{N}")
    term = Fraction(1)
    total = Fraction(1)
    for k in range(n):
        term *= (-n + k) * (n + alpha + beta + 1 + k) * (-x + k)
        term /= (alpha + 1 + k) * (-N + k) * (k + 1)
        total += term
    return total


def exact_weight(
    x: int, alpha: RationalLike, beta: RationalLike, N: int
) -> Fraction:
    """w(x) = (alpha+1)_x / x! * (beta+1)_{N-x} / (N-x)! exactly."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check(alpha, beta, N)
    if not 0 <= x <= N:
        raise DomainError(f"grid point {x} outside 0..{N}")
    left = exact_pochhammer(alpha + 1, x) / exact_pochhammer(1, x)
    right = exact_pochhammer(beta + 1, N - x) / exact_pochhammer(1, N - x)
    return left * right


def exact_inner_product(
    n: int, m: int, alpha: RationalLike, beta: RationalLike, N: int
) -> Fraction:
    """<Q_n, Q_m>_w summed over the grid, exactly."""
    total = Fraction(0)
    for x in range(N + 1):
        total += (
            exact_hahn_eval(n, x, alpha, beta, N)
            * exact_hahn_eval(m, x, alpha, beta, N)
            * exact_weight(x, alpha, beta, N)
        )
    return total


def exact_norm_sq(
    n: int, alpha: RationalLike, beta: RationalLike, N: int
) -> Fraction:
    """||Q_n||_w^2 from the closed form

        (-1)^n (n+a+b+1)_{N+1} (b+1)_n n!
        ----------------------------------------
        (2n+a+b+1) (a+1)_n (-N)_n N!

    evaluated in exact arithmetic (no cancellation tricks needed here)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check(alpha, beta, N)
    if not 0 <= n <= N:
        raise DomainError(f"degree {n} outside 0..{N}")
    s = alpha + beta
    num = (
        Fraction(-1) ** n
        * exact_pochhammer(n + s + 1, N + 1)
        * exact_pochhammer(beta + 1, n)
        * exact_pochhammer(1, n)
    )
    den = (
        (2 * n + s + 1)
        * exact_pochhammer(alpha + 1, n)
        * exact_pochhammer(Fraction(-N), n)
        * exact_pochhammer(1, N)
    )
    return num / den
