"""Exact rational number tables.

Bernoulli numbers B_n (with B_1 = -1/2), the Euler-type numbers Q_n defined
by 1/(e^x + 1) = sum Q_n x^n / n!, the Abel constants eta(-m) of the
alternating power sums, and the Eulerian triangle A(n, k).

All values are `fractions.Fraction` over Python's unbounded integers, so the
arithmetic is exact and can never wrap; the explicit index cap below exists
only as the documented table-size contract (every catalog entry needs at
most B_22).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "Rational",
    "NUMBER_CAP",
    "bernoulli",
    "q_number",
    "eta_negative",
    "euler_number",
    "beta_negative",
    "eulerian",
    "eulerian_row",
]

Rational = Fraction

NUMBER_CAP = 64


def _check_index(n: int, what: str, cap: int = NUMBER_CAP) -> None:
    if n < 0:
        raise ValueError(f"{what} index must be >= 0, got {n}")
    if n > cap:
        raise OverflowError(f"{what} index {n} beyond table cap {cap}")


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1."""
    _check_index(n, "Bernoulli")
    if n == 0:
        return Fraction(1)
    if n >= 3 and n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(n):
        acc += comb(n + 1, j) * bernoulli(j)
    return Fraction(-acc, n + 1)


def q_number(n: int) -> Fraction:
    """Coefficient Q_n of the expansion 1/(e^x + 1) = sum Q_n x^n / n!.

    Q_0 = 1/2 and for n >= 1, Q_n = B_{n+1} (1 - 2^{n+1}) / (n+1), which
    follows from 1/(e^x+1) = 1/(e^x-1) - 2/(e^{2x}-1).  The even-index
    values vanish because 1/(e^x+1) - 1/2 is odd.
    """
    _check_index(n, "Q-number", NUMBER_CAP - 1)
    if n == 0:
        return Fraction(1, 2)
    return bernoulli(n + 1) * (1 - 2 ** (n + 1)) / Fraction(n + 1)


def eta_negative(m: int) -> Fraction:
    """Abel value of sum_{k>=1} (-1)^{k+1} k^m.

    Equals 1/2 at m = 0 and (2^{m+1} - 1) B_{m+1} / (m+1) for m >= 1
    (zero at even m >= 2).  Note eta_negative(m) == -q_number(m) for m >= 1.
    """
    _check_index(m, "eta", NUMBER_CAP - 1)
    if m == 0:
        return Fraction(1, 2)
    return (2 ** (m + 1) - 1) * bernoulli(m + 1) / Fraction(m + 1)


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Exact Euler number E_n from sum_{k even} C(n, k) E_k = 0, E_0 = 1.

    Odd-index values vanish; E_2 = -1, E_4 = 5, E_6 = -61, ...
    """
    _check_index(n, "Euler")
    if n == 0:
        return 1
    if n % 2 == 1:
        return 0
    acc = 0
    for k in range(0, n, 2):
        acc += comb(n, k) * euler_number(k)
    return -acc


def beta_negative(m: int) -> Fraction:
    """Abel value of sum_{k>=0} (-1)^k (2k+1)^m: E_m / 2 (zero at odd m)."""
    _check_index(m, "beta")
    return Fraction(euler_number(m), 2)


@lru_cache(maxsize=None)
def eulerian_row(n: int) -> tuple[int, ...]:
    """Row n of the Eulerian triangle, A(n, 0) .. A(n, n-1)."""
    if n < 1:
        raise ValueError(f"Eulerian row index must be >= 1, got {n}")
    if n > NUMBER_CAP:
        raise OverflowError(f"Eulerian row {n} beyond table cap {NUMBER_CAP}")
    if n == 1:
        return (1,)
    prev = eulerian_row(n - 1)

    def at(i: int) -> int:
        return prev[i] if 0 <= i < len(prev) else 0

    return tuple((k + 1) * at(k) + (n - k) * at(k - 1) for k in range(n))


def eulerian(n: int, k: int) -> int:
    """A(n, k) via A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), A(1,0) = 1."""
    row = eulerian_row(n)
    if not 0 <= k < n:
        raise ValueError(f"Eulerian index k={k} outside 0..{n - 1}")
    return row[k]
