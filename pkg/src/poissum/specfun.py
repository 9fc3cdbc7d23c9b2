"""Floating-point special functions used by the identity catalog.

Complete elliptic integrals through the arithmetic-geometric mean, the
modulus belonging to a prescribed period ratio K'/K = a (theta-series nome
inversion), integer zeta values, Catalan's constant, the trilogarithm on
[-1, 0], the Lerch transcendent via its integral representation, and the
negative-order polylogarithm as an Eulerian rational function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact import eulerian_row
from .numerics import SumOptions, alternating_cvz, integrate_decaying

__all__ = [
    "EllipticPair",
    "agm",
    "elliptic_from_modulus",
    "modulus_from_ratio",
    "zeta_int",
    "catalan",
    "li3",
    "lerch_phi",
    "li_negative_order",
]


@dataclass(frozen=True)
class EllipticPair:
    """Modulus k with K, E, the complementary K', and the nome e^{-pi K'/K}."""

    modulus_k: float
    complementary_k: float
    K: float
    E: float
    K_prime: float
    nome_q: float


def agm(x: float, y: float) -> float:
    """Common limit of the arithmetic/geometric mean iteration."""
    if not (x > 0.0 and y > 0.0):
        raise ValueError("agm needs positive arguments")
    a, b = float(x), float(y)
    for _ in range(64):
        if abs(a - b) < 1e-15 * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_from_modulus(k: float) -> EllipticPair:
    """K, E, K' and the nome for modulus k in (0, 1).

    K = pi / (2 agm(1, k')) and E = K (1 - sum 2^{n-1} c_n^2) where c_0 = k
    and c_{n+1} = (a_n - b_n)/2 are the AGM difference terms.
    """
    if not 0.0 < k < 1.0:
        raise ValueError("modulus must lie strictly inside (0, 1)")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    a, b = 1.0, kp
    total = 0.5 * k * k
    p = 0.5
    for _ in range(64):
        if abs(a - b) <= 1e-16 * a:
            break
        c = 0.5 * (a - b)
        p *= 2.0
        total += p * c * c
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    mean = 0.5 * (a + b)
    big_k = math.pi / (2.0 * mean)
    big_e = big_k * (1.0 - total)
    big_kp = math.pi / (2.0 * agm(1.0, k))
    nome = math.exp(-math.pi * big_kp / big_k)
    return EllipticPair(k, kp, big_k, big_e, big_kp, nome)


def modulus_from_ratio(a: float) -> EllipticPair:
    """Elliptic data for the modulus k determined by K'/K = a.

    Inverts the ratio through the nome q = e^{-pi a} and the theta series
    k = (theta2(q)/theta3(q))^2 with theta2 = 2 sum q^{(n+1/2)^2} and
    theta3 = 1 + 2 sum q^{n^2}; for a >= 0.1 at most 13 terms are needed.
    """
    if not 0.1 <= a <= 10.0:
        raise ValueError("period ratio outside the supported range [0.1, 10]")
    q = math.exp(-math.pi * a)
    theta2 = 0.0
    n = 0
    while True:
        term = q ** ((n + 0.5) ** 2)
        if term < 1e-17:
            break
        theta2 += term
        n += 1
    theta2 *= 2.0
    theta3 = 1.0
    n = 1
    while True:
        term = q ** (n * n)
        if term < 1e-17:
            break
        theta3 += 2.0 * term
        n += 1
    k = (theta2 / theta3) ** 2
    pair = elliptic_from_modulus(k)
    if abs(pair.K_prime / pair.K - a) > 1e-10 * max(1.0, a):
        raise ArithmeticError(f"theta inversion failed to reproduce ratio {a}")
    return pair


@lru_cache(maxsize=None)
def zeta_int(s: int) -> float:
    """zeta(s) for integer s >= 2, accurate to ~1e-15.

    Computed as eta(s)/(1 - 2^{1-s}) with the alternating eta series pushed
    through convergence acceleration.
    """
    if s < 2:
        raise ValueError("zeta_int needs an integer s >= 2")
    eta = alternating_cvz(lambda k: (k + 1.0) ** (-s))
    return eta / (1.0 - 2.0 ** (1 - s))


@lru_cache(maxsize=1)
def catalan() -> float:
    """Catalan's constant sum (-1)^k/(2k+1)^2 = 0.9159655941772190...

    The defining series gains only ~2 digits per tenfold terms, so the same
    accelerated scheme as zeta_int is applied to its magnitudes.
    """
    return alternating_cvz(lambda k: (2.0 * k + 1.0) ** -2)


def li3(x: float) -> float:
    """Trilogarithm sum x^k/k^3 for x in [-1, 0].

    Direct summation with the alternating-series tail bound; stops once the
    next magnitude is below 3e-15.
    """
    if not -1.0 <= x <= 0.0:
        raise ValueError("li3 domain here is -1 <= x <= 0")
    if x == 0.0:
        return 0.0
    total = comp = 0.0
    xk = 1.0
    for k in range(1, 400_000):
        xk *= x
        term = xk / (k * k * k)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        if abs(term) < 3e-15:
            break
    return total + comp


def lerch_phi(z: float, s: int, a: float) -> float:
    """Lerch transcendent Phi(z, s, a) = sum z^k/(a+k)^s and its continuation.

    Evaluated through Phi(z, s, a) = (1/Gamma(s)) * integral_0^inf
    t^{s-1} e^{-a t} / (1 - z e^{-t}) dt, which is valid for every z outside
    [1, inf) because the denominator never vanishes; this single code path
    also covers z <= -1.
    """
    if s < 1:
        raise ValueError("lerch_phi needs an integer s >= 1")
    if a <= 0.0:
        raise ValueError("lerch_phi needs a > 0")
    if z >= 1.0:
        raise ValueError("lerch_phi needs z < 1")
    if z == 0.0:
        return a ** float(-s)

    def integrand(t: float) -> float:
        return t ** (s - 1) * math.exp(-a * t) / (1.0 - z * math.exp(-t))

    res = integrate_decaying(
        integrand, a, SumOptions(rel_tol=1e-13, abs_tol=1e-13)
    )
    return res.value / math.factorial(s - 1)


def li_negative_order(n: int, x: float) -> float:
    """Negative-order polylogarithm Li_{-n}(x) = sum k^n x^k continued to x != 1.

    Uses the Eulerian rational form sum_k A(n, k) x^{k+1} / (1-x)^{n+1},
    which agrees with the series for |x| < 1 and provides the analytic
    continuation elsewhere.  Obeys Li_{-n}(1/x) = (-1)^{n+1} Li_{-n}(x).
    """
    if n < 1:
        raise ValueError("li_negative_order needs n >= 1")
    if abs(1.0 - x) < 1e-8:
        raise ValueError("x too close to the pole at 1")
    row = eulerian_row(n)
    poly = 0.0
    for coeff in reversed(row):
        poly = poly * x + coeff
    return x * poly / (1.0 - x) ** (n + 1)
