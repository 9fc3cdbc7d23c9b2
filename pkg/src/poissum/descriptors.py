"""Function descriptors for the transform operators.

A descriptor packages a real-analytic function f of definite parity through
the two evaluations the operators need: f(t) on the real axis and the real
profile r(y) of f on the imaginary axis, where

    f(iy) = r(y)        for even f,
    f(iy) = i * r(y)    for odd f.

Real-analytic functions of definite parity take exactly these forms, so all
operator arithmetic stays real; the sign bookkeeping lives in the transform
module and is pinned down by numeric tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .exact import beta_negative, eta_negative

__all__ = [
    "EVEN",
    "ODD",
    "FunctionDescriptor",
    "even_power",
    "odd_power",
    "cosine",
    "sinc_pi",
    "builtin",
    "builtin_names",
]

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class FunctionDescriptor:
    """A real-analytic function of definite parity, seen by the operators.

    growth is advisory metadata (N, b) for a bound C (1+|z|)^N e^{b|z|};
    operators only warn when b reaches pi, they never reject.
    abel_constant_closed_form short-circuits the Abel-limit ladder for
    descriptors whose ladder sums diverge (exponential imaginary growth).
    """

    parity: str
    real_eval: Callable[[float], float]
    imag_eval: Callable[[float], float]
    value_at_zero: float | None = None
    deriv_at_zero: float | None = None
    abel_constant_closed_form: float | None = None
    growth: tuple[float, float] | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"parity must be '{EVEN}' or '{ODD}'")
        if self.parity == EVEN and self.value_at_zero is None:
            raise ValueError("even descriptors need value_at_zero")
        if self.parity == ODD and self.deriv_at_zero is None:
            raise ValueError("odd descriptors need deriv_at_zero")

    @property
    def is_even(self) -> bool:
        return self.parity == EVEN


# For power descriptors of degree >= 3 the Abel-limit ladder is poisoned by
# floating-point cancellation (terms peak near eps * m!/x^{m+1} before
# cancelling to O(1)), so the factories attach the exact constants from the
# integer tables: the half-integer alternating power sum is E_m / 2^{m+1}
# and the integer one is eta_negative(m).  Degrees <= 2 keep the ladder,
# which reaches ~1e-10 there and keeps the machinery exercised end to end.
_LADDER_SAFE_DEGREE = 2


def even_power(m: int) -> FunctionDescriptor:
    """t^m for even m >= 0; on the imaginary axis (iy)^m = (-1)^{m/2} y^m."""
    if m < 0 or m % 2:
        raise ValueError("even_power needs an even m >= 0")
    sign = -1.0 if (m // 2) % 2 else 1.0
    closed = None
    if m > _LADDER_SAFE_DEGREE:
        closed = sign * float(beta_negative(m)) / 2.0**m
    return FunctionDescriptor(
        parity=EVEN,
        real_eval=lambda t: t**m,
        imag_eval=lambda y: sign * y**m,
        value_at_zero=1.0 if m == 0 else 0.0,
        abel_constant_closed_form=closed,
        growth=(float(m), 0.0),
        label="one" if m == 0 else f"t{m}",
    )


def odd_power(m: int) -> FunctionDescriptor:
    """t^m for odd m >= 1; on the imaginary axis (iy)^m = i (-1)^{(m-1)/2} y^m."""
    if m < 1 or m % 2 == 0:
        raise ValueError("odd_power needs an odd m >= 1")
    sign = -1.0 if ((m - 1) // 2) % 2 else 1.0
    closed = None
    if m > _LADDER_SAFE_DEGREE:
        closed = sign * float(eta_negative(m))
    return FunctionDescriptor(
        parity=ODD,
        real_eval=lambda t: t**m,
        imag_eval=lambda y: sign * y**m,
        deriv_at_zero=1.0 if m == 1 else 0.0,
        abel_constant_closed_form=closed,
        growth=(float(m), 0.0),
        label="t" if m == 1 else f"t{m}",
    )


def cosine(c: float) -> FunctionDescriptor:
    """cos(c t); on the imaginary axis cosh(c y), so the Abel constant is
    the closed form sech(c/2)/2 (the ladder would diverge for c above the
    smallest ladder abscissa)."""
    if c <= 0.0:
        raise ValueError("cosine needs c > 0")
    half_sech = 1.0 / (2.0 * math.cosh(0.5 * c))
    return FunctionDescriptor(
        parity=EVEN,
        real_eval=lambda t: math.cos(c * t),
        imag_eval=lambda y: math.cosh(c * y),
        value_at_zero=1.0,
        abel_constant_closed_form=half_sech,
        growth=(0.0, c),
        label=f"cos:{c:g}",
    )


def sinc_pi(nu: float) -> FunctionDescriptor:
    """sin(pi nu t)/t; even, with f(0) = pi nu and f(iy) = sinh(pi nu y)/y.

    Abel constant in closed form: pi/2 - 2 atan(e^{-nu pi / 2}).
    """
    if nu <= 0.0:
        raise ValueError("sinc_pi needs nu > 0")
    w = math.pi * nu

    def real_eval(t: float) -> float:
        x = w * t
        if abs(x) < 1e-8:
            return w * (1.0 - x * x / 6.0)
        return math.sin(x) / t

    return FunctionDescriptor(
        parity=EVEN,
        real_eval=real_eval,
        imag_eval=lambda y: math.sinh(w * y) / y,
        value_at_zero=w,
        abel_constant_closed_form=0.5 * math.pi - 2.0 * math.atan(math.exp(-0.5 * w)),
        growth=(1.0, w),
        label=f"sinc-pi:{nu:g}",
    )


def _fixed_registry() -> dict[str, FunctionDescriptor]:
    zero = FunctionDescriptor(
        parity=EVEN,
        real_eval=lambda t: 0.0,
        imag_eval=lambda y: 0.0,
        value_at_zero=0.0,
        growth=(0.0, 0.0),
        label="zero",
    )
    invsq = FunctionDescriptor(
        parity=EVEN,
        real_eval=lambda t: 1.0 / (1.0 + t * t),
        imag_eval=lambda y: 1.0 / (1.0 - y * y),
        value_at_zero=1.0,
        growth=(0.0, 0.0),
        # Not admissible for the integral-series dual pairs: the pole at
        # z = i adds an extra (pi/2) e^{-gamma} to the series side.
        label="invsq",
    )
    reg = {
        "zero": zero,
        "one": even_power(0),
        "tsq": even_power(2),
        "t4": even_power(4),
        "invsq": invsq,
        "t": odd_power(1),
        "t3": odd_power(3),
        "t5": odd_power(5),
        "t7": odd_power(7),
    }
    return reg


_FIXED = _fixed_registry()


def builtin(name: str) -> FunctionDescriptor:
    """Look up a builtin descriptor by name.

    Fixed names: zero, one, tsq, t4, invsq, t, t3, t5, t7.  Parameterized
    families: "cos:<c>" and "sinc-pi:<nu>".
    """
    if name in _FIXED:
        return _FIXED[name]
    for prefix, factory in (("cos:", cosine), ("sinc-pi:", sinc_pi)):
        if name.startswith(prefix):
            try:
                value = float(name[len(prefix):])
            except ValueError:
                raise KeyError(f"bad parameter in descriptor name {name!r}") from None
            return factory(value)
    raise KeyError(
        f"unknown descriptor {name!r}; choose from {', '.join(builtin_names())}"
    )


def builtin_names() -> list[str]:
    return sorted(_FIXED) + ["cos:<c>", "sinc-pi:<nu>"]
