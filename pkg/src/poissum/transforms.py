"""Integral-series dual pairs and the two lattice-sum transform identities.

For an admissible even f (analytic in the closed upper half plane with
sub-e^{pi|z|} growth) the dual pair reads

    integral_0^inf f(t) cos(t g) / cosh(pi t) dt
        = sum_{k>=0} (-1)^k r(k+1/2) e^{-(k+1/2) g},

and for even g with the removable point t/sinh(pi t) -> 1/pi at 0,

    integral_0^inf g(t) t cos(t a) / sinh(pi t) dt
        = sum_{k>=1} (-1)^{k-1} k r(k) e^{-k a}.

The transform identities evaluated by theorem1_sides / theorem2_sides are,
with a b = 2 pi and c the Abel constant of the descriptor,

  even:  sqrt(a) (f(0)/2 + sum f(ka)/cosh(pi k a))
             = sqrt(2b/pi) (c/2 + sum (-1)^k r(k+1/2)/(e^{b(k+1/2)} - 1))
  odd:   sqrt(a) (f'(0)/(2 pi) + sum f(ka)/sinh(pi k a))
             = sqrt(2b/pi) (c/2 + sum (-1)^{k+1} r(k)/(e^{bk} - 1))

where the odd-case signs follow from the f(iy) = i r(y) convention and are
pinned by the f(t) = t numeric check in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .descriptors import EVEN, ODD, FunctionDescriptor
from .numerics import (
    QuadratureResult,
    SeriesResult,
    SumOptions,
    csch,
    integrate_decaying,
    inv_expm1,
    richardson_extrapolate,
    sech,
    sum_alternating,
    sum_series,
)

__all__ = [
    "TransformParams",
    "TransformReport",
    "abel_constant",
    "lemma1_integral",
    "lemma1_series",
    "lemma2_integral",
    "lemma2_series",
    "theorem1_sides",
    "theorem2_sides",
    "ABEL_LADDER",
]

# Abel-limit ladder x_j = 0.8 * 2^-j, j = 0..7: the largest x converges
# quickly for every catalog descriptor while the extrapolation error stays
# below 1e-8 on the alternating power-sum test set.
ABEL_LADDER = tuple(0.8 * 0.5**j for j in range(8))


@dataclass(frozen=True)
class TransformParams:
    """Lattice spacing a > 0 with the conjugate spacing b = 2 pi / a."""

    a: float
    b: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.a > 0.0:
            raise ValueError("lattice spacing a must be positive")
        object.__setattr__(self, "b", 2.0 * math.pi / self.a)


@dataclass(frozen=True)
class TransformReport:
    lhs: SeriesResult
    rhs: SeriesResult
    abs_residual: float
    rel_residual: float
    warnings: tuple[str, ...] = ()


def _require_parity(d: FunctionDescriptor, parity: str, op: str) -> None:
    if d.parity != parity:
        raise ValueError(f"{op} needs an {parity} descriptor, got {d.parity} ({d.label})")


def _abel_detail(
    d: FunctionDescriptor, opts: SumOptions | None = None
) -> tuple[float, list[str]]:
    if d.abel_constant_closed_form is not None:
        return d.abel_constant_closed_form, []
    opts = opts or SumOptions()
    warnings: list[str] = []
    xs: list[float] = []
    vals: list[float] = []
    for x in ABEL_LADDER:
        if d.is_even:
            res = sum_alternating(
                lambda k, x=x: d.imag_eval(k + 0.5) * math.exp(-(k + 0.5) * x),
                opts,
                start=0,
            )
        else:
            res = sum_alternating(
                lambda k, x=x: d.imag_eval(float(k)) * math.exp(-k * x),
                opts,
                start=1,
            )
        if not res.converged and res.tail_estimate > max(1.0, abs(res.value)) * 1e-6:
            break
        xs.append(x)
        vals.append(res.value)
    if len(xs) < 3:
        raise ArithmeticError(
            f"Abel ladder sums fail to converge for descriptor {d.label!r}"
        )
    if len(xs) < len(ABEL_LADDER):
        warnings.append(
            f"Abel ladder truncated after {len(xs)} rungs for {d.label!r};"
            " extrapolated constant may lose accuracy"
        )
    return richardson_extrapolate(zip(xs, vals)), warnings


def abel_constant(d: FunctionDescriptor, opts: SumOptions | None = None) -> float:
    """Abel-limit constant of the descriptor's transformed side.

    Returns the stored closed form when present; otherwise evaluates the
    regularized alternating sums S(x) on the ladder and extrapolates to
    x -> 0+.  Even descriptors sum over half-integers k+1/2, odd ones over
    integers with leading + sign.
    """
    value, _ = _abel_detail(d, opts)
    return value


def _t_over_sinh_pi(t: float) -> float:
    # removable singularity: t/sinh(pi t) -> 1/pi as t -> 0
    x = math.pi * t
    if abs(x) < 1e-4:
        return (1.0 - x * x / 6.0) / math.pi
    return t * csch(x)


def _decay_for(d: FunctionDescriptor) -> float:
    b = d.growth[1] if d.growth else 0.0
    lam = math.pi - b
    if lam <= 0.0:
        raise ValueError(
            f"descriptor {d.label!r} has growth rate {b} >= pi;"
            " the weighted integrand has no usable decay bound"
        )
    return lam


def lemma1_integral(
    d: FunctionDescriptor, gamma: float, opts: SumOptions | None = None
) -> QuadratureResult:
    """integral_0^inf f(t) cos(t gamma) / cosh(pi t) dt for even f."""
    _require_parity(d, EVEN, "lemma1_integral")
    if gamma < 0.0:
        raise ValueError("gamma must be >= 0")
    lam = _decay_for(d)
    return integrate_decaying(
        lambda t: d.real_eval(t) * math.cos(t * gamma) * sech(math.pi * t),
        lam,
        opts,
    )


def lemma1_series(
    d: FunctionDescriptor, gamma: float, opts: SumOptions | None = None
) -> SeriesResult:
    """sum_{k>=0} (-1)^k r(k+1/2) e^{-(k+1/2) gamma} for even f."""
    _require_parity(d, EVEN, "lemma1_series")
    if not gamma > 0.0:
        raise ValueError("gamma must be positive")
    res = sum_alternating(
        lambda k: d.imag_eval(k + 0.5) * math.exp(-(k + 0.5) * gamma),
        opts,
        start=0,
    )
    _raise_if_diverged(res, d, "lemma1_series")
    return res


def lemma2_integral(
    g: FunctionDescriptor, gamma: float, opts: SumOptions | None = None
) -> QuadratureResult:
    """integral_0^inf g(t) t cos(t gamma) / sinh(pi t) dt for even g."""
    _require_parity(g, EVEN, "lemma2_integral")
    if gamma < 0.0:
        raise ValueError("gamma must be >= 0")
    lam = _decay_for(g)
    return integrate_decaying(
        lambda t: g.real_eval(t) * math.cos(t * gamma) * _t_over_sinh_pi(t),
        lam,
        opts,
    )


def lemma2_series(
    g: FunctionDescriptor, gamma: float, opts: SumOptions | None = None
) -> SeriesResult:
    """sum_{k>=1} (-1)^{k-1} k r(k) e^{-k gamma} for even g."""
    _require_parity(g, EVEN, "lemma2_series")
    if not gamma > 0.0:
        raise ValueError("gamma must be positive")
    res = sum_alternating(
        lambda k: k * g.imag_eval(float(k)) * math.exp(-k * gamma),
        opts,
        start=1,
    )
    _raise_if_diverged(res, g, "lemma2_series")
    return res


def _raise_if_diverged(res: SeriesResult, d: FunctionDescriptor, op: str) -> None:
    if not res.converged and res.tail_estimate > max(1.0, abs(res.value)):
        raise ArithmeticError(f"{op} did not converge for descriptor {d.label!r}")


def _growth_warnings(d: FunctionDescriptor) -> list[str]:
    if d.growth and d.growth[1] >= math.pi:
        return [
            f"descriptor {d.label!r} has growth rate b={d.growth[1]:g} >= pi;"
            " outside the guaranteed hypothesis, verified numerically only"
        ]
    return []


def _scaled(res: SeriesResult, scale: float, offset: float) -> SeriesResult:
    return SeriesResult(
        value=scale * (offset + res.value),
        tail_estimate=abs(scale) * res.tail_estimate,
        terms_used=res.terms_used,
        converged=res.converged,
    )


def _report(lhs: SeriesResult, rhs: SeriesResult, warnings: list[str]) -> TransformReport:
    abs_res = abs(lhs.value - rhs.value)
    rel_res = abs_res / max(abs(lhs.value), abs(rhs.value), 1.0)
    for side, name in ((lhs, "lattice side"), (rhs, "transformed side")):
        if not side.converged:
            warnings.append(f"{name} reached max_terms (tail ~ {side.tail_estimate:.2e})")
    return TransformReport(lhs, rhs, abs_res, rel_res, tuple(warnings))


def theorem1_sides(
    d: FunctionDescriptor, a: float, opts: SumOptions | None = None
) -> TransformReport:
    """Both sides of the even transform identity at lattice spacing a."""
    _require_parity(d, EVEN, "theorem1_sides")
    params = TransformParams(a)
    b = params.b
    warnings = _growth_warnings(d)
    lattice = sum_series(
        lambda k: d.real_eval(k * a) * sech(math.pi * k * a), opts, start=1
    )
    lhs = _scaled(lattice, math.sqrt(a), 0.5 * d.value_at_zero)
    c_e, ladder_warnings = _abel_detail(d, opts)
    warnings += ladder_warnings
    transformed = sum_alternating(
        lambda k: d.imag_eval(k + 0.5) * inv_expm1(b * (k + 0.5)), opts, start=0
    )
    rhs = _scaled(transformed, math.sqrt(2.0 * b / math.pi), 0.5 * c_e)
    return _report(lhs, rhs, warnings)


def theorem2_sides(
    d: FunctionDescriptor, a: float, opts: SumOptions | None = None
) -> TransformReport:
    """Both sides of the odd transform identity at lattice spacing a."""
    _require_parity(d, ODD, "theorem2_sides")
    params = TransformParams(a)
    b = params.b
    warnings = _growth_warnings(d)
    lattice = sum_series(
        lambda k: d.real_eval(k * a) * csch(math.pi * k * a), opts, start=1
    )
    lhs = _scaled(lattice, math.sqrt(a), d.deriv_at_zero / (2.0 * math.pi))
    c_o, ladder_warnings = _abel_detail(d, opts)
    warnings += ladder_warnings
    transformed = sum_alternating(
        lambda k: d.imag_eval(float(k)) * inv_expm1(b * k), opts, start=1
    )
    rhs = _scaled(transformed, math.sqrt(2.0 * b / math.pi), 0.5 * c_o)
    return _report(lhs, rhs, warnings)
