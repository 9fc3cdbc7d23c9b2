"""Hyperbolic series identities from even/odd lattice summation.

A small numerics core (compensated summation with tail bounds, truncated
quadrature for exponentially decaying integrands, extrapolation to 0+),
the special functions the identities need (exact Bernoulli/Q tables,
elliptic integrals, zeta values, Catalan's constant, Lerch transcendent,
negative-order polylogarithms), the even/odd transform operators, and a
declarative catalog that verifies every identity numerically and records
the printed forms that fail together with corrected variants that pass.
"""

from .catalog import (
    DEFAULT_ABS_TOL,
    DEFAULT_REL_TOL,
    IdentityRecord,
    LedgerRecord,
    ParamSpec,
    Variant,
    VerificationOutcome,
    build_ledger,
    get_identity,
    list_identities,
    render_ledger_json,
    render_ledger_markdown,
    verify,
    verify_all,
)
from .descriptors import (
    EVEN,
    ODD,
    FunctionDescriptor,
    builtin,
    builtin_names,
    cosine,
    even_power,
    odd_power,
    sinc_pi,
)
from .exact import (
    NUMBER_CAP,
    Rational,
    bernoulli,
    eta_negative,
    eulerian,
    eulerian_row,
    q_number,
)
from .numerics import (
    QuadratureResult,
    SeriesResult,
    SumOptions,
    alternating_cvz,
    cosh_over_expm1,
    cosh_over_sinh,
    csch,
    integrate_decaying,
    inv_expm1,
    inv_expp1,
    richardson_extrapolate,
    sech,
    sinh_pow_over_expm1,
    sinh_pow_ratio,
    sum_alternating,
    sum_series,
)
from .specfun import (
    EllipticPair,
    agm,
    catalan,
    elliptic_from_modulus,
    lerch_phi,
    li3,
    li_negative_order,
    modulus_from_ratio,
    zeta_int,
)
from .transforms import (
    ABEL_LADDER,
    TransformParams,
    TransformReport,
    abel_constant,
    lemma1_integral,
    lemma1_series,
    lemma2_integral,
    lemma2_series,
    theorem1_sides,
    theorem2_sides,
)

__version__ = "0.1.0"
