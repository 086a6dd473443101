"""dzv: certified arbitrary-precision verification of double zeta value
identities, congruence-restricted sum formulas, and Bernoulli number
convolutions.

Every numeric quantity is a midpoint-radius ball whose enclosure is proved by
construction; identities are accepted only when the residual ball certifies
zero within tolerance, and identities in the rational * pi^k ring are checked
exactly.
"""

from .numerics import (
    ComplexBall,
    DomainError,
    PiPolynomial,
    PrecisionCtx,
    PrecisionUnreachableError,
    Rational,
    RealBall,
    ZeroCertificate,
    ball_is_zero_within,
    binomial,
    cube_root_of_unity,
    pi_const,
    pipoly_eval,
)
from .bernoulli import (
    BernoulliCache,
    IdentityVerdict,
    bernoulli,
    euler_identity_check,
    ramanujan_check,
    ramanujan_sum,
)
from .zeta import ZetaValue, hurwitz_zeta, zeta_even_exact, zeta_numeric, zeta_value
from .dzeta import (
    DzvTable,
    GenPolyValue,
    IndexPair,
    build_table,
    double_zeta,
    functional_eq26_check,
    gen_poly_eval,
    get_table,
    harmonic_check,
    sum_formula_check,
    weighted_sum_check,
)
from .identities import (
    CheckReport,
    CongruenceFilter,
    SumSpec,
    corollary1_check,
    corollary2_exact_chain,
    gkz_parity_check,
    lemma1_check,
    prop1_check,
    restricted_sum,
    theorem1_check,
)

__version__ = "0.1.0"
