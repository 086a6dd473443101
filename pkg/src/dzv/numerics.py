"""Arbitrary-precision substrate: exact rationals, midpoint-radius balls,
complex balls, and formal polynomials in pi.

Balls store the midpoint and radius as dyadic numbers (mantissa * 2**exp with
Python integers), so every operation can account for its rounding error
exactly: results are enclosures, never estimates.  Midpoints are rounded to a
caller-supplied precision; radii are rounded upward to a short mantissa.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Mapping, Optional, Tuple

Rational = Fraction

__all__ = [
    "Rational",
    "DomainError",
    "PrecisionUnreachableError",
    "PrecisionCtx",
    "RealBall",
    "ComplexBall",
    "PiPolynomial",
    "ZeroCertificate",
    "binomial",
    "pi_const",
    "cube_root_of_unity",
    "pipoly_eval",
    "ball_is_zero_within",
    "ball_sum",
    "complex_sum",
]

# Radii carry few mantissa bits; they only need an order of magnitude.
_RAD_BITS = 24


class DomainError(ValueError):
    """An argument violates an operation's mathematical precondition."""


class PrecisionUnreachableError(RuntimeError):
    """Automatic parameter escalation hit its cap before meeting the radius target."""


# ---------------------------------------------------------------------------
# dyadic helpers: a dyadic number is (man, exp) meaning man * 2**exp
# ---------------------------------------------------------------------------

def _dy_add(m1: int, e1: int, m2: int, e2: int) -> Tuple[int, int]:
    if m1 == 0:
        return m2, e2
    if m2 == 0:
        return m1, e1
    if e1 <= e2:
        return m1 + (m2 << (e2 - e1)), e1
    return m2 + (m1 << (e1 - e2)), e2


def _dy_cmp(m1: int, e1: int, m2: int, e2: int) -> int:
    """Sign of m1*2**e1 - m2*2**e2."""
    m, _ = _dy_add(m1, e1, -m2, e2)
    return (m > 0) - (m < 0)


def _dy_fraction(m: int, e: int) -> Fraction:
    if e >= 0:
        return Fraction(m << e)
    return Fraction(m, 1 << (-e))


def _round_mid(man: int, exp: int, prec: int) -> Tuple[int, int, Optional[int]]:
    """Round man*2**exp to at most prec mantissa bits (to nearest).

    Returns (man, exp, err_exp) where the rounding error is at most
    2**err_exp, or err_exp None when exact.  Trailing zero bits are stripped
    first so dyadically exact values stay exact.
    """
    if man == 0:
        return 0, 0, None
    tz = (man & -man).bit_length() - 1
    if tz:
        man >>= tz
        exp += tz
    bits = man.bit_length() if man > 0 else (-man).bit_length()
    if bits <= prec:
        return man, exp, None
    sh = bits - prec
    man2 = (man + (1 << (sh - 1))) >> sh
    return man2, exp + sh, exp + sh - 1


def _rad_up(man: int, exp: int) -> Tuple[int, int]:
    """Round a nonnegative dyadic upward to a short mantissa."""
    if man == 0:
        return 0, 0
    bits = man.bit_length()
    if bits <= _RAD_BITS:
        return man, exp
    sh = bits - _RAD_BITS
    return (man >> sh) + 1, exp + sh


def _dy_up_from_fraction(q: Fraction) -> Tuple[int, int]:
    """Short dyadic upper bound of a nonnegative rational."""
    num, den = q.numerator, q.denominator
    if num == 0:
        return 0, 0
    if num < 0:
        raise ValueError("negative radius")
    e = num.bit_length() - den.bit_length() - _RAD_BITS
    if e <= 0:
        man, rem = divmod(num << (-e), den)
    else:
        man, rem = divmod(num, den << e)
    if rem:
        man += 1
    return man, e


# ---------------------------------------------------------------------------
# precision context
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision (binary digits) plus the residual tolerance checks use."""

    working_precision: int = 192
    target_tolerance: Fraction = Fraction(1, 10**40)

    def __post_init__(self):
        if self.working_precision < 64:
            raise DomainError("working_precision must be at least 64 bits")
        if self.target_tolerance <= 0:
            raise DomainError("target_tolerance must be positive")


# ---------------------------------------------------------------------------
# real balls
# ---------------------------------------------------------------------------

class RealBall:
    """Enclosure [mid - rad, mid + rad] with dyadic midpoint and radius.

    Arithmetic is inclusion monotone: the result ball contains f(x) for every
    point x of the input balls.  Operations that round the midpoint take an
    explicit precision in bits.
    """

    __slots__ = ("_mm", "_me", "_rm", "_re")

    def __init__(self, mm: int, me: int, rm: int, re: int):
        if rm < 0:
            raise ValueError("radius mantissa must be nonnegative")
        if mm == 0:
            me = 0
        if rm == 0:
            re = 0
        self._mm, self._me, self._rm, self._re = mm, me, rm, re

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "RealBall":
        return RealBall(0, 0, 0, 0)

    @staticmethod
    def from_int(n: int) -> "RealBall":
        return RealBall(n, 0, 0, 0)

    @staticmethod
    def from_man_exp(man: int, exp: int) -> "RealBall":
        return RealBall(man, exp, 0, 0)

    @staticmethod
    def from_fraction(q, prec: int) -> "RealBall":
        """Ball containing the rational q, exact when q is dyadic."""
        q = Fraction(q)
        num, den = q.numerator, q.denominator
        if num == 0:
            return RealBall(0, 0, 0, 0)
        e = (abs(num).bit_length() - den.bit_length()) - prec - 1
        if e <= 0:
            man, rem = divmod(num << (-e), den)
        else:
            man, rem = divmod(num, den << e)
        if rem == 0:
            return RealBall(man, e, 0, 0)
        # center the enclosure [man, man+1] ulp
        return RealBall(2 * man + 1, e - 1, 1, e - 1)

    # -- accessors -----------------------------------------------------------

    def midpoint_fraction(self) -> Fraction:
        return _dy_fraction(self._mm, self._me)

    def radius_fraction(self) -> Fraction:
        return _dy_fraction(self._rm, self._re)

    def lower_fraction(self) -> Fraction:
        return self.midpoint_fraction() - self.radius_fraction()

    def upper_fraction(self) -> Fraction:
        return self.midpoint_fraction() + self.radius_fraction()

    def is_exact(self) -> bool:
        return self._rm == 0

    def is_zero(self) -> bool:
        return self._mm == 0 and self._rm == 0

    def is_positive(self) -> bool:
        """True when every point of the ball is > 0."""
        return self._mm > 0 and _dy_cmp(self._mm, self._me, self._rm, self._re) > 0

    def contains_zero(self) -> bool:
        return _dy_cmp(abs(self._mm), self._me, self._rm, self._re) <= 0

    def contains_fraction(self, q) -> bool:
        q = Fraction(q)
        return abs(self.midpoint_fraction() - q) <= self.radius_fraction()

    def contains_ball(self, other: "RealBall") -> bool:
        """True when other's enclosure is a subset of self's."""
        d = abs(self.midpoint_fraction() - other.midpoint_fraction())
        return d + other.radius_fraction() <= self.radius_fraction()

    def intersects(self, other: "RealBall") -> bool:
        d = abs(self.midpoint_fraction() - other.midpoint_fraction())
        return d <= self.radius_fraction() + other.radius_fraction()

    def same_enclosure(self, other: "RealBall") -> bool:
        return (_dy_cmp(self._mm, self._me, other._mm, other._me) == 0
                and _dy_cmp(self._rm, self._re, other._rm, other._re) == 0)

    # -- arithmetic ----------------------------------------------------------

    def neg(self) -> "RealBall":
        return RealBall(-self._mm, self._me, self._rm, self._re)

    __neg__ = neg

    def abs_val(self) -> "RealBall":
        """Enclosure of |x| over the ball."""
        if not self.contains_zero():
            return RealBall(abs(self._mm), self._me, self._rm, self._re)
        # straddles zero: |x| ranges over [0, |mid|+rad]; center at half the top
        hm, he = _dy_add(abs(self._mm), self._me, self._rm, self._re)
        return RealBall(hm, he - 1, hm, he - 1)

    def add(self, other: "RealBall", prec: int) -> "RealBall":
        mm, me = _dy_add(self._mm, self._me, other._mm, other._me)
        rm, re = _dy_add(self._rm, self._re, other._rm, other._re)
        mm, me, err = _round_mid(mm, me, prec)
        if err is not None:
            rm, re = _dy_add(rm, re, 1, err)
        rm, re = _rad_up(rm, re)
        return RealBall(mm, me, rm, re)

    def sub(self, other: "RealBall", prec: int) -> "RealBall":
        return self.add(other.neg(), prec)

    def mul(self, other: "RealBall", prec: int) -> "RealBall":
        mm = self._mm * other._mm
        me = self._me + other._me
        rm, re = _dy_add(abs(self._mm) * other._rm, self._me + other._re,
                         abs(other._mm) * self._rm, other._me + self._re)
        rm, re = _dy_add(rm, re, self._rm * other._rm, self._re + other._re)
        mm, me, err = _round_mid(mm, me, prec)
        if err is not None:
            rm, re = _dy_add(rm, re, 1, err)
        rm, re = _rad_up(rm, re)
        return RealBall(mm, me, rm, re)

    def mul_int(self, n: int) -> "RealBall":
        """Exact scalar multiple by an integer."""
        return RealBall(self._mm * n, self._me, self._rm * abs(n), self._re)

    def mul_2exp(self, e: int) -> "RealBall":
        return RealBall(self._mm, self._me + e, self._rm, self._re + e)

    def recip(self, prec: int) -> "RealBall":
        """Enclosure of 1/x; the ball must not contain zero."""
        if self.contains_zero():
            raise ZeroDivisionError("ball contains zero")
        ma, ea = abs(self._mm), self._me
        sign = 1 if self._mm > 0 else -1
        # midpoint 1/(ma*2**ea) to prec+2 bits, floor
        t = prec + 2 + ma.bit_length()
        q = (1 << t) // ma
        mm, me = sign * q, -t - ea
        # |1/x - 1/m| <= r / (|m| * (|m| - r)) for x in the ball
        lo_m, lo_e = _dy_add(ma, ea, -self._rm, self._re)   # |m| - r > 0
        num = _dy_fraction(self._rm, self._re)
        den = _dy_fraction(ma, ea) * _dy_fraction(lo_m, lo_e)
        rm, re = _dy_up_from_fraction(num / den)
        rm, re = _dy_add(rm, re, 1, me)                     # floor error, one ulp
        mm, me, err = _round_mid(mm, me, prec)
        if err is not None:
            rm, re = _dy_add(rm, re, 1, err)
        rm, re = _rad_up(rm, re)
        return RealBall(mm, me, rm, re)

    def div(self, other: "RealBall", prec: int) -> "RealBall":
        return self.mul(other.recip(prec + 4), prec)

    def pow_int(self, n: int, prec: int) -> "RealBall":
        if n < 0:
            return self.pow_int(-n, prec + 4).recip(prec)
        result = RealBall.from_int(1)
        base = self
        while n:
            if n & 1:
                result = result.mul(base, prec)
            n >>= 1
            if n:
                base = base.mul(base, prec)
        return result

    def sqrt(self, prec: int) -> "RealBall":
        """Enclosure of sqrt(x) over the ball; requires lower bound >= 0."""
        lo = self.lower_fraction()
        if lo < 0:
            raise DomainError("sqrt of a ball extending below zero")
        if self._mm == 0 and self._rm == 0:
            return RealBall.zero()
        # midpoint: isqrt of the mantissa scaled to an even exponent
        ma, ea = abs(self._mm), self._me
        t = 2 * prec + 2 - ma.bit_length()
        if (ea - t) % 2:
            t += 1
        if t >= 0:
            s = isqrt(ma << t)
            rm, re = 1, 0  # sqrt(mid) lies in [s, s+1) ulp
        else:
            s = isqrt(ma >> (-t))
            rm, re = 2, 0  # one extra ulp from flooring the scaled mantissa
        mm, me = s, (ea - t) // 2
        re = me
        if lo > 0:
            # |sqrt(x) - sqrt(mid)| <= r / (2 sqrt(lo))
            if self._rm:
                sqrt_lo = _isqrt_lower(lo)
                dm, de = _dy_up_from_fraction(self.radius_fraction() / (2 * sqrt_lo))
                rm, re = _dy_add(rm, re, dm, de)
        else:
            # ball touches zero: sqrt image is [0, sqrt(hi)]
            hi = self.upper_fraction()
            hm, he = _dy_up_from_fraction(_fraction_sqrt_upper(hi))
            return RealBall(hm, he - 1, hm, he - 1)
        mm, me, err = _round_mid(mm, me, prec)
        if err is not None:
            rm, re = _dy_add(rm, re, 1, err)
        rm, re = _rad_up(rm, re)
        return RealBall(mm, me, rm, re)

    def add_error(self, q) -> "RealBall":
        """Inflate the radius by a nonnegative rational bound (rounded up)."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("error bound must be nonnegative")
        if q == 0:
            return self
        em, ee = _dy_up_from_fraction(q)
        rm, re = _dy_add(self._rm, self._re, em, ee)
        rm, re = _rad_up(rm, re)
        return RealBall(self._mm, self._me, rm, re)

    def round(self, prec: int) -> "RealBall":
        mm, me, err = _round_mid(self._mm, self._me, prec)
        rm, re = self._rm, self._re
        if err is not None:
            rm, re = _dy_add(rm, re, 1, err)
        rm, re = _rad_up(rm, re)
        return RealBall(mm, me, rm, re)

    # -- formatting ----------------------------------------------------------

    def __repr__(self) -> str:
        try:
            mid_s = repr(float(_dy_fraction(self._mm, self._me)))
        except OverflowError:
            mid_s = f"{self._mm}*2^{self._me}"
        return f"RealBall({mid_s} +/- {_radius_str(self.radius_fraction())})"


def _isqrt_lower(q: Fraction) -> Fraction:
    """A positive rational lower bound of sqrt(q) for q > 0.

    sqrt(num/den) = sqrt(num*den)/den, and isqrt floors, so the quotient is a
    lower bound; num*den >= 1 keeps it positive.
    """
    num, den = q.numerator, q.denominator
    return Fraction(isqrt(num * den), den)


def _fraction_sqrt_upper(q: Fraction) -> Fraction:
    """A rational upper bound of sqrt(q) for q >= 0."""
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    k = 64
    s = isqrt((num << (2 * k)) // den) + 1
    return Fraction(s, 1 << k)


def _radius_str(r: Fraction) -> str:
    if r == 0:
        return "0"
    f = float(r) if r < Fraction(10) ** 300 else None
    if f and f > 0:
        return f"{f:.1e}"
    # tiny radius: report the binary exponent
    num, den = r.numerator, r.denominator
    e = num.bit_length() - den.bit_length()
    return f"2^{e}"


def ball_sum(items: Iterable[RealBall], prec: int) -> RealBall:
    """Sum with exact accumulation and a single final rounding.

    Permutation invariant: the same multiset of balls always yields the same
    enclosure.
    """
    mm, me, rm, re = 0, 0, 0, 0
    for b in items:
        mm, me = _dy_add(mm, me, b._mm, b._me)
        rm, re = _dy_add(rm, re, b._rm, b._re)
    mm, me, err = _round_mid(mm, me, prec)
    if err is not None:
        rm, re = _dy_add(rm, re, 1, err)
    rm, re = _rad_up(rm, re)
    return RealBall(mm, me, rm, re)


# ---------------------------------------------------------------------------
# complex balls
# ---------------------------------------------------------------------------

class ComplexBall:
    """Rectangular complex enclosure: independent real and imaginary balls."""

    __slots__ = ("real", "imag")

    def __init__(self, real: RealBall, imag: RealBall):
        self.real = real
        self.imag = imag

    @staticmethod
    def from_real(b: RealBall) -> "ComplexBall":
        return ComplexBall(b, RealBall.zero())

    @staticmethod
    def from_fractions(re, im, prec: int) -> "ComplexBall":
        return ComplexBall(RealBall.from_fraction(re, prec),
                           RealBall.from_fraction(im, prec))

    @staticmethod
    def zero() -> "ComplexBall":
        return ComplexBall(RealBall.zero(), RealBall.zero())

    @staticmethod
    def one() -> "ComplexBall":
        return ComplexBall(RealBall.from_int(1), RealBall.zero())

    def conj(self) -> "ComplexBall":
        return ComplexBall(self.real, self.imag.neg())

    def neg(self) -> "ComplexBall":
        return ComplexBall(self.real.neg(), self.imag.neg())

    __neg__ = neg

    def add(self, other: "ComplexBall", prec: int) -> "ComplexBall":
        return ComplexBall(self.real.add(other.real, prec),
                           self.imag.add(other.imag, prec))

    def sub(self, other: "ComplexBall", prec: int) -> "ComplexBall":
        return ComplexBall(self.real.sub(other.real, prec),
                           self.imag.sub(other.imag, prec))

    def mul(self, other: "ComplexBall", prec: int) -> "ComplexBall":
        re = self.real.mul(other.real, prec).sub(self.imag.mul(other.imag, prec), prec)
        im = self.real.mul(other.imag, prec).add(self.imag.mul(other.real, prec), prec)
        return ComplexBall(re, im)

    def mul_real(self, other: RealBall, prec: int) -> "ComplexBall":
        return ComplexBall(self.real.mul(other, prec), self.imag.mul(other, prec))

    def mul_int(self, n: int) -> "ComplexBall":
        return ComplexBall(self.real.mul_int(n), self.imag.mul_int(n))

    def pow_int(self, n: int, prec: int) -> "ComplexBall":
        if n < 0:
            raise DomainError("negative complex powers are not supported")
        result = ComplexBall.one()
        base = self
        while n:
            if n & 1:
                result = result.mul(base, prec)
            n >>= 1
            if n:
                base = base.mul(base, prec)
        return result

    def contains_zero(self) -> bool:
        return self.real.contains_zero() and self.imag.contains_zero()

    def intersects(self, other: "ComplexBall") -> bool:
        return self.real.intersects(other.real) and self.imag.intersects(other.imag)

    def same_enclosure(self, other: "ComplexBall") -> bool:
        return (self.real.same_enclosure(other.real)
                and self.imag.same_enclosure(other.imag))

    def max_radius_fraction(self) -> Fraction:
        return max(self.real.radius_fraction(), self.imag.radius_fraction())

    def __repr__(self) -> str:
        return f"ComplexBall({self.real!r}, {self.imag!r})"


def complex_sum(items: Iterable[ComplexBall], prec: int) -> ComplexBall:
    items = list(items)
    return ComplexBall(ball_sum((z.real for z in items), prec),
                       ball_sum((z.imag for z in items), prec))


# ---------------------------------------------------------------------------
# binomial coefficients
# ---------------------------------------------------------------------------

def binomial(n: int, k: int) -> Fraction:
    """C(n, k) exactly; zero outside 0 <= k <= n."""
    if n < 0:
        raise DomainError("binomial requires n >= 0")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


# ---------------------------------------------------------------------------
# pi
# ---------------------------------------------------------------------------

_pi_cache: dict = {}
_pi_lock = threading.Lock()


def _arctan_recip_scaled(q: int, w: int) -> Tuple[int, int]:
    """(S, errs): S approximates 2**w * arctan(1/q), error < errs ulps.

    Alternating series sum_k (-1)^k / ((2k+1) q^(2k+1)); each floor division
    loses < 1 ulp and the tail after the loop is below the first omitted term,
    itself < 1 ulp once the power alone exceeds 2**w.
    """
    total = 0
    k = 0
    qpow = q          # q^(2k+1)
    q2 = q * q
    one = 1 << w
    while True:
        term = one // (qpow * (2 * k + 1))
        if term == 0:
            break
        total += -term if k & 1 else term
        k += 1
        qpow *= q2
    return total, k + 1


def _pi_scaled(w: int) -> Tuple[int, int]:
    """(P, E): |2**w * pi - P| <= E, via pi = 16 atan(1/5) - 4 atan(1/239)."""
    s5, e5 = _arctan_recip_scaled(5, w)
    s239, e239 = _arctan_recip_scaled(239, w)
    return 16 * s5 - 4 * s239, 16 * e5 + 4 * e239


def pi_const(ctx: PrecisionCtx) -> RealBall:
    """Certified enclosure of pi at the context's working precision."""
    prec = ctx.working_precision
    with _pi_lock:
        if prec not in _pi_cache:
            w = prec + 32
            p, e = _pi_scaled(w)
            mm, me, err = _round_mid(p, -w, prec + 16)
            rm, re = e, -w
            if err is not None:
                rm, re = _dy_add(rm, re, 1, err)
            rm, re = _rad_up(rm, re)
            _pi_cache[prec] = RealBall(mm, me, rm, re)
        return _pi_cache[prec]


def cube_root_of_unity(ctx: PrecisionCtx) -> ComplexBall:
    """Enclosure of exp(2 pi i / 3) = (-1/2, sqrt(3)/2)."""
    prec = ctx.working_precision + 8
    half_sqrt3 = RealBall.from_int(3).sqrt(prec).mul_2exp(-1)
    return ComplexBall(RealBall.from_fraction(Fraction(-1, 2), prec), half_sqrt3)


# ---------------------------------------------------------------------------
# polynomials in the formal symbol pi
# ---------------------------------------------------------------------------

class PiPolynomial:
    """Finite sum of terms coeff * pi**k with exact rational coefficients.

    The exact carrier for even zeta values and their products; supports ring
    arithmetic and exact equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, Fraction]] = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if k < 0:
                    raise DomainError("pi exponents must be nonnegative")
                c = Fraction(c)
                if c != 0:
                    clean[int(k)] = c
        self._terms = clean

    @staticmethod
    def zero() -> "PiPolynomial":
        return PiPolynomial()

    @staticmethod
    def constant(c) -> "PiPolynomial":
        return PiPolynomial({0: Fraction(c)})

    @staticmethod
    def single(k: int, c) -> "PiPolynomial":
        return PiPolynomial({k: Fraction(c)})

    def terms(self) -> Mapping[int, Fraction]:
        return dict(self._terms)

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "PiPolynomial") -> "PiPolynomial":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return PiPolynomial(out)

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "PiPolynomial") -> "PiPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PiPolynomial":
        if isinstance(other, PiPolynomial):
            out: dict = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    k = k1 + k2
                    out[k] = out.get(k, Fraction(0)) + c1 * c2
            return PiPolynomial(out)
        return PiPolynomial({k: c * Fraction(other) for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "PiPolynomial(0)"
        parts = [f"({c})*pi^{k}" if k else f"({c})"
                 for k, c in sorted(self._terms.items())]
        return "PiPolynomial(" + " + ".join(parts) + ")"


def pipoly_eval(p: PiPolynomial, ctx: PrecisionCtx) -> RealBall:
    """Certified enclosure of sum coeff * pi**k."""
    if p.is_zero():
        return RealBall.zero()
    prec = ctx.working_precision + 32
    pi = pi_const(PrecisionCtx(ctx.working_precision + 48, ctx.target_tolerance))
    terms = []
    for k, c in sorted(p.terms().items()):
        t = RealBall.from_fraction(c, prec)
        if k:
            t = t.mul(pi.pow_int(k, prec), prec)
        terms.append(t)
    return ball_sum(terms, prec)


# ---------------------------------------------------------------------------
# residual acceptance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroCertificate:
    """Record of a |midpoint| + radius <= tolerance comparison."""

    abs_midpoint: Fraction
    radius: Fraction
    tolerance: Fraction
    within: bool


def ball_is_zero_within(x: RealBall, tol) -> Tuple[bool, ZeroCertificate]:
    """True iff |midpoint| + radius <= tol, with the exact quantities recorded."""
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    mid = abs(x.midpoint_fraction())
    rad = x.radius_fraction()
    ok = mid + rad <= tol
    return ok, ZeroCertificate(mid, rad, tol, ok)
