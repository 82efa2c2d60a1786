"""Double-word arithmetic and exact-to-tolerance reduction of t*log(n) mod 2pi.

Step angles -t*log(n) at t up to 1e9 span ~1.5e9 full turns; recovering the
reduced angle to 1e-6 therefore needs ~2x native float precision. Everything
here works on unevaluated (hi, lo) pairs: a table-free double-word natural
log (mantissa by a compensated atanh series, exponent by an exact multiple
of a two-word ln 2), double-word products with t, and a mod-2pi reduction
against a three-word 2pi.

Scalar routines only; the vectorised twins live in the kernel backends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RangeOverflowError

# Two-word ln 2 and three-word 2pi (value = sum of parts, most significant first).
LN2_HI = 0.6931471805599453
LN2_LO = 2.3190468138462996e-17
TWO_PI_HI = 6.283185307179586
TWO_PI_MID = 2.4492935982947064e-16
TWO_PI_LO = -5.989539619436679e-33
INV_2PI = 0.15915494309189535
TWO_PI = TWO_PI_HI

SQRT_HALF = 0.7071067811865476
_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split constant

# Double-word 1/(2k+1), k = 1..22, for the atanh series of log.
_ATANH_COEF = [
    (0.3333333333333333, 1.850371707708594e-17),
    (0.2, -1.1102230246251566e-17),
    (0.14285714285714285, 7.93016446160826e-18),
    (0.1111111111111111, 6.1679056923619804e-18),
    (0.09090909090909091, -2.523234146875356e-18),
    (0.07692307692307693, -4.270088556250602e-18),
    (0.06666666666666667, 9.251858538542971e-19),
    (0.058823529411764705, 8.163404592832033e-19),
    (0.05263157894736842, 2.921639538487254e-18),
    (0.047619047619047616, 2.64338815386942e-18),
    (0.043478260869565216, 1.206764157201257e-18),
    (0.04, -8.326672684688674e-19),
    (0.037037037037037035, 2.05596856412066e-18),
    (0.034482758620689655, 4.785444071660157e-19),
    (0.03225806451612903, 8.953411488912552e-19),
    (0.030303030303030304, -8.410780489584519e-19),
    (0.02857142857142857, 8.921435019309293e-19),
    (0.02702702702702703, -1.50030138462859e-18),
    (0.02564102564102564, 8.896017825522087e-19),
    (0.024390243902439025, -8.46206573647223e-19),
    (0.023255813953488372, 3.2273925134452225e-19),
    (0.022222222222222223, -8.480870326997723e-19),
]

MAX_REDUCIBLE = 1.0e12  # |t*log n| cap; beyond this the error budget is void


# ---------------------------------------------------------------------------
# error-free transforms (Knuth / Dekker)

def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_add(ahi, alo, bhi, blo):
    s, e = _two_sum(ahi, bhi)
    e += alo + blo
    return _quick_two_sum(s, e)


def _dd_add_d(ahi, alo, b):
    s, e = _two_sum(ahi, b)
    e += alo
    return _quick_two_sum(s, e)


def _dd_mul(ahi, alo, bhi, blo):
    p, e = _two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    return _quick_two_sum(p, e)


def _dd_mul_d(ahi, alo, b):
    p, e = _two_prod(ahi, b)
    e += alo * b
    return _quick_two_sum(p, e)


def _dd_div(ahi, alo, bhi, blo):
    q1 = ahi / bhi
    phi, plo = _dd_mul_d(bhi, blo, q1)
    rhi, rlo = _dd_add(ahi, alo, -phi, -plo)
    q2 = rhi / bhi
    phi, plo = _dd_mul_d(bhi, blo, q2)
    rhi, rlo = _dd_add(rhi, rlo, -phi, -plo)
    q3 = rhi / bhi
    s, e = _two_sum(q1, q2)
    e += q3
    return _quick_two_sum(s, e)


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class DoubleWord:
    """Unevaluated hi + lo pair; |lo| <= ulp(hi)/2."""

    hi: float
    lo: float

    def value(self) -> float:
        return self.hi + self.lo

    def __mul__(self, k: float) -> "DoubleWord":
        return DoubleWord(*_dd_mul_d(self.hi, self.lo, float(k)))

    def __add__(self, other: "DoubleWord") -> "DoubleWord":
        return DoubleWord(*_dd_add(self.hi, self.lo, other.hi, other.lo))

    def __neg__(self) -> "DoubleWord":
        return DoubleWord(-self.hi, -self.lo)


@dataclass(frozen=True)
class SParam:
    """Complex argument s = sigma + i*t; negative t is handled by conjugation
    at call sites, so t >= 0 here."""

    sigma: float
    t: float

    def __post_init__(self):
        if self.t < 0:
            raise DomainError("t must be >= 0 (conjugate at the call site)")

    def as_complex(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class ReducedAngle:
    """Angle in (-2pi, 0] plus the non-negative count of removed full turns;
    the original angle is theta - 2*pi*removed_cycles."""

    theta: float
    removed_cycles: int

    def unreduced(self) -> float:
        return self.theta - TWO_PI_HI * self.removed_cycles


# ---------------------------------------------------------------------------
# logs

def _log_mantissa(m: float):
    # m in [sqrt(1/2), sqrt(2)); atanh series log m = 2r(1 + s/3 + s^2/5 + ...)
    num_hi = m - 1.0  # exact (Sterbenz)
    den_hi, den_lo = _two_sum(m, 1.0)
    rhi, rlo = _dd_div(num_hi, 0.0, den_hi, den_lo)
    shi, slo = _dd_mul(rhi, rlo, rhi, rlo)
    phi, plo = _ATANH_COEF[-1]
    for chi, clo in reversed(_ATANH_COEF[:-1]):
        phi, plo = _dd_mul(phi, plo, shi, slo)
        phi, plo = _dd_add(phi, plo, chi, clo)
    phi, plo = _dd_mul(phi, plo, shi, slo)
    phi, plo = _dd_add_d(phi, plo, 1.0)
    return _dd_mul(phi, plo, 2.0 * rhi, 2.0 * rlo)


def _dw_log_float(x: float):
    m, e = math.frexp(x)
    if m < SQRT_HALF:
        m *= 2.0
        e -= 1
    lhi, llo = _log_mantissa(m)
    ehi, elo = _dd_mul_d(LN2_HI, LN2_LO, float(e))
    return _dd_add(lhi, llo, ehi, elo)


def dw_log(n: int) -> DoubleWord:
    """Natural log of a positive integer to ~32 significant digits."""
    if n < 1:
        raise DomainError("dw_log requires n >= 1")
    if n == 1:
        return DoubleWord(0.0, 0.0)
    return DoubleWord(*_dw_log_float(float(n)))


def dw_log_real(x) -> DoubleWord:
    """Natural log of a positive real given as float or DoubleWord."""
    if isinstance(x, DoubleWord):
        if x.hi <= 0.0:
            raise DomainError("dw_log_real requires x > 0")
        hi, lo = _dw_log_float(x.hi)
        return DoubleWord(*_dd_add_d(hi, lo, x.lo / x.hi))
    x = float(x)
    if x <= 0.0:
        raise DomainError("dw_log_real requires x > 0")
    return DoubleWord(*_dw_log_float(x))


# ---------------------------------------------------------------------------
# mod-2pi reduction

def _mod_2pi_pos(xhi: float, xlo: float):
    # x >= 0; returns (rem in [0, 2pi) as double, cycles as float). The
    # floor estimate is within 1 of the true cycle count, so each fix-up
    # loop runs at most twice.
    c = math.floor(xhi * INV_2PI + xlo * INV_2PI)
    if c > 0:
        phi, plo = _two_prod(c, TWO_PI_HI)
        rhi, rlo = _dd_add(xhi, xlo, -phi, -plo)
        rhi, rlo = _dd_add_d(rhi, rlo, -(c * TWO_PI_MID))
        rhi, rlo = _dd_add_d(rhi, rlo, -(c * TWO_PI_LO))
    else:
        c = 0
        rhi, rlo = xhi, xlo
    # normalized dd: sign(hi) == sign(value)
    while rhi < 0.0:
        rhi, rlo = _dd_add(rhi, rlo, TWO_PI_HI, TWO_PI_MID)
        c -= 1
    while rhi > TWO_PI_HI or (rhi == TWO_PI_HI and rlo >= TWO_PI_MID):
        rhi, rlo = _dd_add(rhi, rlo, -TWO_PI_HI, -TWO_PI_MID)
        c += 1
        if rhi < 0.0:  # overshot by < 1e-30: the value is a 2pi multiple
            rhi, rlo = 0.0, 0.0
            break
    return max(rhi + rlo, 0.0), float(c)


def reduce_dw(x: DoubleWord):
    """Reduce a double-word value mod 2pi. Returns (remainder in [0, 2pi),
    removed cycles) for x >= 0; for x < 0 reduces |x| and negates."""
    if abs(x.hi) > MAX_REDUCIBLE:
        raise RangeOverflowError(f"|x|={abs(x.hi):.3e} exceeds {MAX_REDUCIBLE:.0e}")
    if x.hi >= 0:
        return _mod_2pi_pos(x.hi, x.lo)
    rem, c = _mod_2pi_pos(-x.hi, -x.lo)
    return -rem, c


def reduce_angle(t: float, n: int) -> ReducedAngle:
    """Step angle theta_n = -t*log(n) reduced into (-2pi, 0].

    Absolute error <= 1e-10 for t <= 1e5 and <= 1e-6 for t <= 1e9; the raw
    magnitude t*log n must stay below 1e12 (RangeOverflowError otherwise,
    never a silent wrap).
    """
    if n < 1:
        raise DomainError("reduce_angle requires n >= 1")
    if t < 0:
        raise DomainError("reduce_angle requires t >= 0")
    if n == 1 or t == 0.0:
        return ReducedAngle(0.0, 0)
    ln = _dw_log_float(float(n))
    if t * ln[0] > MAX_REDUCIBLE:
        raise RangeOverflowError(
            f"t*log(n) = {t * ln[0]:.3e} exceeds {MAX_REDUCIBLE:.0e}")
    yhi, ylo = _dd_mul_d(ln[0], ln[1], t)
    rem, c = _mod_2pi_pos(yhi, ylo)
    return ReducedAngle(-rem, int(c))


def reduce_linear(t: float, a: float) -> float:
    """a mod 2pi keeping the sign branch: results in [0, 2pi) for a >= 0 and
    (-2pi, 0] for a < 0. The t argument is accepted for signature symmetry
    with reduce_angle and does not enter the reduction."""
    del t
    a = float(a)
    if abs(a) > MAX_REDUCIBLE:
        raise RangeOverflowError(f"|a|={abs(a):.3e} exceeds {MAX_REDUCIBLE:.0e}")
    if a >= 0:
        rem, _ = _mod_2pi_pos(a, 0.0)
        return rem
    rem, _ = _mod_2pi_pos(-a, 0.0)
    return -rem


def reduce_linear_dw(x: DoubleWord) -> float:
    """Sign-branch mod-2pi of a double-word value (internal phase assembly)."""
    rem, _ = reduce_dw(x)
    return rem
