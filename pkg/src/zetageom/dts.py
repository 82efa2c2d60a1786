"""Forward angle differences, the discrete Taylor series, and inversions.

Differences are exact log differences in double-word arithmetic, never the
asymptotic forms -t/(n+1/2), t/(n+1/2)^2 (those are available as
cross-checks). delta^k theta(n) is the k-th forward difference of
theta(n) = -t*log(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dw import (
    DoubleWord,
    _dd_add,
    _dd_div,
    _dd_mul,
    _dd_mul_d,
    _log_mantissa,
    _two_sum,
    reduce_dw,
    reduce_linear,
)
from .errors import DomainError

_MAX_ORDER = 4


@dataclass(frozen=True)
class DiffSet:
    """delta theta .. delta^4 theta at step n: unreduced values plus their
    mod-2pi reductions (sign branch of the unreduced value)."""

    n: int
    d1: float
    d2: float
    d3: float
    d4: float
    d1_reduced: float
    d2_reduced: float
    d3_reduced: float
    d4_reduced: float


def _dw_log1p_inv(n: int):
    # log(1 + 1/n) = 2*atanh(1/(2n+1)), exact double-word
    den_hi, den_lo = _two_sum(2.0 * n, 1.0)
    rhi, rlo = _dd_div(1.0, 0.0, den_hi, den_lo)
    # series 2r(1 + r^2/3 + r^4/5 + ...); r <= 1/3 so ~20 terms suffice,
    # reuse the mantissa series via m = (1+r)/(1-r)? cheaper: direct Horner
    from .dw import _ATANH_COEF

    shi, slo = _dd_mul(rhi, rlo, rhi, rlo)
    phi, plo = _ATANH_COEF[-1]
    for chi, clo in reversed(_ATANH_COEF[:-1]):
        phi, plo = _dd_mul(phi, plo, shi, slo)
        phi, plo = _dd_add(phi, plo, chi, clo)
    phi, plo = _dd_mul(phi, plo, shi, slo)
    s, e = _two_sum(phi, 1.0)
    hi = s + (e + plo)
    lo = (e + plo) - (hi - s)
    return _dd_mul(hi, lo, 2.0 * rhi, 2.0 * rlo)


def forward_diffs(t: float, n: int, order: int = 4) -> DiffSet:
    """Forward differences of the step angle at n, exact to double-word.

    d1(n) = -t*log((n+1)/n); higher orders by repeated differencing of the
    double-word log increments L(m) = log(1+1/m).
    """
    if n < 1:
        raise DomainError("forward_diffs requires n >= 1")
    if not 1 <= order <= _MAX_ORDER:
        raise DomainError("order must be in 1..4")
    L = [_dw_log1p_inv(n + j) for j in range(order)]
    # k-th difference of theta = -t * (k-1)-th difference of L
    rows = [L]
    for k in range(1, order):
        prev = rows[-1]
        rows.append([_dd_add(prev[j + 1][0], prev[j + 1][1],
                             -prev[j][0], -prev[j][1])
                     for j in range(len(prev) - 1)])
    out_unred = []
    out_red = []
    for k in range(_MAX_ORDER):
        if k < order:
            hi, lo = _dd_mul_d(rows[k][0][0], rows[k][0][1], -t)
            out_unred.append(hi + lo)
            rem, _ = reduce_dw(DoubleWord(hi, lo))
            out_red.append(rem)
        else:
            out_unred.append(math.nan)
            out_red.append(math.nan)
    return DiffSet(n, *out_unred, *out_red)


def asymptotic_diffs(t: float, n: int):
    """The small-angle forms (-t/(n+1/2), t/(n+1/2)^2, -2t/n^3): cross-checks
    only, not used in any evaluation path."""
    return (-t / (n + 0.5), t / (n + 0.5) ** 2, -2.0 * t / n**3)


def dts_eval(t: float, n0: int, delta_n: int, order: int = 4) -> float:
    """Discrete Taylor series for theta(n0 + delta_n), reduced mod 2pi.

    Coefficients are the binomial-like forward-difference weights dn,
    dn(dn-1)/2, dn(dn-1)(dn-2)/6, ... applied to the reduced differences;
    the result is reduced into (-2pi, 0].
    """
    if n0 < 1:
        raise DomainError("dts_eval requires n0 >= 1")
    if abs(delta_n) > n0 / 2:
        raise DomainError("dts_eval requires |delta_n| <= n0/2")
    if not 0 <= order <= _MAX_ORDER:
        raise DomainError("order must be in 0..4")
    from .dw import reduce_angle

    th0 = reduce_angle(t, n0).theta
    if delta_n == 0 or order == 0:
        return th0
    d = forward_diffs(t, n0, order)
    dn = float(delta_n)
    coef = [dn,
            dn * (dn - 1.0) / 2.0,
            dn * (dn - 1.0) * (dn - 2.0) / 6.0,
            dn * (dn - 1.0) * (dn - 2.0) * (dn - 3.0) / 24.0]
    acc = th0
    for k, red in enumerate((d.d1_reduced, d.d2_reduced, d.d3_reduced, d.d4_reduced)):
        if k >= order:
            break
        acc += coef[k] * red
    out = reduce_linear(t, acc)
    if out > 0.0:
        out -= 6.283185307179586
    return out


def invert(t: float, kind: str, value: float) -> float:
    """Step number at which an angle condition is met (real-valued, caller
    truncates). Angles here are unreduced.

    kinds: 'theta' (n = e^{-theta/t}), 'd1' (n = 1/(e^{-d1/t}-1)),
    'd2' (solves n^2+2n = 1/(e^{d2/t}-1)), 'pendant_k' (n = sqrt(t/(2 pi k))
    for d2 = 2 pi k, value = k).
    """
    if t <= 0:
        raise DomainError("invert requires t > 0")
    if kind == "theta":
        return math.exp(-value / t)
    if kind == "d1":
        if value >= 0:
            raise DomainError("d1 must be negative")
        den = math.expm1(-value / t)
        return 1.0 / den
    if kind == "d2":
        if value <= 0:
            raise DomainError("d2 must be positive for the quadratic branch")
        rhs = 1.0 / math.expm1(value / t)
        return math.sqrt(1.0 + rhs) - 1.0
    if kind == "pendant_k":
        k = value
        if k < 1:
            raise DomainError("pendant_k requires k >= 1")
        return math.sqrt(t / (2.0 * math.pi * k))
    raise DomainError(f"unknown inversion kind {kind!r}")
