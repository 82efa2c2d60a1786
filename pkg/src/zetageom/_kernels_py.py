"""NumPy fallback for the hot kernels.

Vectorised double-word log / mod-2pi reduction and the compensated step
summation. Mirrors zetageom._kernels (the Cython extension) function for
function; zetageom.kernels picks whichever is available at import time.
"""

from __future__ import annotations

import numpy as np

from .dw import (
    _ATANH_COEF,
    INV_2PI,
    LN2_HI,
    LN2_LO,
    SQRT_HALF,
    TWO_PI_HI,
    TWO_PI_LO,
    TWO_PI_MID,
)

BACKEND_NAME = "python"
BLOCK = 4096

_SPLITTER = 134217729.0


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(s, e):
    hi = s + e
    return hi, e - (hi - s)


def _two_prod(a, b):
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
    return _quick_two_sum(s, e + alo + blo)


def _dd_mul(ahi, alo, bhi, blo):
    p, e = _two_prod(ahi, bhi)
    return _quick_two_sum(p, e + ahi * blo + alo * bhi)


def dw_log_range(n0: int, count: int):
    """Double-word ln(n) for n = n0 .. n0+count-1. Returns (hi, lo)."""
    n = np.arange(n0, n0 + count, dtype=np.float64)
    m, e = np.frexp(n)
    small = m < SQRT_HALF
    m = np.where(small, 2.0 * m, m)
    e = (e - small).astype(np.float64)

    num = m - 1.0  # exact: m in [sqrt(1/2), sqrt(2)) (Sterbenz)
    dhi, dlo = _two_sum(m, 1.0)
    # r = num / (m + 1) by two refinement steps
    q1 = num / dhi
    phi, plo = _dd_mul(dhi, dlo, q1, np.zeros_like(q1))
    rhi, rlo = _dd_add(num, np.zeros_like(num), -phi, -plo)
    q2 = rhi / dhi
    phi, plo = _dd_mul(dhi, dlo, q2, np.zeros_like(q2))
    rhi, rlo = _dd_add(rhi, rlo, -phi, -plo)
    q3 = rhi / dhi
    rhi, rlo = _two_sum(q1, q2)
    rhi, rlo = _quick_two_sum(rhi, rlo + q3)

    shi, slo = _dd_mul(rhi, rlo, rhi, rlo)
    phi = np.full_like(shi, _ATANH_COEF[-1][0])
    plo = np.full_like(shi, _ATANH_COEF[-1][1])
    for chi, clo in reversed(_ATANH_COEF[:-1]):
        phi, plo = _dd_mul(phi, plo, shi, slo)
        phi, plo = _dd_add(phi, plo, np.full_like(phi, chi), np.full_like(phi, clo))
    phi, plo = _dd_mul(phi, plo, shi, slo)
    s1, e1 = _two_sum(phi, 1.0)
    phi, plo = _quick_two_sum(s1, e1 + plo)
    lhi, llo = _dd_mul(phi, plo, 2.0 * rhi, 2.0 * rlo)

    ehi, elo = _two_prod(e, LN2_HI)
    elo = elo + e * LN2_LO
    ehi, elo = _quick_two_sum(ehi, elo)
    hi, lo = _dd_add(lhi, llo, ehi, elo)
    if n0 == 1:
        hi[0] = 0.0
        lo[0] = 0.0
    return hi, lo


def _mod_2pi_pos(xhi, xlo):
    # floor estimate within 1 of the true count: fix-up loops run <= 2 passes
    c = np.floor(xhi * INV_2PI + xlo * INV_2PI)
    c = np.maximum(c, 0.0)
    phi, plo = _two_prod(c, TWO_PI_HI)
    rhi, rlo = _dd_add(xhi, xlo, -phi, -plo)
    s, e = _two_sum(rhi, -(c * TWO_PI_MID))
    rhi, rlo = _quick_two_sum(s, e + rlo - c * TWO_PI_LO)
    neg = rhi < 0.0
    while np.any(neg):
        nh, nl = _dd_add(rhi, rlo, TWO_PI_HI, TWO_PI_MID)
        rhi = np.where(neg, nh, rhi)
        rlo = np.where(neg, nl, rlo)
        c = c - neg
        neg = rhi < 0.0
    over = (rhi > TWO_PI_HI) | ((rhi == TWO_PI_HI) & (rlo >= TWO_PI_MID))
    while np.any(over):
        nh, nl = _dd_add(rhi, rlo, -TWO_PI_HI, -TWO_PI_MID)
        rhi = np.where(over, nh, rhi)
        rlo = np.where(over, nl, rlo)
        c = c + over
        crossed = over & (rhi < 0.0)  # overshot a 2pi multiple by < 1e-30
        rhi = np.where(crossed, 0.0, rhi)
        rlo = np.where(crossed, 0.0, rlo)
        over = (rhi > TWO_PI_HI) | ((rhi == TWO_PI_HI) & (rlo >= TWO_PI_MID))
    return np.maximum(rhi + rlo, 0.0), c


def reduce_tlog(t: float, lnhi, lnlo):
    """(t*ln(n)) mod 2pi over an ln-array. Returns (rem in [0,2pi), cycles)."""
    yhi, ylo = _two_prod(lnhi, t)
    ylo = ylo + lnlo * t
    yhi, ylo = _quick_two_sum(yhi, ylo)
    return _mod_2pi_pos(yhi, ylo)


def reduce_ts_ln(ts, lnhi: float, lnlo: float):
    """(t*ln) mod 2pi for an array of t at a fixed double-word ln."""
    yhi, ylo = _two_prod(np.asarray(ts, dtype=np.float64), lnhi)
    ylo = ylo + np.asarray(ts, dtype=np.float64) * lnlo
    yhi, ylo = _quick_two_sum(yhi, ylo)
    rem, _ = _mod_2pi_pos(yhi, ylo)
    return rem


def step_components(sigma: float, t: float, n0: int, lnhi, lnlo):
    """Reduced step angles in (-2pi, 0] and lengths n^-sigma for n0, n0+1, ..."""
    rem, _ = reduce_tlog(t, lnhi, lnlo)
    theta = -rem
    amp = np.exp(-sigma * lnhi)
    return theta, amp


def sum_chunk(sigma: float, t: float, n0: int, lnhi, lnlo):
    """Compensated sum of n^-s over a chunk starting at n0.

    Terms are grouped into 4096-wide blocks aligned to absolute n (block of n
    is (n-1)//4096) and block sums are combined with Neumaier compensation,
    so any chunking that respects block boundaries reproduces the result.
    """
    rem, _ = reduce_tlog(t, lnhi, lnlo)
    amp = np.exp(-sigma * lnhi)
    re = amp * np.cos(rem)
    im = -amp * np.sin(rem)

    count = len(re)
    lead = min(count, (-(n0 - 1)) % BLOCK)
    sums_re, sums_im = [], []
    if lead:
        sums_re.append(np.sum(re[:lead]))
        sums_im.append(np.sum(im[:lead]))
    body = (count - lead) // BLOCK * BLOCK
    if body:
        sums_re.extend(np.sum(re[lead:lead + body].reshape(-1, BLOCK), axis=1))
        sums_im.extend(np.sum(im[lead:lead + body].reshape(-1, BLOCK), axis=1))
    if lead + body < count:
        sums_re.append(np.sum(re[lead + body:]))
        sums_im.append(np.sum(im[lead + body:]))
    return _neumaier(sums_re), _neumaier(sums_im)


def _neumaier(values):
    total = 0.0
    comp = 0.0
    for v in values:
        v = float(v)
        s = total + v
        if abs(total) >= abs(v):
            comp += (total - s) + v
        else:
            comp += (v - s) + total
        total = s
    return total + comp


def z_cos_sum(theta_big: float, t: float, lnhi, lnlo, weights):
    """sum_n w_n * cos(theta_big + t*ln(n)) with reduced angles."""
    rem, _ = reduce_tlog(t, lnhi, lnlo)
    return float(np.sum(weights * np.cos(theta_big + rem)))
