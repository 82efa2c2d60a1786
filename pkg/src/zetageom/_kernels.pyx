# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of zetageom._kernels_py: double-word logs, mod-2pi reduction
and compensated step summation in tight C loops."""

import numpy as np

cimport cython
from libc.math cimport cos, exp, floor, frexp, sin

BACKEND_NAME = "compiled"
BLOCK = 4096

cdef long long BLOCK_C = 4096

cdef double LN2_HI = 0.6931471805599453
cdef double LN2_LO = 2.3190468138462996e-17
cdef double TWO_PI_HI = 6.283185307179586
cdef double TWO_PI_MID = 2.4492935982947064e-16
cdef double TWO_PI_LO = -5.989539619436679e-33
cdef double INV_2PI = 0.15915494309189535
cdef double SQRT_HALF = 0.7071067811865476
cdef double SPLITTER = 134217729.0

cdef int NCOEF = 22
cdef double[22] C_HI = [
    0.3333333333333333, 0.2, 0.14285714285714285, 0.1111111111111111,
    0.09090909090909091, 0.07692307692307693, 0.06666666666666667,
    0.058823529411764705, 0.05263157894736842, 0.047619047619047616,
    0.043478260869565216, 0.04, 0.037037037037037035, 0.034482758620689655,
    0.03225806451612903, 0.030303030303030304, 0.02857142857142857,
    0.02702702702702703, 0.02564102564102564, 0.024390243902439025,
    0.023255813953488372, 0.022222222222222223]
cdef double[22] C_LO = [
    1.850371707708594e-17, -1.1102230246251566e-17, 7.93016446160826e-18,
    6.1679056923619804e-18, -2.523234146875356e-18, -4.270088556250602e-18,
    9.251858538542971e-19, 8.163404592832033e-19, 2.921639538487254e-18,
    2.64338815386942e-18, 1.206764157201257e-18, -8.326672684688674e-19,
    2.05596856412066e-18, 4.785444071660157e-19, 8.953411488912552e-19,
    -8.410780489584519e-19, 8.921435019309293e-19, -1.50030138462859e-18,
    8.896017825522087e-19, -8.46206573647223e-19, 3.2273925134452225e-19,
    -8.480870326997723e-19]


cdef inline void two_sum(double a, double b, double* s, double* e) noexcept nogil:
    cdef double t, bb
    t = a + b
    bb = t - a
    s[0] = t
    e[0] = (a - (t - bb)) + (b - bb)


cdef inline void quick_two_sum(double a, double b, double* s, double* e) noexcept nogil:
    cdef double t = a + b
    s[0] = t
    e[0] = b - (t - a)


cdef inline void two_prod(double a, double b, double* p, double* e) noexcept nogil:
    cdef double ca, ahi, alo, cb, bhi, blo, t
    t = a * b
    ca = SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    p[0] = t
    e[0] = ((ahi * bhi - t) + ahi * blo + alo * bhi) + alo * blo


cdef inline void dd_add(double ahi, double alo, double bhi, double blo,
                        double* rhi, double* rlo) noexcept nogil:
    cdef double s, e
    two_sum(ahi, bhi, &s, &e)
    quick_two_sum(s, e + alo + blo, rhi, rlo)


cdef inline void dd_mul(double ahi, double alo, double bhi, double blo,
                        double* rhi, double* rlo) noexcept nogil:
    cdef double p, e
    two_prod(ahi, bhi, &p, &e)
    quick_two_sum(p, e + ahi * blo + alo * bhi, rhi, rlo)


cdef inline void dw_log_one(double n, double* lhi, double* llo) noexcept nogil:
    cdef double m, num, dhi, dlo, q1, q2, q3, phi, plo, rhi, rlo, shi, slo
    cdef double s, e, ehi, elo
    cdef int ex, k
    if n == 1.0:
        lhi[0] = 0.0
        llo[0] = 0.0
        return
    m = frexp(n, &ex)
    if m < SQRT_HALF:
        m *= 2.0
        ex -= 1
    num = m - 1.0
    two_sum(m, 1.0, &dhi, &dlo)
    q1 = num / dhi
    dd_mul(dhi, dlo, q1, 0.0, &phi, &plo)
    dd_add(num, 0.0, -phi, -plo, &rhi, &rlo)
    q2 = rhi / dhi
    dd_mul(dhi, dlo, q2, 0.0, &phi, &plo)
    dd_add(rhi, rlo, -phi, -plo, &rhi, &rlo)
    q3 = rhi / dhi
    two_sum(q1, q2, &s, &e)
    quick_two_sum(s, e + q3, &rhi, &rlo)

    dd_mul(rhi, rlo, rhi, rlo, &shi, &slo)
    phi = C_HI[NCOEF - 1]
    plo = C_LO[NCOEF - 1]
    for k in range(NCOEF - 2, -1, -1):
        dd_mul(phi, plo, shi, slo, &phi, &plo)
        dd_add(phi, plo, C_HI[k], C_LO[k], &phi, &plo)
    dd_mul(phi, plo, shi, slo, &phi, &plo)
    two_sum(phi, 1.0, &s, &e)
    quick_two_sum(s, e + plo, &phi, &plo)
    dd_mul(phi, plo, 2.0 * rhi, 2.0 * rlo, &phi, &plo)

    two_prod(<double>ex, LN2_HI, &ehi, &elo)
    elo += ex * LN2_LO
    quick_two_sum(ehi, elo, &ehi, &elo)
    dd_add(phi, plo, ehi, elo, lhi, llo)


cdef inline void mod_2pi_pos(double xhi, double xlo, double* rem, double* cyc) noexcept nogil:
    cdef double c, phi, plo, rhi, rlo, s, e
    c = floor(xhi * INV_2PI + xlo * INV_2PI)
    if c < 0.0:
        c = 0.0
    two_prod(c, TWO_PI_HI, &phi, &plo)
    dd_add(xhi, xlo, -phi, -plo, &rhi, &rlo)
    two_sum(rhi, -(c * TWO_PI_MID), &s, &e)
    quick_two_sum(s, e + rlo - c * TWO_PI_LO, &rhi, &rlo)
    while rhi < 0.0:
        dd_add(rhi, rlo, TWO_PI_HI, TWO_PI_MID, &rhi, &rlo)
        c -= 1.0
    while rhi > TWO_PI_HI or (rhi == TWO_PI_HI and rlo >= TWO_PI_MID):
        dd_add(rhi, rlo, -TWO_PI_HI, -TWO_PI_MID, &rhi, &rlo)
        c += 1.0
        if rhi < 0.0:
            rhi = 0.0
            rlo = 0.0
            break
    rem[0] = rhi + rlo
    if rem[0] < 0.0:
        rem[0] = 0.0
    cyc[0] = c


def dw_log_range(n0, count):
    """Double-word ln(n) for n = n0 .. n0+count-1. Returns (hi, lo)."""
    cdef Py_ssize_t m = count
    cdef double start = <double>n0
    hi_arr = np.empty(m, dtype=np.float64)
    lo_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] hi = hi_arr
    cdef double[::1] lo = lo_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            dw_log_one(start + i, &hi[i], &lo[i])
    return hi_arr, lo_arr


def reduce_tlog(t, lnhi, lnlo):
    """(t*ln(n)) mod 2pi over an ln-array. Returns (rem in [0,2pi), cycles)."""
    cdef double tt = t
    lnhi = np.ascontiguousarray(lnhi, dtype=np.float64)
    lnlo = np.ascontiguousarray(lnlo, dtype=np.float64)
    cdef double[::1] hi = lnhi
    cdef double[::1] lo = lnlo
    cdef Py_ssize_t m = hi.shape[0]
    rem_arr = np.empty(m, dtype=np.float64)
    cyc_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] rem = rem_arr
    cdef double[::1] cyc = cyc_arr
    cdef Py_ssize_t i
    cdef double yhi, ylo
    with nogil:
        for i in range(m):
            two_prod(hi[i], tt, &yhi, &ylo)
            quick_two_sum(yhi, ylo + lo[i] * tt, &yhi, &ylo)
            mod_2pi_pos(yhi, ylo, &rem[i], &cyc[i])
    return rem_arr, cyc_arr


def reduce_ts_ln(ts, lnhi, lnlo):
    """(t*ln) mod 2pi for an array of t at a fixed double-word ln."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    cdef double[::1] tv = ts
    cdef double hi = lnhi
    cdef double lo = lnlo
    cdef Py_ssize_t m = tv.shape[0]
    rem_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] rem = rem_arr
    cdef Py_ssize_t i
    cdef double yhi, ylo, cyc
    with nogil:
        for i in range(m):
            two_prod(tv[i], hi, &yhi, &ylo)
            quick_two_sum(yhi, ylo + tv[i] * lo, &yhi, &ylo)
            mod_2pi_pos(yhi, ylo, &rem[i], &cyc)
    return rem_arr


def step_components(sigma, t, n0, lnhi, lnlo):
    """Reduced step angles in (-2pi, 0] and lengths n^-sigma."""
    rem, _ = reduce_tlog(t, lnhi, lnlo)
    theta = -rem
    amp = np.exp(-sigma * np.asarray(lnhi, dtype=np.float64))
    return theta, amp


def sum_chunk(sigma, t, n0, lnhi, lnlo):
    """Compensated sum of n^-s over a chunk starting at n0 (4096-aligned
    blocks by absolute n, Neumaier within and across blocks)."""
    cdef double sg = sigma
    cdef double tt = t
    lnhi = np.ascontiguousarray(lnhi, dtype=np.float64)
    lnlo = np.ascontiguousarray(lnlo, dtype=np.float64)
    cdef double[::1] hi = lnhi
    cdef double[::1] lo = lnlo
    cdef Py_ssize_t m = hi.shape[0]
    cdef long long start = n0
    cdef double yhi, ylo, rem, cyc, amp, re, im
    cdef double bre, bim, cre, cim      # block accumulator + compensation
    cdef double tre, tim, tcre, tcim    # across-block accumulator
    cdef double s, z
    cdef Py_ssize_t i
    cdef long long nblock
    tre = tim = tcre = tcim = 0.0
    bre = bim = cre = cim = 0.0
    nblock = (start - 1) // BLOCK_C
    with nogil:
        for i in range(m):
            if (start + i - 1) // BLOCK_C != nblock:
                # fold the finished block into the across-block accumulator
                s = tre + (bre + cre)
                z = bre + cre
                if (tre if tre >= 0 else -tre) >= (z if z >= 0 else -z):
                    tcre += (tre - s) + z
                else:
                    tcre += (z - s) + tre
                tre = s
                s = tim + (bim + cim)
                z = bim + cim
                if (tim if tim >= 0 else -tim) >= (z if z >= 0 else -z):
                    tcim += (tim - s) + z
                else:
                    tcim += (z - s) + tim
                tim = s
                bre = bim = cre = cim = 0.0
                nblock = (start + i - 1) // BLOCK_C
            two_prod(hi[i], tt, &yhi, &ylo)
            quick_two_sum(yhi, ylo + lo[i] * tt, &yhi, &ylo)
            mod_2pi_pos(yhi, ylo, &rem, &cyc)
            amp = exp(-sg * hi[i])
            re = amp * cos(rem)
            im = -amp * sin(rem)
            s = bre + re
            if (bre if bre >= 0 else -bre) >= (re if re >= 0 else -re):
                cre += (bre - s) + re
            else:
                cre += (re - s) + bre
            bre = s
            s = bim + im
            if (bim if bim >= 0 else -bim) >= (im if im >= 0 else -im):
                cim += (bim - s) + im
            else:
                cim += (im - s) + bim
            bim = s
        s = tre + (bre + cre)
        z = bre + cre
        if (tre if tre >= 0 else -tre) >= (z if z >= 0 else -z):
            tcre += (tre - s) + z
        else:
            tcre += (z - s) + tre
        tre = s
        s = tim + (bim + cim)
        z = bim + cim
        if (tim if tim >= 0 else -tim) >= (z if z >= 0 else -z):
            tcim += (tim - s) + z
        else:
            tcim += (z - s) + tim
        tim = s
    return tre + tcre, tim + tcim


def z_cos_sum(theta_big, t, lnhi, lnlo, weights):
    """sum_n w_n * cos(theta_big + t*ln(n)) with reduced angles."""
    cdef double th = theta_big
    cdef double tt = t
    lnhi = np.ascontiguousarray(lnhi, dtype=np.float64)
    lnlo = np.ascontiguousarray(lnlo, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    cdef double[::1] hi = lnhi
    cdef double[::1] lo = lnlo
    cdef double[::1] w = weights
    cdef Py_ssize_t m = hi.shape[0]
    cdef Py_ssize_t i
    cdef double yhi, ylo, rem, cyc, acc, comp, v, s
    acc = comp = 0.0
    with nogil:
        for i in range(m):
            two_prod(hi[i], tt, &yhi, &ylo)
            quick_two_sum(yhi, ylo + lo[i] * tt, &yhi, &ylo)
            mod_2pi_pos(yhi, ylo, &rem, &cyc)
            v = w[i] * cos(th + rem)
            s = acc + v
            if (acc if acc >= 0 else -acc) >= (v if v >= 0 else -v):
                comp += (acc - s) + v
            else:
                comp += (v - s) + acc
            acc = s
    return acc + comp
