# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirror of ``_purepy`` (same names, same results)."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, acos, cos, fabs, INFINITY, NAN, M_PI

cnp.import_array()

cdef double TWO_PI_3 = 2.0 * M_PI / 3.0


cdef inline void _diagonal(double delta, double epsilon, double q,
                           double *a, double *b, double *c) noexcept nogil:
    cdef double up = q + 2.0
    cdef double dn = q - 2.0
    a[0] = up * up - delta
    b[0] = q * q - epsilon
    c[0] = dn * dn + delta


cdef inline double _lowest(double omega, double delta, double epsilon, double q) noexcept nogil:
    cdef double a, b, c, o, oo, m, da, db, dc, p2, p, det, r, phi, lam
    cdef double xa, xb, xc, f, df, step
    _diagonal(delta, epsilon, q, &a, &b, &c)
    o = 0.5 * omega
    oo = o * o
    m = ((a + c) + b) / 3.0
    da = a - m
    db = b - m
    dc = c - m
    p2 = (da * da + dc * dc) + db * db + 4.0 * oo
    if p2 == 0.0:
        return m
    p = sqrt(p2 / 6.0)
    det = db * (da * dc) - oo * (da + dc)
    r = det / (2.0 * p * p * p)
    if r > 1.0:
        r = 1.0
    elif r < -1.0:
        r = -1.0
    phi = acos(r) / 3.0
    lam = m + 2.0 * p * cos(phi + TWO_PI_3)
    xa = a - lam
    xb = b - lam
    xc = c - lam
    f = xb * (xa * xc) - oo * (xa + xc)
    df = 2.0 * oo - (xb * (xa + xc) + xa * xc)
    if df != 0.0:
        step = f / df
        if fabs(step) <= 1e-6 * (1.0 + p):
            lam -= step
    return lam


def lowest_energy(double omega, double delta, double epsilon, double q):
    return _lowest(omega, delta, epsilon, q)


def lowest_energies(double omega, double delta, double epsilon, qs):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q = np.ascontiguousarray(qs, dtype=np.float64).ravel()
    cdef Py_ssize_t n = q.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            out[i] = _lowest(omega, delta, epsilon, q[i])
    return out.reshape(np.shape(qs))


cdef inline double _newton_from(double a, double b, double c, double oo, double x) noexcept nogil:
    cdef double xa, xb, xc, f, df, step
    cdef int it
    for it in range(400):
        xa = a - x
        xb = b - x
        xc = c - x
        f = xb * (xa * xc) - oo * (xa + xc)
        df = 2.0 * oo - (xb * (xa + xc) + xa * xc)
        if not (df < 0.0):
            break
        step = -f / df
        if not (step > 0.0):
            break
        x += step
        # next correction ~ step^2 * f''/(2 f'); stop once it is below rounding
        if step * step * fabs(xa + xb + xc) <= -df * 4e-16 * (fabs(x) + 1.0):
            break
    return x


def dense_scan_min(double omega, double delta, double epsilon, double step, double q_max=3.0):
    """Exhaustive scan of the lowest band on q = k*step, |q| <= q_max.

    Each eigenvalue is found by monotone Newton iteration on the
    characteristic polynomial, started from a guaranteed lower bound: the
    previous grid value minus a Lipschitz bound on the band slope, or the
    Gershgorin bound, whichever is larger.
    """
    cdef long kmax = <long>(q_max / step + 0.5)
    cdef long k
    cdef double o = 0.5 * omega
    cdef double oo = o * o
    cdef double ao = fabs(o)
    cdef double a, b, c, q, x, g, e, prev = NAN, lip
    cdef double q_neg = NAN, e_neg = INFINITY, q_pos = NAN, e_pos = INFINITY
    with nogil:
        for k in range(-kmax, kmax + 1):
            q = k * step
            _diagonal(delta, epsilon, q, &a, &b, &c)
            g = a - ao
            if c - ao < g:
                g = c - ao
            if b - 2.0 * ao < g:
                g = b - 2.0 * ao
            x = g
            if k > -kmax:
                lip = 2.0 * (fabs(q) + 2.0 + step) * step
                e = prev - lip - 1e-12 * (1.0 + fabs(prev))
                if e > x:
                    x = e
            e = _newton_from(a, b, c, oo, x)
            prev = e
            if k < 0:
                if e < e_neg:
                    e_neg = e
                    q_neg = q
            else:
                if e < e_pos:
                    e_pos = e
                    q_pos = q
    return q_neg, e_neg, q_pos, e_pos
