# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: weighted kernel sums and point-to-polyline distances.

Must stay expression-identical to ``_fallback.py`` (same operations in the
same order) so both backends produce bit-identical results.  Compiled with
-ffp-contract=off for the same reason.
"""

import numpy as np

from libc.math cimport fabs, sqrt

backend = "compiled"


cdef inline double _keval(int kind, double u) noexcept nogil:
    cdef double t
    if fabs(u) > 1.0:
        return 0.0
    t = 1.0 - u * u
    if kind == 0:
        return 0.75 * t
    elif kind == 1:
        return 0.9375 * t * t
    return 1.09375 * t * t * t


cdef inline double _kderiv(int kind, double u) noexcept nogil:
    cdef double t
    if fabs(u) > 1.0:
        return 0.0
    t = 1.0 - u * u
    if kind == 0:
        return -1.5 * u
    elif kind == 1:
        return -3.75 * u * t
    return -6.5625 * u * t * t


def kernel_eval(kind, u):
    cdef int k = kind
    if k not in (0, 1, 2):
        raise ValueError(f"unknown kernel kind {kind}")
    u_arr = np.atleast_1d(np.asarray(u, dtype=float))
    out = np.empty(u_arr.shape[0])
    cdef double[::1] uv = u_arr
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    for i in range(uv.shape[0]):
        ov[i] = _keval(k, uv[i])
    return out if np.ndim(u) else out[0]


def kernel_deriv(kind, u):
    cdef int k = kind
    if k not in (0, 1, 2):
        raise ValueError(f"unknown kernel kind {kind}")
    u_arr = np.atleast_1d(np.asarray(u, dtype=float))
    out = np.empty(u_arr.shape[0])
    cdef double[::1] uv = u_arr
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    for i in range(uv.shape[0]):
        ov[i] = _kderiv(k, uv[i])
    return out if np.ndim(u) else out[0]


def hazard_grid(double[::1] x, double[::1] w, double b, double halfwidth,
                int kind, bint deriv, double[::1] grid):
    """Weighted kernel sum over a sorted sample on an ascending grid.

    Sliding two-pointer window; terms accumulated in ascending sample order.
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = grid.shape[0]
    out = np.empty(m)
    cdef double[::1] ov = out
    cdef Py_ssize_t j, i
    cdef Py_ssize_t lo = 0, hi = 0
    cdef double reach = b * halfwidth
    cdef double scale = b * b if deriv else b
    cdef double g, s
    with nogil:
        for j in range(m):
            g = grid[j]
            while lo < n and x[lo] < g - reach:
                lo += 1
            if hi < lo:
                hi = lo
            while hi < n and x[hi] <= g + reach:
                hi += 1
            s = 0.0
            if deriv:
                for i in range(lo, hi):
                    s += w[i] * _kderiv(kind, (g - x[i]) / b)
            else:
                for i in range(lo, hi):
                    s += w[i] * _keval(kind, (g - x[i]) / b)
            ov[j] = s / scale
    return out


cdef inline double _seg_d2(double[::1] qx, double[::1] qy, Py_ssize_t j,
                           double p, double q) noexcept nogil:
    cdef double x1 = qx[j]
    cdef double y1 = qy[j]
    cdef double ux = qx[j + 1] - x1
    cdef double uy = qy[j + 1] - y1
    cdef double L2 = ux * ux + uy * uy
    cdef double dx = p - x1
    cdef double dy = q - y1
    cdef double t = (dx * ux + dy * uy) / L2
    cdef double fx, fy
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    fx = dx - t * ux
    fy = dy - t * uy
    return fx * fx + fy * fy


def polyline_min_dists(px_in, py_in, double[::1] qx, double[::1] qy):
    """Distance from each query point to the polyline (qx ascending).

    Certified windowed sweep: starting from the segment under the query's
    abscissa, segments are examined outward on both sides until the horizontal
    gap to every remaining segment already exceeds the best distance found.
    Any excluded segment is at least that gap away, so the minimum equals the
    exhaustive scan's.
    """
    px_arr = np.atleast_1d(np.asarray(px_in, dtype=float))
    py_arr = np.atleast_1d(np.asarray(py_in, dtype=float))
    cdef double[::1] px = px_arr
    cdef double[::1] py = py_arr
    cdef Py_ssize_t npts = px.shape[0]
    cdef Py_ssize_t m = qx.shape[0]
    cdef Py_ssize_t nseg = m - 1
    out = np.empty(npts)
    cdef double[::1] ov = out
    cdef Py_ssize_t k, j0, l, r, mid, lo, hi
    cdef double p, q, best, gap, d2, dx, dy
    cdef bint moved
    if m == 1:
        for k in range(npts):
            dx = px[k] - qx[0]
            dy = py[k] - qy[0]
            ov[k] = sqrt(dx * dx + dy * dy)
        return out
    with nogil:
        for k in range(npts):
            p = px[k]
            q = py[k]
            # first segment whose right endpoint reaches p
            lo = 0
            hi = nseg
            while lo < hi:
                mid = (lo + hi) // 2
                if qx[mid + 1] < p:
                    lo = mid + 1
                else:
                    hi = mid
            j0 = lo if lo < nseg else nseg - 1
            best = _seg_d2(qx, qy, j0, p, q)
            l = j0 - 1
            r = j0 + 1
            while True:
                moved = False
                if l >= 0:
                    gap = p - qx[l + 1]
                    if gap * gap < best:
                        d2 = _seg_d2(qx, qy, l, p, q)
                        if d2 < best:
                            best = d2
                        l -= 1
                        moved = True
                    else:
                        l = -1
                if r < nseg:
                    gap = qx[r] - p
                    if gap * gap < best:
                        d2 = _seg_d2(qx, qy, r, p, q)
                        if d2 < best:
                            best = d2
                        r += 1
                        moved = True
                    else:
                        r = nseg
                if not moved:
                    break
            ov[k] = sqrt(best)
    return out
