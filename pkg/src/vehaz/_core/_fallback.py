"""Pure-numpy reference implementations of the hot kernels.

Selected at import time by ``vehaz._core`` when the compiled extension is
unavailable.  Every expression here must stay structurally identical to its
counterpart in ``_speedups.pyx`` (same operations, same order, summation in
ascending index order) so that both backends produce bit-identical results.
"""

import numpy as np

backend = "python"

# kernel kind ids: 0 = epanechnikov, 1 = biweight, 2 = triweight


def kernel_eval(kind, u):
    ua = np.asarray(u, dtype=float)
    t = 1.0 - ua * ua
    if kind == 0:
        k = 0.75 * t
    elif kind == 1:
        k = 0.9375 * t * t
    elif kind == 2:
        k = 1.09375 * t * t * t
    else:
        raise ValueError(f"unknown kernel kind {kind}")
    res = np.where(np.abs(ua) <= 1.0, k, 0.0)
    return res if np.ndim(u) else float(res)


def kernel_deriv(kind, u):
    ua = np.asarray(u, dtype=float)
    t = 1.0 - ua * ua
    if kind == 0:
        k = -1.5 * ua
    elif kind == 1:
        k = -3.75 * ua * t
    elif kind == 2:
        k = -6.5625 * ua * t * t
    else:
        raise ValueError(f"unknown kernel kind {kind}")
    res = np.where(np.abs(ua) <= 1.0, k, 0.0)
    return res if np.ndim(u) else float(res)


def hazard_grid(x, w, b, halfwidth, kind, deriv, grid):
    """Weighted kernel sum over a sorted sample, evaluated on an ascending grid.

    Only the window [g - b*halfwidth, g + b*halfwidth] of the sorted ``x``
    contributes at a grid point g; terms are accumulated in ascending sample
    order (cumsum), matching the compiled loop exactly.
    """
    reach = b * halfwidth
    lo = np.searchsorted(x, grid - reach, side="left")
    hi = np.searchsorted(x, grid + reach, side="right")
    f = kernel_deriv if deriv else kernel_eval
    scale = b * b if deriv else b
    out = np.empty(grid.shape[0])
    for j in range(grid.shape[0]):
        l, h = lo[j], hi[j]
        if l >= h:
            out[j] = 0.0
            continue
        u = (grid[j] - x[l:h]) / b
        terms = w[l:h] * f(kind, u)
        out[j] = np.cumsum(terms)[-1] / scale
    return out


def polyline_min_dists(px, py, qx, qy):
    """Euclidean distance from each point (px[k], py[k]) to the polyline (qx, qy).

    Exhaustive per-segment scan, vectorized; queries are chunked to bound the
    size of the (points x segments) temporaries.
    """
    px = np.atleast_1d(np.asarray(px, dtype=float))
    py = np.atleast_1d(np.asarray(py, dtype=float))
    if qx.shape[0] == 1:
        dx = px - qx[0]
        dy = py - qy[0]
        return np.sqrt(dx * dx + dy * dy)
    x1 = qx[:-1]
    y1 = qy[:-1]
    ux = qx[1:] - x1
    uy = qy[1:] - y1
    L2 = ux * ux + uy * uy
    out = np.empty(px.shape[0])
    step = max(1, 2_000_000 // L2.shape[0])
    for s in range(0, px.shape[0], step):
        dx = px[s:s + step, None] - x1[None, :]
        dy = py[s:s + step, None] - y1[None, :]
        t = (dx * ux + dy * uy) / L2
        np.clip(t, 0.0, 1.0, out=t)
        fx = dx - t * ux
        fy = dy - t * uy
        d2 = fx * fx + fy * fy
        out[s:s + step] = np.sqrt(d2.min(axis=1))
    return out
