"""Scalar-loop forms of the hot kernels.

These are compiled with numba @njit by `_numba_impl` (the default path).
`_numpy_impl` provides vectorized equivalents; both must produce bit-identical
outputs, which the test suite enforces.  Keep the code numba-compatible:
numpy basics, no Python objects.

Edge enumeration works in grid-index space: the outward-rounded (and
delta-inflated) image box is intersected with the grid lines by binary search,
and candidate cells are filtered through the sorted active-id array, so only
active targets are ever touched.  Emission order is deterministic: sources
ascending, then target grid cells in row-major order, then active positions
ascending.
"""

import numpy as np


def base_edges(act, nside, xs, ys, re_lo, re_hi, im_lo, im_hi):
    """Edges of the base transition graph.

    act: sorted flat ids (row*nside + col) of active z-cells; image bounds are
    per active cell, already inflated.  Returns (src, dst) as positions into act.
    """
    n_src = act.shape[0]
    counts = np.zeros(n_src + 1, dtype=np.int64)
    for s in range(n_src):
        j0 = np.searchsorted(xs, re_lo[s], side="left") - 1
        if j0 < 0:
            j0 = 0
        j1 = np.searchsorted(xs, re_hi[s], side="right") - 1
        if j1 > nside - 1:
            j1 = nside - 1
        i0 = np.searchsorted(ys, im_lo[s], side="left") - 1
        if i0 < 0:
            i0 = 0
        i1 = np.searchsorted(ys, im_hi[s], side="right") - 1
        if i1 > nside - 1:
            i1 = nside - 1
        total = 0
        if j0 <= j1 and i0 <= i1:
            for i in range(i0, i1 + 1):
                lo = np.searchsorted(act, i * nside + j0, side="left")
                hi = np.searchsorted(act, i * nside + j1, side="right")
                total += hi - lo
        counts[s + 1] = total
    for s in range(n_src):
        counts[s + 1] += counts[s]
    n_edges = counts[n_src]
    src = np.empty(n_edges, dtype=np.int64)
    dst = np.empty(n_edges, dtype=np.int64)
    for s in range(n_src):
        pos = counts[s]
        if pos == counts[s + 1]:
            continue
        j0 = np.searchsorted(xs, re_lo[s], side="left") - 1
        if j0 < 0:
            j0 = 0
        j1 = np.searchsorted(xs, re_hi[s], side="right") - 1
        if j1 > nside - 1:
            j1 = nside - 1
        i0 = np.searchsorted(ys, im_lo[s], side="left") - 1
        if i0 < 0:
            i0 = 0
        i1 = np.searchsorted(ys, im_hi[s], side="right") - 1
        if i1 > nside - 1:
            i1 = nside - 1
        for i in range(i0, i1 + 1):
            lo = np.searchsorted(act, i * nside + j0, side="left")
            hi = np.searchsorted(act, i * nside + j1, side="right")
            for t in range(lo, hi):
                src[pos] = s
                dst[pos] = t
                pos += 1
    return src, dst


def fiber_edges(
    act, nz_side, nw_side,
    xs_z, ys_z, xs_w, ys_w,
    p_re_lo, p_re_hi, p_im_lo, p_im_hi,
    q_re_lo, q_re_hi, q_im_lo, q_im_hi,
):
    """Edges of the fibered transition graph.

    act: sorted composite ids zflat * nw_side^2 + wflat.  P bounds (base image)
    and Q bounds (fiber image) are per active product box, already inflated.
    """
    n_src = act.shape[0]
    nw2 = np.int64(nw_side) * np.int64(nw_side)
    counts = np.zeros(n_src + 1, dtype=np.int64)
    for s in range(n_src):
        jz0 = np.searchsorted(xs_z, p_re_lo[s], side="left") - 1
        if jz0 < 0:
            jz0 = 0
        jz1 = np.searchsorted(xs_z, p_re_hi[s], side="right") - 1
        if jz1 > nz_side - 1:
            jz1 = nz_side - 1
        iz0 = np.searchsorted(ys_z, p_im_lo[s], side="left") - 1
        if iz0 < 0:
            iz0 = 0
        iz1 = np.searchsorted(ys_z, p_im_hi[s], side="right") - 1
        if iz1 > nz_side - 1:
            iz1 = nz_side - 1
        jw0 = np.searchsorted(xs_w, q_re_lo[s], side="left") - 1
        if jw0 < 0:
            jw0 = 0
        jw1 = np.searchsorted(xs_w, q_re_hi[s], side="right") - 1
        if jw1 > nw_side - 1:
            jw1 = nw_side - 1
        iw0 = np.searchsorted(ys_w, q_im_lo[s], side="left") - 1
        if iw0 < 0:
            iw0 = 0
        iw1 = np.searchsorted(ys_w, q_im_hi[s], side="right") - 1
        if iw1 > nw_side - 1:
            iw1 = nw_side - 1
        total = 0
        if jz0 <= jz1 and iz0 <= iz1 and jw0 <= jw1 and iw0 <= iw1:
            for iz in range(iz0, iz1 + 1):
                for jz in range(jz0, jz1 + 1):
                    zbase = (np.int64(iz) * nz_side + jz) * nw2
                    for iw in range(iw0, iw1 + 1):
                        row = zbase + np.int64(iw) * nw_side
                        lo = np.searchsorted(act, row + jw0, side="left")
                        hi = np.searchsorted(act, row + jw1, side="right")
                        total += hi - lo
        counts[s + 1] = total
    for s in range(n_src):
        counts[s + 1] += counts[s]
    n_edges = counts[n_src]
    src = np.empty(n_edges, dtype=np.int64)
    dst = np.empty(n_edges, dtype=np.int64)
    for s in range(n_src):
        pos = counts[s]
        if pos == counts[s + 1]:
            continue
        jz0 = np.searchsorted(xs_z, p_re_lo[s], side="left") - 1
        if jz0 < 0:
            jz0 = 0
        jz1 = np.searchsorted(xs_z, p_re_hi[s], side="right") - 1
        if jz1 > nz_side - 1:
            jz1 = nz_side - 1
        iz0 = np.searchsorted(ys_z, p_im_lo[s], side="left") - 1
        if iz0 < 0:
            iz0 = 0
        iz1 = np.searchsorted(ys_z, p_im_hi[s], side="right") - 1
        if iz1 > nz_side - 1:
            iz1 = nz_side - 1
        jw0 = np.searchsorted(xs_w, q_re_lo[s], side="left") - 1
        if jw0 < 0:
            jw0 = 0
        jw1 = np.searchsorted(xs_w, q_re_hi[s], side="right") - 1
        if jw1 > nw_side - 1:
            jw1 = nw_side - 1
        iw0 = np.searchsorted(ys_w, q_im_lo[s], side="left") - 1
        if iw0 < 0:
            iw0 = 0
        iw1 = np.searchsorted(ys_w, q_im_hi[s], side="right") - 1
        if iw1 > nw_side - 1:
            iw1 = nw_side - 1
        for iz in range(iz0, iz1 + 1):
            for jz in range(jz0, jz1 + 1):
                zbase = (np.int64(iz) * nz_side + jz) * nw2
                for iw in range(iw0, iw1 + 1):
                    row = zbase + np.int64(iw) * nw_side
                    lo = np.searchsorted(act, row + jw0, side="left")
                    hi = np.searchsorted(act, row + jw1, side="right")
                    for t in range(lo, hi):
                        src[pos] = s
                        dst[pos] = t
                        pos += 1
    return src, dst


def bellman_ford_passes(x, pred, src, dst, w, max_passes):
    """Jacobi longest-path relaxation x_j = max(x_j, x_k + w_e), resumable.

    Mutates x and pred in place.  pred[j] is the first edge source (in edge
    order) that achieves j's current potential, refreshed whenever j improves.
    Returns (converged, passes_done, first_improved_vertex_of_last_pass).
    """
    n = x.shape[0]
    ne = src.shape[0]
    first_improved = np.int64(-1)
    for p in range(max_passes):
        new_x = x.copy()
        changed = False
        for e in range(ne):
            cand = x[src[e]] + w[e]
            d = dst[e]
            if cand > new_x[d]:
                new_x[d] = cand
                changed = True
        if not changed:
            return True, p + 1, np.int64(-1)
        first_improved = np.int64(-1)
        for i in range(n):
            if new_x[i] > x[i]:
                pred[i] = -2
                if first_improved < 0:
                    first_improved = np.int64(i)
        for e in range(ne):
            d = dst[e]
            if pred[d] == -2 and x[src[e]] + w[e] == new_x[d]:
                pred[d] = src[e]
        for i in range(n):
            x[i] = new_x[i]
    return False, max_passes, first_improved


def karp_table(n_v, src, dst, w, source):
    """Karp minimum-cycle-mean DP table: d[k, v] = min weight of a k-edge walk."""
    ne = src.shape[0]
    d = np.full((n_v + 1, n_v), np.inf)
    d[0, source] = 0.0
    for k in range(n_v):
        for e in range(ne):
            c = d[k, src[e]] + w[e]
            if c < d[k + 1, dst[e]]:
                d[k + 1, dst[e]] = c
    return d
