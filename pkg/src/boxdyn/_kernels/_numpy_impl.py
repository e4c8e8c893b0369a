"""Pure-numpy fallbacks for the hot kernels.

Vectorized counterparts of `_loops`; selected by BOXDYN_DISABLE_NUMBA=1 or when
numba is unavailable.  Outputs are bit-identical to the numba path: emission
order and float operations match (max/min are exact, so Jacobi accumulation
order does not matter).
"""

import numpy as np

# Sources are processed in chunks to bound the size of the intermediate
# candidate-expansion arrays.
_CHUNK = 1 << 17


def _multi_arange(starts, counts):
    """Concatenate arange(s, s+c) for each (s, c); empty counts allowed."""
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    ends = np.cumsum(counts)
    offsets = np.repeat(ends - counts, counts)
    return np.arange(total, dtype=np.int64) - offsets + np.repeat(starts, counts)


def _col_ranges(lines, lo_vals, hi_vals, n_cells):
    c0 = np.searchsorted(lines, lo_vals, side="left").astype(np.int64) - 1
    np.maximum(c0, 0, out=c0)
    c1 = np.searchsorted(lines, hi_vals, side="right").astype(np.int64) - 1
    np.minimum(c1, n_cells - 1, out=c1)
    return c0, c1


def base_edges(act, nside, xs, ys, re_lo, re_hi, im_lo, im_hi):
    n_src = act.shape[0]
    parts_src = []
    parts_dst = []
    for lo_s in range(0, n_src, _CHUNK):
        hi_s = min(lo_s + _CHUNK, n_src)
        sl = slice(lo_s, hi_s)
        j0, j1 = _col_ranges(xs, re_lo[sl], re_hi[sl], nside)
        i0, i1 = _col_ranges(ys, im_lo[sl], im_hi[sl], nside)
        nrows = i1 - i0 + 1
        valid = (j0 <= j1) & (nrows > 0)
        nrows = np.where(valid, nrows, 0)
        srcu = np.repeat(np.arange(hi_s - lo_s, dtype=np.int64), nrows)
        if srcu.size == 0:
            continue
        rows = i0[srcu] + _local_index(nrows)
        row_base = rows * nside
        lo = np.searchsorted(act, row_base + j0[srcu], side="left").astype(np.int64)
        hi = np.searchsorted(act, row_base + j1[srcu], side="right").astype(np.int64)
        cnt = hi - lo
        parts_src.append(np.repeat(srcu + lo_s, cnt))
        parts_dst.append(_multi_arange(lo, cnt))
    if not parts_src:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(parts_src), np.concatenate(parts_dst)


def _local_index(counts):
    """0..c-1 per group, concatenated."""
    return _multi_arange(np.zeros(counts.shape[0], dtype=np.int64), counts)


def fiber_edges(
    act, nz_side, nw_side,
    xs_z, ys_z, xs_w, ys_w,
    p_re_lo, p_re_hi, p_im_lo, p_im_hi,
    q_re_lo, q_re_hi, q_im_lo, q_im_hi,
):
    n_src = act.shape[0]
    nw2 = np.int64(nw_side) * np.int64(nw_side)
    parts_src = []
    parts_dst = []
    for lo_s in range(0, n_src, _CHUNK):
        hi_s = min(lo_s + _CHUNK, n_src)
        sl = slice(lo_s, hi_s)
        jz0, jz1 = _col_ranges(xs_z, p_re_lo[sl], p_re_hi[sl], nz_side)
        iz0, iz1 = _col_ranges(ys_z, p_im_lo[sl], p_im_hi[sl], nz_side)
        jw0, jw1 = _col_ranges(xs_w, q_re_lo[sl], q_re_hi[sl], nw_side)
        iw0, iw1 = _col_ranges(ys_w, q_im_lo[sl], q_im_hi[sl], nw_side)
        nzc = jz1 - jz0 + 1
        nzr = iz1 - iz0 + 1
        nwr = iw1 - iw0 + 1
        valid = (nzc > 0) & (nzr > 0) & (nwr > 0) & (jw0 <= jw1)
        n_units = np.where(valid, nzr * nzc * nwr, 0)
        srcu = np.repeat(np.arange(hi_s - lo_s, dtype=np.int64), n_units)
        if srcu.size == 0:
            continue
        u = _local_index(n_units)
        nwr_u = nwr[srcu]
        nzc_u = nzc[srcu]
        zidx = u // nwr_u
        iw = iw0[srcu] + u % nwr_u
        iz = iz0[srcu] + zidx // nzc_u
        jz = jz0[srcu] + zidx % nzc_u
        row = (iz * nz_side + jz) * nw2 + iw * nw_side
        lo = np.searchsorted(act, row + jw0[srcu], side="left").astype(np.int64)
        hi = np.searchsorted(act, row + jw1[srcu], side="right").astype(np.int64)
        cnt = hi - lo
        parts_src.append(np.repeat(srcu + lo_s, cnt))
        parts_dst.append(_multi_arange(lo, cnt))
    if not parts_src:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(parts_src), np.concatenate(parts_dst)


def bellman_ford_passes(x, pred, src, dst, w, max_passes):
    n = x.shape[0]
    ne = src.shape[0]
    first_improved = np.int64(-1)
    eind = np.arange(ne, dtype=np.int64)
    for p in range(max_passes):
        cand = x[src] + w
        new_x = x.copy()
        np.maximum.at(new_x, dst, cand)
        improved = new_x > x
        if not improved.any():
            return True, p + 1, np.int64(-1)
        ach = improved[dst] & (cand == new_x[dst])
        eidx = np.full(n, ne, dtype=np.int64)
        np.minimum.at(eidx, dst[ach], eind[ach])
        vsel = eidx < ne
        pred[vsel] = src[eidx[vsel]]
        first_improved = np.int64(np.argmax(improved))
        x[:] = new_x
    return False, max_passes, first_improved


def karp_table(n_v, src, dst, w, source):
    d = np.full((n_v + 1, n_v), np.inf)
    d[0, source] = 0.0
    for k in range(n_v):
        cand = d[k, src] + w
        row = np.full(n_v, np.inf)
        np.minimum.at(row, dst, cand)
        d[k + 1] = row
    return d
