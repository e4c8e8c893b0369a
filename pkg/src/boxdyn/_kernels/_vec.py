"""Vectorized directed-rounding primitives and interval map images.

NumPy twins of the scalar operations in `boxdyn.rigor`, bit-identical to them
(the test suite checks agreement on random samples).  Everything here is plain
elementwise ufunc work and is shared by the numba and the numpy kernel paths.
"""

from __future__ import annotations

import numpy as np

_INF = np.inf
_MAX = np.finfo(np.float64).max
_SPLITTER = 134217729.0
_PROD_BIG = 2.0 ** 995
_PROD_TINY = 2.0 ** -1000


def _two_sum(a, b):
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def add_down(a, b):
    with np.errstate(invalid="ignore"):
        s, e = _two_sum(a, b)
        out = np.where(e < 0.0, np.nextafter(s, -_INF), s)
        out = np.where(s == _INF, _MAX, out)
        out = np.where(s == -_INF, -_INF, out)
        return np.where(np.isnan(s), -_INF, out)


def add_up(a, b):
    with np.errstate(invalid="ignore"):
        s, e = _two_sum(a, b)
        out = np.where(e > 0.0, np.nextafter(s, _INF), s)
        out = np.where(s == -_INF, -_MAX, out)
        out = np.where(s == _INF, _INF, out)
        return np.where(np.isnan(s), _INF, out)


def sub_down(a, b):
    return add_down(a, np.negative(b))


def sub_up(a, b):
    return add_up(a, np.negative(b))


def _mul_guard(a, b, p):
    return (
        (np.abs(a) > _PROD_BIG)
        | (np.abs(b) > _PROD_BIG)
        | ((0.0 < np.abs(p)) & (np.abs(p) < _PROD_TINY))
    )


def mul_down(a, b):
    with np.errstate(invalid="ignore", over="ignore", under="ignore"):
        p, e = _two_prod(a, b)
        out = np.where(e < 0.0, np.nextafter(p, -_INF), p)
        out = np.where(_mul_guard(a, b, p), np.nextafter(p, -_INF), out)
        out = np.where(p == _INF, _MAX, out)
        out = np.where(p == -_INF, -_INF, out)
        return np.where(np.isnan(p), -_INF, out)


def mul_up(a, b):
    with np.errstate(invalid="ignore", over="ignore", under="ignore"):
        p, e = _two_prod(a, b)
        out = np.where(e > 0.0, np.nextafter(p, _INF), p)
        out = np.where(_mul_guard(a, b, p), np.nextafter(p, _INF), out)
        out = np.where(p == -_INF, -_MAX, out)
        out = np.where(p == _INF, _INF, out)
        return np.where(np.isnan(p), _INF, out)


def _sqrt_sign(r, s):
    """Sign of r*r - s, exact; r = float sqrt of s, both finite and moderate."""
    p, e = _two_prod(r, r)
    d = p - s
    t, te = _two_sum(d, e)
    pos = (t > 0.0) | ((t == 0.0) & (te > 0.0))
    neg = (t < 0.0) | ((t == 0.0) & (te < 0.0))
    return pos, neg


def sqrt_down(s):
    with np.errstate(invalid="ignore"):
        sc = np.maximum(s, 0.0)
        r = np.sqrt(sc)
        pos, _ = _sqrt_sign(np.where(np.isfinite(r), r, 0.0), sc)
        out = np.where(pos, np.nextafter(r, -_INF), r)
        out = np.where(np.abs(r) > _PROD_BIG, np.nextafter(r, -_INF), out)
        out = np.where(sc == _INF, _MAX, out)
        return np.where(s <= 0.0, 0.0, out)


def sqrt_up(s):
    with np.errstate(invalid="ignore"):
        sc = np.maximum(s, 0.0)
        r = np.sqrt(sc)
        _, neg = _sqrt_sign(np.where(np.isfinite(r), r, 0.0), sc)
        out = np.where(neg, np.nextafter(r, _INF), r)
        out = np.where(np.abs(r) > _PROD_BIG, np.nextafter(r, _INF), out)
        out = np.where(sc == _INF, _INF, out)
        return np.where(s <= 0.0, 0.0, out)


def square(lo, hi):
    """Interval square: enclosure of {x*x} per elementwise interval [lo, hi]."""
    neg = hi <= 0.0
    pos = lo >= 0.0
    out_lo = np.where(pos, mul_down(lo, lo), np.where(neg, mul_down(hi, hi), 0.0))
    out_hi = np.where(
        pos,
        mul_up(hi, hi),
        np.where(neg, mul_up(lo, lo), np.maximum(mul_up(lo, lo), mul_up(hi, hi))),
    )
    return out_lo, out_hi


def imul(a_lo, a_hi, b_lo, b_hi):
    """General interval multiply, elementwise."""
    p1d = mul_down(a_lo, b_lo)
    p2d = mul_down(a_lo, b_hi)
    p3d = mul_down(a_hi, b_lo)
    p4d = mul_down(a_hi, b_hi)
    p1u = mul_up(a_lo, b_lo)
    p2u = mul_up(a_lo, b_hi)
    p3u = mul_up(a_hi, b_lo)
    p4u = mul_up(a_hi, b_hi)
    lo = np.minimum(np.minimum(p1d, p2d), np.minimum(p3d, p4d))
    hi = np.maximum(np.maximum(p1u, p2u), np.maximum(p3u, p4u))
    return lo, hi


def iscale(lo, hi, k: float):
    """Interval times an exact scalar float."""
    if k >= 0.0:
        return mul_down(lo, k), mul_up(hi, k)
    return mul_down(hi, k), mul_up(lo, k)


def iadd_const(lo, hi, k: float):
    return add_down(lo, k), add_up(hi, k)


def abs_lo_hi(re_lo, re_hi, im_lo, im_hi):
    """Modulus bounds of a complex box, elementwise; matches rigor.abs_bounds."""
    ra_lo = np.maximum(np.maximum(re_lo, -re_hi), 0.0)
    ra_hi = np.maximum(-re_lo, re_hi)
    ia_lo = np.maximum(np.maximum(im_lo, -im_hi), 0.0)
    ia_hi = np.maximum(-im_lo, im_hi)
    gen_hi = sqrt_up(add_up(mul_up(ra_hi, ra_hi), mul_up(ia_hi, ia_hi)))
    gen_lo = sqrt_down(add_down(mul_down(ra_lo, ra_lo), mul_down(ia_lo, ia_lo)))
    gen_lo = np.where((ra_lo == 0.0) & (ia_lo == 0.0), 0.0, gen_lo)
    lo = np.where(ia_hi == 0.0, ra_lo, np.where(ra_hi == 0.0, ia_lo, gen_lo))
    hi = np.where(ia_hi == 0.0, ra_hi, np.where(ra_hi == 0.0, ia_hi, gen_hi))
    return lo, hi


def complex_square(re_lo, re_hi, im_lo, im_hi):
    """Enclosure of v*v per complex box: (re^2 - im^2, 2 re im)."""
    sr_lo, sr_hi = square(re_lo, re_hi)
    si_lo, si_hi = square(im_lo, im_hi)
    out_re_lo = sub_down(sr_lo, si_hi)
    out_re_hi = sub_up(sr_hi, si_lo)
    m_lo, m_hi = imul(re_lo, re_hi, im_lo, im_hi)
    return out_re_lo, out_re_hi, 2.0 * m_lo, 2.0 * m_hi


def _mul_const_complex(re_lo, re_hi, im_lo, im_hi, c: complex):
    """Complex box times an exact complex constant."""
    ar_lo, ar_hi = iscale(re_lo, re_hi, c.real)
    bi_lo, bi_hi = iscale(im_lo, im_hi, c.imag)
    out_re_lo = sub_down(ar_lo, bi_hi)
    out_re_hi = sub_up(ar_hi, bi_lo)
    ai_lo, ai_hi = iscale(im_lo, im_hi, c.real)
    br_lo, br_hi = iscale(re_lo, re_hi, c.imag)
    out_im_lo = add_down(ai_lo, br_lo)
    out_im_hi = add_up(ai_hi, br_hi)
    return out_re_lo, out_re_hi, out_im_lo, out_im_hi


def base_image(zr_lo, zr_hi, zi_lo, zi_hi, a: complex):
    """Enclosures of z^2 + a over arrays of z-boxes."""
    re_lo, re_hi, im_lo, im_hi = complex_square(zr_lo, zr_hi, zi_lo, zi_hi)
    re_lo, re_hi = iadd_const(re_lo, re_hi, a.real)
    im_lo, im_hi = iadd_const(im_lo, im_hi, a.imag)
    return re_lo, re_hi, im_lo, im_hi


def fiber_image(
    zr_lo, zr_hi, zi_lo, zi_hi,
    wr_lo, wr_hi, wi_lo, wi_hi,
    b: complex, c: complex, e: complex,
):
    """Enclosures of w^2 + b w + c z + e over arrays of product boxes."""
    re_lo, re_hi, im_lo, im_hi = complex_square(wr_lo, wr_hi, wi_lo, wi_hi)
    if b != 0:
        t = _mul_const_complex(wr_lo, wr_hi, wi_lo, wi_hi, b)
        re_lo = add_down(re_lo, t[0])
        re_hi = add_up(re_hi, t[1])
        im_lo = add_down(im_lo, t[2])
        im_hi = add_up(im_hi, t[3])
    if c != 0:
        t = _mul_const_complex(zr_lo, zr_hi, zi_lo, zi_hi, c)
        re_lo = add_down(re_lo, t[0])
        re_hi = add_up(re_hi, t[1])
        im_lo = add_down(im_lo, t[2])
        im_hi = add_up(im_hi, t[3])
    re_lo, re_hi = iadd_const(re_lo, re_hi, e.real)
    im_lo, im_hi = iadd_const(im_lo, im_hi, e.imag)
    return re_lo, re_hi, im_lo, im_hi


def weights_base(zr_lo, zr_hi, zi_lo, zi_hi):
    """Rounded-down lower bounds of |2z| over arrays of z-boxes."""
    lo, _ = abs_lo_hi(2.0 * zr_lo, 2.0 * zr_hi, 2.0 * zi_lo, 2.0 * zi_hi)
    return lo

def weights_fiber(wr_lo, wr_hi, wi_lo, wi_hi, b: complex):
    """Rounded-down lower bounds of |2w + b| over arrays of w-boxes."""
    re_lo = add_down(2.0 * wr_lo, b.real)
    re_hi = add_up(2.0 * wr_hi, b.real)
    im_lo = add_down(2.0 * wi_lo, b.imag)
    im_hi = add_up(2.0 * wi_hi, b.imag)
    lo, _ = abs_lo_hi(re_lo, re_hi, im_lo, im_hi)
    return lo


def validate_edges(phi, m, L: float, src, dst):
    """Directed-rounded certificate check: down(phi_j m_k) >= up(L phi_k) per edge.

    Returns (all_ok, index of first failing edge or -1).
    """
    lhs = mul_down(phi[dst], m[src])
    rhs = mul_up(np.float64(L), phi[src])
    bad = lhs < rhs
    if not bad.any():
        return True, -1
    return False, int(np.argmax(bad))
