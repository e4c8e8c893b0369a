"""Validated interval arithmetic over machine floats, and box geometry for C and C^2.

Endpoints are ordinary binary64 floats.  Every operation returns an interval
that contains the exact real result ("containment").  Directed rounding is
implemented portably with error-free transformations (Knuth two-sum, Dekker
two-product): the rounding error of each primitive operation is recovered
exactly, so endpoints are only nudged by one ulp when the float result is
actually inexact.  Exact results (e.g. small integer arithmetic, 3-4-5
hypotenuses) stay exact.

Overflow saturates endpoints at +/-inf instead of aborting; `Interval.overflowed`
makes that state detectable so callers can treat "escaped to machine infinity"
as an ordinary escape condition.

All values are immutable; every function here is pure and thread-safe.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

_INF = math.inf
_MAX = sys.float_info.max

# Veltkamp splitter for Dekker's exact product; valid for |x| < 2**996.
_SPLITTER = 134217729.0  # 2**27 + 1
# Outside these magnitudes the EFT error term is unreliable (overflow of the
# split, or subnormal products); fall back to unconditional 1-ulp widening.
_PROD_BIG = 2.0 ** 995
_PROD_TINY = 2.0 ** -1000


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def add_down(a: float, b: float) -> float:
    """Largest float <= the exact a+b (saturating)."""
    s, e = _two_sum(float(a), float(b))
    if math.isfinite(s):
        return math.nextafter(s, -_INF) if e < 0.0 else s
    if s == _INF:
        return _MAX  # exact sum exceeded the largest float
    return -_INF  # true -inf, or nan from inf-inf: -inf is a sound lower bound


def add_up(a: float, b: float) -> float:
    """Smallest float >= the exact a+b (saturating)."""
    s, e = _two_sum(float(a), float(b))
    if math.isfinite(s):
        return math.nextafter(s, _INF) if e > 0.0 else s
    if s == -_INF:
        return -_MAX
    return _INF


def sub_down(a: float, b: float) -> float:
    return add_down(a, -b)


def sub_up(a: float, b: float) -> float:
    return add_up(a, -b)


def mul_down(a: float, b: float) -> float:
    """Largest float <= the exact a*b (saturating)."""
    a = float(a)
    b = float(b)
    p = a * b
    if not math.isfinite(p):
        return _MAX if p == _INF else -_INF
    aa = abs(a)
    ab = abs(b)
    if aa > _PROD_BIG or ab > _PROD_BIG or (0.0 < abs(p) < _PROD_TINY):
        return math.nextafter(p, -_INF)
    e = _two_prod(a, b)[1]
    return math.nextafter(p, -_INF) if e < 0.0 else p


def mul_up(a: float, b: float) -> float:
    """Smallest float >= the exact a*b (saturating)."""
    a = float(a)
    b = float(b)
    p = a * b
    if not math.isfinite(p):
        return -_MAX if p == -_INF else _INF
    aa = abs(a)
    ab = abs(b)
    if aa > _PROD_BIG or ab > _PROD_BIG or (0.0 < abs(p) < _PROD_TINY):
        return math.nextafter(p, _INF)
    e = _two_prod(a, b)[1]
    return math.nextafter(p, _INF) if e > 0.0 else p


def _sqrt_cmp(r: float, s: float) -> int:
    """Sign of r*r - s, computed exactly (r = float sqrt of s)."""
    p, e = _two_prod(r, r)
    d = p - s  # exact: p and s agree to within a factor of 2 (Sterbenz)
    t, te = _two_sum(d, e)
    if t > 0.0 or (t == 0.0 and te > 0.0):
        return 1
    if t < 0.0 or (t == 0.0 and te < 0.0):
        return -1
    return 0


def sqrt_down(s: float) -> float:
    """Largest float <= sqrt(s); requires s >= 0."""
    s = float(s)
    if s <= 0.0:
        return 0.0
    if s == _INF:
        return _MAX
    r = math.sqrt(s)
    if r * r == _INF or abs(r) > _PROD_BIG:
        return math.nextafter(r, -_INF)
    return r if _sqrt_cmp(r, s) <= 0 else math.nextafter(r, -_INF)


def sqrt_up(s: float) -> float:
    """Smallest float >= sqrt(s); requires s >= 0."""
    s = float(s)
    if s <= 0.0:
        return 0.0
    if s == _INF:
        return _INF
    r = math.sqrt(s)
    if r * r == _INF or abs(r) > _PROD_BIG:
        return math.nextafter(r, _INF)
    return r if _sqrt_cmp(r, s) >= 0 else math.nextafter(r, _INF)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with lo <= hi.

    Endpoints may saturate to +/-inf after overflow; `overflowed` reports it.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("nan endpoint")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @staticmethod
    def hull(*xs: float) -> "Interval":
        return Interval(min(xs), max(xs))

    @property
    def overflowed(self) -> bool:
        return math.isinf(self.lo) or math.isinf(self.hi)

    @property
    def width(self) -> float:
        return sub_up(self.hi, self.lo)

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        return m if math.isfinite(m) else self.lo + 0.5 * (self.hi - self.lo)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(add_down(self.lo, other.lo), add_up(self.hi, other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(sub_down(self.lo, other.hi), sub_up(self.hi, other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
        hi = max(mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
        return Interval(lo, hi)

    def scale(self, k: float) -> "Interval":
        """Multiply by an exact float constant."""
        if k >= 0.0:
            return Interval(mul_down(k, self.lo), mul_up(k, self.hi))
        return Interval(mul_down(k, self.hi), mul_up(k, self.lo))

    def square(self) -> "Interval":
        """Tight enclosure of {x*x : x in self} (never dips below 0)."""
        a, b = self.lo, self.hi
        if a >= 0.0:
            return Interval(mul_down(a, a), mul_up(b, b))
        if b <= 0.0:
            return Interval(mul_down(b, b), mul_up(a, a))
        return Interval(0.0, max(mul_up(a, a), mul_up(b, b)))

    def sqrt(self) -> "Interval":
        """Enclosure of {sqrt(x) : x in self, x >= 0}; requires hi >= 0."""
        if self.hi < 0.0:
            raise ValueError("sqrt of a negative interval")
        return Interval(sqrt_down(max(self.lo, 0.0)), sqrt_up(self.hi))

    def abs(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return Interval(-self.hi, -self.lo)
        return Interval(0.0, max(-self.lo, self.hi))

    def inflate(self, delta: float) -> "Interval":
        if delta == 0.0:
            return self
        return Interval(sub_down(self.lo, delta), add_up(self.hi, delta))


def interval_arith(a: Interval, b: Interval, op: str) -> Interval:
    """Dispatch form of the three arithmetic operations: add, sub, mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class ComplexBox:
    """Axis-aligned box in C = R^2: the set {x + iy : x in re, y in im}."""

    re: Interval
    im: Interval

    @staticmethod
    def point(v: complex) -> "ComplexBox":
        return ComplexBox(Interval.point(v.real), Interval.point(v.imag))

    @staticmethod
    def hull(*vs: complex) -> "ComplexBox":
        return ComplexBox(
            Interval.hull(*(v.real for v in vs)),
            Interval.hull(*(v.imag for v in vs)),
        )

    @property
    def overflowed(self) -> bool:
        return self.re.overflowed or self.im.overflowed

    def contains(self, v: complex) -> bool:
        return self.re.contains(v.real) and self.im.contains(v.imag)

    def contains_box(self, other: "ComplexBox") -> bool:
        return self.re.contains_interval(other.re) and self.im.contains_interval(other.im)

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re - other.re, self.im - other.im)

    def sqr(self) -> "ComplexBox":
        """Enclosure of {v*v : v in box}: (re^2 - im^2, 2*re*im)."""
        return ComplexBox(
            self.re.square() - self.im.square(),
            (self.re * self.im).scale(2.0),
        )

    def mul_const(self, c: complex) -> "ComplexBox":
        """Multiply by an exact complex constant."""
        cr = Interval.point(c.real)
        ci = Interval.point(c.imag)
        return ComplexBox(
            self.re * cr - self.im * ci,
            self.re * ci + self.im * cr,
        )

    def add_const(self, c: complex) -> "ComplexBox":
        return self + ComplexBox.point(c)

    def scale(self, k: float) -> "ComplexBox":
        return ComplexBox(self.re.scale(k), self.im.scale(k))


def abs_bounds(b: ComplexBox) -> tuple[float, float]:
    """(lo, hi) with lo <= |v| <= hi for every v in b; lo = 0 iff b touches 0."""
    re_abs = b.re.abs()
    im_abs = b.im.abs()
    if im_abs.hi == 0.0:
        return re_abs.lo, re_abs.hi
    if re_abs.hi == 0.0:
        return im_abs.lo, im_abs.hi
    hi = sqrt_up(add_up(mul_up(re_abs.hi, re_abs.hi), mul_up(im_abs.hi, im_abs.hi)))
    if re_abs.lo == 0.0 and im_abs.lo == 0.0:
        return 0.0, hi
    lo = sqrt_down(add_down(mul_down(re_abs.lo, re_abs.lo), mul_down(im_abs.lo, im_abs.lo)))
    return lo, hi


def complex_sqrt_enclosure(b: ComplexBox) -> ComplexBox:
    """Enclosure of one square root of every v in b (principal-ish branch).

    Uses |w| = sqrt((r+u)/2) + i sign(v) sqrt((r-u)/2) with r = |s|, s = u+iv,
    which needs only +,-,*,sqrt.  Intended for narrow boxes (fixed-point
    enclosures); boxes straddling the negative real axis get the sign of
    the imaginary midpoint.
    """
    r_lo, r_hi = abs_bounds(b)
    r = Interval(r_lo, r_hi)
    u = b.re
    v = b.im
    re_part = ((r + u).scale(0.5)).sqrt()
    im_mag = ((r - u).scale(0.5)).sqrt()
    if v.lo >= 0.0 and v.hi <= 0.0:  # exactly zero imaginary part
        if u.lo >= 0.0:
            return ComplexBox(re_part, Interval.point(0.0))
        if u.hi <= 0.0:
            return ComplexBox(Interval.point(0.0), im_mag)
    if v.lo >= 0.0:
        return ComplexBox(re_part, im_mag)
    if v.hi <= 0.0:
        return ComplexBox(re_part, -im_mag)
    # mixed-sign imaginary part: both branches possible, take the hull
    return ComplexBox(re_part, Interval(-im_mag.hi, im_mag.hi))


@dataclass(frozen=True)
class ProductBox:
    """Box in C^2: B.z x B.w."""

    z: ComplexBox
    w: ComplexBox

    @staticmethod
    def point(z: complex, w: complex) -> "ProductBox":
        return ProductBox(ComplexBox.point(z), ComplexBox.point(w))

    @property
    def overflowed(self) -> bool:
        return self.z.overflowed or self.w.overflowed

    def contains(self, z: complex, w: complex) -> bool:
        return self.z.contains(z) and self.w.contains(w)


def intersects_inflated(a, b, delta: float = 0.0) -> bool:
    """True iff closed boxes a and b intersect after growing every face of a by delta.

    a and b must both be ComplexBox or both ProductBox.  The inflation uses
    outward rounding, so no true intersection is missed.
    """
    if delta < 0.0:
        raise ValueError("delta must be nonnegative")
    if isinstance(a, ProductBox):
        return intersects_inflated(a.z, b.z, delta) and intersects_inflated(a.w, b.w, delta)
    return (
        a.re.inflate(delta).intersects(b.re)
        and a.im.inflate(delta).intersects(b.im)
    )
