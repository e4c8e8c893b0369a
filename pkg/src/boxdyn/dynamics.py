"""The quadratic skew-product family f(z, w) = (z^2 + a, w^2 + b w + c z + e).

Interval extensions of the map and its partial derivatives, escape radii for
the base and fiber dynamics, rigorous enclosures of the base fixed points, and
two constructive map generators: one that couples a chosen hyperbolic
quadratic with an escaping fiber family over a Cantor base, and one that
linearly interpolates between two quadratic parameters across the base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rigor import (
    ComplexBox,
    Interval,
    ProductBox,
    abs_bounds,
    add_up,
    complex_sqrt_enclosure,
    mul_down,
    mul_up,
    sqrt_up,
    sub_down,
)


class GenerationError(Exception):
    """No admissible parameters within the configured search caps."""


@dataclass(frozen=True)
class SkewMap:
    """Coefficients of (z, w) -> (z^2 + a, w^2 + b w + c z + e), exact floats."""

    a: complex
    b: complex
    c: complex
    e: complex

    def __str__(self):
        return f"(z^2 + {self.a}, w^2 + {self.b} w + {self.c} z + {self.e})"


def eval_p(m: SkewMap, z: ComplexBox) -> ComplexBox:
    """Enclosure of p(z) = z^2 + a over the box."""
    return z.sqr().add_const(m.a)


def eval_q(m: SkewMap, z: ComplexBox, w: ComplexBox) -> ComplexBox:
    """Enclosure of q(z, w) = w^2 + b w + c z + e over the product of boxes."""
    out = w.sqr()
    if m.b != 0:
        out = out + w.mul_const(m.b)
    if m.c != 0:
        out = out + z.mul_const(m.c)
    return out.add_const(m.e)


def eval_f(m: SkewMap, box: ProductBox) -> ProductBox:
    """Enclosure of f over a box in C^2."""
    return ProductBox(eval_p(m, box.z), eval_q(m, box.z, box.w))


def derivative_lower(m: SkewMap, box, kind: str) -> float:
    """Rounded-down lower bound of the relevant derivative modulus over a box.

    kind="base": |p'(z)| = |2z| over a ComplexBox (or the z-part of a
    ProductBox).  kind="fiber": |dq/dw| = |2w + b| over the w-part.
    Returns 0 when the critical locus meets the box.
    """
    if kind == "base":
        z = box.z if isinstance(box, ProductBox) else box
        return abs_bounds(z.scale(2.0))[0]
    if kind == "fiber":
        w = box.w if isinstance(box, ProductBox) else box
        return abs_bounds(w.scale(2.0).add_const(m.b))[0]
    raise ValueError(f"unknown derivative kind {kind!r}")


def _abs_up(v: complex) -> float:
    """Rounded-up |v| for an exact complex."""
    return abs_bounds(ComplexBox.point(v))[1]


def escape_radii(m: SkewMap, margin: float = 0.1) -> tuple[float, float]:
    """(R1, R2) such that |z| > R1 - margin escapes under p, and |w| > R2 - margin
    escapes in the fiber whenever |z| <= R1.  Rounded up.

    R1 = (1 + sqrt(1 + 4|a|)) / 2 + margin; R2 solves the analogous quadratic
    |w|^2 - (1+|b|)|w| - (|c| R1 + |e|) = 0.
    """
    if margin <= 0.0:
        raise ValueError("margin must be positive")
    abs_a = _abs_up(m.a)
    r1 = add_up(0.5 * add_up(1.0, sqrt_up(add_up(1.0, mul_up(4.0, abs_a)))), margin)
    one_b = add_up(1.0, _abs_up(m.b))
    lin = add_up(mul_up(_abs_up(m.c), r1), _abs_up(m.e))
    disc = add_up(mul_up(one_b, one_b), mul_up(4.0, lin))
    r2 = add_up(0.5 * add_up(one_b, sqrt_up(disc)), margin)
    return r1, r2


def base_fixed_points(m: SkewMap) -> tuple[ComplexBox, ComplexBox]:
    """Interval enclosures (alpha, beta) of the fixed points of p(z) = z^2 + a.

    Roots of z^2 - z + a: (1 -+ sqrt(1 - 4a)) / 2.  beta is the root of larger
    modulus; when the moduli tie (complex-conjugate pair), the root with the
    lexicographically larger (re, im) midpoint is called beta.
    """
    s = ComplexBox.point(1 + 0j) - ComplexBox.point(m.a).scale(4.0)
    root = complex_sqrt_enclosure(s)
    one = ComplexBox.point(1 + 0j)
    minus = (one - root).scale(0.5)
    plus = (one + root).scale(0.5)
    lo_m, hi_m = abs_bounds(minus)
    lo_p, hi_p = abs_bounds(plus)
    if hi_m < lo_p:
        return minus, plus
    if hi_p < lo_m:
        return plus, minus
    key_m = (minus.re.mid, minus.im.mid)
    key_p = (plus.re.mid, plus.im.mid)
    return (minus, plus) if key_p >= key_m else (plus, minus)


@dataclass(frozen=True)
class Prop31Params:
    """Parameters of the Cantor-base generator and its derived quantities.

    With p(z) = z^2 - R: beta = (1+sqrt(1+4R))/2 and alpha = (1-sqrt(1+4R))/2
    are the base fixed points, eta = sqrt(R - beta), and a_shift = (eta+beta)/2
    is the center of the right Cantor interval [eta, beta].  sigma is the
    caller-supplied lower bound on the horizontal distance from c to the
    boundary of its hyperbolic component.
    """

    c: complex
    sigma: float
    R: float
    S: float
    a_shift: float
    alpha: float
    beta: float
    eta: float


def _beta_eta_enclosures(R: float) -> tuple[Interval, Interval]:
    r_int = Interval.point(R)
    disc = (Interval.point(1.0) + r_int.scale(4.0)).sqrt()
    beta = (Interval.point(1.0) + disc).scale(0.5)
    eta = (r_int - beta).sqrt()
    return beta, eta


def _prop31_conditions(c: complex, sigma: float, R: float, s_num: float) -> bool:
    """Interval verification of the generator's three conditions.

    s_num = 2S.  Checks, with directed rounding:
      (1) R > 6 (so the base is a two-interval Cantor set with beta > eta > 0);
      (2) beta - eta < sigma * 2S  (fiber parameters over the left interval
          stay within sigma of c);
      (3) 3 eta + beta >= (2 - Re(c)) * 2S  (fiber parameters over the right
          interval have real part >= 2, hence escape).
    """
    if not R > 6.0:
        return False
    beta, eta = _beta_eta_enclosures(R)
    if not eta.lo > 0.0:
        return False
    # (2): rounded-up beta-eta strictly below rounded-down sigma*2S
    if not add_up(beta.hi, -eta.lo) < mul_down(sigma, s_num):
        return False
    # (3): rounded-down 3 eta + beta against rounded-up (2 - Re(c)) * 2S
    rhs3 = mul_up(max(sub_down(2.0, c.real), 0.0), s_num)
    return (eta.scale(3.0) + beta).lo >= rhs3


def gen_prop31(
    c: complex,
    sigma: float,
    r_cap: float = 1.0e6,
    s_cap: float = 1.0e3,
) -> tuple[SkewMap, Prop31Params]:
    """Construct f = (z^2 - R, w^2 + c + (z + a_shift)/S) over a Cantor base.

    Searches the smallest S of the form k/2 and, for it, the smallest R of the
    form 10 j > 6 such that over the left base interval the fiber parameter
    stays within sigma of c, and over the right one it escapes.  The chosen
    pair is re-verified with interval arithmetic before returning.

    sigma is trusted input: it must lower-bound the horizontal distance from c
    to the boundary of its hyperbolic component.
    """
    if sigma <= 0.0:
        raise ValueError("sigma must be positive")
    k = 1
    while k <= int(2 * s_cap):
        s_val = k / 2.0
        # beta - eta > 1 for every R, so condition (2) is hopeless unless
        # sigma * 2S exceeds 1; skip those S without scanning R
        if not mul_down(sigma, float(k)) > 1.0:
            k += 1
            continue
        # minimal admissible R for this S, scanning the coarse lattice
        r = 10.0
        while r <= r_cap:
            if _prop31_conditions(c, sigma, r, float(k)):
                return _prop31_build(c, sigma, r, s_val)
            r += 10.0
        k += 1
    raise GenerationError(
        f"no (R, S) with R <= {r_cap:g}, S <= {s_cap:g} satisfies the "
        f"generator conditions for c={c}, sigma={sigma:g}"
    )


def _prop31_build(c: complex, sigma: float, R: float, S: float):
    beta_i, eta_i = _beta_eta_enclosures(R)
    beta = beta_i.mid
    eta = eta_i.mid
    alpha = (1.0 - math.sqrt(1.0 + 4.0 * R)) / 2.0
    a_shift = (eta + beta) / 2.0
    coeff_c = 1.0 / S
    m = SkewMap(a=complex(-R, 0.0), b=0j, c=complex(coeff_c, 0.0),
                e=c + a_shift / S)
    params = Prop31Params(c=c, sigma=sigma, R=R, S=S, a_shift=a_shift,
                          alpha=alpha, beta=beta, eta=eta)
    return m, params


def verify_prop31(m: SkewMap, c: complex, sigma: float) -> bool:
    """Check the generator conditions for an existing map of the right shape.

    The map must be (z^2 - R, w^2 + c + (z + a)/S) in SkewMap coefficients,
    i.e. b = 0 and the c-coefficient real positive; S is recovered as
    1/Re(c-coeff).  Verification is by interval arithmetic on (R, 2S).
    """
    if m.b != 0 or m.c.imag != 0 or m.c.real <= 0.0:
        return False
    if m.a.imag != 0 or m.a.real >= 0.0:
        return False
    R = -m.a.real
    s_val = 1.0 / m.c.real
    return _prop31_conditions(c, sigma, R, 2.0 * s_val)


def gen_interpolating(c1: complex, c2: complex, R: float) -> SkewMap:
    """f = (z^2 - R, w^2 + l(z)) with l linear, l(-a_shift) = c1, l(a_shift) = c2.

    a_shift = (eta + beta)/2 is the center of the right base interval.  In
    SkewMap coefficients: a = -R, b = 0, c = (c2 - c1)/(2 a_shift),
    e = (c1 + c2)/2.
    """
    if not R > 6.0:
        raise ValueError("R must exceed 6")
    beta_i, eta_i = _beta_eta_enclosures(R)
    a_shift = (beta_i.mid + eta_i.mid) / 2.0
    return SkewMap(
        a=complex(-R, 0.0),
        b=0j,
        c=(c2 - c1) / (2.0 * a_shift),
        e=(c1 + c2) / 2.0,
    )


def interp_shift(R: float) -> float:
    """The a_shift used by gen_interpolating for a given R."""
    beta_i, eta_i = _beta_eta_enclosures(R)
    return (beta_i.mid + eta_i.mid) / 2.0
