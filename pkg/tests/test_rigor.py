import math

import numpy as np
import pytest

from boxdyn import _kernels
from boxdyn.rigor import (
    ComplexBox,
    Interval,
    ProductBox,
    abs_bounds,
    add_down,
    add_up,
    complex_sqrt_enclosure,
    interval_arith,
    intersects_inflated,
    mul_down,
    mul_up,
    sqrt_down,
    sqrt_up,
)

ULP = np.finfo(np.float64).eps


def iv(lo, hi):
    return Interval(lo, hi)


class TestIntervalArith:
    def test_mul_exact_endpoints(self):
        r = interval_arith(iv(1, 2), iv(3, 4), "mul")
        assert r.contains_interval(iv(3, 8))
        # exact endpoint arithmetic stays exact
        assert r.lo == 3.0 and r.hi == 8.0

    def test_mul_mixed_signs(self):
        r = interval_arith(iv(-1, 2), iv(-3, 4), "mul")
        assert r.lo == -6.0 and r.hi == 8.0

    def test_mul_tenth_squared(self):
        r = interval_arith(iv(0.1, 0.1), iv(0.1, 0.1), "mul")
        assert r.lo <= 0.01 <= r.hi
        assert r.hi - r.lo <= 4 * math.ulp(0.01)

    def test_add_sub_exact(self):
        assert interval_arith(iv(1, 2), iv(3, 4), "add") == iv(4, 6)
        assert interval_arith(iv(1, 2), iv(3, 4), "sub") == iv(-3, -1)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            interval_arith(iv(0, 1), iv(0, 1), "div")

    def test_overflow_saturates_with_flag(self):
        big = iv(1e308, 1e308)
        r = big + big
        assert r.overflowed
        assert r.hi == math.inf
        import sys

        assert r.lo <= sys.float_info.max  # lower endpoint still a sound bound
        assert r.contains(sys.float_info.max)

    def test_inverted_rejected(self):
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)


class TestDirectedOps:
    def test_add_exact_not_widened(self):
        assert add_down(1.0, 2.0) == 3.0
        assert add_up(1.0, 2.0) == 3.0

    def test_add_inexact_widened_correctly(self):
        # 1 + 1e-300 rounds to 1; directed versions must bracket it
        assert add_down(1.0, 1e-300) == 1.0
        assert add_up(1.0, 1e-300) == math.nextafter(1.0, math.inf)
        assert add_up(1.0, -1e-300) == 1.0
        assert add_down(1.0, -1e-300) == math.nextafter(1.0, -math.inf)

    def test_mul_directed(self):
        assert mul_down(3.0, 5.0) == 15.0 == mul_up(3.0, 5.0)
        x = 0.1
        assert mul_down(x, x) <= x * x <= mul_up(x, x)
        assert mul_up(x, x) - mul_down(x, x) <= 2 * math.ulp(0.01)

    def test_sqrt_exact(self):
        assert sqrt_down(25.0) == 5.0 == sqrt_up(25.0)
        assert sqrt_down(4.0) == 2.0 == sqrt_up(4.0)

    def test_sqrt_inexact_brackets(self):
        for s in (2.0, 3.0, 0.5, 10.0, 1e-8, 1e8):
            lo, hi = sqrt_down(s), sqrt_up(s)
            assert lo <= math.sqrt(s) <= hi
            assert lo * lo <= s <= hi * hi or math.nextafter(hi, math.inf) ** 2 >= s
            assert hi <= math.nextafter(lo, math.inf)

    def test_fuzz_directed_ops_bracket_exact(self):
        rng = np.random.default_rng(7)
        xs = rng.uniform(-1e6, 1e6, 2000)
        ys = rng.uniform(-1e6, 1e6, 2000)
        from fractions import Fraction

        for x, y in zip(xs[:300], ys[:300]):
            fx, fy = Fraction(float(x)), Fraction(float(y))
            assert Fraction(add_down(x, y)) <= fx + fy <= Fraction(add_up(x, y))
            assert Fraction(mul_down(x, y)) <= fx * fy <= Fraction(mul_up(x, y))


class TestComplexSqr:
    def test_real_unit(self):
        b = ComplexBox(iv(1, 1), iv(0, 0)).sqr()
        assert b.re == iv(1, 1) and b.im == iv(0, 0)

    def test_imag_unit(self):
        b = ComplexBox(iv(0, 0), iv(1, 1)).sqr()
        assert b.re == iv(-1, -1) and b.im == iv(0, 0)

    def test_unit_square_box(self):
        b = ComplexBox(iv(-1, 1), iv(-1, 1)).sqr()
        # naive componentwise extension: re in [0,1]-[0,1] = [-1,1], im in 2*[-1,1]
        assert b.re.contains_interval(iv(-1, 1))
        assert b.im.contains_interval(iv(-2, 2))
        assert b.re.lo == -1.0 and b.re.hi == 1.0
        assert b.im.lo == -2.0 and b.im.hi == 2.0

    def test_point_consistency_fuzz(self):
        rng = np.random.default_rng(11)
        vals = rng.uniform(-50, 50, (10_000, 2))
        for x, y in vals:
            v = complex(x, y)
            sq = ComplexBox.point(v).sqr()
            exact = v * v
            assert sq.contains(exact)


class TestAbsBounds:
    def test_three_four_five(self):
        assert abs_bounds(ComplexBox(iv(3, 3), iv(4, 4))) == (5.0, 5.0)

    def test_contains_origin(self):
        lo, hi = abs_bounds(ComplexBox(iv(-1, 1), iv(-1, 1)))
        assert lo == 0.0
        assert hi >= math.sqrt(2.0)
        assert hi <= math.nextafter(math.sqrt(2.0), math.inf)

    def test_real_segment(self):
        assert abs_bounds(ComplexBox(iv(1, 2), iv(0, 0))) == (1.0, 2.0)

    def test_sandwich_fuzz(self):
        rng = np.random.default_rng(13)
        for _ in range(2_000):
            cx, cy = rng.uniform(-10, 10, 2)
            wx, wy = rng.uniform(0, 2, 2)
            box = ComplexBox(iv(cx, cx + wx), iv(cy, cy + wy))
            lo, hi = abs_bounds(box)
            for _ in range(5):
                v = complex(rng.uniform(cx, cx + wx), rng.uniform(cy, cy + wy))
                assert lo <= abs(v) <= hi


class TestIntersectsInflated:
    def test_shared_face(self):
        a = ComplexBox(iv(0, 1), iv(0, 1))
        b = ComplexBox(iv(1, 2), iv(0, 1))
        assert intersects_inflated(a, b, 0.0)

    def test_gap_with_small_delta(self):
        a = ComplexBox(iv(0, 1), iv(0, 1))
        b = ComplexBox(iv(1.5, 2.5), iv(0, 1))
        assert not intersects_inflated(a, b, 0.25)

    def test_gap_with_matching_delta(self):
        a = ComplexBox(iv(0, 1), iv(0, 1))
        b = ComplexBox(iv(1.5, 2.5), iv(0, 1))
        assert intersects_inflated(a, b, 0.5)

    def test_product_boxes(self):
        a = ProductBox(ComplexBox(iv(0, 1), iv(0, 1)), ComplexBox(iv(0, 1), iv(0, 1)))
        b = ProductBox(ComplexBox(iv(1, 2), iv(0, 1)), ComplexBox(iv(0.5, 2), iv(0, 1)))
        assert intersects_inflated(a, b, 0.0)
        c = ProductBox(ComplexBox(iv(3, 4), iv(0, 1)), ComplexBox(iv(0, 1), iv(0, 1)))
        assert not intersects_inflated(a, c, 0.0)

    def test_negative_delta_rejected(self):
        a = ComplexBox(iv(0, 1), iv(0, 1))
        with pytest.raises(ValueError):
            intersects_inflated(a, a, -0.1)


class TestMonotonicity:
    def test_nested_inputs_nested_outputs(self):
        rng = np.random.default_rng(17)
        for _ in range(500):
            lo1, hi1 = sorted(rng.uniform(-100, 100, 2))
            lo2, hi2 = sorted(rng.uniform(-100, 100, 2))
            a = iv(lo1, hi1)
            b = iv(lo2, hi2)
            pad = rng.uniform(0, 5, 4)
            a2 = iv(lo1 - pad[0], hi1 + pad[1])
            b2 = iv(lo2 - pad[2], hi2 + pad[3])
            for op in ("add", "sub", "mul"):
                inner = interval_arith(a, b, op)
                outer = interval_arith(a2, b2, op)
                assert outer.contains_interval(inner)


class TestComplexSqrt:
    def test_exact_real(self):
        b = complex_sqrt_enclosure(ComplexBox.point(361 + 0j))
        assert b.contains(19 + 0j)
        assert b.re.width <= 2 * math.ulp(19.0) and b.im == iv(0, 0)

    def test_negative_real(self):
        b = complex_sqrt_enclosure(ComplexBox.point(-4 + 0j))
        assert b.contains(2j)

    def test_fuzz_contains_the_exact_root(self):
        # oracle: 50-digit square root; the enclosure must contain it exactly
        import mpmath

        mpmath.mp.dps = 50
        rng = np.random.default_rng(23)
        for _ in range(500):
            v = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            enc = complex_sqrt_enclosure(ComplexBox.point(v))
            r = mpmath.sqrt(mpmath.mpc(v.real, v.imag))
            for cand in (r, -r):
                ok = (
                    enc.re.lo <= float(cand.real) <= enc.re.hi
                    and enc.im.lo <= float(cand.imag) <= enc.im.hi
                )
                if ok:
                    break
            else:
                raise AssertionError(f"enclosure {enc} misses sqrt({v})")


class TestScalarVectorAgreement:
    """The vectorized kernels must match the scalar rigor ops bitwise."""

    def test_directed_ops_agree(self):
        rng = np.random.default_rng(29)
        a = rng.uniform(-1e8, 1e8, 5000)
        b = rng.uniform(-1e8, 1e8, 5000)
        a[:10] = [0.0, -0.0, 1.0, -1.0, 1e-300, -1e-300, 1e300, -1e300, 0.1, 3.0]
        b[:10] = [0.0, 5.0, 3.0, 7.0, 1e-300, 1e300, 1e300, 1e8, 0.1, 5.0]
        from boxdyn._kernels import _vec

        for vec_op, sc_op in (
            (_vec.add_down, add_down),
            (_vec.add_up, add_up),
            (_vec.mul_down, mul_down),
            (_vec.mul_up, mul_up),
        ):
            got = vec_op(a, b)
            want = np.array([sc_op(x, y) for x, y in zip(a, b)])
            np.testing.assert_array_equal(got, want)

    def test_sqrt_agree(self):
        rng = np.random.default_rng(31)
        s = np.abs(rng.uniform(0, 1e10, 5000))
        s[:4] = [0.0, 25.0, 2.0, 1e-300]
        from boxdyn._kernels import _vec

        np.testing.assert_array_equal(
            _vec.sqrt_down(s), np.array([sqrt_down(x) for x in s])
        )
        np.testing.assert_array_equal(
            _vec.sqrt_up(s), np.array([sqrt_up(x) for x in s])
        )

    def test_abs_bounds_agree(self):
        rng = np.random.default_rng(37)
        lo_r = rng.uniform(-10, 10, 3000)
        hi_r = lo_r + rng.uniform(0, 3, 3000)
        lo_i = rng.uniform(-10, 10, 3000)
        hi_i = lo_i + rng.uniform(0, 3, 3000)
        # force degenerate rows to hit the exact shortcut paths
        lo_i[:500] = 0.0
        hi_i[:500] = 0.0
        lo_r[500:700] = 0.0
        hi_r[500:700] = 0.0
        from boxdyn._kernels import _vec

        glo, ghi = _vec.abs_lo_hi(lo_r, hi_r, lo_i, hi_i)
        for k in range(3000):
            lo, hi = abs_bounds(ComplexBox(iv(lo_r[k], hi_r[k]), iv(lo_i[k], hi_i[k])))
            assert glo[k] == lo and ghi[k] == hi
