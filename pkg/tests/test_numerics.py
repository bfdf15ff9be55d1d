import math
from fractions import Fraction

import mpmath
import pytest

from smzv.exact_engine import NonSquare
from smzv.numerics import (HPReal, NoReductionAvailable, NotAdmissible,
                           PiPolynomial, bernoulli, det_float, mzv_numeric,
                           repeated_zeta, smzv_numeric, zeta_int, zeta_odd)
from smzv.shapes import FamilySpec, SkewShape, Tableau, checkerboard_fill, make_family


def hp_close(x, y, digits):
    return abs(x - y) < HPReal(Fraction(1, 10 ** digits), 50)


class TestBernoulli:
    def test_first_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_recurrence(self):
        for n in range(2, 30):
            acc = sum(math.comb(n + 1, k) * bernoulli(k) for k in range(n + 1))
            assert acc == 0


class TestHPReal:
    def test_precision_propagation(self):
        x = HPReal(2, 50)
        y = HPReal(3, 30)
        assert (x * y).dps == 30
        assert (x + 1).dps == 50

    def test_exact_operands(self):
        x = HPReal(Fraction(1, 3), 40)
        assert hp_close(3 * x, HPReal(1, 40), 38)

    def test_rejects_tiny_precision(self):
        with pytest.raises(ValueError):
            HPReal(1, 0)

    def test_pi(self):
        assert HPReal.pi(50).str_digits(30).startswith("3.1415926535897932384626433832")


class TestPiPolynomial:
    def test_product_adds_exponents(self):
        p = PiPolynomial(Fraction(1, 2), 2) * PiPolynomial(Fraction(3), 4)
        assert p == PiPolynomial(Fraction(3, 2), 6)

    def test_sum_requires_equal_exponent(self):
        with pytest.raises(ValueError):
            PiPolynomial(Fraction(1), 2) + PiPolynomial(Fraction(1), 4)

    def test_zero_coeff_neutral(self):
        z = PiPolynomial(Fraction(0), 0)
        assert z + PiPolynomial(Fraction(1), 4) == PiPolynomial(Fraction(1), 4)

    def test_to_hp(self):
        v = PiPolynomial(Fraction(1, 90), 4).to_hp(50)
        mpmath.mp.dps = 60
        ref = mpmath.zeta(4)
        assert abs(float(v) - float(ref)) < 1e-15


class TestZeta:
    def test_even_closed_forms(self):
        assert zeta_int(4) == PiPolynomial(Fraction(1, 90), 4)
        assert zeta_int(8) == PiPolynomial(Fraction(1, 9450), 8)

    def test_odd_against_mpmath(self):
        mpmath.mp.dps = 60
        for s in (3, 5, 7, 9, 19):
            ours = zeta_int(s, 50)
            ref = mpmath.mpf(mpmath.zeta(s))
            assert abs(mpmath.mpf(ours.str_digits(55)) - ref) < mpmath.mpf(10) ** -49

    def test_two_internal_cutoffs_agree(self):
        a = zeta_odd(3, 50, cutoff=40)
        b = zeta_odd(3, 50, cutoff=90)
        assert hp_close(a, b, 48)

    def test_known_digits(self):
        assert zeta_int(3, 50).str_digits(17).startswith("1.202056903159594")

    def test_validation(self):
        with pytest.raises(ValueError):
            zeta_int(1)
        with pytest.raises(ValueError):
            zeta_odd(4, 30)


class TestRepeatedZeta:
    def test_single_block(self):
        e, h = repeated_zeta(4, 1)
        assert e == PiPolynomial(Fraction(1, 90), 4)
        assert h == e

    def test_two_blocks(self):
        e, h = repeated_zeta(4, 2)
        assert e == PiPolynomial(Fraction(1, 113400), 8)
        assert h == PiPolynomial(Fraction(13, 113400), 8)

    def test_newton_orthogonality(self):
        for s in (2, 4, 6):
            for n in range(0, 9):
                acc = PiPolynomial(Fraction(0))
                for k in range(n + 1):
                    e, _ = repeated_zeta(s, k)
                    _, h = repeated_zeta(s, n - k)
                    term = (e if k else PiPolynomial(Fraction(1))) \
                        * (h if n - k else PiPolynomial(Fraction(1)))
                    acc = acc + Fraction((-1) ** k) * term
                assert acc.coeff == (1 if n == 0 else 0)

    def test_weight4_vs_pair_block(self):
        # 4^n * zeta({1,3}^n) == zeta({4}^n) exactly, via the factorial form
        for n in range(0, 9):
            lhs = PiPolynomial(Fraction(2 * 4 ** n, math.factorial(4 * n + 2)), 4 * n)
            e, _ = repeated_zeta(4, n)
            if n == 0:
                assert lhs.coeff == 1
            else:
                assert lhs == e

    def test_odd_block_numeric(self):
        e, h = repeated_zeta(3, 2, 40)
        z3, z6 = zeta_int(3, 40), zeta_int(6, 40).to_hp(40)
        assert hp_close(e, (z3 * z3 - z6) * Fraction(1, 2), 35)
        assert hp_close(h, (z3 * z3 + z6) * Fraction(1, 2), 35)


class TestMzvNumeric:
    def test_zeta2(self):
        est = mzv_numeric((2,), 100_000, 50)
        ref = HPReal.pi(50) ** 2 / 6
        assert abs(est.value - ref) < est.error_bound
        assert float(est.error_bound) < 1e-8

    def test_pair_block(self):
        est = mzv_numeric((1, 3), 100_000, 50)
        ref = HPReal.pi(50) ** 4 / 360
        assert abs(est.value - ref) < est.error_bound

    def test_duality(self):
        for n in (1, 2, 3):
            est = mzv_numeric((1, 2) * n, 40_000, 40)
            e, _ = repeated_zeta(3, n, 40)
            assert abs(est.value - e) < est.error_bound

    def test_not_admissible(self):
        with pytest.raises(NotAdmissible):
            mzv_numeric((2, 1), 1000, 30)

    def test_tail_estimate_invariant(self):
        # bound of the 2M run dominates the shift between the M and 2M runs
        a = mzv_numeric((3,), 20_000, 40)
        b = mzv_numeric((3,), 40_000, 40)
        assert b.error_bound >= abs(b.value - a.value)
        assert a.cutoffs == (20_000, 40_000)

    def test_richardson_sanity(self):
        for idx in ((2,), (1, 3), (2, 3)):
            bounds = [float(mzv_numeric(idx, M, 40).error_bound)
                      for M in (20_000, 40_000, 80_000)]
            assert bounds[1] <= bounds[0] / 1.9
            assert bounds[2] <= bounds[1] / 1.9


class TestSmzvNumeric:
    def test_ribbon_route(self):
        t = make_family(FamilySpec("A", (1,), (1, 3)))
        est = smzv_numeric(t, 50_000, 50)
        ref = zeta_int(5, 50) * Fraction(1, 2)
        assert abs(est.value - ref) < est.error_bound

    def test_determinant_route(self):
        t = checkerboard_fill(SkewShape((2, 2)), 1, 3)
        est = smzv_numeric(t, 50_000, 50)
        ref = (zeta_int(3, 50) * zeta_int(5, 50) * Fraction(1, 2)
               - Fraction(5, 16) * zeta_int(4).to_hp(50) ** 2)
        assert abs(est.value - ref) < est.error_bound

    def test_empty(self):
        est = smzv_numeric(Tableau.empty(), 1000, 30)
        assert est.value == 1

    def test_not_admissible(self):
        t = Tableau(SkewShape((2,)), {(1, 1): 2, (1, 2): 1})
        with pytest.raises(NotAdmissible):
            smzv_numeric(t, 1000, 30)

    def test_no_reduction(self):
        s = SkewShape((3, 3, 3))
        entries = {c: 2 for c in s.cells}
        entries[(1, 1)] = 3
        entries[(2, 2)] = 5  # breaks diagonal constancy; not a ribbon
        with pytest.raises(NoReductionAvailable):
            smzv_numeric(Tableau(s, entries), 1000, 30)

    def test_routes_agree(self):
        # staircase strip of order 1 is both a ribbon and diagonal-constant
        t = make_family(FamilySpec("B", (1,), (1, 3)))
        est = smzv_numeric(t, 50_000, 45)
        ref = zeta_int(7, 45) * Fraction(1, 4)
        assert abs(est.value - ref) < est.error_bound


class TestDetFloat:
    def test_identity(self):
        one, zero = HPReal(1, 40), HPReal(0, 40)
        m = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
        assert hp_close(det_float(m), one, 38)

    def test_two_by_two_zetas(self):
        z3, z7, z11 = zeta_int(3, 50), zeta_int(7, 50), zeta_int(11, 50)
        d = det_float([[z3, z7], [z7, z11]])
        assert hp_close(d, z3 * z11 - z7 * z7, 45)

    def test_hilbert4(self):
        m = [[HPReal(Fraction(1, i + j - 1), 50) for j in range(1, 5)] for i in range(1, 5)]
        assert hp_close(det_float(m), HPReal(Fraction(1, 6048000), 50), 48)

    def test_non_square(self):
        with pytest.raises(NonSquare):
            det_float([[HPReal(1, 30)], [HPReal(1, 30), HPReal(2, 30)]])
