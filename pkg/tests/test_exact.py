from fractions import Fraction as F

import pytest

from tuttepoly.exact import (BiPoly, RationalEnclosure, UniPoly,
                             enclosure_refine, interval_div,
                             interval_poly_eval, rat, rat_str,
                             ratfunc_identity_check)


def test_rat_parsing_round_trip():
    assert rat("3/4") == F(3, 4)
    assert rat("-7") == F(-7)
    assert rat_str(F(22, 4)) == "11/2"
    assert rat_str(F(-3)) == "-3"


def test_unipoly_basic_arithmetic():
    p = UniPoly([1, 2, 3])          # 1 + 2x + 3x^2
    q = UniPoly([0, 1])             # x
    assert (p + q).coeffs == (F(1), F(3), F(3))
    assert (p * q).coeffs == (F(0), F(1), F(2), F(3))
    assert (p - p).is_zero()
    assert (q ** 3).coeffs == (F(0), F(0), F(0), F(1))
    assert p.eval(F(2)) == 17


def test_unipoly_trailing_zeros_normalized():
    assert UniPoly([1, 0, 0]).degree == 0
    assert UniPoly([]).degree == -1


def test_second_derivative_oracle():
    # d^2/dx^2 (x^3 - x^4) = 6x - 12x^2
    p = UniPoly([0, 0, 0, 1, -1])
    assert p.derivative(2) == UniPoly([0, 6, -12])


def test_divmod_and_exact_division():
    num = UniPoly([-2, 0, 1])       # x^2 - 2
    den = UniPoly([1, 1])           # x + 1
    q, r = num.divmod(den)
    assert q * den + r == num
    prod = num * den
    assert prod.divexact(den) == num
    with pytest.raises(ValueError):
        num.divexact(den)


def test_gcd_and_squarefree_part():
    a = UniPoly([1, 1])             # x + 1
    b = UniPoly([-1, 1])            # x - 1
    p = a * a * b
    assert p.gcd(a * b) == (a * b).monic()
    assert p.squarefree_part() == (a * b).monic()


def test_shift_down():
    p = UniPoly([0, 0, 3, 1])
    assert p.shift_down(2) == UniPoly([3, 1])
    with pytest.raises(ValueError):
        p.shift_down(3)


def test_bipoly_arithmetic_and_eval():
    x, y = BiPoly.x(), BiPoly.y()
    p = (x + y) ** 2
    assert p.eval(F(2), F(3)) == 25
    assert p - p == BiPoly()
    assert p.terms[(1, 1)] == 2


def test_bipoly_substitutions():
    x, y = BiPoly.x(), BiPoly.y()
    p = x ** 2 + x * y
    assert p.subst_y_minus_x() == UniPoly([])   # x^2 - x^2
    assert (x ** 2 + 3 * x).as_unipoly_in_x() == UniPoly([0, 3, 1])
    with pytest.raises(ValueError):
        p.as_unipoly_in_x()


def test_ratfunc_identity_cross_multiplication():
    x, y = BiPoly.x(), BiPoly.y()
    # (x^2 - y^2)/(x - y) == (x + y)/1
    assert ratfunc_identity_check(x ** 2 - y ** 2, x - y,
                                  x + y, BiPoly.const(1))
    assert not ratfunc_identity_check(x, y, y, x)


def test_enclosure_refine_sqrt2():
    p = UniPoly([-2, 0, 1])
    enc = enclosure_refine(RationalEnclosure(F(1), F(2)), p.eval, F(1, 2 ** 20))
    assert enc.width <= F(1, 2 ** 20)
    assert enc.lo < F(1414214, 1000000) < enc.hi or enc.contains(F(1414213562373095, 10 ** 15))


def test_enclosure_refine_exact_midpoint_collapse():
    p = UniPoly([-1, 0, 1])         # x^2 - 1, root 1 is the midpoint of [0, 2]
    enc = enclosure_refine(RationalEnclosure(F(0), F(2)), p.eval, F(1, 2 ** 40))
    assert enc.is_point() and enc.lo == 1


def test_interval_poly_eval_and_div():
    p = UniPoly([0, 0, 1])          # x^2
    out = interval_poly_eval(p, RationalEnclosure(F(1), F(2)))
    assert out.lo <= 1 and out.hi >= 4
    d = interval_div(RationalEnclosure.point(F(1)), RationalEnclosure(F(2), F(4)))
    assert d.lo == F(1, 4) and d.hi == F(1, 2)
    with pytest.raises(ZeroDivisionError):
        interval_div(RationalEnclosure.point(F(1)), RationalEnclosure(F(-1), F(1)))
