import random
from fractions import Fraction

import pytest

from sbar2lab.base import Poly2, as_scalar, binom2, comb0, gbinom, poly_mul, poly_shift


def p(terms):
    return Poly2(terms)


def test_poly_mul_examples():
    d1, d2 = Poly2.variable(1), Poly2.variable(2)
    assert d1 * d2 == Poly2.monomial((1, 1))
    one = Poly2.one()
    q = p({(2, 1): Fraction(3, 2), (0, 0): Fraction(-1)})
    assert poly_mul(one, q) == q
    # (d1 + 1) d1 = d1^2 + d1
    assert (d1 + one) * d1 == p({(2, 0): 1, (1, 0): 1})


def test_poly_shift_examples():
    d1 = Poly2.variable(1)
    assert poly_shift(d1, (1, 0)) == d1 + Poly2.one()
    d1d2 = Poly2.monomial((1, 1))
    assert poly_shift(d1d2, (1, 1)) == p({(1, 1): 1, (1, 0): 1, (0, 1): 1, (0, 0): 1})
    # shifting the tail polynomial of the first distinguished centralizer index
    g0 = p({(2, 0): -1, (1, 0): -1})  # -(d1+1)d1
    shifted = poly_shift(g0, (1, 0))
    assert shifted == p({(2, 0): -1, (1, 0): -3, (0, 0): -2})  # -(d1+2)(d1+1)


def test_shift_composes():
    rng = random.Random(3)
    for _ in range(30):
        q = p({(rng.randrange(4), rng.randrange(4)): Fraction(rng.randrange(-5, 6)) for _ in range(4)})
        a = (rng.randrange(-3, 4), rng.randrange(-3, 4))
        b = (rng.randrange(-3, 4), rng.randrange(-3, 4))
        assert q.shift(a).shift(b) == q.shift((a[0] + b[0], a[1] + b[1]))


def test_binomials():
    assert comb0(5, 2) == 10
    assert comb0(3, 5) == 0
    assert comb0(3, -1) == 0
    assert binom2((3, 1), (1, 0)) == 3
    assert binom2((3, 1), (1, 2)) == 0
    assert binom2((2, 2), (-1, 0)) == 0
    # negative upper index follows the generalized convention
    assert gbinom(-1, 3) == -1
    assert gbinom(-2, 2) == 3
    with pytest.raises(ValueError):
        gbinom(2, -1)


def test_scalar_field_axioms():
    rng = random.Random(11)
    for _ in range(200):
        x = Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))
        y = Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))
        z = Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * (1 / x) == 1


def test_scalar_boundary_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    assert as_scalar(3) == Fraction(3)


def test_lincomb_drops_zeros():
    q = p({(1, 0): Fraction(1), (0, 1): Fraction(0)})
    assert (0, 1) not in q.terms
    assert (q - q).is_zero()
