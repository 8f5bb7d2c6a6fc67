import itertools
import random
from fractions import Fraction

import pytest

from sbar2lab.base import Poly2
from sbar2lab.lie import (
    D2,
    L_letter,
    Sbar,
    VectorField,
    apply_to_poly,
    divergence,
    l_basis,
    letter_degree,
    sbar_bracket,
    sbar_to_vf,
    scaling_twist,
    unipotent_twist,
    vf_bracket,
    vf_to_sbar,
)


def letters_up_to(deg, low=-1):
    out = [D2]
    for a1 in range(-1, deg + 2):
        for a2 in range(-1, deg + 2):
            if (a1, a2) != (-1, -1) and low <= a1 + a2 <= deg:
                out.append(L_letter((a1, a2)))
    return out


def test_l_basis_displays():
    assert l_basis((1, -1)) == VectorField.monomial((1, 0), 2, -2)
    assert l_basis((-1, 0)) == VectorField.partial(1)
    assert l_basis((0, -1)) == VectorField.partial(2) * -1
    assert l_basis((0, 0)) == VectorField.euler(1) - VectorField.euler(2)
    with pytest.raises(ValueError):
        l_basis((-1, -1))
    with pytest.raises(ValueError):
        l_basis((-2, 0))


def test_vf_bracket_examples():
    assert vf_bracket(VectorField.partial(1), VectorField.partial(2)).is_zero()
    x = VectorField.monomial((1, 0), 2)  # t1 p2
    y = VectorField.monomial((0, 1), 1)  # t2 p1
    assert vf_bracket(x, y) == VectorField.euler(1) - VectorField.euler(2)
    d = sbar_to_vf(Sbar.d())
    assert vf_bracket(d, l_basis((2, 0))) == l_basis((2, 0)) * 2


def test_sbar_bracket_examples():
    assert sbar_bracket(Sbar.L((1, -1)), Sbar.L((-1, 1))) == Sbar.L((0, 0)) * -4
    x = Sbar.L((2, 1))
    assert sbar_bracket(x, x).is_zero()
    assert sbar_bracket(Sbar.L((-1, 0)), Sbar.L((1, 0))) == Sbar.L((0, 0)) * 2
    # indices summing to the corner: zero bracket although the determinant is not
    assert sbar_bracket(Sbar.L((-1, 0)), Sbar.L((0, -1))).is_zero()


def test_grading():
    d = Sbar.d()
    for letter in letters_up_to(6):
        if letter == D2:
            continue
        x = Sbar({letter: Fraction(1)})
        assert sbar_bracket(d, x) == x * letter_degree(letter)


def test_jacobi_window():
    letters = letters_up_to(2)
    for x, y, z in itertools.combinations(letters, 3):
        sx, sy, sz = (Sbar({l: Fraction(1)}) for l in (x, y, z))
        total = (
            sbar_bracket(sx, sbar_bracket(sy, sz))
            + sbar_bracket(sy, sbar_bracket(sz, sx))
            + sbar_bracket(sz, sbar_bracket(sx, sy))
        )
        assert total.is_zero()


def test_bracket_crosscheck_window():
    letters = letters_up_to(2)
    for x, y in itertools.product(letters, repeat=2):
        sx, sy = Sbar({x: Fraction(1)}), Sbar({y: Fraction(1)})
        assert sbar_to_vf(sbar_bracket(sx, sy)) == vf_bracket(sbar_to_vf(sx), sbar_to_vf(sy))


def test_divergence_examples():
    assert divergence(l_basis((1, 0))).is_zero()
    assert divergence(sbar_to_vf(Sbar.d())) == Poly2.const(2)
    assert divergence(VectorField.monomial((2, 0), 1)) == Poly2.monomial((1, 0), 2)
    for letter in letters_up_to(6):
        if letter != D2:
            assert divergence(l_basis((letter[2], letter[3]))).is_zero()


def test_conversion_round_trip_and_rejection():
    rng = random.Random(2)
    letters = letters_up_to(3)
    for _ in range(25):
        x = Sbar({rng.choice(letters): Fraction(rng.randrange(-4, 5)) for _ in range(3)})
        assert vf_to_sbar(sbar_to_vf(x)) == x
    with pytest.raises(ValueError):
        vf_to_sbar(VectorField.monomial((2, 0), 1))  # divergence 2 t1
    with pytest.raises(ValueError):
        vf_to_sbar(VectorField.monomial((0, 2), 2))


def test_scaling_twist_examples():
    a = (Fraction(2), Fraction(3))
    for i in (1, 2):
        assert scaling_twist(a, VectorField.partial(i)) == VectorField.partial(i) * a[i - 1]
        assert scaling_twist(a, VectorField.euler(i)) == VectorField.euler(i)
    assert scaling_twist(a, l_basis((1, -1))) == VectorField.monomial((1, 0), 2, Fraction(-3))
    with pytest.raises(ValueError):
        scaling_twist((0, 1), VectorField.partial(1))


def test_unipotent_twist_examples():
    c = Fraction(-1)
    assert unipotent_twist(c, VectorField.partial(1)) == VectorField.partial(1)
    assert unipotent_twist(c, VectorField.partial(2)) == VectorField.partial(2) + VectorField.partial(1)
    assert unipotent_twist(c, VectorField.euler(2)) == VectorField.euler(2) + VectorField.monomial((0, 1), 1)


@pytest.mark.parametrize("twist,inverse", [
    (lambda v: scaling_twist((Fraction(2), Fraction(3)), v),
     lambda v: scaling_twist((Fraction(1, 2), Fraction(1, 3)), v)),
    (lambda v: unipotent_twist(Fraction(-1), v),
     lambda v: unipotent_twist(Fraction(1), v)),
])
def test_twists_are_automorphisms(twist, inverse):
    letters = letters_up_to(2)
    for x, y in itertools.combinations(letters, 2):
        vx, vy = sbar_to_vf(Sbar({x: Fraction(1)})), sbar_to_vf(Sbar({y: Fraction(1)}))
        assert twist(vf_bracket(vx, vy)) == vf_bracket(twist(vx), twist(vy))
        assert inverse(twist(vx)) == vx


def test_derivation_action():
    # L_(0,0) = t1 p1 - t2 p2 acting on t1^2 t2
    q = Poly2.monomial((2, 1))
    assert apply_to_poly(l_basis((0, 0)), q) == Poly2.monomial((2, 1), 1)
    assert apply_to_poly(VectorField.partial(1), Poly2.monomial((1, 0))) == Poly2.one()
