"""The rank-2 Weyl algebra, its twisted polynomial module, and the
generator-level isomorphism into (Weyl algebra) x U(nonnegative part).

Weyl elements are stored normally ordered (all t's left of all d/dt's); the
product uses the closed-form reordering identity

    d^m t^n = sum_k C(m,k) C(n,k) k! t^(n-k) d^(m-k)   (componentwise).

The isomorphism phi on generators:

    phi(t^b)  = t^b x 1
    phi(d2)   = d2 x 1 + 1 x d2
    phi(L_a)  = L_a x 1 + sum_r C(a+(1,1), r) t^r x L_(a-r)

where r runs over all of Z_+^2 with the residual index a - r kept only when
it lies in Z^2_{>=-1} with |a - r| >= 0. The r = 0 term (1 x L_a) and, for
a = 0, the terms forced by phi(d_i) are therefore present; residuals of
degree -1 are excluded because the constant fields live in the first tensor
factor only. The homomorphism sweep in the suite is what validates this
reading of the summation range.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .base import (
    LinComb,
    MultiIndex,
    Poly2,
    binom2,
    in_phi,
    is_nonneg,
    madd,
    msub,
    mtotal,
)
from .enveloping import UEnv, Word, _nf, word_str
from .lie import (
    D2,
    L_letter,
    Sbar,
    VectorField,
    apply_to_poly,
    l_basis,
    letter_alpha,
    letter_degree,
    sbar_to_vf,
)

WeylKey = tuple[MultiIndex, MultiIndex]  # (t exponents, d/dt exponents)


def _weyl_key_mul(k1: WeylKey, k2: WeylKey):
    (a, b), (c, d) = k1, k2
    out = []
    for k0 in range(min(b[0], c[0]) + 1):
        f0 = math.comb(b[0], k0) * math.comb(c[0], k0) * math.factorial(k0)
        for k1_ in range(min(b[1], c[1]) + 1):
            f = f0 * math.comb(b[1], k1_) * math.comb(c[1], k1_) * math.factorial(k1_)
            k = (k0, k1_)
            out.append(((madd(a, msub(c, k)), madd(msub(b, k), d)), f))
    return out


class Weyl(LinComb):
    """Normally ordered differential operator with polynomial coefficients."""

    unit_key: WeylKey = ((0, 0), (0, 0))

    def _key_mul(self, k1, k2):
        return _weyl_key_mul(k1, k2)

    @classmethod
    def monomial(cls, t_exp: MultiIndex, d_exp: MultiIndex, c=1) -> "Weyl":
        if not (is_nonneg(t_exp) and is_nonneg(d_exp)):
            raise ValueError("Weyl exponents must be nonnegative")
        return cls({(t_exp, d_exp): Fraction(c)})

    @classmethod
    def t(cls, i: int) -> "Weyl":
        return cls.monomial((1, 0) if i == 1 else (0, 1), (0, 0))

    @classmethod
    def partial(cls, i: int) -> "Weyl":
        return cls.monomial((0, 0), (1, 0) if i == 1 else (0, 1))

    @classmethod
    def from_poly(cls, p: Poly2) -> "Weyl":
        return cls({(exp, (0, 0)): c for exp, c in p.terms.items()})

    @classmethod
    def from_vf(cls, x: VectorField) -> "Weyl":
        return cls({(exp, (1, 0) if i == 1 else (0, 1)): c for (exp, i), c in x.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (te, de) in sorted(self.terms):
            c = self.terms[(te, de)]
            factors = []
            for sym, e in (("t1", te[0]), ("t2", te[1]), ("p1", de[0]), ("p2", de[1])):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            body = "*".join(factors) or "1"
            if body == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def weyl_mul(x: Weyl, y: Weyl) -> Weyl:
    return x * y


class A2aVector:
    """Polynomial vector of the twisted module: the operator action sends
    d/dt_i to d/dt_i + a_i and fixes the t_i."""

    __slots__ = ("poly", "a")

    def __init__(self, poly: Poly2, a: tuple):
        self.poly = poly
        self.a = (Fraction(a[0]), Fraction(a[1]))

    def __eq__(self, other):
        return isinstance(other, A2aVector) and self.a == other.a and self.poly == other.poly

    def __repr__(self):
        return f"A2aVector({self.poly}, a={self.a})"


def a2a_act(x: Weyl, f: A2aVector) -> A2aVector:
    a1, a2 = f.a
    out = Poly2()
    for (te, de), c in x.terms.items():
        # (d/dt_1 + a1)^e1 (d/dt_2 + a2)^e2 applied to the polynomial
        p = f.poly
        acc = Poly2()
        for k0 in range(de[0] + 1):
            b0 = math.comb(de[0], k0) * a1 ** (de[0] - k0)
            if not b0:
                continue
            q = p
            for _ in range(k0):
                q = q.diff(1)
            for k1 in range(de[1] + 1):
                b = b0 * math.comb(de[1], k1) * a2 ** (de[1] - k1)
                if not b:
                    continue
                r = q
                for _ in range(k1):
                    r = r.diff(2)
                acc = acc + r * b
        out = out + Poly2.monomial(te) * acc * c
    return A2aVector(out, f.a)


TensorKey = tuple[WeylKey, Word]


class TensorAlg(LinComb):
    """Element of (Weyl algebra) x U(nonnegative part); the second factor is
    a PBW word over letters of degree >= 0."""

    unit_key: TensorKey = (((0, 0), (0, 0)), ())

    def _key_mul(self, k1: TensorKey, k2: TensorKey):
        (w1, u1), (w2, u2) = k1, k2
        out = []
        env = _nf(u1 + u2)
        for wk, wf in _weyl_key_mul(w1, w2):
            for word, uf in env.items():
                out.append(((wk, word), wf * uf))
        return out

    @classmethod
    def from_weyl(cls, x: Weyl) -> "TensorAlg":
        return cls({(k, ()): c for k, c in x.terms.items()})

    @classmethod
    def from_env(cls, u: UEnv) -> "TensorAlg":
        for word in u.terms:
            for letter in word:
                if letter_degree(letter) < 0:
                    raise ValueError("second tensor factor admits only letters of degree >= 0")
        return cls({(cls.unit_key[0], w): c for w, c in u.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (wk, word) in sorted(self.terms):
            c = self.terms[(wk, word)]
            left = str(Weyl({wk: Fraction(1)}))
            body = f"{left} (x) {word_str(word)}"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*[{body}]")
        return " + ".join(parts).replace("+ -", "- ")


def phi_t(beta: MultiIndex) -> TensorAlg:
    """phi of a polynomial generator."""
    if not is_nonneg(beta):
        raise ValueError(f"polynomial exponent must be nonnegative, got {beta}")
    return TensorAlg.from_weyl(Weyl.monomial(beta, (0, 0)))


def phi_poly(p: Poly2) -> TensorAlg:
    return TensorAlg.from_weyl(Weyl.from_poly(p))


def phi_d2() -> TensorAlg:
    return TensorAlg.from_weyl(Weyl.from_vf(VectorField.euler(2))) + TensorAlg.from_env(UEnv.d2())


def phi_L(alpha: MultiIndex) -> TensorAlg:
    """phi of L_alpha under the documented summation convention."""
    if not in_phi(alpha):
        raise ValueError(f"index {alpha} outside the L-index set")
    out = TensorAlg.from_weyl(Weyl.from_vf(l_basis(alpha)))
    top = madd(alpha, (1, 1))
    for r0 in range(0, top[0] + 1):
        for r1 in range(0, top[1] + 1):
            r = (r0, r1)
            res = msub(alpha, r)
            if mtotal(res) < 0 or res == (-1, -1):
                continue
            c = binom2(top, r)
            if not c:
                continue
            out = out + TensorAlg({(((r, (0, 0))), (L_letter(res),)): Fraction(c)})
    return out


def phi_sbar(x: Sbar) -> TensorAlg:
    out = TensorAlg()
    for letter, c in x.terms.items():
        img = phi_d2() if letter == D2 else phi_L(letter_alpha(letter))
        out = out + img * c
    return out


def phi_hom_check(x, y) -> TensorAlg:
    """Homomorphism discrepancy for a generator pair; zero iff compatible.

    Lie pair: phi([x,y]) - [phi(x), phi(y)]. Mixed pair: phi(x(t^b)) -
    [phi(x), phi(t^b)] with x acting as a derivation. Polynomial pair:
    phi(pq) - phi(p) phi(q).
    """
    from .lie import sbar_bracket

    if isinstance(x, Sbar) and isinstance(y, Sbar):
        lhs = phi_sbar(sbar_bracket(x, y))
        fx, fy = phi_sbar(x), phi_sbar(y)
        return lhs - (fx * fy - fy * fx)
    if isinstance(x, Sbar) and isinstance(y, Poly2):
        lhs = phi_poly(apply_to_poly(sbar_to_vf(x), y))
        fx, fy = phi_sbar(x), phi_poly(y)
        return lhs - (fx * fy - fy * fx)
    if isinstance(x, Poly2) and isinstance(y, Sbar):
        return -phi_hom_check(y, x)
    if isinstance(x, Poly2) and isinstance(y, Poly2):
        return phi_poly(x * y) - phi_poly(x) * phi_poly(y)
    raise TypeError("generators must be polynomial or Lie elements")
