"""Exact scalars, multi-indices, bivariate polynomials, and linear combinations.

Everything in the package is computed over the rationals with
``fractions.Fraction``; no floats are accepted anywhere, so every equality
test downstream is exact. Multi-indices are plain ``(int, int)`` tuples and
each consuming operation enforces its own range at its boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction

Scalar = Fraction

MultiIndex = tuple[int, int]

E1: MultiIndex = (1, 0)
E2: MultiIndex = (0, 1)


def as_scalar(x) -> Fraction:
    """Coerce an int or Fraction; reject anything inexact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def comb0(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gbinom(m: int, k: int) -> int:
    """C(m, k) for integer m of either sign, k >= 0; C(-n, k) = (-1)^k C(n+k-1, k)."""
    if k < 0:
        raise ValueError("lower binomial index must be nonnegative")
    if m >= 0:
        return comb0(m, k)
    return (-1) ** k * math.comb(-m + k - 1, k)


def binom2(upper: MultiIndex, lower: MultiIndex) -> int:
    """Componentwise product C(u1, l1) C(u2, l2), zero outside the range."""
    return comb0(upper[0], lower[0]) * comb0(upper[1], lower[1])


def madd(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return (a[0] + b[0], a[1] + b[1])


def msub(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return (a[0] - b[0], a[1] - b[1])


def mtotal(a: MultiIndex) -> int:
    return a[0] + a[1]


def is_nonneg(a: MultiIndex) -> bool:
    return a[0] >= 0 and a[1] >= 0


def in_phi(a: MultiIndex) -> bool:
    """Membership in the index set Z^2_{>=-1} minus the corner (-1,-1)."""
    return a[0] >= -1 and a[1] >= -1 and a != (-1, -1)


class LinComb:
    """Immutable finite linear combination of hashable keys over the rationals.

    Subclasses fix the key shape (monomial fields, PBW words, ...) and, when
    the keys multiply, provide ``_key_mul``. Addition, scalar action and
    equality are shared. Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    #: key of the multiplicative unit, for subclasses with a product
    unit_key = None

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            c = as_scalar(c)
            if not c:
                continue
            prev = acc.get(key)
            if prev is None:
                acc[key] = c
            else:
                s = prev + c
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        self.terms = acc

    # subclasses carrying metadata override this construction hook
    def _new(self, terms):
        return type(self)(terms)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        if cls.unit_key is None:
            raise TypeError(f"{cls.__name__} has no multiplicative unit")
        return cls({cls.unit_key: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        merged = dict(self.terms)
        for key, c in other.terms.items():
            s = merged.get(key, 0) + c
            if s:
                merged[key] = s
            else:
                merged.pop(key, None)
        return self._new(merged)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def _scale(self, c):
        c = as_scalar(c)
        if not c:
            return self._new({})
        return self._new({k: c * v for k, v in self.terms.items()})

    def _key_mul(self, k1, k2):
        raise TypeError(f"{type(self).__name__} has no product")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        if type(other) is type(self):
            out = []
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    c = c1 * c2
                    for key, f in self._key_mul(k1, k2):
                        out.append((key, c * f))
            return self._new(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"


def bilinear(x: LinComb, y: LinComb, key_fn, out):
    """Bilinear extension of ``key_fn(k1, k2) -> iterable[(key, factor)]``."""
    acc = []
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            c = c1 * c2
            for key, f in key_fn(k1, k2):
                acc.append((key, c * f))
    return out(acc)


class Poly2(LinComb):
    """Commutative polynomial in two symbols, keys = bidegrees in Z_+^2.

    The same representation serves polynomials in t1, t2 (vector field
    coefficients, divergences) and in d1, d2 (the coefficient polynomials of
    the centralizer elements); only the print symbols differ.
    """

    unit_key = (0, 0)

    def _key_mul(self, k1, k2):
        return ((madd(k1, k2), 1),)

    @classmethod
    def const(cls, c) -> "Poly2":
        return cls({(0, 0): as_scalar(c)})

    @classmethod
    def monomial(cls, exp: MultiIndex, c=1) -> "Poly2":
        if not is_nonneg(exp):
            raise ValueError(f"monomial exponent must be nonnegative, got {exp}")
        return cls({exp: as_scalar(c)})

    @classmethod
    def variable(cls, i: int) -> "Poly2":
        return cls.monomial(E1 if i == 1 else E2)

    def shift(self, delta: MultiIndex) -> "Poly2":
        """Substitute (x, y) -> (x + delta1, y + delta2), expanded exactly."""
        out = []
        d1, d2 = as_scalar(delta[0]), as_scalar(delta[1])
        for (i, j), c in self.terms.items():
            for k in range(i + 1):
                for l in range(j + 1):
                    out.append(((k, l), c * comb0(i, k) * comb0(j, l) * d1 ** (i - k) * d2 ** (j - l)))
        return Poly2(out)

    def diff(self, i: int) -> "Poly2":
        out = []
        for exp, c in self.terms.items():
            e = exp[i - 1]
            if e > 0:
                out.append((msub(exp, E1 if i == 1 else E2), c * e))
        return Poly2(out)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mtotal(e) for e in self.terms)

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_value(self) -> Fraction:
        return self.coeff((0, 0))

    def to_str(self, sym1: str = "t1", sym2: str = "t2") -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (mtotal(e), e)):
            c = self.terms[exp]
            factors = []
            for s, e in ((sym1, exp[0]), (sym2, exp[1])):
                if e == 1:
                    factors.append(s)
                elif e > 1:
                    factors.append(f"{s}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __str__(self):
        return self.to_str()


def poly_mul(p: Poly2, q: Poly2) -> Poly2:
    return p * q


def poly_shift(p: Poly2, delta: MultiIndex) -> Poly2:
    return p.shift(delta)
