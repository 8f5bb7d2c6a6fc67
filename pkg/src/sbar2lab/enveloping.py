"""PBW normal forms, the localization at the constant fields, and the
universal Whittaker module.

Words are flat non-decreasing tuples of letters under the order fixed in
``lie`` (d2, then L(a) with |a| >= 0 by (|a|, a1, a2), then the two degree -1
letters last). Putting the constant fields at the right end makes reduction
along the left ideal generated by (p1 - 1, p2 - 1) a pure tail substitution,
and lets localized elements store their p1/p2 powers as a separate integer
exponent pair.

The rewriting engine replaces an out-of-order adjacent pair xy by yx + [x,y];
every step either sorts a word or strictly shortens it, so it terminates, and
the memoized normal form is confluent (the diamond test in the suite compares
randomized rewrite schedules against it).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .base import LinComb, MultiIndex, as_scalar, gbinom
from .lie import (
    D2,
    L_letter,
    Letter,
    P1_LETTER,
    P2_LETTER,
    Sbar,
    is_partial_letter,
    letter_bracket,
    letter_str,
)

Word = tuple[Letter, ...]


class NilpotencyGuardError(RuntimeError):
    """An ad-expansion or inverse series exceeded its iteration cap (a bug)."""


_AD_CAP = 64


def pbw_engine(bracket):
    """Memoized normal-form function for a letter set with the given bracket.

    Letters must be tuples whose natural order is the PBW order; ``bracket``
    returns [(letter, int coefficient)] for any letter pair.
    """

    @cache
    def nf(word: Word) -> dict:
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if x > y:
                acc: dict = {}
                _merge(acc, nf(word[:i] + (y, x) + word[i + 2:]), Fraction(1))
                for letter, c in bracket(x, y):
                    _merge(acc, nf(word[:i] + (letter,) + word[i + 2:]), Fraction(c))
                return acc
        return {word: Fraction(1)}

    return nf


def _merge(acc: dict, other: dict, c: Fraction) -> None:
    if not c:
        return
    for key, v in other.items():
        s = acc.get(key, 0) + c * v
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)


_nf = pbw_engine(letter_bracket)


def word_str(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        s = letter_str(word[i])
        parts.append(s if j - i == 1 else f"{s}^{j - i}")
        i = j
    return "*".join(parts)


class UEnv(LinComb):
    """Enveloping-algebra element; keys are PBW-normal words."""

    unit_key: Word = ()

    def _key_mul(self, w1: Word, w2: Word):
        return _nf(w1 + w2).items()

    @classmethod
    def letter(cls, letter: Letter) -> "UEnv":
        return cls({(letter,): Fraction(1)})

    @classmethod
    def L(cls, alpha: MultiIndex) -> "UEnv":
        return cls.letter(L_letter(alpha))

    @classmethod
    def d2(cls) -> "UEnv":
        return cls.letter(D2)

    @classmethod
    def d1(cls) -> "UEnv":
        return cls({(L_letter((0, 0)),): Fraction(1), (D2,): Fraction(1)})

    @classmethod
    def partial(cls, i: int) -> "UEnv":
        """d/dt_i as an element: the letter for i=1, minus the letter for i=2."""
        if i == 1:
            return cls({(P1_LETTER,): Fraction(1)})
        return cls({(P2_LETTER,): Fraction(-1)})

    @classmethod
    def from_sbar(cls, x: Sbar) -> "UEnv":
        return cls({(letter,): c for letter, c in x.terms.items()})

    def has_partials(self) -> bool:
        return any(is_partial_letter(l) for w in self.terms for l in w)

    def __str__(self):
        return _comb_str(self.terms, word_str)


def _comb_str(terms: dict, key_str) -> str:
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms):
        c = terms[key]
        body = key_str(key)
        if body == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


def pbw_normalize(seq, c=1) -> UEnv:
    """Normal form of a coefficient times an arbitrary letter sequence."""
    return UEnv({w: v for w, v in _nf(tuple(seq)).items()}) * as_scalar(c)


def pbw_normalize_schedule(seq, rng, c=1) -> UEnv:
    """Like pbw_normalize but resolving pairs in an rng-chosen order.

    Independent of the memoized engine; used to exercise confluence.
    """
    pending: list[tuple[Word, Fraction]] = [(tuple(seq), as_scalar(c))]
    done: dict = {}
    while pending:
        word, coeff = pending.pop(rng.randrange(len(pending)))
        bad = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
        if not bad:
            s = done.get(word, 0) + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        i = bad[rng.randrange(len(bad))]
        x, y = word[i], word[i + 1]
        pending.append((word[:i] + (y, x) + word[i + 2:], coeff))
        for letter, k in letter_bracket(x, y):
            pending.append((word[:i] + (letter,) + word[i + 2:], coeff * k))
    return UEnv(done)


def u_mul(x: UEnv, y: UEnv) -> UEnv:
    return x * y


def split_tail_partials(word: Word) -> tuple[Word, int, int, int]:
    """Split a normal word into (head, m1, m2, sign).

    The word equals head * p1^m1 * p2^m2 times sign, where sign = (-1)^m2
    accounts for the second degree -1 letter being minus d/dt_2.
    """
    n = len(word)
    m2 = 0
    while n and word[n - 1] == P2_LETTER:
        m2 += 1
        n -= 1
    m1 = 0
    while n and word[n - 1] == P1_LETTER:
        m1 += 1
        n -= 1
    return word[:n], m1, m2, (-1) ** m2


LocKey = tuple[Word, MultiIndex]


class Loc(LinComb):
    """Localized element; keys are (head word without constant-field letters,
    integer exponent pair of p1/p2 on the right)."""

    unit_key: LocKey = ((), (0, 0))

    @classmethod
    def from_uenv(cls, x: UEnv) -> "Loc":
        out: dict = {}
        for word, c in x.terms.items():
            head, m1, m2, sign = split_tail_partials(word)
            key = (head, (m1, m2))
            s = out.get(key, 0) + sign * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return cls(out)

    @classmethod
    def partial(cls, i: int, exp: int = 1) -> "Loc":
        return cls({((), (exp, 0) if i == 1 else (0, exp)): Fraction(1)})

    def to_uenv(self) -> UEnv:
        out: dict = {}
        for (head, (m1, m2)), c in self.terms.items():
            if m1 < 0 or m2 < 0:
                raise ValueError("element has negative constant-field exponents")
            word = head + (P1_LETTER,) * m1 + (P2_LETTER,) * m2
            s = out.get(word, 0) + (-1) ** m2 * c
            if s:
                out[word] = s
            else:
                out.pop(word, None)
        return UEnv(out)

    def _key_mul(self, k1: LocKey, k2: LocKey):
        (h1, m1), (h2, m2) = k1, k2
        passed = _partials_past_word(m1, h2)
        out = []
        left = UEnv({h1: Fraction(1)})
        for (head, mid), c in passed.items():
            prod = left * UEnv({head: Fraction(1)})
            exp = (mid[0] + m2[0], mid[1] + m2[1])
            for word, cc in prod.terms.items():
                out.append(((word, exp), c * cc))
        return out

    def __str__(self):
        def key_str(key):
            head, (m1, m2) = key
            parts = []
            if head:
                parts.append(word_str(head))
            if m1:
                parts.append("p1" if m1 == 1 else f"p1^{m1}")
            if m2:
                parts.append("p2" if m2 == 1 else f"p2^{m2}")
            return "*".join(parts) if parts else "1"

        return _comb_str(self.terms, key_str)


def _ad_partial(i: int, x: UEnv) -> UEnv:
    """[d/dt_i, x] in the enveloping algebra."""
    p = UEnv.partial(i)
    return p * x - x * p


@cache
def _partials_past_word(m: MultiIndex, word: Word) -> dict:
    """Rewrite p^m * word as sum of head * p^k, i.e. commute the constant
    fields across a head word.

    Uses p_i^m u = sum_k C(m, k) (ad p_i)^k(u) p_i^(m-k), valid for negative
    m with generalized binomials; the series is finite because each ad
    application lowers total degree (guarded).
    """
    out: dict = {}
    u = UEnv({word: Fraction(1)})
    ads1 = [u]
    while not ads1[-1].is_zero():
        ads1.append(_ad_partial(1, ads1[-1]))
        if len(ads1) > _AD_CAP:
            raise NilpotencyGuardError("ad p1 chain failed to terminate")
    for k1, u1 in enumerate(ads1[:-1]):
        b1 = gbinom(m[0], k1)
        if not b1:
            continue
        ads2 = [u1]
        while not ads2[-1].is_zero():
            ads2.append(_ad_partial(2, ads2[-1]))
            if len(ads2) > _AD_CAP:
                raise NilpotencyGuardError("ad p2 chain failed to terminate")
        for k2, u2 in enumerate(ads2[:-1]):
            b2 = gbinom(m[1], k2)
            if not b2:
                continue
            for w, c in u2.terms.items():
                head, a1, a2, sign = split_tail_partials(w)
                key = (head, (m[0] - k1 + a1, m[1] - k2 + a2))
                s = out.get(key, 0) + sign * b1 * b2 * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def loc_mul(x: Loc, y: Loc) -> Loc:
    return x * y


class Q1(LinComb):
    """Residue class in the universal Whittaker module; keys are words
    without constant-field letters, acting on the cyclic vector."""

    unit_key: Word = ()

    @classmethod
    def cyclic(cls) -> "Q1":
        """The cyclic Whittaker vector itself."""
        return cls({(): Fraction(1)})

    def lift(self) -> UEnv:
        return UEnv(dict(self.terms))

    def __str__(self):
        def key_str(word):
            return "1" if not word else word_str(word)

        body = _comb_str(self.terms, key_str)
        if len(self.terms) > 1:
            body = f"({body})"
        return body + " * v1"


def reduce_mod_I1(x: UEnv) -> Q1:
    """Normal form of x acting on the cyclic vector: substitute both constant
    fields by 1 at the right end of each word (the second letter carries a
    sign per power)."""
    out: dict = {}
    for word, c in x.terms.items():
        head, _m1, _m2, sign = split_tail_partials(word)
        s = out.get(head, 0) + sign * c
        if s:
            out[head] = s
        else:
            out.pop(head, None)
    return Q1(out)


def _q1_partial_inverse(i: int, q: Q1) -> Q1:
    """Action of p_i^(-1): the geometric series in (p_i - 1), finite because
    p_i - 1 strictly lowers the filtration degree on the module (guarded)."""
    p = UEnv.partial(i)
    total = q
    term = q
    for _ in range(_AD_CAP):
        term = term - reduce_mod_I1(p * term.lift())
        if term.is_zero():
            return total
        total = total + term
    raise NilpotencyGuardError("p_i - 1 series failed to terminate on the module")


def q1_act(x, q: Q1) -> Q1:
    """Left action of an enveloping or localized element on the module."""
    if isinstance(x, UEnv):
        return reduce_mod_I1(x * q.lift())
    if isinstance(x, Loc):
        out = Q1()
        for (head, (m1, m2)), c in x.terms.items():
            v = q
            for i, m in ((2, m2), (1, m1)):
                if m >= 0:
                    for _ in range(m):
                        v = reduce_mod_I1(UEnv.partial(i) * v.lift())
                else:
                    for _ in range(-m):
                        v = _q1_partial_inverse(i, v)
            v = reduce_mod_I1(UEnv({head: Fraction(1)}) * v.lift())
            out = out + v * c
        return out
    raise TypeError(f"cannot act with {type(x).__name__} on the module")
