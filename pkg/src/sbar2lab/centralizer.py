"""The centralizer of the Cartan and constant fields inside the localization.

For each index a in Z^2_{>=-1} with |a| >= 0, a != 0, the element

    Y_a = L_a p^a
        + sum_(0 <= |b| < |a|, b != 0) (-1)^(|a-b|) C(a+1, b+1) L_b
              prod_(m=0..a1-b1-1)(d1 - m) prod_(m=0..a2-b2-1)(d2 - m) p^b
        + g_0(d1, d2)

commutes with p1, p2, d1, d2; the commutators are computed (not assumed) by
the localized product. Deleting the trailing p^b factors gives the
realization xi(Y_a) inside the nonnegative enveloping algebra, and pushing
that through the degree-zero identification (positive-degree letters to zero)
gives the operator image pi1(Y_a) on gl_2-modules.

The coefficient polynomials g_b satisfy two first-difference recurrences
(exercised as exact polynomial identities in the suite); a reversed product
range can only occur in a term whose scalar prefactor vanishes, and such
terms are skipped before the product is formed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .base import MultiIndex, Poly2, binom2, mtotal
from .enveloping import Loc, Q1, UEnv, q1_act, reduce_mod_I1
from .gl2 import Gl2Module, Gl2Poly, Matrix, gl2_simple, pi_env
from .linalg import EchelonSpan, solve
from .tmodule import TVector, act_loc, act_partial

#: generator indices in the fixed monomial order (|a|, a1, a2)
H_GENERATORS: tuple[MultiIndex, ...] = ((-1, 1), (1, -1), (0, 1), (1, 0))


def _check_y_index(alpha: MultiIndex) -> None:
    if alpha[0] < -1 or alpha[1] < -1 or mtotal(alpha) < 0 or alpha == (0, 0):
        raise ValueError(f"index {alpha} outside the Y-element range")


def falling(i: int, lo: int, hi: int) -> Poly2:
    """prod_(m=lo..hi) (d_i - m), the empty or reversed range being 1."""
    out = Poly2.one()
    var = Poly2.variable(i)
    for m in range(lo, hi + 1):
        out = out * (var - Poly2.const(m))
    return out


def g_poly(alpha: MultiIndex, beta: MultiIndex) -> Poly2:
    """Coefficient polynomial of L_b inside Y_a, for b != 0, 0 <= |b| <= |a|.

    At |b| = |a| this reduces to 1 for b = a and 0 otherwise, so the same
    expression covers the leading coefficient.
    """
    _check_y_index(alpha)
    if beta == (0, 0) or mtotal(beta) < 0 or mtotal(beta) > mtotal(alpha):
        raise ValueError(f"index {beta} out of range for {alpha}")
    c = binom2((alpha[0] + 1, alpha[1] + 1), (beta[0] + 1, beta[1] + 1))
    if not c:
        return Poly2()
    sign = (-1) ** (mtotal(alpha) - mtotal(beta))
    p = falling(1, 0, alpha[0] - beta[0] - 1) * falling(2, 0, alpha[1] - beta[1] - 1)
    return p * (sign * c)


def g0_poly(alpha: MultiIndex) -> Poly2:
    """The constant-letter tail of Y_a (a polynomial in d1, d2)."""
    _check_y_index(alpha)
    sign = (-1) ** mtotal(alpha)
    out = Poly2()
    c1 = alpha[0] * (alpha[1] + 1)
    if c1:
        p = falling(1, -1, alpha[0] - 1) * falling(2, 0, alpha[1] - 1)
        out = out + p * (sign * c1)
    c2 = (alpha[0] + 1) * alpha[1]
    if c2:
        p = falling(1, 0, alpha[0] - 1) * falling(2, -1, alpha[1] - 1)
        out = out + p * (-sign * c2)
    return out


def dpoly_to_uenv(p: Poly2) -> UEnv:
    """Expand a polynomial in d1, d2 through the letter basis."""
    out = UEnv()
    for (i, j), c in p.terms.items():
        out = out + (UEnv.d1() ** i * UEnv.d2() ** j) * c
    return out


def _beta_range(alpha: MultiIndex):
    """Indices b with 0 <= |b| < |a|, b != 0, inside Z^2_{>=-1}; componentwise
    the binomial support bounds b_i <= a_i + 1."""
    for b1 in range(-1, alpha[0] + 2):
        for b2 in range(-1, alpha[1] + 2):
            beta = (b1, b2)
            if beta == (0, 0):
                continue
            if 0 <= mtotal(beta) < mtotal(alpha):
                yield beta


def y_terms(alpha: MultiIndex) -> list[tuple[UEnv, MultiIndex]]:
    """The displayed terms of Y_a as (head in the enveloping algebra, trailing
    p-exponent) pairs; dropping the exponents yields xi(Y_a)."""
    _check_y_index(alpha)
    terms: list[tuple[UEnv, MultiIndex]] = [(UEnv.L(alpha), alpha)]
    for beta in _beta_range(alpha):
        g = g_poly(alpha, beta)
        if g.is_zero():
            continue
        terms.append((UEnv.L(beta) * dpoly_to_uenv(g), beta))
    g0 = g0_poly(alpha)
    if not g0.is_zero():
        terms.append((dpoly_to_uenv(g0), (0, 0)))
    return terms


def y_element(alpha: MultiIndex) -> Loc:
    out: dict = {}
    for env, beta in y_terms(alpha):
        for word, c in env.terms.items():
            key = (word, beta)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return Loc(out)


def xi_y(alpha: MultiIndex) -> UEnv:
    out = UEnv()
    for env, _beta in y_terms(alpha):
        out = out + env
    return out


def centralizer_check(alpha: MultiIndex) -> dict[str, Loc]:
    """All four commutators [x, Y_a] for x in {p1, p2, d1, d2}; membership in
    the centralizer holds iff each is zero."""
    y = y_element(alpha)
    probes = {
        "p1": Loc.partial(1),
        "p2": Loc.partial(2),
        "d1": Loc.from_uenv(UEnv.d1()),
        "d2": Loc.from_uenv(UEnv.d2()),
    }
    return {name: x * y - y * x for name, x in probes.items()}


def xi_q1_consistency(alpha: MultiIndex) -> tuple[Q1, Q1]:
    """Both routes from Y_a to its action on the cyclic vector: through the
    localization and through xi; equal by construction of xi."""
    via_y = q1_act(y_element(alpha), Q1.cyclic())
    via_xi = reduce_mod_I1(xi_y(alpha))
    return via_y, via_xi


def whittaker_stability_defect(alpha: MultiIndex) -> tuple[Q1, Q1]:
    """(p_i - 1) applied to xi(Y_a) v; both must vanish for the image to lie
    in the Whittaker-invariant subalgebra."""
    base = reduce_mod_I1(xi_y(alpha))
    out = []
    for i in (1, 2):
        moved = q1_act(UEnv.partial(i), base)
        out.append(moved - base)
    return out[0], out[1]


def pi1(alpha: MultiIndex, lam=None) -> tuple[Gl2Poly, Matrix | None]:
    """Operator image of Y_a: the degree-zero truncation of xi(Y_a) pushed
    through the identification, in canonical form; optionally evaluated on
    the module with highest weight lam."""
    formal = pi_env(xi_y(alpha)).normalized()
    if lam is None:
        return formal, None
    module = gl2_simple(lam)
    return formal, formal.evaluate(module)


def whittaker_basis(module: Gl2Module, a=(1, 1)) -> list[TVector]:
    """The constant vectors 1 x v_k, checked to be Whittaker vectors."""
    basis = []
    for k in range(module.dim):
        w = TVector.basis(module, a, (0, 0), k)
        for i in (1, 2):
            if not (act_partial(i, w) - w * Fraction(a[i - 1])).is_zero():
                raise AssertionError("constant vector is not a Whittaker vector")
        basis.append(w)
    return basis


def wh_action_compare(alpha: MultiIndex, lam) -> tuple[Matrix, Matrix, bool]:
    """Matrix of Y_a on the Whittaker vectors of the type-1 tensor module
    versus the operator image on the module itself."""
    module = gl2_simple(lam)
    basis = whittaker_basis(module)
    cols = []
    for w in basis:
        image = act_loc(y_element(alpha), w)
        col = [Fraction(0)] * module.dim
        for (beta, k), c in image.terms.items():
            if beta != (0, 0):
                raise AssertionError("Y did not preserve the Whittaker space")
            col[k] = c
        cols.append(col)
    mat_y = tuple(tuple(cols[j][i] for j in range(module.dim)) for i in range(module.dim))
    _formal, mat_pi = pi1(alpha, lam)
    return mat_y, mat_pi, mat_y == mat_pi


def _ordered_monomials(indices: list[MultiIndex], max_len: int):
    """Non-decreasing index words up to the length cap, empty word included."""
    order = sorted(indices, key=lambda a: (mtotal(a), a[0], a[1]))
    words: list[tuple[MultiIndex, ...]] = [()]
    frontier: list[tuple[MultiIndex, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for word in frontier:
            start = order.index(word[-1]) if word else 0
            for idx in order[start:]:
                nxt.append(word + (idx,))
        words.extend(nxt)
        frontier = nxt
    return words


def _monomial_value(word: tuple[MultiIndex, ...]) -> Loc:
    out = Loc.one()
    for idx in word:
        out = out * y_element(idx)
    return out


def y_basis_probe(indices: list[MultiIndex], max_len: int) -> dict:
    """Exact rank of the ordered monomials in the given Y's inside the
    localization; full rank witnesses their independence."""
    words = _ordered_monomials(list(indices), max_len)
    span = EchelonSpan()
    for word in words:
        span.add(dict(_monomial_value(word).terms))
    return {"count": len(words), "rank": span.rank, "full": span.rank == len(words)}


def y_generation_search(alpha: MultiIndex, max_len: int):
    """Exact linear solve for Y_a inside the span of words in the four
    generators, trying each length cap in turn. Returns the decomposition as
    a {word: coefficient} dict, or None when the bounded search is
    inconclusive.

    Generation is a statement about arbitrary products, so the search spans
    all words, not only the fixed-order monomials of the basis probes (the
    ordered monomials in the four generators alone provably miss Y_(1,1)).
    """
    target = y_element(alpha)
    words: list[tuple[MultiIndex, ...]] = [()]
    for length in range(1, max_len + 1):
        words.extend(itertools.product(H_GENERATORS, repeat=length))
        values = [_monomial_value(w) for w in words]
        keys = sorted({k for v in values for k in v.terms} | set(target.terms))
        columns = [[v.terms.get(k, Fraction(0)) for k in keys] for v in values]
        rhs = [target.terms.get(k, Fraction(0)) for k in keys]
        sol = solve(columns, rhs)
        if sol is not None:
            return {words[j]: sol[j] for j in range(len(words)) if sol[j]}
    return None
