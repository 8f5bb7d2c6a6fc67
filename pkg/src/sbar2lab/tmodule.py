"""Whittaker tensor modules with exact truncated actions.

A module vector is a finite combination of t^b x v_k over the polynomial
exponents b and the weight basis of a fixed simple gl_2-module; it carries
its type vector a. A basis letter acts through

    L_a (p x v) = L_a p x v + (1+a1)(1+a2) t^a p x (E11 - E22) v
                + a2 (1+a2) t^(a+e1-e2) p x E21 v
                - a1 (1+a1) t^(a+e2-e1) p x E12 v
    d2  (p x v) = d2 p x v + p x E22 v

where the polynomial factor is acted on with d/dt_i shifted by a_i. Whenever
one of the exponent shifts leaves Z_+^2 its scalar prefactor vanishes, so the
displayed formula needs no boundary cases. Degree-lowering operators act
exactly; the closure probe projects onto a degree window and reports
dimensions only where the projection cannot have discarded contributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base import E1, E2, LinComb, MultiIndex, comb0, madd, msub, mtotal
from .enveloping import Loc, NilpotencyGuardError, UEnv, Word, _AD_CAP
from .gl2 import Gl2Module, mat_mul, mat_identity, pi_letter
from .lie import D2, L_letter, Letter, Sbar, l_basis, letter_degree
from .linalg import EchelonSpan, nullspace

TKey = tuple[MultiIndex, int]  # (polynomial exponent, weight basis index)


class TVector(LinComb):
    """Module vector; carries the type vector and the module descriptor."""

    __slots__ = ("a", "module")

    def __init__(self, terms=(), *, a, module: Gl2Module):
        super().__init__(terms)
        self.a = (Fraction(a[0]), Fraction(a[1]))
        self.module = module

    def _new(self, terms):
        return TVector(terms, a=self.a, module=self.module)

    @classmethod
    def basis(cls, module: Gl2Module, a, beta: MultiIndex, k: int) -> "TVector":
        if not (0 <= k < module.dim):
            raise ValueError(f"weight index {k} out of range for dim {module.dim}")
        if beta[0] < 0 or beta[1] < 0:
            raise ValueError(f"polynomial exponent must be nonnegative, got {beta}")
        return cls({(beta, k): Fraction(1)}, a=a, module=module)

    @classmethod
    def zero_of(cls, module: Gl2Module, a) -> "TVector":
        return cls((), a=a, module=module)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.terms == other.terms
            and self.a == other.a
            and self.module.lam == other.module.lam
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.a, self.module.lam))

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mtotal(b) for b, _ in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (beta, k) in sorted(self.terms, key=lambda key: (mtotal(key[0]), key[0], key[1])):
            c = self.terms[(beta, k)]
            mono = []
            for sym, e in (("t1", beta[0]), ("t2", beta[1])):
                if e == 1:
                    mono.append(sym)
                elif e > 1:
                    mono.append(f"{sym}^{e}")
            body = ("*".join(mono) + "*" if mono else "") + f"v{k}"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


# recipe: letter -> (field part [(gamma, i, coeff)], gl part [(shift, (i,j), coeff)])
_RECIPES: dict[Letter, tuple] = {}


def _letter_recipe(letter: Letter):
    rec = _RECIPES.get(letter)
    if rec is not None:
        return rec
    if letter == D2:
        fields = [(E2, 2, Fraction(1))]
        gl = [((0, 0), (2, 2), Fraction(1))]
    else:
        alpha = (letter[2], letter[3])
        fields = [((exp), i, c) for (exp, i), c in l_basis(alpha).terms.items()]
        gl = []
        c0 = Fraction((1 + alpha[0]) * (1 + alpha[1]))
        if c0:
            gl.append((alpha, (1, 1), c0))
            gl.append((alpha, (2, 2), -c0))
        c21 = Fraction(alpha[1] * (1 + alpha[1]))
        if c21:
            gl.append((madd(alpha, (1, -1)), (2, 1), c21))
        c12 = Fraction(-alpha[0] * (1 + alpha[0]))
        if c12:
            gl.append((madd(alpha, (-1, 1)), (1, 2), c12))
    _RECIPES[letter] = (fields, gl)
    return fields, gl


def act_letter(letter: Letter, w: TVector) -> TVector:
    fields, gl = _letter_recipe(letter)
    a = w.a
    out: dict = {}

    def put(key, c):
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (beta, k), c in w.terms.items():
        for gamma, i, f in fields:
            e = beta[i - 1]
            if e:
                put((madd(msub(beta, E1 if i == 1 else E2), gamma), k), c * f * e)
            ai = a[i - 1]
            if ai:
                put((madd(beta, gamma), k), c * f * ai)
        for shift, ij, g in gl:
            exp = madd(beta, shift)
            for kk, m in w.module.column(ij, k):
                put((exp, kk), c * g * m)
    return w._new(out)


def act_sbar(x: Sbar, w: TVector) -> TVector:
    out = w._new({})
    for letter, c in x.terms.items():
        out = out + act_letter(letter, w) * c
    return out


def act_word(word: Word, w: TVector) -> TVector:
    for letter in reversed(word):
        w = act_letter(letter, w)
    return w


def act_uenv(u: UEnv, w: TVector) -> TVector:
    out = w._new({})
    for word, c in u.terms.items():
        out = out + act_word(word, w) * c
    return out


def act_partial(i: int, w: TVector) -> TVector:
    """Module action of d/dt_i (the shifted derivative on the polynomial part)."""
    ai = w.a[i - 1]
    out: dict = {}
    for (beta, k), c in w.terms.items():
        e = beta[i - 1]
        if e:
            key = (msub(beta, E1 if i == 1 else E2), k)
            s = out.get(key, 0) + c * e
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        if ai:
            key = (beta, k)
            s = out.get(key, 0) + c * ai
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return w._new(out)


def act_partial_inverse(i: int, w: TVector) -> TVector:
    """Inverse of the shifted derivative; needs a_i != 0, and the geometric
    series in the plain derivative is finite on polynomials."""
    ai = w.a[i - 1]
    if not ai:
        raise ValueError(f"localized action needs a_{i} != 0")
    inv = 1 / ai
    term = w * inv
    total = term
    for _ in range(_AD_CAP):
        diffed: dict = {}
        for (beta, k), c in term.terms.items():
            e = beta[i - 1]
            if e:
                key = (msub(beta, E1 if i == 1 else E2), k)
                diffed[key] = diffed.get(key, 0) + c * e
        term = w._new(diffed) * (-inv)
        if term.is_zero():
            return total
        total = total + term
    raise NilpotencyGuardError("derivative series failed to terminate on polynomials")


def act_loc(x: Loc, w: TVector) -> TVector:
    out = w._new({})
    for (head, (m1, m2)), c in x.terms.items():
        v = w
        for i, m in ((2, m2), (1, m1)):
            if m >= 0:
                for _ in range(m):
                    v = act_partial(i, v)
            else:
                for _ in range(-m):
                    v = act_partial_inverse(i, v)
        v = act_word(head, v)
        out = out + v * c
    return out


def t_act(x, w: TVector) -> TVector:
    """Action dispatcher for basis elements, enveloping words, or localized
    elements."""
    if isinstance(x, Sbar):
        return act_sbar(x, w)
    if isinstance(x, UEnv):
        return act_uenv(x, w)
    if isinstance(x, Loc):
        return act_loc(x, w)
    raise TypeError(f"cannot act with {type(x).__name__} on a tensor module")


def act_tensoralg(el, w: TVector) -> TVector:
    """Action of an element of (Weyl) x U(nonnegative part): the Weyl factor
    acts on the polynomial with shifted derivatives, the second factor through
    the degree-zero identification with positive-degree letters acting by 0.

    Cross-validates the displayed letter action against the generator images.
    """
    a = w.a
    module = w.module
    out = w._new({})
    for ((te, de), word), c in el.terms.items():
        if any(letter_degree(l) >= 1 for l in word):
            continue
        mat = mat_identity(module.dim)
        for letter in word:
            mat = mat_mul(mat, pi_letter(letter).evaluate(module))
        acc: dict = {}
        for (beta, k), cw in w.terms.items():
            polys = [(beta, cw)]
            for i in (1, 2):
                e = de[i - 1]
                if not e:
                    continue
                nxt = []
                for bexp, bc in polys:
                    b = bexp[i - 1]
                    for kk in range(min(e, b) + 1):
                        f = comb0(e, kk) * a[i - 1] ** (e - kk)
                        if not f:
                            continue
                        fall = 1
                        for step in range(kk):
                            fall *= b - step
                        newexp = (bexp[0] - kk, bexp[1]) if i == 1 else (bexp[0], bexp[1] - kk)
                        nxt.append((newexp, bc * f * fall))
                polys = nxt
            for bexp, bc in polys:
                texp = madd(bexp, te)
                for kk in range(module.dim):
                    if mat[kk][k]:
                        key = (texp, kk)
                        acc[key] = acc.get(key, 0) + bc * mat[kk][k]
        out = out + w._new(acc) * c
    return out


def slice_keys(module: Gl2Module, degree: int) -> list[TKey]:
    keys = []
    for d in range(degree + 1):
        for b1 in range(d + 1):
            beta = (b1, d - b1)
            for k in range(module.dim):
                keys.append((beta, k))
    return keys


def whittaker_space(module: Gl2Module, a, degree: int) -> list[TVector]:
    """Exact joint kernel of the shifted operators x - a_i on the degree
    slice; the slice is operator-stable, so the answer is exact for every
    truncation degree."""
    ops = [lambda v: act_partial(1, v), lambda v: act_partial(2, v)]
    return joint_kernel(module, a, degree, list(zip(ops, (Fraction(a[0]), Fraction(a[1])))))


def joint_kernel(module: Gl2Module, a, degree: int, ops) -> list[TVector]:
    """Basis of the common kernel of (op - scalar) pairs on the degree slice.

    Each op must map the slice into itself (degree-nonincreasing).
    """
    keys = slice_keys(module, degree)
    index = {key: pos for pos, key in enumerate(keys)}
    rows: list[list[Fraction]] = []
    for op, scalar in ops:
        cols = []
        for key in keys:
            v = op(TVector({key: Fraction(1)}, a=a, module=module))
            coords = dict(v.terms)
            coords[key] = coords.get(key, Fraction(0)) - scalar
            if any(k not in index for k in coords):
                raise ValueError("operator left the degree slice")
            cols.append(coords)
        for out_key in keys:
            row = [cols[j].get(out_key, Fraction(0)) for j in range(len(keys))]
            if any(row):
                rows.append(row)
    basis = nullspace(rows, len(keys))
    out = []
    for vec in basis:
        terms = {keys[j]: vec[j] for j in range(len(keys)) if vec[j]}
        out.append(TVector(terms, a=a, module=module))
    return out


def h_monomial_env(m: MultiIndex) -> UEnv:
    """d1^m1 d2^m2 expanded into the letter basis."""
    return UEnv.d1() ** m[0] * UEnv.d2() ** m[1]


def uh_freeness_check(module: Gl2Module, a, degree: int) -> dict:
    """Rank of the Cartan translates of the constant vectors up to total
    degree ``degree``; full rank witnesses freeness on the window."""
    a = (Fraction(a[0]), Fraction(a[1]))
    if not (a[0] and a[1]):
        raise ValueError("freeness check needs a nonsingular type vector")
    vectors = []
    count = 0
    for m1 in range(degree + 1):
        for m2 in range(degree + 1 - m1):
            env = h_monomial_env((m1, m2))
            count += 1
            for k in range(module.dim):
                w = act_uenv(env, TVector.basis(module, a, (0, 0), k))
                vectors.append(dict(w.terms))
    span = EchelonSpan()
    for v in vectors:
        span.add(v)
    expected = count * module.dim
    return {
        "rank": span.rank,
        "expected": expected,
        "monomials": count,
        "dim": module.dim,
        "full": span.rank == expected,
    }


@dataclass(frozen=True)
class SigmaOp:
    """Alternating two-letter operator; the corner index acts as zero."""

    m: int
    j: int
    alpha: MultiIndex
    beta: MultiIndex

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("order must be nonnegative")
        if self.j not in (1, 2):
            raise ValueError("direction must be 1 or 2")
        for idx in (self.alpha, self.beta):
            if idx[0] < -1 or idx[1] < -1:
                raise ValueError(f"index {idx} below the allowed range")


def sigma_act(op: SigmaOp, w: TVector) -> TVector:
    ej = E1 if op.j == 1 else E2
    out = w._new({})
    for i in range(op.m + 1):
        first = madd(op.alpha, (ej[0] * (op.m - i), ej[1] * (op.m - i)))
        second = madd(op.beta, (ej[0] * i, ej[1] * i))
        if first == (-1, -1) or second == (-1, -1):
            continue
        v = act_letter(L_letter(second), w)
        v = act_letter(L_letter(first), v)
        out = out + v * ((-1) ** i * comb0(op.m, i))
    return out


def closure_probe(
    module: Gl2Module, a, seed: TVector, degree: int, gen_degree: int
) -> dict:
    """Grow the submodule generated by the seed inside the degree-``degree``
    truncation under all letters of degree between -1 and ``gen_degree`` plus
    d2, and report slice dimensions on the trusted window.

    Every tracked vector lies in the submodule exactly: a generator is
    applied only when its worst-case degree raise (letter degree plus one,
    the twist contributing the one) stays under the cap, so no truncation
    error can leak into low degrees through the degree-lowering letters.
    Reported dimensions are therefore true dimensions of a subspace of the
    submodule slice, saturating on the trusted window degree <= cap minus
    generator degree."""
    if degree < 0 or gen_degree < 0:
        raise ValueError("degree caps must be nonnegative")
    if seed.is_zero():
        raise ValueError("seed is zero")
    if seed.degree() > degree:
        raise ValueError("seed degree exceeds the truncation cap")
    generators: list[Letter] = [D2]
    for g in range(-1, gen_degree + 1):
        for a1 in range(-1, g + 2):
            idx = (a1, g - a1)
            if idx[1] < -1 or idx == (-1, -1):
                continue
            generators.append(L_letter(idx))

    def key_rank(key: TKey):
        beta, k = key
        return (-mtotal(beta), beta, k)

    # The queue holds raw orbit vectors only (images of images of the seed),
    # never echelon rows: by linearity, closing the span over generator
    # images of a spanning set closes it over the whole span, and keeping
    # echelon mixing out of the orbit keeps coefficients small. Every tracked
    # vector is exactly in the submodule because a generator is only applied
    # when the image provably stays under the cap.
    span = EchelonSpan(key_rank)
    span.add(dict(seed.terms))
    queue = [seed]
    while queue:
        vec = queue.pop()
        vec_degree = vec.degree()
        for letter in generators:
            if vec_degree + letter_degree(letter) + 1 > degree:
                continue
            image = act_letter(letter, vec)
            if span.add(dict(image.terms)) is not None:
                queue.append(image)

    pivot_degrees = sorted(mtotal(key[0]) for key in span.pivot_keys())
    window = degree - gen_degree
    table = {}
    for d in range(window + 1):
        closure_dim = sum(1 for pd in pivot_degrees if pd <= d)
        ambient = (d + 1) * (d + 2) // 2 * module.dim
        table[d] = (closure_dim, ambient)
    return {
        "window": window,
        "table": table,
        "proper": all(c < amb for c, amb in table.values()),
        "full": all(c == amb for c, amb in table.values()),
        "tracked_rank": span.rank,
    }
