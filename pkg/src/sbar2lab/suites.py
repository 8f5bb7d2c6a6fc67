"""Verification suites: deterministic sweeps producing typed reports.

Every suite builds a list of named cases with thunks and a formula-style
anchor describing the identity being exercised; ``run_suite`` evaluates them
(optionally fanning out over SBAR2LAB_WORKERS threads; all values involved
are immutable) and merges the records by case name, so reports do not depend
on the worker count. Randomized sweeps draw from a Random seeded with the
reported seed.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .base import Poly2, mtotal
from .centralizer import (
    H_GENERATORS,
    centralizer_check,
    g0_poly,
    g_poly,
    wh_action_compare,
    whittaker_stability_defect,
    xi_q1_consistency,
    xi_y,
    y_basis_probe,
    y_element,
    y_generation_search,
    pi1,
)
from .enveloping import Loc, UEnv, reduce_mod_I1
from .gl2 import Gl2Poly, gl2_simple
from .lie import (
    D2,
    L_letter,
    Sbar,
    VectorField,
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
from .linalg import EchelonSpan
from .report import FAIL, INCONCLUSIVE, PASS, Case, SuiteReport
from .tmodule import (
    SigmaOp,
    TVector,
    act_letter,
    act_sbar,
    closure_probe,
    joint_kernel,
    sigma_act,
    uh_freeness_check,
    whittaker_space,
)
from .weyl import phi_hom_check

LAMBDA_GRID = ((0, 0), (1, 0), (1, 1), (2, 0))


def _letters(max_degree: int, min_degree: int = -1):
    out = [D2]
    for a1 in range(-1, max_degree + 2):
        for a2 in range(-1, max_degree + 2):
            if (a1, a2) == (-1, -1):
                continue
            if min_degree <= a1 + a2 <= max_degree:
                out.append(L_letter((a1, a2)))
    return out


def _y_indices(max_degree: int):
    out = []
    for a1 in range(-1, max_degree + 2):
        for a2 in range(-1, max_degree + 2):
            if (a1, a2) == (0, 0) or a1 + a2 < 0 or a1 + a2 > max_degree:
                continue
            if a1 >= -1 and a2 >= -1:
                out.append((a1, a2))
    return sorted(out, key=lambda a: (mtotal(a), a))


def _fmt(idx) -> str:
    return f"({idx[0]},{idx[1]})"


# --- suite builders ---------------------------------------------------------
# Each builder returns a list of (name, anchor, provenance, thunk); a thunk
# returns (status, witness).

def _suite_jacobi(max_degree: int, rng) -> list:
    letters = _letters(max_degree)
    buckets: dict[tuple, list] = {}
    for trio in itertools.combinations_with_replacement(letters, 3):
        key = tuple(sorted(letter_degree(l) for l in trio))
        buckets.setdefault(key, []).append(trio)

    def make(trios):
        def thunk():
            for x, y, z in trios:
                sx, sy, sz = (Sbar({l: Fraction(1)}) for l in (x, y, z))
                total = (
                    sbar_bracket(sx, sbar_bracket(sy, sz))
                    + sbar_bracket(sy, sbar_bracket(sz, sx))
                    + sbar_bracket(sz, sbar_bracket(sx, sy))
                )
                if not total.is_zero():
                    return FAIL, {"triple": [str(sx), str(sy), str(sz)], "route": "letters"}
                vx, vy, vz = sbar_to_vf(sx), sbar_to_vf(sy), sbar_to_vf(sz)
                total_vf = (
                    vf_bracket(vx, vf_bracket(vy, vz))
                    + vf_bracket(vy, vf_bracket(vz, vx))
                    + vf_bracket(vz, vf_bracket(vx, vy))
                )
                if not total_vf.is_zero():
                    return FAIL, {"triple": [str(sx), str(sy), str(sz)], "route": "fields"}
            return PASS, {"triples": len(trios)}

        return thunk

    return [
        (
            f"jacobi-degrees{key}",
            "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on both bracket routes",
            "axiom-sweep",
            make(trios),
        )
        for key, trios in sorted(buckets.items())
    ]


def _suite_bracket_crosscheck(max_degree: int, rng) -> list:
    letters = _letters(max_degree)
    buckets: dict[tuple, list] = {}
    for x, y in itertools.combinations_with_replacement(letters, 2):
        key = tuple(sorted((letter_degree(x), letter_degree(y))))
        buckets.setdefault(key, []).append((x, y))

    def make(pairs):
        def thunk():
            for x, y in pairs:
                sx, sy = Sbar({x: Fraction(1)}), Sbar({y: Fraction(1)})
                via_letters = sbar_to_vf(sbar_bracket(sx, sy))
                via_fields = vf_bracket(sbar_to_vf(sx), sbar_to_vf(sy))
                if via_letters != via_fields:
                    return FAIL, {"pair": [str(sx), str(sy)]}
                if not via_fields.is_zero() and vf_to_sbar(via_fields) != sbar_bracket(sx, sy):
                    return FAIL, {"pair": [str(sx), str(sy)], "stage": "conversion"}
            return PASS, {"pairs": len(pairs)}

        return thunk

    return [
        (
            f"crosscheck-degrees{key}",
            "determinant structure constants agree with the field bracket",
            "cross-check",
            make(pairs),
        )
        for key, pairs in sorted(buckets.items())
    ]


def _suite_divergence(max_degree: int, rng) -> list:
    cases = []
    for a1 in range(-1, max_degree + 2):
        for a2 in range(-1, max_degree + 2):
            alpha = (a1, a2)
            if alpha == (-1, -1) or not (-1 <= a1 + a2 <= max_degree):
                continue

            def thunk(alpha=alpha):
                div = divergence(l_basis(alpha))
                if div.is_zero():
                    return PASS, {}
                return FAIL, {"divergence": str(div)}

            cases.append((f"div-L{_fmt(alpha)}", "div(L_a) = 0", "axiom-sweep", thunk))

    def euler_thunk():
        div = divergence(sbar_to_vf(Sbar.d()))
        if div == Poly2.const(2):
            return PASS, {}
        return FAIL, {"divergence": str(div)}

    cases.append(("div-euler", "div(d1 + d2) = 2", "derived-example", euler_thunk))
    return cases


def _suite_twist(max_degree: int, rng) -> list:
    cases = []
    letters = _letters(min(max_degree, 2))
    scale = (Fraction(2), Fraction(3))
    inv_scale = (Fraction(1, 2), Fraction(1, 3))

    def ex_scaling():
        for i in (1, 2):
            got = scaling_twist(scale, VectorField.partial(i))
            if got != VectorField.partial(i) * scale[i - 1]:
                return FAIL, {"input": f"p{i}"}
            if scaling_twist(scale, VectorField.euler(i)) != VectorField.euler(i):
                return FAIL, {"input": f"d{i}"}
        if scaling_twist(scale, l_basis((1, -1))) != l_basis((1, -1)) * Fraction(3, 2):
            return FAIL, {"input": "L(1,-1)"}
        return PASS, {}

    cases.append(("scaling-examples", "p_i -> a_i p_i, d_i fixed", "derived-example", ex_scaling))

    def ex_unipotent():
        if unipotent_twist(Fraction(-1), VectorField.partial(1)) != VectorField.partial(1):
            return FAIL, {"input": "p1"}
        expect = VectorField.partial(2) + VectorField.partial(1)
        if unipotent_twist(Fraction(-1), VectorField.partial(2)) != expect:
            return FAIL, {"input": "p2"}
        expect = VectorField.euler(2) + VectorField.monomial((0, 1), 1)
        if unipotent_twist(Fraction(-1), VectorField.euler(2)) != expect:
            return FAIL, {"input": "d2"}
        return PASS, {}

    cases.append(("unipotent-examples", "exp(c ad(t2 p1)) on constant fields", "derived-example", ex_unipotent))

    def make_auto(twist, name):
        def thunk():
            for x, y in itertools.combinations(letters, 2):
                vx, vy = sbar_to_vf(Sbar({x: Fraction(1)})), sbar_to_vf(Sbar({y: Fraction(1)}))
                lhs = twist(vf_bracket(vx, vy))
                rhs = vf_bracket(twist(vx), twist(vy))
                if lhs != rhs:
                    return FAIL, {"pair": [str(vx), str(vy)], "twist": name}
            return PASS, {"pairs": len(letters) * (len(letters) - 1) // 2}

        return thunk

    cases.append(
        (
            "scaling-automorphism",
            "twist([x,y]) = [twist(x), twist(y)]",
            "axiom-sweep",
            make_auto(lambda v: scaling_twist(scale, v), "scaling"),
        )
    )
    cases.append(
        (
            "unipotent-automorphism",
            "twist([x,y]) = [twist(x), twist(y)]",
            "axiom-sweep",
            make_auto(lambda v: unipotent_twist(Fraction(-1), v), "unipotent"),
        )
    )

    def inverses():
        for letter in letters:
            v = sbar_to_vf(Sbar({letter: Fraction(1)}))
            if scaling_twist(inv_scale, scaling_twist(scale, v)) != v:
                return FAIL, {"letter": str(letter), "twist": "scaling"}
            if unipotent_twist(Fraction(1), unipotent_twist(Fraction(-1), v)) != v:
                return FAIL, {"letter": str(letter), "twist": "unipotent"}
        return PASS, {}

    cases.append(("twist-inverses", "twist(a) o twist(1/a) = id", "axiom-sweep", inverses))

    def rep_compat():
        module = gl2_simple((1, 0))
        a = (Fraction(1), Fraction(0))
        images = [
            vf_to_sbar(unipotent_twist(Fraction(-1), VectorField.partial(i))) for i in (1, 2)
        ]
        ops = [
            (lambda v, s=s: act_sbar(s, v), Fraction(1))
            for s in images
        ]
        kernel = joint_kernel(module, a, max(2, max_degree), ops)
        if len(kernel) == module.dim:
            return PASS, {"dim": len(kernel)}
        return FAIL, {"dim": len(kernel), "expected": module.dim}

    cases.append(
        (
            "twisted-whittaker-dim",
            "twisting the singular-type module matches the nonsingular count",
            "cross-check",
            rep_compat,
        )
    )
    return cases


def _suite_phi_hom(max_degree: int, rng) -> list:
    polys = [
        Poly2.monomial((b1, b2))
        for b1 in range(max_degree + 1)
        for b2 in range(max_degree + 1 - b1)
    ]
    lies = [Sbar.d2()] + [
        Sbar({l: Fraction(1)}) for l in _letters(max_degree) if l != D2
    ]
    gens = [("poly", p) for p in polys] + [("lie", x) for x in lies]
    buckets: dict[tuple, list] = {}
    for (kx, x), (ky, y) in itertools.product(gens, repeat=2):
        dx = x.degree() if kx == "poly" else letter_degree(next(iter(x.terms)))
        dy = y.degree() if ky == "poly" else letter_degree(next(iter(y.terms)))
        buckets.setdefault((kx, ky, dx, dy), []).append((x, y))

    def make(pairs):
        def thunk():
            for x, y in pairs:
                if not phi_hom_check(x, y).is_zero():
                    return FAIL, {"pair": [str(x), str(y)]}
            return PASS, {"pairs": len(pairs)}

        return thunk

    return [
        (
            f"hom-{kx}{dx}-{ky}{dy}",
            "the generator map preserves all defining relations",
            "axiom-sweep",
            make(pairs),
        )
        for (kx, ky, dx, dy), pairs in sorted(buckets.items())
    ]


def _suite_action_axioms(max_degree: int, rng) -> list:
    letters = _letters(min(max_degree, 2))
    cases = []
    for lam in ((1, 0), (1, 1), (2, 0)):
        for a in ((1, 1), (1, 0), (0, 0)):

            def thunk(lam=lam, a=a):
                module = gl2_simple(lam)
                vecs = [
                    TVector.basis(module, a, (b1, b2), k)
                    for b1 in range(5)
                    for b2 in range(5 - b1)
                    for k in range(module.dim)
                ]
                checked = 0
                for x, y in itertools.combinations(letters, 2):
                    bracket = sbar_bracket(Sbar({x: Fraction(1)}), Sbar({y: Fraction(1)}))
                    for w in vecs:
                        lhs = act_letter(x, act_letter(y, w)) - act_letter(y, act_letter(x, w))
                        if lhs != act_sbar(bracket, w):
                            return FAIL, {
                                "pair": [str(Sbar({x: Fraction(1)})), str(Sbar({y: Fraction(1)}))],
                                "vector": str(w),
                            }
                        checked += 1
                return PASS, {"checked": checked}

            cases.append(
                (
                    f"axiom-lam{_fmt(lam)}-a{_fmt(a)}",
                    "x(yw) - y(xw) = [x,y]w on the tensor module",
                    "axiom-sweep",
                    thunk,
                )
            )
    return cases


def _suite_whittaker_dim(max_degree: int, rng) -> list:
    cases = []
    for lam in ((0, 0), (1, 0), (1, 1), (2, 0), (3, 1)):
        expected = lam[0] - lam[1] + 1
        for deg in range(max_degree + 1):

            def thunk(lam=lam, deg=deg, expected=expected):
                module = gl2_simple(lam)
                basis = whittaker_space(module, (1, 1), deg)
                if len(basis) == expected:
                    return PASS, {"dim": len(basis)}
                return FAIL, {"dim": len(basis), "expected": expected}

            cases.append(
                (
                    f"whdim-lam{_fmt(lam)}-deg{deg}",
                    "dim Wh(T) = l1 - l2 + 1, independent of truncation",
                    "rank-computation",
                    thunk,
                )
            )
    return cases


def _suite_freeness(max_degree: int, rng) -> list:
    cases = []
    for lam in ((0, 0), (1, 0), (1, 1), (2, 0), (3, 1)):

        def thunk(lam=lam):
            report = uh_freeness_check(gl2_simple(lam), (1, 1), max_degree)
            status = PASS if report["full"] else FAIL
            return status, report

        cases.append(
            (
                f"freeness-T-lam{_fmt(lam)}",
                "the Cartan translates of the constant vectors are independent",
                "rank-computation",
                thunk,
            )
        )

    def q1_thunk():
        span = EchelonSpan()
        count = 0
        cap = max_degree + 2
        for m1 in range(cap + 1):
            for m2 in range(cap + 1 - m1):
                q = reduce_mod_I1(UEnv.d1() ** m1 * UEnv.d2() ** m2)
                span.add(dict(q.terms))
                count += 1
        status = PASS if span.rank == count else FAIL
        return status, {"rank": span.rank, "expected": count}

    cases.append(
        (
            "freeness-Q1",
            "the Cartan monomial images form a basis window in the induced module",
            "rank-computation",
            q1_thunk,
        )
    )
    return cases


def _suite_sigma(max_degree: int, rng) -> list:
    index_cap = 2
    m_cap = 4
    lam = (1, 0)

    def search():
        module = gl2_simple(lam)
        a = (Fraction(0), Fraction(0))
        indices = [
            (a1, a2)
            for a1 in range(-1, index_cap + 2)
            for a2 in range(-1, index_cap + 2)
            if a1 + a2 <= index_cap
        ]
        keys = [
            ((b1, b2), k)
            for b1 in range(max_degree + 1)
            for b2 in range(max_degree + 1 - b1)
            for k in range(module.dim)
        ]
        cache: dict = {}

        def letter_on(letter, terms: dict) -> dict:
            out: dict = {}
            for key, c in terms.items():
                res = cache.get((letter, key))
                if res is None:
                    res = act_letter(
                        letter, TVector({key: Fraction(1)}, a=a, module=module)
                    ).terms
                    cache[(letter, key)] = res
                for k2, c2 in res.items():
                    s = out.get(k2, 0) + c * c2
                    if s:
                        out[k2] = s
                    else:
                        out.pop(k2, None)
            return out

        def annihilates(m: int) -> bool:
            from .base import comb0

            for j, ej in ((1, (1, 0)), (2, (0, 1))):
                for beta in indices:
                    inner = []
                    for i in range(m + 1):
                        idx = (beta[0] + ej[0] * i, beta[1] + ej[1] * i)
                        inner.append(idx)
                    for key in keys:
                        base = {key: Fraction(1)}
                        inners = [
                            None if idx == (-1, -1) else letter_on(L_letter(idx), base)
                            for idx in inner
                        ]
                        for alpha in indices:
                            total: dict = {}
                            for i in range(m + 1):
                                first = (alpha[0] + ej[0] * (m - i), alpha[1] + ej[1] * (m - i))
                                if first == (-1, -1) or inners[i] is None:
                                    continue
                                piece = letter_on(L_letter(first), inners[i])
                                coeff = (-1) ** i * comb0(m, i)
                                for k2, c2 in piece.items():
                                    s = total.get(k2, 0) + coeff * c2
                                    if s:
                                        total[k2] = s
                                    else:
                                        total.pop(k2, None)
                            if total:
                                return False
            return True

        for m in range(m_cap + 1):
            if annihilates(m):
                return PASS, {"minimal_m": m, "index_cap": index_cap, "degree_cap": max_degree}
        return FAIL, {"searched_up_to": m_cap}

    def example():
        module = gl2_simple(lam)
        w = TVector.basis(module, (0, 0), (0, 0), 0)
        got = sigma_act(SigmaOp(1, 1, (0, 0), (0, 0)), w)
        expect = TVector({((1, 0), 0): Fraction(-2)}, a=(0, 0), module=module)
        return (PASS, {"value": str(got)}) if got == expect else (FAIL, {"value": str(got)})

    def corner():
        module = gl2_simple(lam)
        w = TVector.basis(module, (0, 0), (1, 1), 1)
        got = sigma_act(SigmaOp(0, 1, (-1, -1), (0, 0)), w)
        return (PASS, {}) if got.is_zero() else (FAIL, {"value": str(got)})

    return [
        (
            "sigma-minimal-annihilator",
            "some finite alternating order kills the untwisted module window",
            "bounded-search",
            search,
        ),
        (
            "sigma-two-term-example",
            "order-1 operator value on the constant vector",
            "derived-example",
            example,
        ),
        ("sigma-corner-term", "the corner index contributes nothing", "axiom-sweep", corner),
    ]


def _suite_y_centralizer(max_degree: int, rng) -> list:
    cases = []
    for alpha in _y_indices(max_degree):

        def thunk(alpha=alpha):
            comm = centralizer_check(alpha)
            bad = {name: str(v) for name, v in comm.items() if not v.is_zero()}
            return (PASS, {}) if not bad else (FAIL, bad)

        cases.append(
            (
                f"commutes-Y{_fmt(alpha)}",
                "[p_i, Y_a] = [d_i, Y_a] = 0",
                "axiom-sweep",
                thunk,
            )
        )

    def inverse_partials():
        probes = [Loc.partial(1, -1), Loc.partial(2, -1)]
        for alpha in _y_indices(min(max_degree, 3)):
            y = y_element(alpha)
            for probe in probes:
                comm = probe * y - y * probe
                if not comm.is_zero():
                    return FAIL, {"alpha": list(alpha), "commutator": str(comm)}
        return PASS, {"indices": len(_y_indices(min(max_degree, 3)))}

    cases.append(
        (
            "commutes-inverse-partials",
            "[p_i^-1, Y_a] = 0 in the localization",
            "axiom-sweep",
            inverse_partials,
        )
    )

    displays = {
        (1, -1): "L(1,-1)*p1*p2^-1 + 2*d1",
        (-1, 1): "L(-1,1)*p2*p1^-1 - 2*d2",
        (1, 0): "L(1,0)*p1 - L(1,-1)*d2*p1*p2^-1 - d1^2 - d1",
        (0, 1): "L(0,1)*p2 - L(-1,1)*d1*p2*p1^-1 + d2^2 + d2",
    }
    xi_displays = {
        (1, -1): "L(1,-1) + 2*d1",
        (-1, 1): "L(-1,1) - 2*d2",
        (1, 0): "L(1,0) - L(1,-1)*d2 - d1^2 - d1",
        (0, 1): "L(0,1) - L(-1,1)*d1 + d2^2 + d2",
    }
    from .expr import eval_loc, parse_element

    for alpha, text in sorted(displays.items()):

        def thunk(alpha=alpha, text=text):
            got = y_element(alpha)
            expect = eval_loc(parse_element(text))
            return (PASS, {}) if got == expect else (FAIL, {"got": str(got), "expected": text})

        cases.append(
            (f"display-Y{_fmt(alpha)}", f"Y{_fmt(alpha)} = {text}", "display-regression", thunk)
        )
    for alpha, text in sorted(xi_displays.items()):

        def thunk(alpha=alpha, text=text):
            got = Loc.from_uenv(xi_y(alpha))
            expect = eval_loc(parse_element(text))
            return (PASS, {}) if got == expect else (FAIL, {"got": str(got), "expected": text})

        cases.append(
            (f"display-xi{_fmt(alpha)}", f"xi(Y{_fmt(alpha)}) = {text}", "display-regression", thunk)
        )
    return cases


def _suite_g_recurrence(max_degree: int, rng) -> list:
    cases = []
    for alpha in _y_indices(max_degree):

        def thunk(alpha=alpha):
            n = mtotal(alpha)
            for b1 in range(-1, alpha[0] + 3):
                for b2 in range(-1, alpha[1] + 3):
                    beta = (b1, b2)
                    if beta == (0, 0) or not 0 <= mtotal(beta) < n:
                        continue
                    g = g_poly(alpha, beta)
                    up = (b1 + 1, b2)
                    g_up = (
                        g_poly(alpha, up)
                        if up != (0, 0) and 0 <= mtotal(up) <= n
                        else Poly2()
                    )
                    res = g.shift((1, 0)) - g + g_up * (b1 + 2)
                    if not res.is_zero():
                        return FAIL, {"beta": list(beta), "residue": str(res)}
            g0 = g0_poly(alpha)
            g10 = g_poly(alpha, (1, 0)) if n >= 1 else Poly2()
            g1m1 = g_poly(alpha, (1, -1)) if n >= 0 else Poly2()
            res = (
                g0.shift((1, 0))
                - g0
                + (Poly2.variable(1) - Poly2.variable(2)) * g10 * 2
                - g1m1.shift((0, 1)) * 2
            )
            if not res.is_zero():
                return FAIL, {"beta": "0", "residue": str(res)}
            return PASS, {}

        cases.append(
            (
                f"grec-{_fmt(alpha)}",
                "g_b(d1+1,d2) - g_b(d1,d2) + (b1+2) g_(b+e1)(d1,d2) = 0 and the tail identity",
                "axiom-sweep",
                thunk,
            )
        )
    return cases


def _suite_xi_whittaker(max_degree: int, rng) -> list:
    cases = []
    for alpha in _y_indices(max_degree):

        def thunk(alpha=alpha):
            d1_, d2_ = whittaker_stability_defect(alpha)
            if not (d1_.is_zero() and d2_.is_zero()):
                return FAIL, {"defect_p1": str(d1_), "defect_p2": str(d2_)}
            via_y, via_xi = xi_q1_consistency(alpha)
            if via_y != via_xi:
                return FAIL, {"via_y": str(via_y), "via_xi": str(via_xi)}
            return PASS, {}

        cases.append(
            (
                f"xiwh-{_fmt(alpha)}",
                "(p_i - 1) xi(Y_a) v = 0 and both residue routes agree",
                "cross-check",
                thunk,
            )
        )
    return cases


def _suite_pi1_compare(max_degree: int, rng) -> list:
    G = Gl2Poly.gen
    displays = {
        (1, -1): ("-2*E12 + 2*E11", (G(1, 2) * -2 + G(1, 1) * 2)),
        (-1, 1): ("2*E21 - 2*E22", (G(2, 1) * 2 + G(2, 2) * -2)),
        (1, 0): ("2*E12*E22 - E11^2 - E11", (G(1, 2) * G(2, 2) * 2 - G(1, 1) * G(1, 1) - G(1, 1))),
        (0, 1): ("-2*E21*E11 + E22^2 + E22", (G(2, 1) * G(1, 1) * -2 + G(2, 2) * G(2, 2) + G(2, 2))),
    }
    cases = []
    for alpha, (text, expect) in sorted(displays.items()):

        def thunk(alpha=alpha, text=text, expect=expect):
            formal, _ = pi1(alpha)
            if formal == expect.normalized():
                return PASS, {}
            return FAIL, {"got": str(formal), "expected": text}

        cases.append(
            (f"pi1-display{_fmt(alpha)}", f"pi1(Y{_fmt(alpha)}) = {text}", "display-regression", thunk)
        )
    for alpha in H_GENERATORS:
        for lam in LAMBDA_GRID:

            def thunk(alpha=alpha, lam=lam):
                mat_y, mat_pi, equal = wh_action_compare(alpha, lam)
                if equal:
                    return PASS, {}
                return FAIL, {"module_route": str(mat_y), "operator_route": str(mat_pi)}

            cases.append(
                (
                    f"pi1-module{_fmt(alpha)}-lam{_fmt(lam)}",
                    "Y on the Whittaker vectors equals its operator image",
                    "cross-check",
                    thunk,
                )
            )
    return cases


def _suite_y_basis(max_degree: int, rng) -> list:
    cases = []

    def pair():
        report = y_basis_probe([(1, -1), (-1, 1)], 1)
        return (PASS, report) if report["full"] else (FAIL, report)

    cases.append(
        ("ybasis-pair-len1", "ordered monomials in two Y's are independent", "rank-computation", pair)
    )

    def window():
        report = y_basis_probe(_y_indices(1), 2)
        return (PASS, report) if report["full"] else (FAIL, report)

    cases.append(
        (
            "ybasis-window1-len2",
            "ordered monomials up to length 2 are independent",
            "rank-computation",
            window,
        )
    )

    def generation():
        found = y_generation_search((1, 1), 3)
        if found is None:
            return INCONCLUSIVE, {"target": "Y(1,1)", "cap": 3}
        readable = {"*".join(f"Y{_fmt(i)}" for i in word) or "1": str(c) for word, c in found.items()}
        return PASS, {"decomposition": readable}

    cases.append(
        (
            "ygen-Y(1,1)-cap3",
            "the four distinguished Y's generate the centralizer window",
            "bounded-search",
            generation,
        )
    )

    def generation_self():
        found = y_generation_search((1, -1), 1)
        if found == {((1, -1),): Fraction(1)}:
            return PASS, {}
        return FAIL, {"found": str(found)}

    cases.append(
        ("ygen-generator-itself", "a generator decomposes as itself", "derived-example", generation_self)
    )
    return cases


def _suite_closure(max_degree: int, rng) -> list:
    gen_degree = 2
    cases = []

    def reducible_case():
        module = gl2_simple((1, 0))
        seed = TVector.basis(module, (1, 1), (0, 0), 0) + TVector.basis(module, (1, 1), (0, 0), 1)
        report = closure_probe(module, (1, 1), seed, max_degree, gen_degree)
        status = PASS if report["proper"] and report["tracked_rank"] > 0 else FAIL
        return status, {"table": {str(k): list(v) for k, v in report["table"].items()}}

    cases.append(
        (
            "closure-reducible-point",
            "the distinguished seed generates a proper submodule slice",
            "rank-computation",
            reducible_case,
        )
    )

    local = random.Random(rng.randrange(1 << 30))
    for lam in ((1, 1), (2, 0)):

        def thunk(lam=lam, draw=local.randrange(1 << 30)):
            module = gl2_simple(lam)
            seed_rng = random.Random(draw)
            terms = {}
            while not terms:
                for b1 in range(3):
                    for b2 in range(3 - b1):
                        for k in range(module.dim):
                            c = seed_rng.randrange(-2, 3)
                            if c:
                                terms[((b1, b2), k)] = Fraction(c)
            seed = TVector(terms, a=(1, 1), module=module)
            report = closure_probe(module, (1, 1), seed, max_degree, gen_degree)
            status = PASS if report["full"] else FAIL
            return status, {"table": {str(k): list(v) for k, v in report["table"].items()}}

        cases.append(
            (
                f"closure-simple-lam{_fmt(lam)}",
                "a random seed generates the full trusted slice",
                "rank-computation",
                thunk,
            )
        )

    def untwisted():
        module = gl2_simple((1, 0))
        seed = TVector.basis(module, (0, 0), (0, 0), 0) + TVector.basis(module, (0, 0), (0, 0), 1)
        report = closure_probe(module, (0, 0), seed, max_degree, gen_degree)
        return PASS, {"table": {str(k): list(v) for k, v in report["table"].items()}}

    cases.append(
        (
            "closure-untwisted-slices",
            "slice dimensions of the submodule generated by the constants",
            "recorded-fact",
            untwisted,
        )
    )
    return cases


SUITES = {
    "jacobi": (_suite_jacobi, 4),
    "bracket-crosscheck": (_suite_bracket_crosscheck, 4),
    "divergence": (_suite_divergence, 6),
    "twist": (_suite_twist, 3),
    "phi-hom": (_suite_phi_hom, 3),
    "action-axioms": (_suite_action_axioms, 2),
    "whittaker-dim": (_suite_whittaker_dim, 6),
    "freeness": (_suite_freeness, 4),
    "sigma-annihilation": (_suite_sigma, 6),
    "y-centralizer": (_suite_y_centralizer, 4),
    "g-recurrence": (_suite_g_recurrence, 5),
    "xi-whittaker": (_suite_xi_whittaker, 4),
    "pi1-compare": (_suite_pi1_compare, 2),
    "y-basis": (_suite_y_basis, 1),
    "closure": (_suite_closure, 6),
}


def suite_names() -> list[str]:
    return sorted(SUITES)


def run_suite(name: str, max_degree: int | None = None, seed: int = 0) -> SuiteReport:
    """Execute one suite deterministically; unknown names raise ValueError."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(suite_names())}")
    builder, default_degree = SUITES[name]
    degree = default_degree if max_degree is None else max_degree
    rng = random.Random(seed)
    started = time.perf_counter()
    specs = builder(degree, rng)

    workers = int(os.environ.get("SBAR2LAB_WORKERS", "1") or "1")

    def run_one(spec):
        case_name, anchor, provenance, thunk = spec
        status, witness = thunk()
        return Case(case_name, anchor, provenance, status, witness)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(run_one, specs))
    else:
        cases = [run_one(spec) for spec in specs]
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return SuiteReport(name, seed, __version__, sorted(cases, key=lambda c: c.name), elapsed_ms)
