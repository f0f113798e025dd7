"""Named verification checks for the Chow ring computation of B(PGL3).

Each check mechanically re-derives one computational claim used in the
determination of the Chow ring of the classifying stack of PGL3: the
generators of the Weyl-invariant subring, the Chern-class restriction values,
the torus-level transfer identities, the mod-3 identities over the finite
subgroup A3 x mu3, the representation-ring generators, and the graded
structure of the candidate presented ring.  A check either passes, fails with
a minimal counterexample witness, or errors; all verdicts and witnesses are
deterministic and rendered in the canonical polynomial text format.

One published value is knowingly contradicted by the computation: the
restriction table prints c6(sl3) = gamma6, but the sixth elementary symmetric
polynomial of the root multiset of sl3 is minus the discriminant, so
c6(sl3) = -gamma6 (consistently with the published footnote that c6(sl3)
restricts to 4*a2^3 + 27*a3^2 on the SL3 torus).  The hsurj-restrictions
check keeps the published expectation and therefore fails, carrying the
computed certificate as its counterexample.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from . import intlinalg
from .groups import (
    LinearConstraint,
    MatrixGroup,
    alternating_subgroup,
    invariant_basis,
    literally_shift_invariant,
    symmetric_group_s3,
    transported_group,
)
from .poly import INTEGERS, Polynomial, context, parse
from .presented import graded_component, rational_rank_table, rstar_presentation
from .repcalc import (
    A3MU3_AB,
    T_GL3,
    T_PGL3_XY,
    T_SL3_U,
    TO_SL3,
    TO_XY,
    TWIST_EMBEDDING,
    XY_EMBEDDING,
    chern_class,
    direct_sum,
    express_in,
    restrict_poly,
    restrict_rep,
    standard,
    subtract,
    trivial,
)


class UnknownCheckError(KeyError):
    pass


class CheckConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CheckSpec:
    name: str
    description: str
    paper_anchor: str
    default_max_degree: int | None = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str  # pass | fail | error
    witnesses: tuple[tuple[str, str], ...]
    elapsed: float

    def witness_dict(self) -> dict[str, str]:
        return dict(self.witnesses)


@dataclass(frozen=True)
class Report:
    results: tuple[CheckResult, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "error": 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    @property
    def all_passed(self) -> bool:
        counts = self.counts
        return counts["fail"] == 0 and counts["error"] == 0


# ---- shared torus data -------------------------------------------------------


def gamma_generators() -> dict[str, Polynomial]:
    """gamma2 = s1^2 - 3 s2, gamma3 = 2 s1^3 - 9 s1 s2 + 27 s3, gamma6 = the
    discriminant; the generators of the shift-invariant Weyl invariants."""
    ctx = T_GL3.ctx
    x1, x2, x3 = (Polynomial.variable(ctx, n) for n in ctx.names)
    s1 = x1 + x2 + x3
    s2 = x1 * x2 + x1 * x3 + x2 * x3
    s3 = x1 * x2 * x3
    gamma2 = s1 ** 2 - 3 * s2
    gamma3 = 2 * s1 ** 3 - 9 * s1 * s2 + 27 * s3
    gamma6 = ((x1 - x2) * (x1 - x3) * (x2 - x3)) ** 2
    return {"gamma2": gamma2, "gamma3": gamma3, "gamma6": gamma6}


SHIFT_DIRECTION = (1, 1, 1)


def s3_on_x() -> MatrixGroup:
    return symmetric_group_s3(T_GL3.ctx)


def s3_on_xy() -> MatrixGroup:
    return transported_group(s3_on_x(), XY_EMBEDDING, T_PGL3_XY.ctx)


def s3_on_u() -> MatrixGroup:
    """The Weyl action transported to SL3-torus coordinates; on the
    alternating subgroup it is the plain cyclic permutation of u1, u2, u3,
    while the transposition acquires signs."""
    return transported_group(s3_on_x(), TWIST_EMBEDDING, T_SL3_U.ctx)


def a3_on_u() -> MatrixGroup:
    return alternating_subgroup(s3_on_u())


def u_variables() -> tuple[Polynomial, Polynomial, Polynomial]:
    ctx = T_SL3_U.ctx
    u1 = Polynomial.variable(ctx, "u1")
    u2 = Polynomial.variable(ctx, "u2")
    return u1, u2, -u1 - u2


def theta_torus() -> Polynomial:
    """Torus restriction of the transfer class theta = tsf(u2^2 u3): the
    alternating orbit sum of u2^2 u3."""
    u1, u2, u3 = u_variables()
    return a3_on_u().orbit_sum(u2 ** 2 * u3)


def w_chern_torus() -> tuple[Polynomial, Polynomial]:
    w = standard("W_A3T")
    return chern_class(w, 2), chern_class(w, 3)


def delta_torus() -> Polynomial:
    u1, u2, u3 = u_variables()
    return (u1 - u2) * (u2 - u3) * (u1 - u3)


def chi_torus() -> Polynomial:
    theta = theta_torus()
    c2w, c3w = w_chern_torus()
    return (2 * theta + 3 * c3w) ** 2 + 4 * c2w ** 3 + 27 * c3w ** 2


def describe_substitution(group: MatrixGroup, label: str) -> str:
    matrix = group.matrix(label)
    ctx = group.ctx
    pieces = []
    for i, name in enumerate(ctx.names):
        form = Polynomial.linear_form(ctx, [matrix[j][i] for j in range(ctx.arity)],
                                      group.ring)
        pieces.append(f"{name} -> {form.render()}")
    return ", ".join(pieces)


def _sl3_chern_data() -> dict[str, Polynomial]:
    sl3 = standard("sl3")
    sym3 = standard("Sym3E_PGL3")
    return {
        "c2_sl3": chern_class(sl3, 2),
        "c6_sl3": chern_class(sl3, 6),
        "c2_sym3": chern_class(sym3, 2),
        "c3_sym3": chern_class(sym3, 3),
    }


# ---- individual checks ---------------------------------------------------------

Witnesses = list[tuple[str, str]]


def _check_gamma_invariance(max_degree: int | None) -> tuple[bool, Witnesses]:
    gammas = gamma_generators()
    group = s3_on_x()
    ok = True
    wit: Witnesses = []
    for name, g in gammas.items():
        for label in group.labels():
            moved = group.act(label, g)
            if moved != g:
                ok = False
                wit.append((f"counterexample {name} under {label}",
                            (moved - g).render()))
        if g.directional_derivative(SHIFT_DIRECTION):
            ok = False
            wit.append((f"counterexample shift derivative of {name}",
                        g.directional_derivative(SHIFT_DIRECTION).render()))
        if not literally_shift_invariant(g, SHIFT_DIRECTION):
            ok = False
            wit.append((f"counterexample literal shift of {name}", "not invariant"))
        wit.append((name, g.render()))
    return ok, wit


def _gamma_span_vectors(gammas: Mapping[str, Polynomial], d: int) -> list[list[int]]:
    gen_ctx = context(("g2", "g3", "g6"), (2, 3, 6))
    vectors = []
    for exp in gen_ctx.monomials_of_degree(d):
        p = (gammas["gamma2"] ** exp[0] * gammas["gamma3"] ** exp[1]
             * gammas["gamma6"] ** exp[2])
        vectors.append(p.coefficient_vector(d)[1])
    return vectors


def _check_gamma_generation(max_degree: int | None) -> tuple[bool, Witnesses]:
    bound = 12 if max_degree is None else max_degree
    if bound < 0:
        raise CheckConfigError("max degree must be non-negative")
    gammas = gamma_generators()
    group = s3_on_x()
    constraint = LinearConstraint(SHIFT_DIRECTION)
    wit: Witnesses = []
    summary = []
    for d in range(bound + 1):
        span = _gamma_span_vectors(gammas, d)
        inv = invariant_basis(group, [constraint], d)
        inv_vectors = [p.coefficient_vector(d)[1] for p in inv]
        comparison = intlinalg.submodule_compare(span, inv_vectors)
        if comparison.relation != "equal":
            wit.append((f"counterexample at degree {d}",
                        f"relation {comparison.relation}, quotient invariants "
                        f"{comparison.quotient_invariants}"))
            wit.append((f"invariant rank at degree {d}", str(len(inv_vectors))))
            return False, wit
        summary.append(f"{d}:{len(inv_vectors)}")
    wit.append(("lattice ranks by degree", " ".join(summary)))
    wit.append(("checked degrees", f"0..{bound}"))
    return True, wit


def _check_gamma_syzygy(max_degree: int | None) -> tuple[bool, Witnesses]:
    g = gamma_generators()
    lhs = g["gamma2"] ** 3 - g["gamma3"] ** 2
    rhs = -3 * (g["gamma2"] ** 3 - 9 * g["gamma6"])
    difference = lhs - rhs
    wit: Witnesses = [("gamma2^3 - gamma3^2 + 3*(gamma2^3 - 9*gamma6)",
                       difference.render())]
    return not difference, wit


_TWO_VARIABLE_EXPECTED = {
    "gamma2": "x^2 - x*y + y^2",
    "gamma3": "2*x^3 - 3*x^2*y - 3*x*y^2 + 2*y^3",
    "gamma6": "x^4*y^2 - 2*x^3*y^3 + x^2*y^4",
}


def _check_two_variable_gammas(max_degree: int | None) -> tuple[bool, Witnesses]:
    gammas = gamma_generators()
    ok = True
    wit: Witnesses = []
    for name, g in gammas.items():
        image = restrict_poly(g, TO_XY)
        expected = parse(_TWO_VARIABLE_EXPECTED[name], T_PGL3_XY.ctx, INTEGERS)
        wit.append((f"{name} in x,y", image.render()))
        if image != expected:
            ok = False
            wit.append((f"counterexample {name}",
                        f"expected {expected.render()}"))
    return ok, wit


_TWISTACTION_XY = {
    "(12)": ((0, 1), (1, 0)),
    "(123)": ((0, 1), (-1, -1)),
}


def _check_twistaction_group(max_degree: int | None) -> tuple[bool, Witnesses]:
    group = s3_on_xy()
    ok = True
    wit: Witnesses = []
    report = group.closure_check()
    wit.append(("closure", f"ok={report.ok} order={report.order}"))
    if not report.ok or report.order != 6:
        ok = False
        wit.append(("counterexample closure", "; ".join(report.violations) or
                    f"order {report.order} != 6"))
    for label, expected in _TWISTACTION_XY.items():
        if group.matrix(label) != expected:
            ok = False
            wit.append((f"counterexample derived action {label}",
                        describe_substitution(group, label)))
        else:
            wit.append((f"derived {label}", describe_substitution(group, label)))
    for name, text in _TWO_VARIABLE_EXPECTED.items():
        g = parse(text, T_PGL3_XY.ctx, INTEGERS)
        for label in group.labels():
            if group.act(label, g) != g:
                ok = False
                wit.append((f"counterexample {name} moved by {label}",
                            group.act(label, g).render()))
    return ok, wit


_HSURJ_PUBLISHED = {
    "c2_sl3": "-2*gamma2",
    "c2_sym3": "-5*gamma2",
    "c3_sym3": "gamma3",
    "c6_sl3": "gamma6",
}


def _check_hsurj_restrictions(max_degree: int | None) -> tuple[bool, Witnesses]:
    gammas = gamma_generators()
    data = _sl3_chern_data()
    gen_ctx = context(tuple(gammas), (2, 3, 6))
    ok = True
    wit: Witnesses = []
    for key in ("c2_sl3", "c2_sym3", "c3_sym3", "c6_sl3"):
        result = express_in(data[key], gammas)
        if not result.ok:
            ok = False
            wit.append((f"counterexample {key}",
                        f"no integral expression; rational: {result.rational_expression}"))
            continue
        computed = result.expression.render()
        wit.append((f"{key} in gammas", computed))
        expected = parse(_HSURJ_PUBLISHED[key], gen_ctx, INTEGERS)
        if result.expression != expected:
            ok = False
            wit.append((f"counterexample {key}",
                        f"computed {computed}, published {expected.render()}"))
    if not ok:
        wit.append(("note",
                    "c6(sl3) is the product of the six roots x_i - x_j (i != j), "
                    "which is minus the discriminant: the published sign is "
                    "inconsistent with its own SL3 restriction 4*a2^3 + 27*a3^2"))
    return ok, wit


def _check_transfer_laws(max_degree: int | None) -> tuple[bool, Witnesses]:
    ok = True
    wit: Witnesses = []
    group = a3_on_u()
    u1, u2, u3 = u_variables()
    sample = u1 ** 2 * u2
    summed = group.orbit_sum(sample)
    for label in group.labels():
        if group.act(label, summed) != summed:
            ok = False
            wit.append((f"counterexample invariance under {label}",
                        (group.act(label, summed) - summed).render()))
    wit.append(("orbit sum of u1^2*u2", summed.render()))

    gammas = gamma_generators()
    sym_group = s3_on_x()
    scaled = sym_group.orbit_sum(gammas["gamma2"])
    if scaled != 6 * gammas["gamma2"]:
        ok = False
        wit.append(("counterexample invariant scaling",
                    (scaled - 6 * gammas["gamma2"]).render()))
    else:
        wit.append(("orbit sum of invariant gamma2", "6*gamma2"))

    for name, u in (("u1", u1), ("u2", u2), ("u3", u3)):
        s = group.orbit_sum(u)
        wit.append((f"orbit sum of {name}", s.render()))
        if s:
            ok = False
            wit.append((f"counterexample orbit sum {name}", s.render()))
    return ok, wit


def _check_chi_underline_vanishes(max_degree: int | None) -> tuple[bool, Witnesses]:
    theta = theta_torus()
    chi = chi_torus()
    wit: Witnesses = [
        ("theta on the torus", theta.render()),
        ("chi on the torus", chi.render()),
    ]
    return not chi, wit


def _check_theta_epsilon(max_degree: int | None) -> tuple[bool, Witnesses]:
    group = s3_on_u()
    theta = theta_torus()
    _, c3w = w_chern_torus()
    theta_eps = group.act("(12)", theta)
    difference = theta_eps - theta - 3 * c3w
    wit: Witnesses = [
        ("derived (12) on u", describe_substitution(group, "(12)")),
        ("derived (123) on u", describe_substitution(group, "(123)")),
        ("theta^eps", theta_eps.render()),
        ("theta^eps - theta - 3*c3(W)", difference.render()),
    ]
    return not difference, wit


def _check_delta_discriminant(max_degree: int | None) -> tuple[bool, Witnesses]:
    delta = delta_torus()
    c2w, c3w = w_chern_torus()
    identity = delta ** 2 + 4 * c2w ** 3 + 27 * c3w ** 2
    combination = 2 * theta_torus() + 3 * c3w
    if combination == delta:
        sign = "+1"
    elif combination == -delta:
        sign = "-1"
    else:
        sign = None
    wit: Witnesses = [
        ("delta", delta.render()),
        ("delta^2 + 4*c2(W)^3 + 27*c3(W)^2", identity.render()),
        ("sign of (2*theta + 3*c3(W)) / delta", sign or "not proportional"),
    ]
    ok = (not identity) and sign is not None
    if sign is None:
        wit.append(("counterexample 2*theta + 3*c3(W)", combination.render()))
    return ok, wit


def _check_point_class(max_degree: int | None) -> tuple[bool, Witnesses]:
    ctx = context(("l", "u1", "u2"))
    l = Polynomial.variable(ctx, "l")
    u1 = Polynomial.variable(ctx, "u1")
    u2 = Polynomial.variable(ctx, "u2")
    u3 = -u1 - u2
    product = (l - u2) * (l - u3)
    expected = l ** 2 + l * u1 + u2 * u3
    difference = product - expected
    wit: Witnesses = [
        ("(l - u2)*(l - u3)", product.render()),
        ("l^2 + l*u1 + u2*u3", expected.render()),
    ]
    if difference:
        wit.append(("counterexample difference", difference.render()))
    return not difference, wit


def _a3mu3_variables() -> tuple[Polynomial, Polynomial]:
    ctx = A3MU3_AB.ctx
    ring = A3MU3_AB.ring
    return (Polynomial.variable(ctx, "a", ring),
            Polynomial.variable(ctx, "b", ring))


def _check_a3mu3_chern(max_degree: int | None) -> tuple[bool, Witnesses]:
    a, b = _a3mu3_variables()
    w = standard("W_A3mu3")
    sl3_finite = subtract(standard("reg_A3mu3"), trivial(A3MU3_AB))
    cases = [
        ("c2(W)", chern_class(w, 2), -(a ** 2)),
        ("c3(W)", chern_class(w, 3), b * (b ** 2 - a ** 2)),
        ("c8(sl3)", chern_class(sl3_finite, 8),
         (a * b) ** 2 * (b ** 2 - a ** 2) ** 2),
    ]
    ok = True
    wit: Witnesses = []
    for name, computed, expected in cases:
        wit.append((name, computed.render()))
        if computed != expected:
            ok = False
            wit.append((f"counterexample {name}",
                        f"expected {expected.render()}"))
    return ok, wit


def _check_rho_squared(max_degree: int | None) -> tuple[bool, Witnesses]:
    a, _ = _a3mu3_variables()
    w = standard("W_A3mu3")
    sl3_finite = subtract(standard("reg_A3mu3"), trivial(A3MU3_AB))
    rho_restricted = a * chern_class(w, 3)
    c8 = chern_class(sl3_finite, 8)
    difference = rho_restricted ** 2 - c8
    wit: Witnesses = [
        ("rho restricted: a*c3(W)", rho_restricted.render()),
        ("(a*c3(W))^2", (rho_restricted ** 2).render()),
        ("c8(sl3)", c8.render()),
        ("difference", difference.render()),
    ]
    return not difference, wit


def _check_alphabeta_nonmembership(max_degree: int | None) -> tuple[bool, Witnesses]:
    ctx = A3MU3_AB.ctx
    ring = A3MU3_AB.ring
    a, b = _a3mu3_variables()
    multiplier = -(a ** 2)
    degree2 = ctx.monomials_of_degree(2)
    image_vectors = []
    for exp in degree2:
        image = Polynomial(ctx, ring, {exp: 1}) * multiplier
        image_vectors.append([int(c) for c in image.coefficient_vector(4)[1]])
    target_poly = a * b ** 3
    basis, target = target_poly.coefficient_vector(4)
    result = intlinalg.membership([int(c) for c in target], image_vectors, modulus=3)
    wit: Witnesses = [
        ("degree-4 basis", ", ".join(ctx.render_monomial(e) for e in basis)),
        ("image generators",
         "; ".join((Polynomial(ctx, ring, {e: 1}) * multiplier).render()
                   for e in degree2)),
        ("a*b^3 in image", str(result.member)),
    ]
    if result.member:
        wit.append(("counterexample certificate", str(result.certificate)))
    return not result.member, wit


_SL3_EXPECTED = {
    "c2_sl3": "6*a2",
    "c2_sym3": "15*a2",
    "c3_sym3": "27*a3",
    "c6_sl3": "4*a2^3 + 27*a3^2",
}


def _check_sl3_restriction(max_degree: int | None) -> tuple[bool, Witnesses]:
    data = _sl3_chern_data()
    e_sl3 = restrict_rep(standard("E"), TO_SL3)
    gens = {"a2": chern_class(e_sl3, 2), "a3": chern_class(e_sl3, 3)}
    gen_ctx = context(("a2", "a3"), (2, 3))
    ok = True
    wit: Witnesses = []
    for key, expected_text in _SL3_EXPECTED.items():
        restricted = restrict_poly(data[key], TO_SL3)
        result = express_in(restricted, gens)
        if not result.ok:
            ok = False
            wit.append((f"counterexample {key}",
                        f"no integral expression; rational: {result.rational_expression}"))
            continue
        wit.append((f"{key} restricted", result.expression.render()))
        if result.expression != parse(expected_text, gen_ctx, INTEGERS):
            ok = False
            wit.append((f"counterexample {key}", f"expected {expected_text}"))

    lam_printed = 2 * data["c2_sl3"] - data["c2_sym3"]
    lam_image = express_in(restrict_poly(lam_printed, TO_SL3), gens)
    if lam_image.ok:
        wit.append(("image of 2*c2(sl3) - c2(Sym3E)", lam_image.expression.render()))
        if lam_image.expression != parse("-3*a2", gen_ctx, INTEGERS):
            ok = False
            wit.append(("counterexample lambda image",
                        f"computed {lam_image.expression.render()}, expected -3*a2"))
    else:
        ok = False
        wit.append(("counterexample lambda image", "no integral expression"))
    wit.append(("informational sign discrepancy",
                "the published remark prints lambda -> 3*a2 while the printed "
                "combination 2*c2(sl3) - c2(Sym3E) restricts to -3*a2; the "
                "torsion relation below is therefore evaluated with lambda = "
                "c2(Sym3E) - 2*c2(sl3), whose image is 3*a2"))

    lam_used = -lam_printed
    relation = (27 * data["c6_sl3"] - data["c3_sym3"] ** 2 - 4 * lam_used ** 3)
    relation_restricted = restrict_poly(relation, TO_SL3)
    wit.append(("27*c6(sl3) - c3(Sym3E)^2 - 4*lam^3 restricted",
                relation_restricted.render()))
    if relation_restricted:
        ok = False
        wit.append(("counterexample torsion relation",
                    relation_restricted.render()))
    return ok, wit


def _laurent_reduce(p: Polynomial) -> Polynomial:
    """Canonical form in Z[x1,x2,x3]/(x1*x2*x3 - 1): shift every exponent
    vector by multiples of (1,1,1) until its minimum entry is zero."""
    terms: dict = {}
    for e, c in p.terms.items():
        m = min(e)
        key = tuple(x - m for x in e)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(p.context, p.ring, terms)


def _check_repring_generators(max_degree: int | None) -> tuple[bool, Witnesses]:
    bound = 9 if max_degree is None else max_degree
    if bound < 0:
        raise CheckConfigError("max degree must be non-negative")
    ctx = T_GL3.ctx
    x = [Polynomial.variable(ctx, n) for n in ctx.names]
    one = Polynomial.constant(ctx, 1)
    s1 = x[0] + x[1] + x[2]
    s2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    duals = [x[1] * x[2], x[0] * x[2], x[0] * x[1]]

    def h3(vals: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial.zero(ctx)
        for combo in itertools.combinations_with_replacement(range(3), 3):
            term = one
            for i in combo:
                term = term * vals[i]
            total = total + term
        return total

    cases = [
        ("sl3 character", s1 * (duals[0] + duals[1] + duals[2]) - one,
         s1 * s2 - one),
        ("Sym3E character", h3(x), s1 ** 3 - 2 * s1 * s2 + one),
        ("Sym3E-dual character", h3(duals), s2 ** 3 - 2 * s1 * s2 + one),
    ]
    ok = True
    wit: Witnesses = []
    for name, computed, expected in cases:
        delta = _laurent_reduce(computed - expected)
        wit.append((name, _laurent_reduce(computed).render()))
        if delta:
            ok = False
            wit.append((f"counterexample {name}", delta.render()))

    decomposed = 0
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            if (a + 2 * b) % 3 != 0:
                continue
            found = None
            for i in range(a // 3 + 1):
                for j in range(min(a, b) + 1):
                    rem_a = a - 3 * i - j
                    rem_b = b - j
                    if rem_a == 0 and rem_b >= 0 and rem_b % 3 == 0:
                        found = (i, j, rem_b // 3)
                        break
                if found:
                    break
            if found is None:
                ok = False
                wit.append(("counterexample monoid",
                            f"s1^{a}*s2^{b} admissible but not in "
                            f"<(3,0),(1,1),(0,3)>"))
            else:
                i, j, k = found
                assert 3 * i + j == a and j + 3 * k == b
                decomposed += 1
    wit.append(("admissible monomials decomposed",
                f"{decomposed} up to total degree {bound}"))
    return ok, wit


def _check_regular_rep_vanishing(max_degree: int | None) -> tuple[bool, Witnesses]:
    reg = standard("reg_A3mu3")
    sl3_finite = subtract(reg, trivial(A3MU3_AB))
    sym3_finite = direct_sum(reg, trivial(A3MU3_AB))
    ok = True
    wit: Witnesses = []
    for name, rep in (("sl3 = reg - 1", sl3_finite), ("Sym3E = reg + 1", sym3_finite)):
        for i in range(1, 5):
            value = chern_class(rep, i)
            wit.append((f"c{i} of {name}", value.render()))
            if value:
                ok = False
                wit.append((f"counterexample c{i} of {name}", value.render()))
    return ok, wit


def _count_rational_monomials(d: int) -> int:
    return sum(1 for a in range(d // 2 + 1) if (d - 2 * a) % 3 == 0)


def _check_rstar_structure(max_degree: int | None) -> tuple[bool, Witnesses]:
    bound = 16 if max_degree is None else max_degree
    if bound < 0:
        raise CheckConfigError("max degree must be non-negative")
    pres = rstar_presentation()
    ranks = dict(rational_rank_table(pres, bound))
    ok = True
    wit: Witnesses = []
    lines = []
    for d in range(bound + 1):
        comp = graded_component(pres, d)
        expected = _count_rational_monomials(d)
        lines.append(f"{d}: {comp.render()}")
        if comp.free_rank != expected:
            ok = False
            wit.append((f"counterexample free rank at degree {d}",
                        f"free rank {comp.free_rank}, expected {expected}"))
        if ranks[d] != comp.free_rank:
            ok = False
            wit.append((f"counterexample rational rank at degree {d}",
                        f"rational {ranks[d]}, free {comp.free_rank}"))
        if d == 4 and comp.torsion != (3,):
            ok = False
            wit.append(("counterexample degree-4 torsion",
                        f"invariant factors {comp.torsion}, expected (3,) to "
                        f"match H^8 = Z + Z/3"))
    wit.append(("graded components", "; ".join(lines)))
    return ok, wit


# ---- registry ------------------------------------------------------------------


@dataclass(frozen=True)
class _Entry:
    spec: CheckSpec
    run: Callable[[int | None], tuple[bool, Witnesses]]


_REGISTRY: tuple[_Entry, ...] = (
    _Entry(CheckSpec(
        "gamma-invariance",
        "gamma2, gamma3, gamma6 are S3-invariant and shift-invariant",
        "Weyl invariants: 'gamma2, gamma3 and gamma6 are indeed in the "
        "invariant subring'"),
        _check_gamma_invariance),
    _Entry(CheckSpec(
        "gamma-generation",
        "monomials in gamma2, gamma3, gamma6 span the full lattice of "
        "shift-invariant S3-invariants in every degree",
        "Weyl-invariant subring of the PGL3 torus 'is generated by' gamma2, "
        "gamma3, gamma6", 12),
        _check_gamma_generation),
    _Entry(CheckSpec(
        "gamma-syzygy",
        "gamma2^3 - gamma3^2 equals -3*(gamma2^3 - 9*gamma6)",
        "'(gamma2^3 - gamma3^2) = -3(gamma2^3 - 9 gamma6)'"),
        _check_gamma_syzygy),
    _Entry(CheckSpec(
        "two-variable-gammas",
        "images of the gammas under x1->x, x2->y, x3->0 match the "
        "two-variable presentation",
        "'gamma2 = (x+y)^2 - 3xy', 'gamma3 = -9(x+y)xy + 2(x+y)^3', "
        "'gamma6 = (x+y)^2 x^2 y^2 - 4 x^3 y^3'"),
        _check_two_variable_gammas),
    _Entry(CheckSpec(
        "twistaction-group",
        "the two-variable Weyl action closes to a group of order 6 fixing "
        "the gamma images",
        "'(12)x = y, (12)y = x', '(123)x = -y, (123)y = x - y'"),
        _check_twistaction_group),
    _Entry(CheckSpec(
        "hsurj-restrictions",
        "restriction values of c2(sl3), c2(Sym3E), c3(Sym3E), c6(sl3) "
        "against the gamma generators",
        "'c2(sl3) = -2 gamma2', 'c2(Sym3E) = -5 gamma2', 'c3(Sym3E) = "
        "gamma3', 'c6(sl3) = gamma6' (published table)"),
        _check_hsurj_restrictions),
    _Entry(CheckSpec(
        "transfer-laws",
        "orbit sums are invariant, scale invariants by the group order, and "
        "kill the torus characters u_i",
        "'res tsf(xi) = sum over f of f_* xi' and '(#F) . ' on invariants"),
        _check_transfer_laws),
    _Entry(CheckSpec(
        "chi-underline-vanishes",
        "chi = (2*theta + 3*c3(W))^2 + 4*c2(W)^3 + 27*c3(W)^2 restricts to "
        "zero on the SL3 torus",
        "'chi restricted to the torus is 0'"),
        _check_chi_underline_vanishes),
    _Entry(CheckSpec(
        "theta-epsilon",
        "the transposition twist sends theta to theta + 3*c3(W) at the "
        "torus level",
        "'theta^eps = theta + 3 c3(W)'"),
        _check_theta_epsilon),
    _Entry(CheckSpec(
        "delta-discriminant",
        "delta^2 + 4*c2(W)^3 + 27*c3(W)^2 = 0 with 2*theta + 3*c3(W) "
        "proportional to delta",
        "'delta = (u1-u2)(u2-u3)(u1-u3)'"),
        _check_delta_discriminant),
    _Entry(CheckSpec(
        "point-class",
        "the class of the chosen fixed point on P(W) is l^2 + l*u1 + u2*u3",
        "'(l - u2)(l - u3) = l^2 + l u1 + u2 u3'"),
        _check_point_class),
    _Entry(CheckSpec(
        "a3mu3-chern",
        "over Z/3 the Chern roots b+a, b-a, b give c2(W) = -a^2, c3(W) = "
        "b(b^2 - a^2), c8(sl3) = a^2 b^2 (b^2 - a^2)^2",
        "'c2(W) = -a^2' and 'c8(sl3) = a^2 b^2 (b^2 - a^2)^2'"),
        _check_a3mu3_chern),
    _Entry(CheckSpec(
        "rho-squared",
        "(a*c3(W))^2 equals c8(sl3) over A3 x mu3, certifying rho^2 = "
        "c8(sl3) with unit coefficient",
        "'rho restricted = a c3(W)'; 'prove that B = 1'"),
        _check_rho_squared),
    _Entry(CheckSpec(
        "alphabeta-nonmembership",
        "a*b^3 is outside the image of multiplication by -a^2 in degree 4 "
        "of Z/3[a,b]",
        "'a b^3 not in the image of multiplication by -a^2'"),
        _check_alphabeta_nonmembership),
    _Entry(CheckSpec(
        "sl3-restriction",
        "SL3-restriction values 6*a2, 15*a2, 27*a3 and the vanishing of the "
        "restricted torsion relation",
        "'c2(sl3) -> 6 a2', 'c2(Sym3E) -> 15 a2', 'c3(Sym3E) -> 27 a3'; "
        "c6(sl3) 'restricts to minus the discriminant, 4 a2^3 + 27 a3^2'"),
        _check_sl3_restriction),
    _Entry(CheckSpec(
        "repring-generators",
        "representation-ring identities for sl3, Sym3E, Sym3E-dual and the "
        "monoid decomposition of admissible monomials",
        "'sl3 = s1 s2 - 1', 'Sym3E = s1^3 - 2 s1 s2 + 1', 'Sym3E-dual = "
        "s2^3 - 2 s1 s2 + 1'", 9),
        _check_repring_generators),
    _Entry(CheckSpec(
        "regular-rep-vanishing",
        "c1..c4 of the 8- and 10-weight regular-representation multisets "
        "vanish over Z/3",
        "'c_i(sl3) = c_j(Sym3E) = 0 over A3 x mu3 for i, j = 1..4'"),
        _check_regular_rep_vanishing),
    _Entry(CheckSpec(
        "rstar-structure",
        "degree-wise structure of the candidate presented ring matches "
        "Q[lam, c3] rationally with Z/3 torsion in degree 4",
        "candidate ring 'Z[lam, c3(Sym3E), rho, chi, c6(sl3), c8(sl3)] "
        "modulo the torsion relations'; 'R* tensor Q = Q[lam, c3(Sym3E)]'",
        16),
        _check_rstar_structure),
)

_BY_NAME = {entry.spec.name: entry for entry in _REGISTRY}


def list_checks() -> list[CheckSpec]:
    return [entry.spec for entry in _REGISTRY]


def run_check(name: str, max_degree: int | None = None) -> CheckResult:
    try:
        entry = _BY_NAME[name]
    except KeyError:
        raise UnknownCheckError(name) from None
    start = time.perf_counter()
    try:
        bound = max_degree if max_degree is not None else entry.spec.default_max_degree
        if bound is not None and bound < 0:
            raise CheckConfigError("max degree must be non-negative")
        ok, witnesses = entry.run(bound)
        verdict = "pass" if ok else "fail"
    except CheckConfigError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        witnesses = [("error", f"{type(exc).__name__}: {exc}")]
        verdict = "error"
    elapsed = time.perf_counter() - start
    return CheckResult(name, verdict, tuple(witnesses), elapsed)


def run_all(max_degree_overrides: Mapping[str, int] | None = None,
            global_max_degree: int | None = None) -> Report:
    overrides = dict(max_degree_overrides or {})
    for key in overrides:
        if key not in _BY_NAME:
            raise UnknownCheckError(key)
    results = []
    for entry in _REGISTRY:
        bound = overrides.get(entry.spec.name, global_max_degree)
        results.append(run_check(entry.spec.name, bound))
    return Report(tuple(results))
