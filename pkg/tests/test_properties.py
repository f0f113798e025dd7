"""Randomized law checking: ring homomorphisms, group actions, Chern-class
identities, and integer normal forms, each over at least 200 instances."""

from hypothesis import given, settings, strategies as st

from pgl3chow import intlinalg as la
from pgl3chow.checks import s3_on_u, s3_on_x
from pgl3chow.poly import INTEGERS, Polynomial, RingMap, context, parse
from pgl3chow.repcalc import (
    T_GL3,
    TO_SL3,
    TO_XY,
    VirtualRep,
    chern_class,
    direct_sum,
    dual,
    restrict_poly,
    restrict_rep,
)

LAW_SETTINGS = settings(max_examples=200, deadline=None)

X3 = T_GL3.ctx
XY = context(("x", "y"))


def polynomials(ctx, max_exp=3, max_terms=4, coeff_bound=9):
    exponents = st.tuples(*(st.integers(0, max_exp) for _ in range(ctx.arity)))
    return st.dictionaries(exponents, st.integers(-coeff_bound, coeff_bound),
                           max_size=max_terms).map(
        lambda terms: Polynomial(ctx, INTEGERS, terms))


def image_polynomials():
    return polynomials(XY, max_exp=2, max_terms=3, coeff_bound=3)


@st.composite
def ring_maps(draw):
    images = tuple(draw(image_polynomials()) for _ in range(X3.arity))
    return RingMap(X3, XY, images, INTEGERS)


@st.composite
def genuine_reps(draw, max_weights=3):
    n = draw(st.integers(1, max_weights))
    weights = []
    for _ in range(n):
        coords = tuple(draw(st.integers(-2, 2)) for _ in range(3))
        mult = draw(st.integers(1, 2))
        weights.append((coords, mult))
    return VirtualRep.from_weights(T_GL3, weights)


def int_matrices(max_dim=4, bound=9):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m, max_size=m)))


class TestSubstituteHomomorphism:
    @LAW_SETTINGS
    @given(polynomials(X3), polynomials(X3), ring_maps())
    def test_multiplicative(self, p, q, rm):
        assert rm.apply(p * q) == rm.apply(p) * rm.apply(q)

    @LAW_SETTINGS
    @given(polynomials(X3), polynomials(X3), ring_maps())
    def test_additive(self, p, q, rm):
        assert rm.apply(p + q) == rm.apply(p) + rm.apply(q)


class TestGroupActionLaws:
    @LAW_SETTINGS
    @given(st.sampled_from(range(6)), st.sampled_from(range(6)),
           polynomials(X3, max_exp=2, max_terms=3))
    def test_composition_on_x(self, i, j, p):
        group = s3_on_x()
        labels = group.labels()
        la_, lb = labels[i], labels[j]
        prod = la.matmul([list(r) for r in group.matrix(la_)],
                         [list(r) for r in group.matrix(lb)])
        composed = group.act(la_, group.act(lb, p))
        assert group.act_matrix(prod, p) == composed

    @LAW_SETTINGS
    @given(st.sampled_from(range(6)), st.sampled_from(range(6)),
           polynomials(context(("u1", "u2")), max_exp=2, max_terms=3))
    def test_composition_on_twisted_u(self, i, j, p):
        group = s3_on_u()
        p = Polynomial(group.ctx, INTEGERS, dict(p.terms))
        labels = group.labels()
        la_, lb = labels[i], labels[j]
        prod = la.matmul([list(r) for r in group.matrix(la_)],
                         [list(r) for r in group.matrix(lb)])
        composed = group.act(la_, group.act(lb, p))
        assert group.act_matrix(prod, p) == composed


class TestChernLaws:
    @LAW_SETTINGS
    @given(genuine_reps(), genuine_reps())
    def test_whitney_formula(self, r, s):
        total = direct_sum(r, s)
        for i in range(r.dimension + s.dimension + 1):
            convolution = Polynomial.zero(X3)
            for j in range(i + 1):
                convolution = convolution + chern_class(r, j) * chern_class(s, i - j)
            assert chern_class(total, i) == convolution

    @LAW_SETTINGS
    @given(genuine_reps())
    def test_duality_signs(self, r):
        for i in range(r.dimension + 1):
            sign = 1 if i % 2 == 0 else -1
            assert chern_class(dual(r), i) == sign * chern_class(r, i)

    @LAW_SETTINGS
    @given(genuine_reps(), st.sampled_from([TO_XY, TO_SL3]))
    def test_naturality(self, r, lattice_map):
        for i in range(min(r.dimension, 3) + 1):
            assert restrict_poly(chern_class(r, i), lattice_map) == \
                chern_class(restrict_rep(r, lattice_map), i)


class TestNormalFormLaws:
    @LAW_SETTINGS
    @given(int_matrices())
    def test_snf_certifying_identity(self, a):
        form = la.smith_normal_form(a)
        rows, cols = len(a), len(a[0])
        diag = [[form.diag[i] if i == j and i < len(form.diag) else 0
                 for j in range(cols)] for i in range(rows)]
        assert la.matmul(la.matmul(form.left, a), form.right) == diag
        assert abs(la.bareiss_determinant(form.left)) == 1
        assert abs(la.bareiss_determinant(form.right)) == 1
        nonzero = [d for d in form.diag if d]
        for small, big in zip(nonzero, nonzero[1:]):
            assert big % small == 0
        assert all(d >= 0 for d in form.diag)

    @LAW_SETTINGS
    @given(int_matrices())
    def test_kernel_saturation(self, a):
        kernel = la.kernel_basis(a)
        for v in kernel:
            assert all(x == 0 for x in la.mat_vec(a, v))
        assert len(kernel) == len(a[0]) - la.rank(a)
        if kernel:
            assert all(d == 1 for d in la.invariant_factors(kernel))

    @LAW_SETTINGS
    @given(int_matrices())
    def test_hnf_is_canonical_for_the_lattice(self, a):
        h = la.lattice_basis(a)
        doubled = la.lattice_basis(a + [row[:] for row in a])
        assert h == doubled
        shuffled = la.lattice_basis(list(reversed(a)))
        assert h == shuffled

    @LAW_SETTINGS
    @given(int_matrices(max_dim=3, bound=5),
           st.lists(st.integers(-5, 5), min_size=3, max_size=3))
    def test_membership_certificates_recombine(self, gens, coeffs):
        gens = [row[:3] + [0] * (3 - len(row[:3])) for row in gens]
        target = [sum(c * g[j] for c, g in zip(coeffs, gens))
                  for j in range(3)]
        result = la.membership(target, gens)
        assert result.member
        recombined = [sum(c * g[j] for c, g in zip(result.certificate, gens))
                      for j in range(3)]
        assert recombined == target


class TestCanonicalForms:
    @LAW_SETTINGS
    @given(polynomials(X3))
    def test_renormalization_is_identity(self, p):
        assert Polynomial(p.context, p.ring, dict(p.terms)) == p

    @LAW_SETTINGS
    @given(polynomials(X3))
    def test_text_round_trip(self, p):
        assert parse(p.render(), X3, INTEGERS) == p

    @LAW_SETTINGS
    @given(polynomials(X3))
    def test_homogeneous_parts_sum(self, p):
        top = p.weighted_degree()
        total = Polynomial.zero(X3)
        for d in range((top or 0) + 1):
            total = total + p.homogeneous_part(d)
        assert total == p

    @LAW_SETTINGS
    @given(polynomials(X3), polynomials(X3))
    def test_mod3_reduction_commutes_with_arithmetic(self, p, q):
        from pgl3chow.poly import reduction_map
        red = reduction_map(X3, 3)
        assert red.apply(p * q) == red.apply(p) * red.apply(q)
        assert red.apply(p - q) == red.apply(p) - red.apply(q)
