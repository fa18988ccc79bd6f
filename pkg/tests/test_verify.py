"""Certificate checks: axioms, adjoint actions, normality, biproducts."""

import random
from fractions import Fraction

import pytest

from superhopf import parse, verify
from superhopf.errors import AlgebraError, DegreeBudgetError
from superhopf.verify import (SpannedSubalgebra, adjoint_left, adjoint_right,
                              biproduct_decomposition, check_ad_equals_bracket,
                              check_antipode, check_bialgebra,
                              check_coassociativity, check_counit,
                              check_grouplike, check_nilpotent_ideal,
                              check_shift_identity,
                              check_sign_commuting_squares,
                              find_skew_primitives, hopf_axiom_suite,
                              is_normal, render_reports, render_summary,
                              zero_divisor_scan)

F = Fraction


# -- axioms -----------------------------------------------------------------------


def test_coassociativity_concrete(bos):
    P = bos.carrier
    H = bos.hopf
    u, t, one = P.gen("u"), P.gen("t"), P.one()
    rep = check_coassociativity(H, [u, one])
    assert rep.passed
    # both sides of the u instance are u(x)1(x)1 + t(x)u(x)1 + t(x)t(x)u
    d = H.coproduct(u).apply_tensor_map(H.delta_monomial, 0)
    expected = {(m1, m2, m3): F(1) for m1, m2, m3 in [
        (P.monomial(u=1), P.monomial(), P.monomial()),
        (P.monomial(t=1), P.monomial(u=1), P.monomial()),
        (P.monomial(t=1), P.monomial(t=1), P.monomial(u=1)),
    ]}
    assert dict(d.items()) == expected


def test_corrupted_coproduct_fails_coassociativity(bos):
    # with Delta(t) := t (x) 1 the element t alone still looks coassociative;
    # the corruption surfaces on u, whose expansions disagree in the middle
    # slot (t (x) 1 (x) u versus t (x) t (x) u)
    P = bos.carrier
    t, u, one = P.gen("t"), P.gen("u"), P.one()
    corrupted = bos.hopf.replace(delta={"t": t.outer(one)})
    assert check_coassociativity(corrupted, [t]).passed
    rep = check_coassociativity(corrupted, [t, u])
    assert rep.status == verify.FAIL
    assert rep.witnesses[0][0] == "u"


def test_counit_and_antipode_concrete(bos):
    P = bos.carrier
    H = bos.hopf
    u, t = P.gen("u"), P.gen("t")
    assert check_counit(H, [u, t, P.one(), u * t]).passed
    assert check_antipode(H, [u, t, P.one(), u * t]).passed
    assert check_bialgebra(H, [(u, t), (u, u), (t, t)]).passed


def test_full_axiom_suite_on_all_three_algebras(sess_u, sess_ubar, sess_bbar):
    for sess in (sess_u, sess_ubar, sess_bbar):
        reports = hopf_axiom_suite(sess.hopf, n_random=25, seed=5)
        assert all(r.passed for r in reports), sess.name


# -- adjoint actions -----------------------------------------------------------------


def test_adjoint_left_examples(bos):
    P = bos.carrier
    H = bos.hopf
    y, u, v, t = (P.gen(n) for n in "yuvt")
    assert adjoint_left(H, y, u) == u
    assert adjoint_left(H, y, v) == -v
    assert adjoint_left(H, u, t) == parse("-2*t*u", P)


def test_adjoint_left_is_a_measuring_action(bos):
    P = bos.carrier
    H = bos.hopf
    rng = random.Random(17)
    for _ in range(25):
        a = verify.random_element(P, rng, 2)
        a2 = verify.random_element(P, rng, 2)
        b = verify.random_element(P, rng, 2)
        assert adjoint_left(H, a * a2, b) == \
            adjoint_left(H, a, adjoint_left(H, a2, b))


def test_adjoint_right_composes_contravariantly(bos):
    P = bos.carrier
    H = bos.hopf
    rng = random.Random(19)
    for _ in range(15):
        a = verify.random_element(P, rng, 2)
        a2 = verify.random_element(P, rng, 2)
        b = verify.random_element(P, rng, 2)
        assert adjoint_right(H, a * a2, b) == \
            adjoint_right(H, a2, adjoint_right(H, a, b))


def test_ad_equals_bracket(sess_ubar):
    rep = check_ad_equals_bracket(sess_ubar.lie, sess_ubar.bos)
    assert rep.passed
    assert rep.parameters["pairs"] == 16


def test_ad_equals_bracket_on_triangular(sess_bbar):
    assert check_ad_equals_bracket(sess_bbar.lie, sess_bbar.bos).passed


# -- normality -----------------------------------------------------------------------


def test_normality_of_central_polynomials(bos):
    P = bos.carrier
    kx = SpannedSubalgebra(P, [P.gen("x")], 8)
    assert is_normal(bos, kx, 6).passed


def test_group_algebra_is_not_normal(bos):
    P = bos.carrier
    K = SpannedSubalgebra(P, [P.gen("t")], 8)
    rep = is_normal(bos, K, 6)
    assert rep.status == verify.FAIL
    item, _, actual = rep.witnesses[0]
    assert item == "ad_l(u)(t)"
    assert parse(actual, P) == parse("-2*t*u", P)


def test_whole_algebra_is_normal(bos):
    P = bos.carrier
    whole = SpannedSubalgebra(P, [P.gen(g.name) for g in P.generators], 6)
    assert is_normal(bos, whole, 4).passed


def test_normality_needs_enough_cache(bos):
    P = bos.carrier
    shallow = SpannedSubalgebra(P, [P.gen("x")], 5)
    with pytest.raises(DegreeBudgetError):
        is_normal(bos, shallow, 6)


# -- grouplikes and skew primitives -----------------------------------------------------


def test_grouplike_membership(bos):
    P = bos.carrier
    H = bos.hopf
    assert check_grouplike(H, P.one())
    assert check_grouplike(H, P.gen("t"))
    assert not check_grouplike(H, P.gen("u") + P.one())
    assert not check_grouplike(H, P.gen("y"))


def test_primitives_span_the_even_part(bos):
    P = bos.carrier
    basis = find_skew_primitives(bos, P.one(), 3)
    assert len(basis) == 2
    assert set(basis) == {P.gen("x"), P.gen("y")}


def test_t_skew_primitives_include_the_odd_generators(bos):
    P = bos.carrier
    t = P.gen("t")
    basis = find_skew_primitives(bos, t, 3)
    # u, v, and 1 - t span the solutions at this bound
    assert len(basis) == 3
    from superhopf.linalg import RowSpace
    from superhopf.algebra import monomial_key
    space = RowSpace(monomial_key)
    for e in basis:
        space.insert(e.coeffs)
    for sol in (P.gen("u"), P.gen("v"), P.one() - t):
        assert space.contains(sol.coeffs)
    # every returned element satisfies the skew-primitive equation
    H = bos.hopf
    for p in basis:
        assert H.coproduct(p) == p.outer(P.one()) + t.outer(p)


def test_skew_primitives_need_a_grouplike(bos):
    with pytest.raises(AlgebraError):
        find_skew_primitives(bos, bos.carrier.gen("u"), 2)


# -- biproduct decomposition --------------------------------------------------------------


@pytest.mark.parametrize("gen_names,inner_dim", [
    (["y", "u", "t"], 13),  # the triangular enveloping part: y^a u^e, a+e<=6
    (["x", "t"], 7),        # k[x] up to degree 6
    (["t"], 1),             # the group algebra alone
])
def test_biproduct_decomposition_cases(bos, gen_names, inner_dim):
    P = bos.carrier
    sub = SpannedSubalgebra(P, [P.gen(n) for n in gen_names], 6)
    rep = biproduct_decomposition(bos, sub, 6)
    assert rep.passed, rep.witnesses[:3]
    assert rep.parameters["innerDimension"] == inner_dim


def test_biproduct_decomposition_whole_algebra(bos):
    P = bos.carrier
    sub = SpannedSubalgebra(P, [P.gen(g.name) for g in P.generators], 6)
    rep = biproduct_decomposition(bos, sub, 6)
    assert rep.passed
    assert rep.parameters["innerDimension"] == 85  # dim F_6 of the enveloping part


def test_biproduct_triangular_inner_part_is_the_y_u_span(bos):
    from superhopf.verify import _intersection_with_u
    P = bos.carrier
    sub = SpannedSubalgebra(P, [P.gen(n) for n in ("y", "u", "t")], 6,
                            weights=[1, 1, 0])
    inner = _intersection_with_u(bos, sub.basis_up_to(6))
    monomials = {m for e in inner for m in e.coeffs}
    for m in monomials:
        assert m[P.gen_index("x")] == 0
        assert m[P.gen_index("v")] == 0
        assert m[bos.t_index] == 0
    assert len(inner) == 13


def test_biproduct_requires_t(bos):
    P = bos.carrier
    sub = SpannedSubalgebra(P, [P.gen("x")], 6)
    with pytest.raises(AlgebraError):
        biproduct_decomposition(bos, sub, 6)


# -- shift identity -------------------------------------------------------------------------


def test_shift_identity_for_both_eigenvectors(bos):
    P = bos.carrier
    assert check_shift_identity(bos, P.gen("u"), 6).passed
    assert check_shift_identity(bos, P.gen("v"), 6).passed
    assert check_shift_identity(bos, P.gen("u"), 0).passed  # n = 0 is trivial


def test_shift_identity_concrete_squares(bos):
    P = bos.carrier
    y, u, v, one = P.gen("y"), P.gen("u"), P.gen("v"), P.one()
    assert y ** 2 * u == u * (y + one) ** 2
    assert y ** 2 * v == v * (y - one) ** 2


def test_shift_identity_rejects_non_eigenvectors(bos):
    P = bos.carrier
    with pytest.raises(AlgebraError):
        check_shift_identity(bos, P.gen("x"), 3)  # eigenvalue 0, not +-1


# -- sign commutation ------------------------------------------------------------------------


def test_sign_commuting_squares(bos):
    P = bos.carrier
    # u alone: u t = -t u holds, u^2 = 0 is central
    rep = check_sign_commuting_squares(bos, [P.gen("u")], 4)
    assert rep.passed
    assert "(u,t):-" in rep.parameters["pairSigns"]
    # u and v together: u v = -v u + x breaks strict sign commutation
    rep = check_sign_commuting_squares(bos, [P.gen("u"), P.gen("v")], 4)
    assert rep.status == verify.FAIL
    assert any("(u,v)" in w[0] for w in rep.witnesses)


def test_sign_commuting_needs_homogeneous_input(bos):
    P = bos.carrier
    with pytest.raises(AlgebraError):
        check_sign_commuting_squares(bos, [P.gen("u") + P.gen("y")], 3)


# -- nilpotency and zero divisors ----------------------------------------------------------------


def test_ideal_u_is_square_zero_in_the_triangular_bosonization(sess_bbar):
    P = sess_bbar.pres
    rep = check_nilpotent_ideal(P, [P.gen("u")], 2, 6)
    assert rep.passed
    assert rep.parameters["spanDimension"] == 11  # y^a u t^d with a+1+d <= 6


def test_ideal_u_is_not_square_zero_in_the_full_bosonization(bos):
    P = bos.carrier
    rep = check_nilpotent_ideal(P, [P.gen("u")], 2, 6)
    assert rep.status == verify.FAIL
    assert rep.witnesses


def test_nilpotency_trivial_and_error_cases(bos):
    P = bos.carrier
    assert check_nilpotent_ideal(P, [P.zero()], 2, 4).passed
    with pytest.raises(DegreeBudgetError):
        check_nilpotent_ideal(P, [P.gen("u") * P.gen("v")], 2, 1)


def test_zero_divisor_scan_is_clean_on_the_full_bosonization(bos):
    rep = zero_divisor_scan(bos.carrier, 3, 200, seed=1)
    assert rep.status == verify.INCONCLUSIVE
    assert rep.parameters["found"] == 0


def test_zero_divisor_scan_finds_nilpotents_when_sampling_monomials(sess_bbar):
    rep = zero_divisor_scan(sess_bbar.pres, 2, 200, seed=1, max_terms=1)
    assert rep.status == verify.FAIL
    assert rep.parameters["found"] > 0


def test_zero_divisor_scan_is_deterministic(bos):
    a = zero_divisor_scan(bos.carrier, 2, 50, seed=9)
    b = zero_divisor_scan(bos.carrier, 2, 50, seed=9)
    assert render_reports([a]) == render_reports([b])


def test_trivial_product_is_not_a_zero_divisor(bos):
    one = bos.carrier.one()
    assert not (one * one).is_zero


# -- report rendering -------------------------------------------------------------------------------


def test_report_rendering_and_summary(bos):
    P = bos.carrier
    K = SpannedSubalgebra(P, [P.gen("t")], 8)
    rep = is_normal(bos, K, 6)
    text = render_reports([rep])
    assert text.startswith("CHECK normality FAIL\n")
    assert "    witness: ad_l(u)(t)" in text
    assert text.endswith("\n")
    summary = render_summary([rep], extra={"seed": 1})
    assert "seed=1" in summary
    assert "check.normality=FAIL" in summary
