"""Structure maps of the enveloping algebra and its bosonization."""

from fractions import Fraction

import pytest

from superhopf import bosonize, enveloping, parse
from superhopf.algebra import Generator
from superhopf.errors import AlgebraError
from superhopf.liesuper import LieSuperAlgebra

F = Fraction


def test_enveloping_relations_and_maps(sess_u):
    U = sess_u.u_maps
    P = U.carrier
    assert P.normalize(["v", "u"]) == parse("x - u*v", P)
    x = P.gen("x")
    assert U.coproduct(x) == x.outer(P.one()) + P.one().outer(x)
    assert U.antipode(x) == -x
    assert U.counit(x) == 0
    assert U.counit(P.one()) == 1


def test_enveloping_super_coproduct_of_uv(sess_u):
    # super-multiplicative expansion with the Koszul sign on (1(x)u)(v(x)1)
    U = sess_u.u_maps
    P = U.carrier
    u, v, one = P.gen("u"), P.gen("v"), P.one()
    expected = (u * v).outer(one) + u.outer(v) - v.outer(u) + one.outer(u * v)
    assert U.coproduct(u * v) == expected


def test_enveloping_rejects_invalid_algebra():
    basis = [Generator("a", 0, 0), Generator("b", 1, 1)]
    # [a, b] = a has odd-even bracket landing on an even vector: parity broken
    bad = LieSuperAlgebra(basis, {(0, 1): {0: F(1)}}, name="bad")
    with pytest.raises(AlgebraError):
        enveloping(bad)


def test_bosonize_generator_formulas(bos):
    P = bos.carrier
    u, y, t, one = P.gen("u"), P.gen("y"), P.gen("t"), P.one()
    H = bos.hopf
    assert H.coproduct(u) == u.outer(one) + t.outer(u)
    assert H.coproduct(y) == y.outer(one) + one.outer(y)
    assert H.coproduct(t) == t.outer(t)
    assert H.antipode(u) == -(t * u)
    assert H.antipode(t) == t
    assert H.counit(u) == 0
    assert H.counit(t) == 1


def test_bosonize_requires_primitive_generators(sess_u):
    U = sess_u.u_maps
    P = U.carrier
    x = P.gen("x")
    corrupted = U.replace(delta={"x": x.outer(x)})
    with pytest.raises(AlgebraError):
        bosonize(corrupted)
    with pytest.raises(AlgebraError):
        bosonize(bosonize(U).hopf)  # ordinary mode is not accepted either


def test_coproduct_of_uv_is_coassociative(bos):
    P = bos.carrier
    H = bos.hopf
    u, v, t, one = P.gen("u"), P.gen("v"), P.gen("t"), P.one()
    d = H.coproduct(u * v)
    expected = ((u * v).outer(one) + (u * t).outer(v)
                - (v * t).outer(u) + one.outer(u * v))
    assert d == expected
    left = d.apply_tensor_map(H.delta_monomial, 0)
    right = d.apply_tensor_map(H.delta_monomial, 1)
    assert left == right


def test_projection_to_group_part(bos):
    P = bos.carrier
    y, u, t, one = P.gen("y"), P.gen("u"), P.gen("t"), P.one()
    assert bos.project_to_group(y * t).is_zero
    assert bos.project_to_group(t) == t
    assert bos.project_to_group(one + u) == one
    # identity on the group algebra part
    for e in (one, t, one + 3 * t):
        assert bos.project_to_group(e) == e
    # algebra map on a small test set
    for a in (y, u * t, one + u):
        for b in (t, y * t, u):
            assert bos.project_to_group(a * b) == \
                bos.project_to_group(a) * bos.project_to_group(b)
    # coalgebra map: Delta(pi(a)) == (pi (x) pi) Delta(a)
    for a in (y, u, t, y * t, u * v_of(P)):
        lhs = bos.hopf.coproduct(bos.project_to_group(a))
        rhs = bos.hopf.coproduct(a) \
            .apply_element_map(lambda m: bos.project_to_group(P.monomial_element(m)), 0) \
            .apply_element_map(lambda m: bos.project_to_group(P.monomial_element(m)), 1)
        assert lhs == rhs


def v_of(P):
    return P.gen("v")


def test_projection_to_coinvariants(bos):
    P = bos.carrier
    y, u, t = P.gen("y"), P.gen("u"), P.gen("t")
    assert bos.project_to_coinvariants(y * t) == y
    assert bos.project_to_coinvariants(u) == u
    assert bos.project_to_coinvariants(u * t - u).is_zero
    # idempotent
    for a in (y * t, u, y + 2 * u * t):
        once = bos.project_to_coinvariants(a)
        assert bos.project_to_coinvariants(once) == once


def test_coinvariant_projection_is_a_coalgebra_map(bos):
    # Delta_U(Pi(a)) == (Pi (x) Pi) Delta(a), with the left side taken in
    # the plain enveloping algebra and embedded back
    P = bos.carrier
    for expr in ("y", "u", "y*t", "u*t", "u*v", "u*v*t", "1 + 2*t"):
        a = parse(expr, P)
        pi_a = bos.project_to_coinvariants(a)
        lhs = bos.u_maps.coproduct(bos.restrict_to_u(pi_a))
        embedded = {}
        for (m1, m2), c in lhs.items():
            embedded[(m1 + (0,), m2 + (0,))] = c
        rhs = bos.hopf.coproduct(a) \
            .apply_element_map(lambda m: bos.project_to_coinvariants(P.monomial_element(m)), 0) \
            .apply_element_map(lambda m: bos.project_to_coinvariants(P.monomial_element(m)), 1)
        assert dict(rhs.items()) == embedded


def test_coinvariance(bos):
    P = bos.carrier
    assert bos.is_coinvariant(P.gen("u"))
    assert not bos.is_coinvariant(P.gen("t"))
    assert bos.is_coinvariant(P.one())


def test_coinvariance_is_exactly_t_freeness_up_to_degree_six(bos):
    P = bos.carrier
    for m in P.enumerate_monomials(6):
        assert bos.is_coinvariant(P.monomial_element(m)) == (m[bos.t_index] == 0)


def test_parity_conjugation_by_t(bos):
    P = bos.carrier
    t = P.gen("t")
    for m in P.enumerate_monomials(6):
        a = P.monomial_element(m)
        sign = -1 if P.monomial_parity(m) else 1
        assert t * a * t == sign * a


def test_sum_formula_coproduct_oracle_agrees(bos):
    # the generator-extension route must match the direct biproduct formula
    P = bos.carrier
    for m in P.enumerate_monomials(4):
        e = P.monomial_element(m)
        assert bos.hopf.coproduct(e) == bos.coproduct_reference(e)


def test_include_restrict_round_trip(bos):
    P = bos.carrier
    a = parse("x*y - 2*u*v", bos.u_maps.carrier)
    embedded = bos.include_from_u(a)
    assert bos.restrict_to_u(embedded) == a
    with pytest.raises(AlgebraError):
        bos.restrict_to_u(P.gen("t"))


def test_distinct_presentation_objects_do_not_mix(bos, sess_u):
    # two independently constructed copies of the same algebra are distinct
    # carriers; elements never cross between them silently
    with pytest.raises(AlgebraError):
        bos.include_from_u(sess_u.pres.gen("x"))


def test_antipode_squared_is_conjugation_by_t(bos):
    # S^2(a) = t a t on the bosonization (so S^2 = id exactly on the even part)
    P = bos.carrier
    H = bos.hopf
    t = P.gen("t")
    for m in P.enumerate_monomials(4):
        e = P.monomial_element(m)
        assert H.antipode(H.antipode(e)) == t * e * t


def test_super_antipode_is_an_involution_on_the_enveloping_part(sess_u):
    U = sess_u.u_maps
    P = U.carrier
    for m in P.enumerate_monomials(4):
        e = P.monomial_element(m)
        assert U.antipode(U.antipode(e)) == e


def test_k_part_presentation(bos):
    K = bos.k_part
    assert [g.name for g in K.generators] == ["t"]
    assert K.normalize(["t", "t"]) == K.one()
