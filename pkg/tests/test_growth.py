"""Filtration dimensions, growth degrees, module-finiteness, centralizers."""

import itertools

import pytest

from superhopf import (centralizer_degree_bounded, enveloping_growth_bound,
                       filtration_dim, growth_obstruction, growth_series,
                       module_finite_check, parse, subalgebra_generated)
from superhopf.algebra import monomial_key
from superhopf.errors import AlgebraError
from superhopf.linalg import RowSpace


def all_gens(P):
    return [P.gen(g.name) for g in P.generators]


def brute_force_word_rank(P, n):
    """Rank of the span of ALL words of length <= n in the generators.

    Independent of the closure code path: enumerate words, normalize, row
    reduce.  5^5 + ... + 1 = 3906 words for the bosonized algebra at n=5.
    """
    space = RowSpace(monomial_key)
    for length in range(n + 1):
        for word in itertools.product(range(P.n), repeat=length):
            space.insert(P.normalize(word).coeffs)
    return space.rank


def test_filtration_dim_matches_brute_force_and_monomial_count(ubar):
    gens = all_gens(ubar)
    for n in range(6):
        by_closure = filtration_dim(ubar, gens, n)
        by_words = brute_force_word_rank(ubar, n)
        by_monomials = len(ubar.enumerate_monomials(n))
        assert by_closure == by_words == by_monomials, n
    assert filtration_dim(ubar, gens, 5) == 102
    assert filtration_dim(ubar, gens, 3) == 38


def test_filtration_dim_trivial(ubar):
    assert filtration_dim(ubar, all_gens(ubar), 0) == 1


def test_growth_closed_forms(ubar, sess_bbar, kxy):
    full = growth_series(ubar, all_gens(ubar), 12)
    assert full.dims[5] == 102
    for n in range(3, 13):
        assert full.dims[n] == 4 * n * n + 2
    assert full.detected_degree == 2
    assert full.stabilization_onset == 3

    tri = growth_series(sess_bbar.pres, all_gens(sess_bbar.pres), 12)
    for n in range(2, 13):
        assert tri.dims[n] == 4 * n
    assert tri.detected_degree == 1

    poly = growth_series(kxy, all_gens(kxy), 12)
    for n in range(13):
        assert poly.dims[n] == (n + 1) * (n + 2) // 2
    assert poly.detected_degree == 2


def test_dims_are_non_decreasing_and_differences_stabilize(ubar):
    report = growth_series(ubar, all_gens(ubar), 12)
    assert all(a <= b for a, b in zip(report.dims, report.dims[1:]))
    second = report.differences[2]
    onset = report.stabilization_onset
    assert all(v == second[-1] for v in second[onset - 2:])
    assert second[-1] == 8


def test_growth_report_serialization(kxy):
    report = growth_series(kxy, all_gens(kxy), 6)
    text = report.to_text()
    lines = text.splitlines()
    assert lines[0] == "generators: x y"
    assert lines[1] == "0 1 - - -"
    assert lines[2] == "1 3 2 - -"
    assert lines[3] == "2 6 3 1 -"
    assert lines[4] == "3 10 4 1 0"
    assert lines[-1] == "degree: 2 onset: 2"


def test_growth_of_the_group_algebra_is_degree_zero(bos):
    K = bos.k_part
    report = growth_series(K, [K.gen("t")], 8)
    assert report.dims == [1, 2, 2, 2, 2, 2, 2, 2, 2]
    assert report.detected_degree == 0


def test_module_finite_over_the_polynomial_part(ubar):
    pbw_gens = [parse(s, ubar)
                for s in ("1", "u", "v", "u*v", "t", "u*t", "v*t", "u*v*t")]
    sub = [ubar.gen("x"), ubar.gen("y")]
    for side in ("left", "right"):
        cert = module_finite_check(ubar, sub, pbw_gens, side, 8)
        assert cert.passed, (side, cert.witnesses[:3])


def test_module_finite_fails_over_a_small_subalgebra(ubar):
    cert = module_finite_check(ubar, [ubar.gen("x")],
                               [parse(s, ubar) for s in ("1", "u", "v", "t")],
                               "left", 8)
    assert not cert.passed
    assert cert.witnesses


def test_module_finite_trivial(ubar):
    cert = module_finite_check(ubar, all_gens(ubar), [ubar.one()], "left", 4)
    assert cert.passed


def test_module_finite_side_validation(ubar):
    with pytest.raises(AlgebraError):
        module_finite_check(ubar, [ubar.gen("x")], [ubar.one()], "middle", 2)


def test_growth_obstruction_cases(ubar, sess_bbar):
    rep = growth_obstruction(ubar, [ubar.gen("x")], 12)
    assert rep.passed
    assert rep.parameters["obstruction"] == "1 < 2"

    rep = growth_obstruction(ubar, [ubar.gen("x"), ubar.gen("y")], 12)
    assert rep.status == "fail"
    assert rep.parameters["subDegree"] == rep.parameters["fullDegree"] == 2

    Pb = sess_bbar.pres
    rep = growth_obstruction(Pb, [Pb.gen("y")], 12)
    assert rep.status == "fail"  # equal growth: no obstruction certificate
    assert rep.parameters["subDegree"] == 1


def test_growth_obstruction_inconclusive_window(ubar):
    rep = growth_obstruction(ubar, [ubar.gen("x")], 2)
    assert rep.status == "inconclusive"


def test_finiteness_implies_equal_growth_degree(ubar):
    # a passing finiteness certificate coexists with equal detected degrees
    pbw_gens = [parse(s, ubar)
                for s in ("1", "u", "v", "u*v", "t", "u*t", "v*t", "u*v*t")]
    sub = [ubar.gen("x"), ubar.gen("y")]
    assert module_finite_check(ubar, sub, pbw_gens, "left", 6).passed
    full = growth_series(ubar, all_gens(ubar), 12)
    over = growth_series(ubar, sub, 12)
    assert full.detected_degree == over.detected_degree == 2


def test_centralizer_window(ubar):
    gens = all_gens(ubar)
    basis = centralizer_degree_bounded(ubar, gens, 4, z_degree=0)
    assert basis == [ubar.one()]
    unfiltered = centralizer_degree_bounded(ubar, gens, 4)
    space = RowSpace(monomial_key)
    for e in unfiltered:
        space.insert(e.coeffs)
    assert space.contains(ubar.gen("x").coeffs)
    assert space.contains((ubar.gen("x") ** 2).coeffs)
    # independent recheck: every reported element commutes with every generator
    for c in unfiltered:
        for g in gens:
            assert c * g == g * c


def test_centralizer_with_no_constraints_is_the_whole_span(ubar):
    basis = centralizer_degree_bounded(ubar, [], 2)
    assert len(basis) == len(ubar.enumerate_monomials(2))


def test_centralizer_z_filter_needs_declared_degrees(kxy):
    with pytest.raises(AlgebraError):
        centralizer_degree_bounded(kxy, [kxy.gen("x")], 2, z_degree=0)


def test_enveloping_growth_bound(sess_u):
    g = sess_u.lie
    b = subalgebra_generated(g, [g.basis_vector("y"), g.basis_vector("u")])
    assert enveloping_growth_bound(g, b, 12).detected_degree == 1
    center = subalgebra_generated(g, [g.basis_vector("x")])
    assert enveloping_growth_bound(g, center, 12).detected_degree == 1
    even = subalgebra_generated(g, [g.basis_vector("x"), g.basis_vector("y")])
    assert enveloping_growth_bound(g, even, 12).detected_degree == 2
    odd_closure = subalgebra_generated(g, [g.basis_vector("u"), g.basis_vector("v")])
    assert enveloping_growth_bound(g, odd_closure, 12).detected_degree == 1
