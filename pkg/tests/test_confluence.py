"""Local confluence of the straightening rules (the diamond-lemma check)."""

from fractions import Fraction

import pytest

from superhopf import check_overlaps
from superhopf.algebra import AlgebraPresentation


def test_enveloping_pl11_is_confluent(sess_u):
    report = check_overlaps(sess_u.pres)
    assert report.confluent
    assert report.overlaps_checked > 0


def test_bosonized_pl11_is_confluent(ubar):
    report = check_overlaps(ubar)
    assert report.confluent


def test_bosonized_triangular_is_confluent(sess_bbar):
    assert check_overlaps(sess_bbar.pres).confluent


def test_corrupted_relation_breaks_confluence(ubar):
    # replace v*u -> x - u*v with v*u -> y - u*v; the overlap v*u*u then
    # resolves to u one way and to 0 the other
    swap = {k: dict(v) for k, v in ubar.swap_rules.items()}
    v_idx, u_idx = ubar.gen_index("v"), ubar.gen_index("u")
    y_mono = ubar.monomial(y=1)
    uv_mono = ubar.monomial(u=1, v=1)
    swap[(v_idx, u_idx)] = {y_mono: Fraction(1), uv_mono: Fraction(-1)}
    corrupted = AlgebraPresentation(ubar.generators, swap, ubar.power_rules,
                                    mode=ubar.mode, name="corrupted")
    report = check_overlaps(corrupted)
    assert not report.confluent
    words = {d.word for d in report.discrepancies}
    assert ("v", "u", "u") in words


def test_overlap_count_includes_cap_overlaps(ubar):
    # descending triples: C(5,3)=10 strict + cap-boundary words like u*u*u,
    # t*t*x, v*u*u; exact count pinned for determinism
    report = check_overlaps(ubar)
    assert report.overlaps_checked == 25


def test_degree_bound_guard(ubar):
    with pytest.raises(ValueError):
        check_overlaps(ubar, degree_bound=2)
