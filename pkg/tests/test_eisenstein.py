from fractions import Fraction as Q

import pytest

from orthoweyl.eisenstein import (
    degree_support,
    evaluation_coefficient,
    full_report,
    holomorphy_guaranteed,
    kostant_record,
    kostant_restriction,
)
from orthoweyl.errors import (
    DimensionError,
    NotCosetRepresentativeError,
    RegularityError,
)
from orthoweyl.hasse import build_hasse
from orthoweyl.linform import LinearForm
from orthoweyl.orthogroup import MaximalParabolic, group_spec, parabolic_choice
from orthoweyl.rootsystem import Weight

P1, P2 = MaximalParabolic.P1, MaximalParabolic.P2


def lf(k, const=0, coeffs=None):
    return LinearForm.make(k, const, coeffs or {})


def sym(k, *indices, const=0):
    return lf(k, const, {i: 1 for i in indices})


def test_kostant_rows_odd_first():
    g = group_spec(5)
    assert kostant_restriction(g, P1, ()) == (sym(3, 2), sym(3, 3))
    assert kostant_restriction(g, P1, (1,)) == (sym(3, 1, 2, const=1), sym(3, 3))


def test_kostant_row_second_parabolic():
    g = group_spec(7)
    assert kostant_restriction(g, P2, (2,)) == (
        sym(4, 1, 2, const=1),
        sym(4, 2, 3, const=1),
        sym(4, 4),
    )


def test_kostant_rejects_non_representative():
    g = group_spec(5)
    with pytest.raises(NotCosetRepresentativeError):
        kostant_restriction(g, P1, (2,))
    with pytest.raises(NotCosetRepresentativeError):
        kostant_restriction(g, P2, (1,))


def test_evaluation_points_odd_first():
    g = group_spec(5)
    assert evaluation_coefficient(g, P1, ()) == lf(
        3, -1, {1: Q(-2, 5), 2: Q(-2, 5), 3: Q(-1, 5)}
    )
    assert evaluation_coefficient(g, P1, (1, 2, 3)) == lf(3, Q(1, 5), {3: Q(1, 5)})


def test_evaluation_point_second_parabolic():
    g = group_spec(5)
    assert evaluation_coefficient(g, P2, (2, 3, 2)) == lf(3, Q(-1, 4), {1: Q(-1, 4)})


def test_evaluation_numeric():
    g = group_spec(5)
    lam = Weight.from_constants([1, 1, 1], 3)
    assert evaluation_coefficient(g, P1, (), lam) == lf(3, -2)


def test_raw_vs_normalized():
    from orthoweyl.eisenstein import raw_evaluation_coefficient
    from orthoweyl.orthogroup import levi_rho_coefficient

    g = group_spec(6)
    for p in (P1, P2):
        raw = raw_evaluation_coefficient(g, p, (2,) if p is P2 else (1,))
        norm = evaluation_coefficient(g, p, (2,) if p is P2 else (1,))
        assert raw == norm.scale(levi_rho_coefficient(g, p))


def test_holomorphy_flags():
    g = group_spec(5)
    assert holomorphy_guaranteed(g, P1, (1, 2, 3))  # 2·3 >= 5
    assert not holomorphy_guaranteed(g, P1, (1, 2))  # 2·2 < 5
    assert holomorphy_guaranteed(g, P2, (2, 1, 3, 2))  # 2·4 >= 7


def test_degree_supports():
    assert (degree_support(group_spec(5), P1).q_min, degree_support(group_spec(5), P1).q_max) == (5, 7)
    assert (degree_support(group_spec(6), P1).q_min, degree_support(group_spec(6), P1).q_max) == (6, 9)
    assert (degree_support(group_spec(5), P2).q_min, degree_support(group_spec(5), P2).q_max) == (5, 8)
    for n in range(5, 21):
        g = group_spec(n)
        for p in (P1, P2):
            s = degree_support(g, p)
            degrees = sorted({e.degree for e in s.generation})
            assert degrees == list(range(s.q_min, s.q_max + 1))
            assert all(e.degree == e.cuspidal_degree + e.length for e in s.generation)


def test_even_case_record_flags():
    g = group_spec(6)
    h = build_hasse(parabolic_choice(g, P1))
    records = [kostant_record(g, P1, node.word) for node in h.nodes]
    excluded = [r for r in records if r.excluded_from_generation]
    assert len(excluded) == 2
    assert all(r.length == g.k - 1 for r in excluded)
    assert all(r.needs_weight_constraint != r.excluded_from_generation for r in records)
    # odd case and second parabolic carry no flags
    g5 = group_spec(5)
    rec = kostant_record(g5, P1, (1,))
    assert not rec.needs_weight_constraint and not rec.excluded_from_generation
    rec2 = kostant_record(g, P2, (2,))
    assert not rec2.needs_weight_constraint and not rec2.excluded_from_generation


def test_excluded_records_cannot_satisfy_mu_equality():
    # the two length-(k-1) rows have no regular weight with equal last entries
    g = group_spec(8)
    h = build_hasse(parabolic_choice(g, P1))
    lam = Weight.from_constants([1, 2, 1, 3, 3], 5)  # regular, λ4 = λ5
    for node in h.nodes:
        rec = kostant_record(g, P1, node.word, lam)
        values = [f.constant_value() for f in rec.mu_restricted]
        if rec.excluded_from_generation:
            assert values[-1] != values[-2]
        else:
            assert values[-1] == values[-2]


def test_full_report_numbers():
    report = full_report(group_spec(5), [1, 1, 1])
    assert (report.bounds.q0, report.bounds.vcd) == (5, 8)
    supports = {pr.parabolic: (pr.support.q_min, pr.support.q_max) for pr in report.parabolics}
    assert supports == {P1: (5, 7), P2: (5, 8)}
    assert report.parabolics[0].class_label == "π_2(μ)"
    assert report.lambda_assignment == (1, 1, 1)


def test_full_report_flags_even_constraint():
    report = full_report(group_spec(6))
    first = report.parabolics[0]
    assert first.weight_constraint == "λ3 = λ4"
    assert first.support.weight_constraint_needed
    assert report.parabolics[1].weight_constraint is None


def test_full_report_rejects_bad_lambda():
    g = group_spec(5)
    with pytest.raises(RegularityError):
        full_report(g, [1, 0, 1])
    with pytest.raises(DimensionError):
        full_report(g, [1, 1])


def test_report_records_sorted_and_counted():
    report = full_report(group_spec(9))
    for pr in report.parabolics:
        lengths = [rec.length for rec in pr.records]
        assert lengths == sorted(lengths)
        assert len(pr.records) == pr.coset_count
    assert report.parabolics[0].coset_count == 10
    assert report.parabolics[1].coset_count == 40


def test_antipodal_antisymmetry_sample():
    for n in (5, 6, 9, 12):
        g = group_spec(n)
        for p in (P1, P2):
            h = build_hasse(parabolic_choice(g, p))
            top = max(h.nodes, key=lambda node: node.length)
            assert evaluation_coefficient(g, p, top.word) == -evaluation_coefficient(g, p, ())
