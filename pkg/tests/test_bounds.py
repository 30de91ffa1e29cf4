from fractions import Fraction

import pytest

from crosscert.bounds import (
    EdgeBoundKind,
    ProbBound,
    SamplingBound,
    bound_poly_in_n,
    chromatic_bound_from_cr,
    crossing_lb,
    edge_count_poly,
    edge_lower_bound,
    gallai_window_quartic,
    immersion_deficit,
    min_degree_window_quartic,
    prob_lb,
    sampling_error_minorant,
    sampling_gap_bipoly,
    sampling_lb,
    w_edge_average,
    zarankiewicz_upper,
)
from crosscert.certify import integer_feasible_set
from crosscert.errors import DomainError
from crosscert.intervals import IntInterval
from crosscert.poly import collect_by_degree

F = Fraction


def test_drawing_bound_values():
    assert zarankiewicz_upper(15) == 441
    assert zarankiewicz_upper(4) == 0
    assert zarankiewicz_upper(26) == 5148
    with pytest.raises(DomainError):
        zarankiewicz_upper(2)


def test_drawing_bound_integer_and_monotone():
    previous = F(0)
    for r in range(3, 80):
        value = zarankiewicz_upper(r)
        assert value.denominator == 1 and value >= previous
        previous = value


def test_crossing_lb_linear():
    assert crossing_lb(10, 50, "linear") == F(626, 9)
    assert crossing_lb(3, 0, "linear") == F(-203, 9)
    with pytest.raises(DomainError):
        crossing_lb(2, 10, "linear")


def test_crossing_lb_cubic_boundary():
    # applicability boundary m = (139/20) n
    assert crossing_lb(100, 695, "cubic") == F(695**3, 274800)
    with pytest.raises(DomainError):
        crossing_lb(100, 694, "cubic")


def test_edge_bounds():
    assert edge_lower_bound(17, 15, EdgeBoundKind.GALLAI) == 131
    for r in (4, 9, 15):
        assert edge_lower_bound(r, r, EdgeBoundKind.MIN_DEGREE) == F(r * (r - 1), 2)
    assert edge_lower_bound(7, 4, EdgeBoundKind.KOSTOCHKA_STIEBITZ) == F(23, 2)


def test_edge_bound_domains():
    with pytest.raises(DomainError):
        edge_lower_bound(16, 15, EdgeBoundKind.GALLAI)  # below r+2
    with pytest.raises(DomainError):
        edge_lower_bound(30, 15, EdgeBoundKind.GALLAI)  # above 2r-1
    with pytest.raises(DomainError):
        edge_lower_bound(5, 3, EdgeBoundKind.KOSTOCHKA_STIEBITZ)


def test_dense_range_bound_dominates_min_degree():
    # (n-r)(2r-n) - 2 >= 0 across the whole validity range, boundaries included
    for r in (4, 10, 15, 26):
        for n in range(r + 2, 2 * r):
            assert edge_lower_bound(n, r, EdgeBoundKind.GALLAI) >= edge_lower_bound(
                n, r, EdgeBoundKind.MIN_DEGREE
            )


def test_edge_polys_match_pointwise():
    for kind in EdgeBoundKind:
        poly = edge_count_poly(20, kind)
        for n in range(22, 39):
            assert poly(n) == edge_lower_bound(n, 20, kind)


def test_sampling_reduces_to_linear_at_full_size():
    for n in (4, 10, 36, 120):
        for m in (F(0), F(300), F(1234, 7)):
            assert sampling_lb(n, m, n) == crossing_lb(n, m, "linear")


def test_sampling_frozen_value():
    # independently hand-reduced: 18700 - 241570/9
    assert sampling_lb(36, 300, 12) == F(-73270, 9)


def test_sampling_beats_target_in_dense_range():
    assert sampling_lb(17, 131, 12) >= 441


def test_sampling_domain():
    with pytest.raises(DomainError):
        sampling_lb(10, 20, 3)
    with pytest.raises(DomainError):
        sampling_lb(10, 20, 11)


def test_prob_lb_at_p_one_is_shifted_linear_bound():
    for n, m in ((10, F(30)), (54, F(670)), (100, F(1000))):
        assert prob_lb(n, m, 1) == crossing_lb(n, m, "linear") - F(1, 2)


def test_prob_lb_threshold_row25():
    m54 = 54 * 24 // 2 + 22
    assert prob_lb(54, m54, F(1, 2)) >= 4356
    m53 = F(53 * 24, 2) + 22
    assert prob_lb(53, m53, F(1, 2)) < 4356


def test_prob_lb_domain():
    with pytest.raises(DomainError):
        prob_lb(10, 20, F(1, 4))
    with pytest.raises(DomainError):
        prob_lb(10, 20, F(11, 10))


def test_immersion_deficit():
    assert immersion_deficit(10, 10) == 0
    assert immersion_deficit(11, 10) == F(341, 8)
    assert immersion_deficit(110, 100) == 42625
    with pytest.raises(DomainError):
        immersion_deficit(9, 10)


def test_w_edge_average():
    assert w_edge_average(21, 20) == 0
    assert w_edge_average(110, 100) == F(4455, 109)
    # consistency with the edge requirement at the large-r checkpoint
    r, n = 125000, 137500
    per_pair = F((r - 1) * (n - r - 1), 2 * (n - 1))
    assert w_edge_average(n, r) == per_pair * (n - r)
    assert w_edge_average(n, r) >= F(139, 20) * (n - r)
    with pytest.raises(DomainError):
        w_edge_average(100, 100)


def test_chromatic_bound():
    assert chromatic_bound_from_cr(0) == 1
    assert chromatic_bound_from_cr(1) == 5  # 4^4 = 256 boundary
    assert chromatic_bound_from_cr(441) == 20
    assert chromatic_bound_from_cr(F(81, 256)) == 4
    assert chromatic_bound_from_cr(F(82, 256)) == 5
    # huge inputs stay exact
    assert chromatic_bound_from_cr(10**40) == 1 + 10**10 * 4


def test_margin_polynomials_match_table_cells():
    cases = [
        (15, SamplingBound(12, EdgeBoundKind.GALLAI), IntInterval(lo=17, hi=22)),
        (24, SamplingBound(24, EdgeBoundKind.KOSTOCHKA_STIEBITZ), IntInterval(lo=46, hi=54)),
    ]
    for r, spec, expected in cases:
        poly = bound_poly_in_n(r, spec)
        assert integer_feasible_set(poly, IntInterval(lo=r, hi=10 * r)) == expected
    poly = bound_poly_in_n(26, ProbBound(F(1, 2), EdgeBoundKind.KOSTOCHKA_STIEBITZ))
    assert integer_feasible_set(poly, IntInterval(lo=26, hi=None)) == IntInterval(lo=58, hi=None)


def test_sampling_margin_is_downward_quartic():
    for k in (12, 22, 24):
        for edge in EdgeBoundKind:
            poly = bound_poly_in_n(20, SamplingBound(k, edge))
            assert poly.degree == 4
            assert poly.leading < 0


def test_prob_margin_is_linear():
    poly = bound_poly_in_n(20, ProbBound(F(3, 5), EdgeBoundKind.KOSTOCHKA_STIEBITZ))
    assert poly.degree == 1


def test_no_margin_polynomial_for_window_specs():
    from crosscert.bounds import SubdivisionWindow, Thm4Window

    for spec in (SubdivisionWindow(), Thm4Window()):
        with pytest.raises(DomainError):
            bound_poly_in_n(20, spec)


def test_window_quartic_is_leading_margin_profile():
    # the contour function equals the r^4 group of the expanded margin / 100
    for k in (12, 15, 19, 22):
        groups = collect_by_degree(sampling_gap_bipoly(k))
        assert gallai_window_quartic(k) * 100 == groups[4]


def test_min_degree_quartic_values():
    f40 = min_degree_window_quartic(40)
    assert f40(F(39, 10)) < 0
    assert f40(F(321, 100)) > 0 and f40(F(7, 2)) > 0
    f36 = min_degree_window_quartic(36)
    assert f36(F(28118, 10000)) > 0  # margin is ~3e-7; exactness matters here
    assert f36(F(28117, 10000)) < 0


def test_error_minorants():
    m40 = sampling_error_minorant(40)
    assert m40(F(7, 2)) >= 0
    m36 = sampling_error_minorant(36)
    assert m36(F(321, 100)) >= 0
    assert m36(F(322, 100)) < 0  # the stated 3.21 cut-off is sharp at 1/100 scale
    with pytest.raises(DomainError):
        sampling_error_minorant(38)
