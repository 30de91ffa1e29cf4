from fractions import Fraction

import pytest

from crosscert.bounds import EdgeBoundKind, ProbBound, SamplingBound, SubdivisionWindow, Thm4Window, bound_poly_in_n
from crosscert.certifier import (
    NO_SUBDIVISION,
    P_ARRAY,
    QUOTED_GROUPS,
    THM4_SLACK_COEFF,
    THM4_WINDOW,
    UNCONDITIONAL,
    build_table,
    build_table_row,
    coverage_check,
    decomposition_slack,
    excluded_orders,
    expansion_base,
    finalish_check,
    recomputed_parts,
    row_coverage,
    strict_margin,
    verify,
    verify_theorem2,
    verify_theorem4,
    verify_theorem6,
    verify_theorem9,
)
from crosscert.certify import Claim, SignCertificate, certify_sign
from crosscert.errors import DomainError
from crosscert.intervals import IntInterval
from crosscert.poly import BiPoly, VAR_ALPHA, uni

F = Fraction


# -- excluded orders ---------------------------------------------------------------


def test_excluded_orders_examples():
    assert excluded_orders(20, SamplingBound(22, EdgeBoundKind.GALLAI)) == IntInterval(lo=30, hi=38)
    assert excluded_orders(25, Thm4Window()) == IntInterval(lo=31, hi=44)
    assert excluded_orders(15, SubdivisionWindow()) == IntInterval(lo=15, hi=19)


def test_excluded_orders_preconditions():
    with pytest.raises(DomainError):
        excluded_orders(14, SamplingBound(12, EdgeBoundKind.GALLAI))
    with pytest.raises(DomainError):
        excluded_orders(4, SubdivisionWindow())
    with pytest.raises(DomainError):
        excluded_orders(12, Thm4Window())


def test_excluded_orders_have_outward_witnesses():
    for r, spec in [
        (15, SamplingBound(12, EdgeBoundKind.GALLAI)),
        (22, SamplingBound(22, EdgeBoundKind.GALLAI)),
        (26, SamplingBound(24, EdgeBoundKind.KOSTOCHKA_STIEBITZ)),
        (25, ProbBound(F(1, 2), EdgeBoundKind.KOSTOCHKA_STIEBITZ)),
    ]:
        interval = excluded_orders(r, spec)
        poly = bound_poly_in_n(r, spec)
        assert poly(interval.lo) >= 0 > poly(interval.lo - 1)
        if interval.hi is not None:
            assert poly(interval.hi) >= 0 > poly(interval.hi + 1)


def test_larger_edge_bound_never_shrinks_exclusion():
    # on the shared validity range, the dense-range bound dominates minimum
    # degree, so its exclusion set restricted to that range can only grow
    for r in (15, 20, 26):
        for k in (12, 22):
            gallai = excluded_orders(r, SamplingBound(k, EdgeBoundKind.GALLAI))
            weaker = bound_poly_in_n(r, SamplingBound(k, EdgeBoundKind.MIN_DEGREE))
            for n in range(r + 2, 2 * r):
                if weaker(n) >= 0:
                    assert gallai.contains(n)


# -- coverage and table rows ---------------------------------------------------------


def test_coverage_requires_one_unbounded():
    with pytest.raises(DomainError):
        coverage_check(10, [IntInterval(lo=10, hi=12)])
    with pytest.raises(DomainError):
        coverage_check(10, [IntInterval(lo=10, hi=None), IntInterval(lo=12, hi=None)])


def test_coverage_trivial():
    result = coverage_check(10, [IntInterval(lo=10, hi=None)])
    assert result.gaps == frozenset()


def test_row_gaps():
    assert build_table_row(24).possible_n == frozenset()
    assert build_table_row(25).possible_n == frozenset({48})
    assert build_table_row(26).possible_n == frozenset({50, 51})
    assert build_table_row(19).possible_n == frozenset()


def test_assumption_tags():
    coverage = row_coverage(25)
    assert coverage.assumptions == (
        UNCONDITIONAL,  # subdivision window
        UNCONDITIONAL,  # k=12 sampling, dense-range edges
        UNCONDITIONAL,  # certified alpha window
        UNCONDITIONAL,  # k=22 sampling, dense-range edges
        NO_SUBDIVISION,  # k=24 sampling, KS edges
        NO_SUBDIVISION,  # probabilistic bound, KS edges
    )


def test_row_17_window_column_is_recomputed():
    # floor(1.768 * 17) = 30; the quoted table's 29 is a transcription slip
    assert build_table_row(17).thm4 == IntInterval(lo=21, hi=30)
    report = verify_theorem6()
    assert any(
        d.where == "table row r=17, column thm4" and d.quoted == "[21,29]" and d.recomputed == "[21,30]"
        for d in report.discrepancies
    )


def test_row_construction_is_order_independent():
    rows_forward = build_table(15, 26)
    rows_backward = [build_table_row(r) for r in range(26, 14, -1)][::-1]
    assert rows_forward == rows_backward


def test_parallel_row_construction():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=6) as pool:
        parallel = list(pool.map(build_table_row, range(15, 27)))
    assert parallel == build_table(15, 26)


def test_p_override():
    row = build_table_row(25, F(13, 25))
    assert row.p == F(13, 25)
    # a weaker probability moves the unbounded column's start upward
    assert row.lem6.lo >= build_table_row(25).lem6.lo


def test_row_range_enforced():
    with pytest.raises(DomainError):
        build_table_row(14)
    with pytest.raises(DomainError):
        build_table_row(27)


# -- the alpha-window decomposition ---------------------------------------------------


def test_decomposition_slack_identity():
    for k, c in THM4_SLACK_COEFF.items():
        assert decomposition_slack(k) == BiPoly({(3, 0): c, (2, 0): -13 * c})


def test_strict_margin_offset_identity():
    for k in (19, 15, 12):
        g = F(500, (k - 2) * (k - 3))
        difference = expansion_base(k) - strict_margin(k)
        assert difference == BiPoly({(2, 2): g, (1, 1): -5 * g, (0, 0): 6 * g})


def test_recomputed_groups_certify_on_windows():
    for k in (19, 15, 12):
        parts = recomputed_parts(k)
        for i in (4, 3, 2, 1):
            result = certify_sign(parts[i], THM4_WINDOW[k], Claim.NONNEG)
            assert isinstance(result, SignCertificate), (k, i)


def test_quoted_sign_flips_detected():
    report = verify_theorem4()
    assert report.overall
    internal = [
        d for d in report.discrepancies
        if "quoted expansion r^2 group vs its standalone definition" in d.where
    ]
    ks = sorted(int(d.where.split()[0].split("=")[1]) for d in internal)
    assert ks == [12, 15]


def test_quoted_vs_recomputed_audit():
    report = verify_theorem4()
    texts = {(d.where, d.quoted, d.recomputed) for d in report.discrepancies}
    # the k=19 alpha-term flip appears in both quoted forms
    assert ("k=19 quoted expansion r^2 group, alpha^1 coefficient", "-375/17", "375/17") in texts
    # the k=12 leading-group coefficients are off by a factor of ten
    assert ("k=12 quoted expansion r^4 group, alpha^3 coefficient", "1000/9", "100/9") in texts
    assert ("k=12 quoted expansion r^4 group, alpha^2 coefficient", "-500/9", "-50/9") in texts


def test_recomputed_matches_quoted_where_sound():
    # groups untouched by the slips agree exactly with the quoted material
    for k in (19, 15, 12):
        parts = recomputed_parts(k)
        quoted = QUOTED_GROUPS[k]
        assert parts[3] == quoted["expansion"][1]
        assert parts[1] == quoted["expansion"][3]
    assert recomputed_parts(19)[4] == QUOTED_GROUPS[19]["expansion"][0]
    assert recomputed_parts(15)[4] == QUOTED_GROUPS[15]["expansion"][0]


def test_strict_margin_certified_for_small_r():
    window = THM4_WINDOW[12]
    for r in (13, 14, 20):
        result = certify_sign(strict_margin(12).substitute_r(r), window, Claim.NONNEG)
        assert isinstance(result, SignCertificate)


def test_strict_margin_beyond_dominance_threshold():
    from crosscert.certifier import _dominance_threshold

    for k in (19, 15, 12):
        threshold = _dominance_threshold(k)
        window = THM4_WINDOW[k]
        c = THM4_SLACK_COEFF[k]
        g = F(500, (k - 2) * (k - 3))
        quad = 13 * c + g * window.hi**2
        assert c * threshold**3 - quad * threshold**2 - 6 * g >= 0
        assert 3 * c * threshold >= 2 * quad
        # spot-check the conclusion the threshold argument guarantees
        for r in (threshold, threshold + 7, 400):
            for alpha in (window.lo, (window.lo + window.hi) / 2, window.hi):
                assert strict_margin(k)(r, alpha) >= 0


def test_theorem4_window_union():
    report = verify_theorem4()
    union_steps = [s for s in report.steps if s.description.startswith("union")]
    assert len(union_steps) == 1 and union_steps[0].passed


# -- the high-alpha argument -----------------------------------------------------------


def test_theorem2_passes():
    report = verify_theorem2()
    assert report.overall
    certs = [s for s in report.steps if s.certificate is not None]
    assert len(certs) == 4


def test_theorem2_threshold_identity():
    assert F(687, 200) / (8 * F(687, 25)) == F(1, 64)
    assert F(14, 2) >= F(139, 20)


def test_theorem2_minorant_boundaries():
    from crosscert.bounds import sampling_error_minorant

    assert sampling_error_minorant(40)(F(7, 2)) >= 0
    assert sampling_error_minorant(36)(F(321, 100)) >= 0


# -- the large-r argument ---------------------------------------------------------------


def test_finalish_check_examples():
    assert finalish_check(125000, 137500) == (True, True)
    first, second = finalish_check(20, 22)
    assert first is False and second is False
    assert finalish_check(825000, 866250) == (True, True)
    with pytest.raises(DomainError):
        finalish_check(20, 20)


def test_theorem9_passes():
    report = verify_theorem9()
    assert report.overall
    assert 25000000 > 55 * 453871
    assert 2 * 330000000 > 55 * 11863341
    assert 12499**6 * 1375 >= 1374 * 12500**6


def test_theorem9_derivative_factor_degenerates_at_one():
    # the full sign factor (a-1)^2 a^3 (-2a^2+3a+8) vanishes at a=1, which is
    # why only the quadratic piece is certified strictly positive
    quadratic = uni(VAR_ALPHA, 8, 3, -2)
    a = F(1)
    assert (a - 1) ** 2 * a**3 * quadratic(a) == 0
    assert quadratic(a) > 0


def test_theorem6_passes_and_is_cached():
    report = verify_theorem6()
    assert report.overall
    assert verify("thm6") is report


def test_verify_dispatch():
    assert verify("thm2").theorem == "thm2"
    with pytest.raises(DomainError):
        verify("thm5")


def test_default_probabilities():
    assert P_ARRAY[15] == F(3, 4)
    assert P_ARRAY[26] == F(1, 2)
    assert len(P_ARRAY) == 12
