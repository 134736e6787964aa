import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from batchkit import (
    binary_entropy,
    check_asymptotic_bounds,
    check_finite_bounds,
    full_report,
    max_m_by_finite_bounds,
)


class TestBinaryEntropy:
    def test_maximum(self):
        assert binary_entropy(0.5) == 1.0

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_formula_value(self):
        assert binary_entropy(0.11) == pytest.approx(0.4999, abs=1e-3)

    def test_domain(self):
        with pytest.raises(ValueError):
            binary_entropy(-0.1)
        with pytest.raises(ValueError):
            binary_entropy(1.1)

    def test_symmetry_grid(self):
        for k in range(0, 1001):
            x = k / 1000
            assert abs(binary_entropy(x) - binary_entropy(1 - x)) < 1e-12

    @given(st.floats(0.0, 1.0))
    def test_symmetry_property(self, x):
        assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-12)


class TestFiniteBounds:
    def test_example2_triple(self):
        report = check_finite_bounds(9, 4, 4)
        assert report.finite_ok
        sp = report.check("sphere-packing")
        assert (sp.lhs, sp.rhs, sp.slack) == (32, 10, 22)
        pl = report.check("plotkin")
        assert (pl.lhs, pl.rhs, pl.slack) == (60, 72, 12)
        gr = report.check("griesmer")
        assert (gr.lhs, gr.rhs, gr.slack) == (9, 8, 1)

    def test_subcube_triple_tight(self):
        report = check_finite_bounds(3, 2, 2)
        assert report.finite_ok
        assert report.check("plotkin").slack == 0
        assert report.check("griesmer").slack == 0

    def test_griesmer_violation(self):
        report = check_finite_bounds(3, 2, 3)
        assert report.check("griesmer").outcome == "violated"
        assert not report.finite_ok

    def test_integer_arithmetic(self):
        report = check_finite_bounds(40, 20, 10)
        for c in report.checks:
            assert isinstance(c.lhs, int) and isinstance(c.rhs, int)

    def test_parameter_domain(self):
        with pytest.raises(ValueError):
            check_finite_bounds(3, 4, 1)
        with pytest.raises(ValueError):
            check_finite_bounds(3, 2, 0)


class TestAsymptoticBounds:
    def test_example2_triple_is_advisory_violated(self):
        report = check_asymptotic_bounds(9, 4, 4)
        eb = report.check("elias-bassalygo")
        assert eb.outcome == "advisory-violated"
        # 1 - H2((1 - sqrt(1 - 8/9)) / 2) = 1 - H2(1/3)
        expected = 1.0 - binary_entropy(1.0 / 3.0)
        assert eb.rhs == pytest.approx(expected, abs=1e-9)
        assert eb.lhs == pytest.approx(4 / 9)

    def test_long_code_advisory_satisfied(self):
        report = check_asymptotic_bounds(100, 4, 4)
        assert report.check("elias-bassalygo").outcome == "advisory-satisfied"
        assert report.check("mrrw").outcome == "advisory-satisfied"

    def test_eb_not_applicable_when_2m_exceeds_M(self):
        report = check_asymptotic_bounds(10, 2, 6)
        assert report.check("elias-bassalygo").outcome == "not-applicable"
        assert report.check("mrrw").outcome in (
            "advisory-satisfied",
            "advisory-violated",
        )

    def test_mrrw_formula(self):
        report = check_asymptotic_bounds(100, 4, 4)
        expected = binary_entropy(0.5 - math.sqrt(4 * 96) / 100)
        assert report.check("mrrw").rhs == pytest.approx(expected, abs=1e-9)

    def test_never_counts_as_finite_violation(self):
        assert check_asymptotic_bounds(9, 4, 4).finite_ok


class TestMaxMByFiniteBounds:
    def test_example2_parameters(self):
        assert max_m_by_finite_bounds(9, 4) == 4

    def test_subcube_parameters(self):
        assert max_m_by_finite_bounds(3, 2) == 2

    def test_square_case(self):
        assert max_m_by_finite_bounds(4, 4) == 1

    def test_monotone_pass_region(self):
        for M, n in [(9, 4), (12, 5), (7, 3)]:
            top = max_m_by_finite_bounds(M, n)
            for m in range(1, top + 1):
                assert check_finite_bounds(M, n, m).finite_ok
            assert not check_finite_bounds(M, n, top + 1).finite_ok


def test_full_report_merges_both_families():
    report = full_report(9, 4, 4)
    names = [c.name for c in report.checks]
    assert names == ["sphere-packing", "plotkin", "griesmer", "elias-bassalygo", "mrrw"]
    assert report.finite_ok
