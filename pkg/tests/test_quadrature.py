import numpy as np
import pytest

from fracint.engines import (
    cauchy_repeated,
    cavalieri_sum,
    direct_rl,
    make_partition,
    nested_integral_oracle,
    stieltjes_sum,
    transformed_riemann,
)
from fracint.errors import BudgetExhaustedError, DomainError
from fracint.integrand import power_integrand
from fracint.quadrature import (
    CavalieriRegion,
    adaptive_quadrature,
    stieltjes_integral,
    stieltjes_riemann_sum,
)
from fracint.transforms import make_transform

from _reference import (
    ALPHA_GRID,
    FOUR_OVER_3SQRTPI,
    HORIZON_GRID,
    closed_form,
    linear_closed_form,
    sqrt_closed_form,
)

LINEAR = power_integrand(1.0, 1.0)
SQRT = power_integrand(1.0, 0.5)
SQUARE = power_integrand(1.0, 2.0)
CONST = power_integrand(1.0, 0.0)


class TestAdaptiveEngine:
    def test_polynomial_is_exact(self):
        value, err, evals = adaptive_quadrature(lambda x: x**7, 0.0, 1.0)
        assert value == pytest.approx(0.125, rel=1e-14)
        assert err <= 1e-12
        assert evals == 15

    def test_error_estimate_brackets_true_error(self):
        value, err, _ = adaptive_quadrature(np.exp, 0.0, 3.0)
        true = np.expm1(3.0)
        assert abs(value - true) <= max(err, 1e-13 * true)

    def test_integrable_singularity(self):
        value, _, _ = adaptive_quadrature(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
        assert value == pytest.approx(2.0, rel=1e-8)

    def test_empty_interval(self):
        assert adaptive_quadrature(np.exp, 1.0, 1.0) == (0.0, 0.0, 0)

    def test_inverted_interval_rejected(self):
        with pytest.raises(DomainError):
            adaptive_quadrature(np.exp, 1.0, 0.0)

    def test_budget_exhaustion_carries_best_value(self):
        with pytest.raises(BudgetExhaustedError) as info:
            adaptive_quadrature(lambda x: np.sqrt(x), 0.0, 1.0, 1e-14, 1e-14, budget=64)
        exc = info.value
        assert exc.value == pytest.approx(2.0 / 3.0, rel=1e-3)
        assert exc.error_estimate > 0
        assert 15 <= exc.evaluations <= 64

    def test_deterministic(self):
        first = adaptive_quadrature(lambda x: np.sin(x) / (1 + x), 0.0, 5.0)
        second = adaptive_quadrature(lambda x: np.sin(x) / (1 + x), 0.0, 5.0)
        assert first == second


class TestGenericStieltjes:
    def test_left_endpoint_rule_pinned(self):
        # single cell: f at the left point times the integrator increment
        value = stieltjes_riemann_sum(lambda x: x, lambda x: 2.0 * x, 0.5, 2.0, 1)
        assert value == pytest.approx(0.5 * 3.0, rel=1e-14)

    def test_linear_integrator_example(self):
        value = stieltjes_riemann_sum(lambda x: x, lambda x: 2.0 * x, 0.5, 2.0, 200_000)
        assert value == pytest.approx(3.75, abs=2e-5)

    def test_differentiable_integrator_identity(self):
        value = stieltjes_integral(lambda x: x, lambda x: 2.0 + 0.0 * np.asarray(x), 0.5, 2.0)
        assert value == pytest.approx(3.75, abs=1e-9)


class TestCavalieriRegion:
    # region bounded by the x-axis, f(x) = x, and the translated sides
    # x = 1 - y and x = 4 - y
    region = CavalieriRegion(
        f=lambda x: np.asarray(x, dtype=float),
        left=lambda y: 1.0 - np.asarray(y, dtype=float),
        width=3.0,
    )

    def test_footprint_and_corners(self):
        assert self.region.footprint == (1.0, 4.0)
        assert self.region.lower_abscissa == pytest.approx(0.5, abs=1e-12)
        assert self.region.upper_abscissa == pytest.approx(2.0, abs=1e-12)

    def test_integrator_is_twice_x(self):
        xs = np.linspace(0.5, 2.0, 11)
        assert np.allclose(self.region.integrator(xs), 2.0 * xs, rtol=1e-13)

    def test_area(self):
        assert self.region.area() == pytest.approx(3.75, abs=1e-9)

    def test_lower_sum_converges(self):
        assert self.region.lower_sum(20_000) == pytest.approx(3.75, abs=2e-4)
        gaps = [abs(self.region.lower_sum(n) - 3.75) for n in (100, 1000, 10_000)]
        assert gaps[0] > gaps[1] > gaps[2]


class TestDirectRoute:
    @pytest.mark.parametrize("t", (1.0, 4.0, 10.0))
    def test_half_order_anchor(self, t):
        result = direct_rl(LINEAR, 0.5, t)
        assert result.value == pytest.approx(FOUR_OVER_3SQRTPI * t**1.5, rel=1e-6)
        assert result.method == "direct"
        assert result.evaluations >= 15

    def test_order_one_is_plain_integration(self):
        assert direct_rl(LINEAR, 1.0, 2.0).value == pytest.approx(2.0, rel=1e-10)
        plain, _, _ = adaptive_quadrature(LINEAR, 0.0, 2.0)
        assert direct_rl(LINEAR, 1.0, 2.0).value == pytest.approx(plain, rel=1e-10)

    def test_sqrt_family_value(self):
        result = direct_rl(SQRT, 0.4, 10.0)
        assert result.value == pytest.approx(sqrt_closed_form(0.4, 10.0), rel=1e-6)

    @pytest.mark.parametrize("alpha, tol", [(0.2, 2e-3), (0.5, 1e-6), (0.8, 1e-9)])
    def test_raw_kernel_cross_check(self, alpha, tol):
        # endpoint-avoiding integration of the raw singular kernel; accuracy
        # degrades as the kernel exponent drops, hence the graded tolerances
        raw = direct_rl(LINEAR, alpha, 10.0, substitute=False, budget=200_000)
        assert raw.value == pytest.approx(linear_closed_form(alpha, 10.0), rel=tol)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            direct_rl(LINEAR, 0.0, 1.0)
        with pytest.raises(DomainError):
            direct_rl(LINEAR, 0.5, 1.0, budget=32)

    def test_budget_exhaustion(self):
        with pytest.raises(BudgetExhaustedError):
            direct_rl(SQRT, 0.3, 10.0, budget=64, abs_tol=1e-15, rel_tol=1e-15)


class TestSumRoutes:
    def test_identity_order_left_sum(self):
        pair = make_transform(1.0, 2.0)
        result = stieltjes_sum(LINEAR, pair, 100_000)
        assert result.value == pytest.approx(2.0, rel=1e-4)
        assert result.n == 100_000

    def test_stieltjes_against_half_order_anchor(self):
        pair = make_transform(0.5, 1.0)
        result = stieltjes_sum(LINEAR, pair, 100_000)
        assert result.value == pytest.approx(FOUR_OVER_3SQRTPI, rel=1e-4)

    def test_cavalieri_sqrt_family(self):
        pair = make_transform(0.2, 10.0)
        result = cavalieri_sum(SQRT, pair, 100_000)
        assert result.value == pytest.approx(sqrt_closed_form(0.2, 10.0), rel=1e-3)

    @pytest.mark.parametrize("spacing", ("transformed", "tau"))
    @pytest.mark.parametrize("alpha", (0.3, 0.7))
    def test_sum_methods_are_the_same_sum(self, alpha, spacing):
        pair = make_transform(alpha, 6.0)
        s = stieltjes_sum(SQRT, pair, 5000, spacing=spacing)
        c = cavalieri_sum(SQRT, pair, 5000, spacing=spacing)
        assert abs(s.value - c.value) <= 1e-12 * abs(s.value)

    def test_tau_spacing_converges_too(self):
        pair = make_transform(0.5, 1.0)
        result = cavalieri_sum(LINEAR, pair, 100_000, spacing="tau")
        assert result.value == pytest.approx(FOUR_OVER_3SQRTPI, rel=1e-3)

    def test_error_estimate_tracks_true_error(self):
        pair = make_transform(0.5, 1.0)
        result = cavalieri_sum(LINEAR, pair, 1000)
        true_err = abs(result.value - FOUR_OVER_3SQRTPI)
        assert 0.2 * true_err <= result.error_estimate <= 5.0 * true_err

    @pytest.mark.parametrize("alpha", (0.4, 0.8))
    def test_first_order_convergence(self, alpha):
        pair = make_transform(alpha, 10.0)
        exact = linear_closed_form(alpha, 10.0)
        e1 = abs(cavalieri_sum(LINEAR, pair, 1000).value - exact)
        e2 = abs(cavalieri_sum(LINEAR, pair, 2000).value - exact)
        assert 1.7 <= e1 / e2 <= 2.3


class TestTransformedRoute:
    def test_half_order_anchor(self):
        pair = make_transform(0.5, 1.0)
        result = transformed_riemann(LINEAR, pair)
        assert result.value == pytest.approx(FOUR_OVER_3SQRTPI, rel=1e-9)

    def test_identity_order(self):
        pair = make_transform(1.0, 3.0)
        assert transformed_riemann(LINEAR, pair).value == pytest.approx(4.5, rel=1e-12)

    def test_low_order_linear_family(self):
        pair = make_transform(0.2, 10.0)
        result = transformed_riemann(LINEAR, pair)
        assert result.value == pytest.approx(linear_closed_form(0.2, 10.0), rel=1e-10)


@pytest.mark.parametrize("family, f", [("linear", LINEAR), ("sqrt", SQRT)])
def test_cross_method_agreement_grid(family, f):
    for alpha in ALPHA_GRID:
        for t in HORIZON_GRID:
            pair = make_transform(alpha, t)
            tr = transformed_riemann(f, pair).value
            di = direct_rl(f, alpha, t).value
            assert abs(di - tr) <= 1e-6 * abs(tr)
            for result in (stieltjes_sum(f, pair, 100_000), cavalieri_sum(f, pair, 100_000)):
                assert abs(result.value - tr) <= 1e-3 * abs(tr)
            assert tr == pytest.approx(closed_form(family, alpha, t), rel=1e-8)


class TestRepeatedIntegration:
    def test_double_integration_of_linear(self):
        assert cauchy_repeated(LINEAR, 2, 1.0).value == pytest.approx(1.0 / 6.0, rel=1e-8)
        assert cauchy_repeated(LINEAR, 2, 2.0).value == pytest.approx(8.0 / 6.0, rel=1e-8)

    def test_single_integration(self):
        assert cauchy_repeated(LINEAR, 1, 2.0).value == pytest.approx(2.0, rel=1e-10)

    def test_triple_integration_of_square(self):
        assert cauchy_repeated(SQUARE, 3, 1.0).value == pytest.approx(1.0 / 60.0, rel=1e-8)

    def test_rejects_bad_repetition_count(self):
        for bad in (0, -1, 1.5):
            with pytest.raises(DomainError):
                cauchy_repeated(LINEAR, bad, 1.0)

    def test_oracle_pinned_values(self):
        assert nested_integral_oracle(LINEAR, 2, 1.0) == pytest.approx(1.0 / 6.0, abs=1e-6)
        assert nested_integral_oracle(CONST, 2, 1.0) == pytest.approx(0.5, abs=1e-6)
        assert nested_integral_oracle(LINEAR, 3, 1.0) == pytest.approx(1.0 / 24.0, abs=1e-6)

    def test_oracle_rejects_unsupported_depth(self):
        with pytest.raises(DomainError):
            nested_integral_oracle(LINEAR, 4, 1.0)

    @pytest.mark.parametrize("f", (CONST, LINEAR, SQUARE))
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_collapse_matches_nested_oracle(self, f, n):
        collapsed = cauchy_repeated(f, n, 1.5).value
        nested = nested_integral_oracle(f, n, 1.5)
        assert collapsed == pytest.approx(nested, rel=1e-5)


class TestPartition:
    def test_transformed_spacing(self):
        pair = make_transform(0.5, 4.0)
        part = make_partition(pair, 64)
        assert part.transformed[0] == 0.0
        assert part.transformed[-1] == pytest.approx(pair.width, rel=1e-14)
        assert np.all(np.diff(part.transformed) > 0)
        assert part.tau[0] == 0.0
        assert part.tau[-1] == pytest.approx(4.0, rel=1e-14)
        assert np.all(np.diff(part.tau) >= 0)
        assert np.all((part.tau >= 0) & (part.tau <= 4.0))

    def test_tau_spacing_round_trips(self):
        pair = make_transform(0.3, 2.0)
        part = make_partition(pair, 50, spacing="tau")
        assert np.allclose(pair.inverse(part.transformed), part.tau, atol=1e-11)

    def test_errors(self):
        pair = make_transform(0.5, 4.0)
        with pytest.raises(DomainError):
            make_partition(pair, 0)
        with pytest.raises(DomainError):
            make_partition(pair, 10, spacing="chebyshev")
