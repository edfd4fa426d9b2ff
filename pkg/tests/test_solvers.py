"""IVP solvers: hand-expanded values, cross-validation, residuals."""

import math

import numpy as np
import pytest

from hilfer_dfc import (
    CoverageError,
    Grid,
    GridFn,
    HilferOrder,
    IvpSpec,
    Linear,
    MlParams,
    NonHomogeneous,
    Nonlinear,
    apply_summation_operator,
    defining_equation_residual,
    falling_factorial,
    initial_condition_value,
    ml_plain,
    solve,
    solve_linear,
    solve_linear_series,
    solve_nonhomogeneous,
    solve_nonlinear,
    taylor_monomial,
)


def linear_spec(a=0.0, steps=12, mu=0.8, nu=0.5, zeta=1.0, lam=0.1):
    return IvpSpec(a, steps, HilferOrder(mu, nu), zeta, Linear(lam))


class TestSpecValidation:
    def test_steps_must_be_positive(self):
        with pytest.raises(ValueError):
            IvpSpec(0.0, 0, HilferOrder(0.5, 0.5), 1.0, Linear(0.1))

    def test_forcing_base_checked(self):
        bad = GridFn.constant(Grid(0.0, 10), 1.0)
        with pytest.raises(CoverageError):
            IvpSpec(0.0, 10, HilferOrder(0.5, 0.5), 1.0, NonHomogeneous(0.1, bad))

    def test_forcing_coverage_checked(self):
        short = GridFn.constant(Grid(0.5, 3), 1.0)
        with pytest.raises(CoverageError):
            IvpSpec(0.0, 10, HilferOrder(0.5, 0.5), 1.0, NonHomogeneous(0.1, short))


class TestLinearRecursion:
    def test_initial_value(self):
        sol = solve_linear(linear_spec(zeta=2.5))
        assert sol(0.0) == 2.5

    def test_first_step_hand_expansion(self):
        # y(1) = zeta*(eta + lam)
        spec = linear_spec(zeta=1.3, lam=0.1, mu=0.8, nu=0.5)
        eta = spec.order.eta
        sol = solve_linear(spec)
        assert sol(1.0) == pytest.approx(1.3 * (eta + 0.1), rel=1e-14)

    def test_zero_lambda_gives_pure_monomial(self):
        spec = linear_spec(lam=0.0, zeta=2.0, mu=0.6, nu=0.7)
        eta = spec.order.eta
        sol = solve_linear(spec)
        for n in range(spec.steps + 1):
            expect = 2.0 * math.gamma(n + eta) / (math.gamma(eta) * math.gamma(n + 1))
            assert sol(float(n)) == pytest.approx(expect, rel=1e-12)

    def test_monotone_growth_for_positive_lambda(self):
        sol = solve_linear(linear_spec(lam=0.3, steps=30))
        assert np.all(np.diff(sol.values.values[1:]) > 0)


class TestCrossValidation:
    @pytest.mark.parametrize("lam", [0.05, 0.1, 0.3])
    @pytest.mark.parametrize("mu", [0.5, 0.8])
    @pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_recursion_vs_series(self, lam, mu, nu):
        spec = IvpSpec(0.0, 30, HilferOrder(mu, nu), 1.0, Linear(lam))
        rec = solve_linear(spec)
        ser = solve_linear_series(spec)
        scale = np.maximum(1.0, np.abs(rec.values.values))
        err = np.max(np.abs(rec.values.values - ser.values.values) / scale)
        assert err < 1e-8

    def test_series_matches_caputo_closed_form(self):
        # type nu = 1 with base a = mu - 1: values are zeta E_[mu](lam, n)
        mu, lam = 0.6, 0.25
        spec = IvpSpec(mu - 1.0, 20, HilferOrder(mu, 1.0), 1.5, Linear(lam))
        sol = solve_linear_series(spec)
        p = MlParams(mu=mu, eta=1.0, lam=lam)
        for n in range(21):
            x = spec.a + n
            assert sol(x) == pytest.approx(1.5 * ml_plain(p, float(n)), rel=1e-12)

    def test_series_solver_name_and_terms(self):
        sol = solve_linear_series(linear_spec(steps=5))
        assert sol.meta.solver == "linear-series"
        assert sol.meta.terms_used > 0


class TestNonlinear:
    def test_zero_g_gives_pure_monomial(self):
        spec = IvpSpec(
            0.3, 10, HilferOrder(0.7, 0.5), 2.0, Nonlinear(lambda w, u: 0.0)
        )
        eta = spec.order.eta
        sol = solve_nonlinear(spec)
        for n in range(11):
            expect = 2.0 * math.gamma(n + eta) / (math.gamma(eta) * math.gamma(n + 1))
            assert sol(0.3 + n) == pytest.approx(expect, rel=1e-12)

    def test_linear_g_matches_linear_solver(self):
        lam = 0.2
        spec_nl = IvpSpec(
            0.0, 25, HilferOrder(0.8, 0.25), 1.0, Nonlinear(lambda w, u: -lam * u)
        )
        spec_li = IvpSpec(0.0, 25, HilferOrder(0.8, 0.25), 1.0, Linear(lam))
        nl = solve_nonlinear(spec_nl)
        li = solve_linear(spec_li)
        assert np.max(np.abs(nl.values.values - li.values.values)) < 1e-12

    def test_desk_scale_scenario_trajectory_is_finite(self):
        spec = IvpSpec(
            0.3, 9, HilferOrder(0.7, 0.5), 1.0, Nonlinear(lambda w, u: (w - 0.3) * u)
        )
        sol = solve_nonlinear(spec)
        assert sol.values.count == 10
        assert np.all(np.isfinite(sol.values.values))

    def test_overflow_is_truncated_and_reported(self):
        spec = IvpSpec(
            0.0, 60, HilferOrder(0.5, 0.5), 1.0, Nonlinear(lambda w, u: -u * u * u - 10.0)
        )
        sol = solve_nonlinear(spec)
        assert sol.meta.overflow_at is not None
        assert sol.values.count == sol.meta.overflow_at
        assert np.all(np.isfinite(sol.values.values))


class TestNonHomogeneous:
    def _forcing(self, spec_a, mu, steps, fn):
        grid = Grid(spec_a + 1.0 - mu, steps)
        return GridFn.from_callable(grid, fn)

    def test_zero_forcing_reduces_to_linear_series(self):
        mu, nu, lam = 0.8, 0.5, 0.1
        forcing = self._forcing(0.0, mu, 15, lambda x: 0.0)
        spec = IvpSpec(0.0, 15, HilferOrder(mu, nu), 1.0, NonHomogeneous(lam, forcing))
        got = solve_nonhomogeneous(spec)
        ref = solve_linear_series(IvpSpec(0.0, 15, HilferOrder(mu, nu), 1.0, Linear(lam)))
        assert np.max(np.abs(got.values.values - ref.values.values)) < 1e-12

    def test_zero_lambda_is_monomial_plus_kernel_sum(self):
        mu, nu = 0.7, 0.5
        a, steps = 0.0, 12
        forcing = self._forcing(a, mu, steps, lambda x: math.sin(x))
        spec = IvpSpec(a, steps, HilferOrder(mu, nu), 1.5, NonHomogeneous(0.0, forcing))
        eta = spec.order.eta
        sol = solve_nonhomogeneous(spec)
        for n in range(steps + 1):
            x = a + n
            expect = 1.5 * taylor_monomial(eta - 1.0, x, a + 1.0 - eta)
            for j in range(1, n + 1):
                tau = a + j - mu
                expect += taylor_monomial(mu - 1.0, x, tau + 1.0) * forcing(tau)
            assert sol(x) == pytest.approx(expect, rel=1e-11, abs=1e-12)

    def test_matches_stepping_with_rearranged_rhs(self, rng):
        mu, nu, lam = 0.8, 0.5, 0.1
        a, steps = 0.0, 15
        vals = rng.uniform(-1.0, 1.0, steps)
        forcing = GridFn(Grid(a + 1.0 - mu, steps), vals)
        spec = IvpSpec(a, steps, HilferOrder(mu, nu), 1.0, NonHomogeneous(lam, forcing))
        closed = solve_nonhomogeneous(spec)
        stepped = solve_nonlinear(
            IvpSpec(
                a,
                steps,
                HilferOrder(mu, nu),
                1.0,
                Nonlinear(lambda w, u: -lam * u - forcing(w + 1.0 - mu)),
            )
        )
        err = np.max(np.abs(closed.values.values - stepped.values.values))
        assert err < 1e-8

    def test_bold_route_agrees_with_plain(self, rng):
        mu, nu, lam = 0.6, 0.25, 0.2
        a, steps = 0.3, 12
        vals = rng.uniform(-1.0, 1.0, steps)
        forcing = GridFn(Grid(a + 1.0 - mu, steps), vals)
        spec = IvpSpec(a, steps, HilferOrder(mu, nu), 1.0, NonHomogeneous(lam, forcing))
        plain = solve_nonhomogeneous(spec)
        bold = solve_nonhomogeneous(spec, use_bold=True)
        assert np.max(np.abs(plain.values.values - bold.values.values)) < 1e-10


class TestWholePipeline:
    @pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_defining_equation_residual(self, nu):
        for solver, spec in (
            (solve_linear, linear_spec(nu=nu, steps=25, lam=0.3)),
            (solve_linear_series, linear_spec(nu=nu, steps=25, lam=0.3)),
        ):
            sol = solver(spec)
            res = defining_equation_residual(sol, spec)
            assert float(np.max(np.abs(res.values))) < 1e-8

    def test_residual_for_nonlinear(self):
        spec = IvpSpec(
            0.3, 9, HilferOrder(0.7, 0.5), 1.0, Nonlinear(lambda w, u: (w - 0.3) * u)
        )
        sol = solve_nonlinear(spec)
        res = defining_equation_residual(sol, spec)
        assert float(np.max(np.abs(res.values))) < 1e-8

    def test_residual_for_nonhomogeneous(self, rng):
        mu, nu, lam = 0.8, 0.5, 0.1
        forcing = GridFn(Grid(1.0 - mu, 15), rng.uniform(-1, 1, 15))
        spec = IvpSpec(0.0, 15, HilferOrder(mu, nu), 1.0, NonHomogeneous(lam, forcing))
        sol = solve_nonhomogeneous(spec)
        res = defining_equation_residual(sol, spec)
        assert float(np.max(np.abs(res.values))) < 1e-8

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0])
    def test_initial_condition_recovered(self, nu):
        spec = linear_spec(nu=nu, zeta=1.7, lam=0.2)
        sol = solve_linear(spec)
        assert initial_condition_value(sol, spec) == pytest.approx(1.7, abs=1e-9)

    def test_solutions_are_fixed_points(self):
        spec = linear_spec(steps=18, lam=0.25, mu=0.6, nu=0.75)
        sol = solve_linear(spec)
        image = apply_summation_operator(spec, sol.values)
        assert np.max(np.abs(image.values - sol.values.values)) < 1e-12

    def test_endpoint_types_match_standalone_formulations(self):
        # the type-0/type-1 solutions plugged into the endpoint operators
        # satisfy the corresponding defining equations exactly
        from hilfer_dfc import caputo_difference_fn, rl_difference_fn

        lam, mu = 0.1, 0.8
        for nu, op in ((0.0, rl_difference_fn), (1.0, caputo_difference_fn)):
            spec = linear_spec(nu=nu, lam=lam, mu=mu, steps=20)
            sol = solve_linear(spec)
            diff = op(sol.values, mu)
            for j in range(diff.count):
                w = spec.a + j
                residual = float(diff.values[j]) - lam * sol(w)
                assert abs(residual) < 1e-9

    def test_dispatch(self):
        assert solve(linear_spec()).meta.solver == "linear-recursion"
