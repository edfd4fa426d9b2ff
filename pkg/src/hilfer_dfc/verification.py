"""Numerically checkable identity suite.

Every identity the library is built on is packaged as a named
check that evaluates both sides independently and reports the worst
observed error against its tolerance.  The suite is deterministic (fixed
seeds) and runs in seconds; the ``hilfer-dfc verify`` command and the
test suite both drive it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import Grid, GridFn, HilferOrder, falling_factorial, taylor_monomial
from .mittag_leffler import MlParams, ml_eval, ml_plain
from .operators import (
    forward_difference_fn,
    fractional_sum,
    fractional_sum_fn,
    hilfer_difference_fn,
    rl_difference_fn,
    caputo_difference_fn,
)
from .solvers import (
    IvpSpec,
    Linear,
    Nonlinear,
    defining_equation_residual,
    initial_condition_value,
    solve_linear,
    solve_linear_series,
    solve_nonlinear,
)
from .stability import existence_bound, gronwall_series, ulam_experiment
from .transforms import (
    LaplaceCtl,
    laplace_base_shift_check,
    laplace_of_fractional_sum_check,
    laplace_of_hilfer_check,
    laplace_of_integer_difference_check,
)

__all__ = ["CheckResult", "available_checks", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_error: float
    tol: float
    passed: bool
    detail: str = ""


def _result(name: str, max_error: float, tol: float, detail: str = "") -> CheckResult:
    return CheckResult(name, float(max_error), tol, bool(max_error < tol), detail)


def _random_fn(grid: Grid, rng: np.random.Generator, scale: float = 1.0) -> GridFn:
    return GridFn(grid, rng.uniform(-scale, scale, grid.count))


def _exp_bounded_fn(grid: Grid, rng: np.random.Generator, ratio: float = 1.2) -> GridFn:
    phase = rng.uniform(0.0, 2 * math.pi)
    amp = rng.uniform(0.5, 1.5)
    vals = [
        amp * ratio**k * (1.0 + 0.3 * math.sin(0.7 * k + phase))
        for k in range(grid.count)
    ]
    return GridFn(grid, np.array(vals))


# ---------------------------------------------------------------------------
# individual checks


def check_power_rule(tol: float, y: float) -> CheckResult:
    """Summed monomial sum against its closed form."""
    rng = np.random.default_rng(101)
    a = 0.3
    worst = 0.0
    for _ in range(12):
        mu = rng.uniform(0.05, 0.95)
        nu = rng.uniform(0.0, 3.0)
        f = GridFn.from_callable(
            Grid(a + nu, 30), lambda t: falling_factorial(t - a, nu)
        )
        summed = fractional_sum_fn(f, mu)
        for j in range(summed.count):
            x = summed.base + j
            closed = (
                math.gamma(nu + 1.0)
                / math.gamma(mu + nu + 1.0)
                * falling_factorial(x - a, mu + nu)
            )
            got = float(summed.values[j])
            worst = max(worst, abs(got - closed) / max(1.0, abs(closed)))
    return _result("power-rule", worst, tol)


def check_composition(tol: float, y: float) -> CheckResult:
    """Order-mu sum of the two-parameter difference against its collapsed form."""
    rng = np.random.default_rng(102)
    a = 0.5
    worst = 0.0
    for _ in range(8):
        mu = rng.uniform(0.1, 0.9)
        nu = rng.uniform(0.0, 1.0)
        order = HilferOrder(mu, nu)
        f = _random_fn(Grid(a, 24), rng)
        lhs = fractional_sum_fn(hilfer_difference_fn(f, order), mu)
        inner = fractional_sum_fn(f, order.inner_sum_order)
        rhs = fractional_sum_fn(forward_difference_fn(inner), order.eta)
        worst = max(worst, float(np.max(np.abs(lhs.values - rhs.values))))
    return _result("composition-sum-of-difference", worst, tol)


def check_composition_rl_route(tol: float, y: float) -> CheckResult:
    """Same collapsed form reached through the order-eta difference."""
    rng = np.random.default_rng(107)
    a = 0.5
    worst = 0.0
    for _ in range(8):
        mu = rng.uniform(0.1, 0.9)
        nu = rng.uniform(0.0, 1.0)
        order = HilferOrder(mu, nu)
        f = _random_fn(Grid(a, 24), rng)
        lhs = fractional_sum_fn(hilfer_difference_fn(f, order), mu)
        rhs = fractional_sum_fn(rl_difference_fn(f, order.eta), order.eta)
        worst = max(worst, float(np.max(np.abs(lhs.values - rhs.values))))
    return _result("composition-rl-route", worst, tol)


def check_composition_correction(tol: float, y: float) -> CheckResult:
    """Difference-after-sum equals f minus the explicit monomial correction."""
    rng = np.random.default_rng(103)
    a = 0.25
    worst = 0.0
    for _ in range(8):
        mu = rng.uniform(0.1, 0.9)
        nu = rng.uniform(0.0, 1.0)
        order = HilferOrder(mu, nu)
        f = _random_fn(Grid(a, 22), rng)
        summed = fractional_sum_fn(f, mu)
        lhs = hilfer_difference_fn(summed, order)
        c = order.outer_sum_order
        s = a + 1.0 - c
        initial = fractional_sum(f, 1.0 - c, s)
        for j in range(lhs.count):
            x = lhs.base + j  # = a + 1 + j
            rhs = f(x) - initial * taylor_monomial(c - 1.0, x, s)
            worst = max(worst, abs(float(lhs.values[j]) - rhs))
    return _result("composition-correction-term", worst, tol)


def check_left_inverse(tol: float, y: float) -> CheckResult:
    """With f vanishing at the base point the composition returns f."""
    rng = np.random.default_rng(104)
    a = 0.25
    worst = 0.0
    for _ in range(8):
        mu = rng.uniform(0.1, 0.9)
        nu = rng.uniform(0.0, 1.0)
        order = HilferOrder(mu, nu)
        vals = rng.uniform(-1.0, 1.0, 22)
        vals[0] = 0.0
        f = GridFn(Grid(a, 22), vals)
        lhs = hilfer_difference_fn(fractional_sum_fn(f, mu), order)
        for j in range(lhs.count):
            worst = max(worst, abs(float(lhs.values[j]) - f(lhs.base + j)))
    return _result("left-inverse", worst, tol)


def _laplace_f(count: int = 400) -> GridFn:
    rng = np.random.default_rng(105)
    return _exp_bounded_fn(Grid(0.0, count), rng, ratio=1.2)


def check_laplace_fractional_sum(tol: float, y: float) -> CheckResult:
    f = _laplace_f()
    ctl = LaplaceCtl(r=1.35, tol=1e-10)
    worst = 0.0
    for mu in (0.3, 0.5, 0.8):
        lhs, rhs = laplace_of_fractional_sum_check(f, mu, y, ctl)
        worst = max(worst, abs(lhs - rhs))
    return _result("laplace-of-fractional-sum", worst, tol, f"y={y}")


def check_laplace_integer_difference(tol: float, y: float) -> CheckResult:
    f = _laplace_f()
    ctl = LaplaceCtl(r=1.35, tol=1e-10)
    worst = 0.0
    for m in (1, 2):
        lhs, rhs = laplace_of_integer_difference_check(f, m, y, ctl)
        worst = max(worst, abs(lhs - rhs))
    lhs, rhs = laplace_base_shift_check(f, y, ctl)
    worst = max(worst, abs(lhs - rhs))
    return _result("laplace-of-integer-difference", worst, tol, f"y={y}")


def check_laplace_hilfer(tol: float, y: float) -> CheckResult:
    f = _laplace_f()
    ctl = LaplaceCtl(r=1.35, tol=1e-10)
    worst = 0.0
    for mu, nu in ((0.7, 0.5), (0.7, 0.0), (0.7, 1.0), (0.4, 0.25)):
        lhs, rhs = laplace_of_hilfer_check(f, HilferOrder(mu, nu), y, ctl)
        worst = max(worst, abs(lhs - rhs))
    return _result("laplace-of-hilfer-difference", worst, tol, f"y={y}")


def check_solver_cross_validation(tol: float, y: float) -> CheckResult:
    worst = 0.0
    for lam in (0.05, 0.1, 0.3):
        for mu in (0.5, 0.8):
            for nu in (0.0, 0.25, 0.5, 0.75, 1.0):
                spec = IvpSpec(0.0, 30, HilferOrder(mu, nu), 1.0, Linear(lam))
                rec = solve_linear(spec).values.values
                ser = solve_linear_series(spec).values.values
                scale = np.maximum(1.0, np.abs(rec))
                worst = max(worst, float(np.max(np.abs(rec - ser) / scale)))
    return _result("solver-cross-validation", worst, tol)


def check_solver_residual(tol: float, y: float) -> CheckResult:
    worst = 0.0
    for lam in (0.1, 0.3):
        for mu in (0.5, 0.8):
            for nu in (0.0, 0.5, 1.0):
                spec = IvpSpec(0.3, 25, HilferOrder(mu, nu), 1.0, Linear(lam))
                sol = solve_linear(spec)
                res = defining_equation_residual(sol, spec)
                worst = max(worst, float(np.max(np.abs(res.values))))
                worst = max(
                    worst, abs(initial_condition_value(sol, spec) - spec.zeta)
                )
    spec = IvpSpec(
        0.3, 9, HilferOrder(0.7, 0.5), 1.0, Nonlinear(lambda w, u: (w - 0.3) * u)
    )
    sol = solve_nonlinear(spec)
    res = defining_equation_residual(sol, spec)
    worst = max(worst, float(np.max(np.abs(res.values))))
    return _result("solver-defining-equation-residual", worst, tol)


def check_endpoint_reduction(tol: float, y: float) -> CheckResult:
    rng = np.random.default_rng(106)
    worst = 0.0
    for mu in (0.1, 0.5, 0.9):
        for _ in range(6):
            f = _random_fn(Grid(0.0, 31), rng)
            h0 = hilfer_difference_fn(f, HilferOrder(mu, 0.0))
            h1 = hilfer_difference_fn(f, HilferOrder(mu, 1.0))
            r = rl_difference_fn(f, mu)
            c = caputo_difference_fn(f, mu)
            worst = max(worst, float(np.max(np.abs(h0.values - r.values))))
            worst = max(worst, float(np.max(np.abs(h1.values - c.values))))
    return _result("endpoint-reduction", worst, tol)


def check_ml_reductions(tol: float, y: float) -> CheckResult:
    worst = 0.0
    for lam in (0.1, -0.1, 0.5, -0.5):
        p = MlParams(mu=1.0, eta=1.0, lam=lam)
        for n in range(21):
            got = ml_plain(p, float(n))
            expect = (1.0 + lam) ** n
            worst = max(worst, abs(got - expect) / max(1.0, abs(expect)))
    p = MlParams(mu=0.7, eta=0.85, lam=0.2)
    for n in range(12):
        shift = ml_plain(p, n + p.eta - 1.0)
        bold = ml_eval(p, float(n), bold=True).value
        worst = max(worst, abs(shift - bold))
    return _result("ml-reductions", worst, tol)


def check_gronwall_reductions(tol: float, y: float) -> CheckResult:
    worst = 0.0
    grid = Grid(0.0, 21)
    for const in (0.1, 0.5):
        v = GridFn.constant(grid, const)
        for n in range(grid.count):
            got = gronwall_series(1.0, v, (1.0, 1.0), float(n))
            expect = (1.0 + const) ** n
            worst = max(worst, abs(got - expect) / max(1.0, abs(expect)))
    order = HilferOrder(0.7, 0.5)
    for const in (0.05, 0.1, 0.15):
        v = GridFn.constant(grid, const)
        p = MlParams(mu=order.mu, eta=order.eta, lam=const)
        for n in range(grid.count):
            got = gronwall_series(1.0, v, order, float(n))
            expect = ml_plain(p, n + order.eta - 1.0)
            worst = max(worst, abs(got - expect) / max(1.0, abs(expect)))
    return _result("gronwall-reductions", worst, tol)


def check_ulam_bound(tol: float, y: float) -> CheckResult:
    k = 0.15
    spec = IvpSpec(
        0.3, 9, HilferOrder(0.7, 0.5), 1.0, Nonlinear(lambda w, u: k * u)
    )
    worst = 0.0
    for dz in (0.1, 0.01, 0.001):
        rep = ulam_experiment(spec, k, zeta_n=spec.zeta + dz)
        if not (rep.verdict and rep.pointwise_ok and rep.certificate_applies):
            worst = max(worst, 1.0)
        excess = rep.deviation - rep.epsilon * rep.constant
        worst = max(worst, max(excess, 0.0))
    return _result("ulam-initial-value-bound", worst, tol)


def check_paper_constant(tol: float, y: float) -> CheckResult:
    got = existence_bound(0.3, 9.3, 0.7)
    return _result(
        "desk-scenario-threshold", abs(got - 0.1974), tol, f"value={got:.6f}"
    )


# ---------------------------------------------------------------------------
# registry


_CHECKS: dict[str, tuple[Callable[[float, float], CheckResult], float]] = {
    "power-rule": (check_power_rule, 1e-10),
    "composition-sum-of-difference": (check_composition, 1e-9),
    "composition-rl-route": (check_composition_rl_route, 1e-9),
    "composition-correction-term": (check_composition_correction, 1e-9),
    "left-inverse": (check_left_inverse, 1e-9),
    "laplace-of-fractional-sum": (check_laplace_fractional_sum, 1e-8),
    "laplace-of-integer-difference": (check_laplace_integer_difference, 1e-8),
    "laplace-of-hilfer-difference": (check_laplace_hilfer, 1e-8),
    "solver-cross-validation": (check_solver_cross_validation, 1e-8),
    "solver-defining-equation-residual": (check_solver_residual, 1e-8),
    "endpoint-reduction": (check_endpoint_reduction, 1e-10),
    "ml-reductions": (check_ml_reductions, 1e-10),
    "gronwall-reductions": (check_gronwall_reductions, 1e-10),
    "ulam-initial-value-bound": (check_ulam_bound, 1e-12),
    "desk-scenario-threshold": (check_paper_constant, 5e-3),
}


def available_checks() -> list[str]:
    return list(_CHECKS)


def run_checks(
    only: str | None = None,
    *,
    tol_override: float | None = None,
    y: float = 2.0,
) -> list[CheckResult]:
    """Run the suite (or the subset whose name contains ``only``)."""
    results = []
    for name, (fn, tol) in _CHECKS.items():
        if only is not None and only not in name:
            continue
        results.append(fn(tol_override if tol_override is not None else tol, y))
    if not results:
        raise ValueError(f"no checks match {only!r}")
    return results
