"""Discrete Mittag-Leffler functions of the delta calculus.

Two families are provided: the plain series

    E^gamma_[mu,eta](lam, z) = sum_k lam^k (z + k(mu-1))^[mu k + eta - 1]
                               (gamma)_k / (Gamma(mu k + eta) k!)

and the shifted ("bold") variant whose falling-factorial argument carries
an extra eta - 1.  On the arguments that arise from solutions,
z = n + eta - 1 with n a nonnegative integer, the denominator gamma of
the falling factorial poles for every k > n, so the series is an exact
finite sum; termination is detected from that pole condition *before*
any term is formed, which keeps resonant parameter combinations (where
the polynomial continuation of the falling factorial would re-enter with
a nonzero value) consistent with the successive-approximation solutions.

Off the solution lattice the series is truncated once terms stay below
``SeriesCtl.tol`` (the |lam| < 1 restriction is what makes that sound);
non-convergence within ``max_terms`` raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln, gammasgn

from .grid import _pole_index, falling_factorial_sign_logmag

__all__ = [
    "SeriesCtl",
    "MlParams",
    "MlEvaluation",
    "pochhammer",
    "ml_eval",
    "ml_plain",
    "ml_bold",
]

#: consecutive below-tolerance terms required before truncating off-lattice
_CONSECUTIVE_SMALL = 3


@dataclass(frozen=True)
class SeriesCtl:
    """Truncation policy for infinite series."""

    tol: float = 1e-14
    max_terms: int = 512

    def __post_init__(self) -> None:
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


class SeriesConvergenceError(RuntimeError):
    """Series did not meet the truncation tolerance within max_terms."""


@dataclass(frozen=True)
class MlParams:
    """Parameters (mu, eta, gamma, lam) of the discrete Mittag-Leffler series.

    Real parameters only; mu > 0 and |lam| < 1.
    """

    mu: float
    eta: float = 1.0
    gamma: float = 1.0
    lam: float = 0.0

    def __post_init__(self) -> None:
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if not abs(self.lam) < 1.0:
            raise ValueError(f"|lam| must be < 1, got {self.lam}")


@dataclass(frozen=True)
class MlEvaluation:
    """Value plus diagnostics of one series evaluation.

    ``terms`` holds the computed terms in order; ``exact`` is True when the
    series terminated through the falling-factorial pole (finite sum, no
    truncation error), False when it was cut by the tolerance rule.
    """

    value: float
    terms: tuple[float, ...]
    exact: bool

    @property
    def terms_used(self) -> int:
        return len(self.terms)


def pochhammer(gamma: float, k: int) -> float:
    """Rising factorial (gamma)_k = gamma (gamma+1) ... (gamma+k-1); ()_0 = 1."""
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    out = 1.0
    for i in range(k):
        out *= gamma + i
    return out


def _series(
    mu: float,
    eta: float,
    gamma: float,
    lam: float,
    z: float,
    arg_offset: float,
    ctl: SeriesCtl,
) -> MlEvaluation:
    log_abs_lam = math.log(abs(lam)) if lam != 0.0 else -math.inf
    sign_lam = math.copysign(1.0, lam)
    poch_sign, poch_log = 1.0, 0.0  # running (gamma)_k / k! in log space
    total = 0.0
    terms: list[float] = []
    small_in_a_row = 0

    for k in range(ctl.max_terms):
        # Denominator gamma argument of the falling factorial; it decreases
        # by exactly 1 per term, so the first pole terminates the series.
        if _pole_index(z + arg_offset - eta + 2.0 - k) is not None:
            return MlEvaluation(total, tuple(terms), True)

        if k > 0:
            factor = gamma + (k - 1)
            if factor == 0.0:
                # Pochhammer hit zero: every later term vanishes too.
                return MlEvaluation(total, tuple(terms), True)
            poch_sign *= math.copysign(1.0, factor)
            poch_log += math.log(abs(factor)) - math.log(k)

        if k > 0 and lam == 0.0:
            return MlEvaluation(total, tuple(terms), True)

        t = z + k * (mu - 1.0) + arg_offset
        r = k * mu + eta - 1.0
        ff_sign, ff_log = falling_factorial_sign_logmag(t, r)
        denom_arg = k * mu + eta
        if ff_sign == 0.0 or _pole_index(denom_arg) is not None:
            term = 0.0
        else:
            log_term = (
                (k * log_abs_lam if k else 0.0)
                + ff_log
                + poch_log
                - gammaln(denom_arg)
            )
            term = (
                ff_sign
                * poch_sign
                * (sign_lam**k)
                * float(gammasgn(denom_arg))
                * math.exp(float(log_term))
            )
        terms.append(term)
        total += term

        if abs(term) < ctl.tol:
            small_in_a_row += 1
            if small_in_a_row >= _CONSECUTIVE_SMALL:
                return MlEvaluation(total, tuple(terms), False)
        else:
            small_in_a_row = 0

    raise SeriesConvergenceError(
        f"series did not converge within {ctl.max_terms} terms"
    )


def ml_eval(
    p: MlParams, z: float, ctl: SeriesCtl = SeriesCtl(), *, bold: bool = False
) -> MlEvaluation:
    """Evaluate either series family with full diagnostics."""
    offset = (p.eta - 1.0) if bold else 0.0
    return _series(p.mu, p.eta, p.gamma, p.lam, z, offset, ctl)


def ml_plain(p: MlParams, z: float, ctl: SeriesCtl = SeriesCtl()) -> float:
    """Plain discrete Mittag-Leffler value at z."""
    return ml_eval(p, z, ctl).value


def ml_bold(p: MlParams, z: float, ctl: SeriesCtl = SeriesCtl()) -> float:
    """Shifted-argument variant; equals ml_plain at z + eta - 1."""
    return ml_eval(p, z, ctl, bold=True).value
