"""Delta exponential function and the truncated delta Laplace transform.

The transform based at ``a`` is the generating-function sum

    L_a{f}(y) = sum_{x = a}^{inf} f(x) (1+y)^{-(x-a+1)},

evaluated for real y on the ray |1+y| > r, where r > 1 is the assumed
exponential order of f.  Truncation is controlled by a geometric tail
bound M (r/|1+y|)^N / (1 - r/|1+y|) with M estimated from the computed
prefix; if f outgrows r^x the estimate keeps climbing and the evaluation
reports failure instead of returning a silently wrong value.

The identity-check helpers return (lhs, rhs) pairs and leave the
tolerance judgement to the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .grid import Grid, GridFn, HilferOrder
from .operators import (
    forward_difference_fn,
    fractional_sum_fn,
    hilfer_difference_fn,
)

__all__ = [
    "LaplaceCtl",
    "LaplaceResult",
    "RegressivityError",
    "TransformDomainError",
    "TruncationError",
    "delta_exp",
    "delta_laplace",
    "laplace_of_fractional_sum_check",
    "laplace_of_integer_difference_check",
    "laplace_of_hilfer_check",
    "laplace_base_shift_check",
]


class RegressivityError(ValueError):
    """1 + p(t) vanished somewhere on the traversed range."""


class TransformDomainError(ValueError):
    """y violates the |1+y| > r convergence precondition."""


class TruncationError(RuntimeError):
    """The tail bound was not met before samples or max_terms ran out."""


@dataclass(frozen=True)
class LaplaceCtl:
    """Truncation policy for the transform.

    ``r`` is the assumed exponential order of the transformed function
    (r > 1); evaluation requires |1+y| > r.
    """

    r: float = 1.5
    tol: float = 1e-10
    max_terms: int = 100_000

    def __post_init__(self) -> None:
        if self.r <= 1.0:
            raise ValueError("exponential order bound r must exceed 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


@dataclass(frozen=True)
class LaplaceResult:
    value: float
    tail_bound: float
    terms: int


def delta_exp(p, x: float, y: float) -> float:
    """Delta exponential: product of 1 + p(t) for t from y up to x - 1.

    ``p`` may be a constant, a GridFn, or any callable of one real.  For
    x below y the reciprocal product is used; x = y gives the empty
    product 1.  A vanishing 1 + p(t) on the traversed range violates
    regressivity and raises.
    """
    if isinstance(p, GridFn):
        p_at = p
    elif callable(p):
        p_at = p
    else:
        pc = float(p)
        p_at = lambda _t: pc  # noqa: E731

    span = round(x - y)
    if abs((x - y) - span) > 1e-9:
        raise ValueError(f"x - y = {x - y!r} is not an integer step count")

    out = 1.0
    if span >= 0:
        for k in range(span):
            factor = 1.0 + float(p_at(y + k))
            if factor == 0.0:
                raise RegressivityError(f"1 + p({y + k!r}) = 0")
            out *= factor
        return out
    for k in range(-span):
        factor = 1.0 + float(p_at(x + k))
        if factor == 0.0:
            raise RegressivityError(f"1 + p({x + k!r}) = 0")
        out /= factor
    return out


def delta_laplace(f: GridFn, y: float, ctl: LaplaceCtl = LaplaceCtl()) -> LaplaceResult:
    """Truncated transform of f based at its own grid base.

    Terms are added until the geometric tail bound drops below ctl.tol;
    running out of samples or of max_terms first raises TruncationError.
    """
    q = 1.0 + y
    if abs(q) <= ctl.r:
        raise TransformDomainError(
            f"|1+y| = {abs(q)!r} must exceed the order bound r = {ctl.r!r}"
        )
    ratio = ctl.r / abs(q)
    limit = min(f.count, ctl.max_terms)
    total = 0.0
    growth = 0.0  # running estimate of sup |f| / r^offset
    qpow = 1.0 / q
    rpow = 1.0
    for k in range(limit):
        total += float(f.values[k]) * qpow
        growth = max(growth, abs(float(f.values[k])) / rpow)
        tail = growth * ratio ** (k + 1) / (1.0 - ratio)
        if tail < ctl.tol:
            return LaplaceResult(total, tail, k + 1)
        qpow /= q
        rpow *= ctl.r
    raise TruncationError(
        f"tail bound {ctl.tol!r} not met within {limit} samples; "
        "either supply more samples or raise ctl.r/.tol"
    )


def _real_power(ratio: float, exponent: float) -> float:
    if ratio <= 0.0:
        raise TransformDomainError(
            "closed forms with fractional powers need (y+1)/y > 0; "
            "evaluate on the real ray y > 0"
        )
    return ratio**exponent


def laplace_of_fractional_sum_check(
    f: GridFn, mu: float, y: float, ctl: LaplaceCtl = LaplaceCtl()
) -> tuple[float, float]:
    """lhs: transform (based at base+mu) of the order-mu sum of f;
    rhs: ((y+1)/y)^mu times the transform of f."""
    lhs = delta_laplace(fractional_sum_fn(f, mu), y, ctl).value
    rhs = _real_power((y + 1.0) / y, mu) * delta_laplace(f, y, ctl).value
    return lhs, rhs


def laplace_of_integer_difference_check(
    f: GridFn, m: int, y: float, ctl: LaplaceCtl = LaplaceCtl()
) -> tuple[float, float]:
    """lhs: transform of the m-th forward difference of f;
    rhs: y^m F - sum_j y^j (Delta^{m-1-j} f)(base)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    diffs = [f]
    for _ in range(m):
        diffs.append(forward_difference_fn(diffs[-1]))
    lhs = delta_laplace(diffs[m], y, ctl).value
    rhs = (y**m) * delta_laplace(f, y, ctl).value
    for j in range(m):
        rhs -= (y**j) * float(diffs[m - 1 - j].values[0])
    return lhs, rhs


def laplace_of_hilfer_check(
    f: GridFn, order: HilferOrder, y: float, ctl: LaplaceCtl = LaplaceCtl()
) -> tuple[float, float]:
    """lhs: transform (based at base+1-mu) of the two-parameter difference;
    rhs: y^mu (y+1)^(1-mu) F - ((y+1)/y)^(nu(1-mu)) times the inner sum's
    value at its own base point.

    At nu=0 the prefactor is 1 and the rhs collapses to the
    Riemann-Liouville transform formula; at nu=1 the inner sum is the
    identity and the rhs is the Caputo transform formula.
    """
    lhs = delta_laplace(hilfer_difference_fn(f, order), y, ctl).value
    f_transform = delta_laplace(f, y, ctl).value
    inner = fractional_sum_fn(f, order.inner_sum_order)
    initial = float(inner.values[0])
    rhs = (
        _real_power(y, order.mu) * _real_power(y + 1.0, 1.0 - order.mu) * f_transform
        - _real_power((y + 1.0) / y, order.outer_sum_order) * initial
    )
    return lhs, rhs


def laplace_base_shift_check(
    f: GridFn, y: float, ctl: LaplaceCtl = LaplaceCtl()
) -> tuple[float, float]:
    """lhs: transform of f based one point later;
    rhs: (1+y) L{f}(y) - f(base)."""
    shifted = GridFn(Grid(f.base + 1.0, f.count - 1), f.values[1:])
    lhs = delta_laplace(shifted, y, ctl).value
    rhs = (1.0 + y) * delta_laplace(f, y, ctl).value - float(f.values[0])
    return lhs, rhs
