"""Delta fractional sums and the three fractional difference operators.

The order-mu fractional sum based at ``a`` convolves samples against the
Taylor-monomial kernel and lives on the shifted grid starting at ``a+mu``;
the Riemann-Liouville difference is an integer difference after a
(1-mu)-sum, the Caputo difference a (1-mu)-sum after an integer
difference, and the two-parameter (Hilfer-type) difference interpolates
between them through the composition

    sum of order nu(1-mu), based where the inner stage lands
    o  forward difference
    o  sum of order (1-nu)(1-mu), based at a.

Intermediate stages are materialized on their true shifted grids, so a
starting-point mistake is an OffGridError rather than a silently wrong
number.  The order-0 sum is the identity operator, which is exactly what
the nu=0 and nu=1 edges of the composition require.

Whole-grid variants (``*_fn``) compute each stage once in O(n^2) total;
the pointwise forms wrap them.  Everything is pure and thread-safe.
"""

from __future__ import annotations

import math

import numpy as np

from .grid import (
    INTEGER_SNAP,
    CoverageError,
    Grid,
    GridFn,
    HilferOrder,
)

__all__ = [
    "sum_kernel",
    "fractional_sum",
    "fractional_sum_fn",
    "forward_difference_fn",
    "rl_difference",
    "rl_difference_fn",
    "caputo_difference",
    "caputo_difference_fn",
    "hilfer_difference",
    "hilfer_difference_fn",
]


def sum_kernel(mu: float, length: int) -> np.ndarray:
    """Kernel weights c[l] = Gamma(l+mu) / (Gamma(l+1) Gamma(mu)), l < length.

    c[lag] is the Taylor-monomial value h_{mu-1} at integer lag; every
    fractional sum on a unit-step grid is a discrete convolution against
    these weights.
    """
    if length <= 0:
        return np.empty(0)
    c = np.empty(length)
    c[0] = 1.0
    for lag in range(1, length):
        c[lag] = c[lag - 1] * (lag - 1 + mu) / lag
    return c


def fractional_sum_fn(f: GridFn, mu: float) -> GridFn:
    """Fractional sum of order mu >= 0 of f, on its natural grid base+mu.

    Order 0 is the identity.  The output has one value per input point:
    the value at base+mu+j uses f at offsets 0..j.
    """
    if abs(mu) <= INTEGER_SNAP:
        return f
    if mu < 0:
        raise ValueError(f"sum order must be nonnegative, got {mu}")
    n = f.count
    kernel = sum_kernel(mu, n)
    values = np.convolve(kernel, f.values)[:n] if n else np.empty(0)
    return GridFn(Grid(f.base + mu, n), values)


def fractional_sum(f: GridFn, mu: float, x: float) -> float:
    """Fractional sum of order mu of f, evaluated at one point of base+mu."""
    if abs(mu) <= INTEGER_SNAP:
        return f(x)
    if mu < 0:
        raise ValueError(f"sum order must be nonnegative, got {mu}")
    j = Grid(f.base + mu, f.count).index_of(x)
    kernel = sum_kernel(mu, j + 1)
    return float(np.dot(kernel[::-1], f.values[: j + 1]))


def forward_difference_fn(f: GridFn) -> GridFn:
    """Forward difference f(x+1) - f(x), on the same base, one point shorter."""
    if f.count < 2:
        raise CoverageError("forward difference needs at least two samples")
    return GridFn(Grid(f.base, f.count - 1), np.diff(f.values))


def rl_difference_fn(f: GridFn, mu: float) -> GridFn:
    """Riemann-Liouville difference of order mu in (0, 1], on base+1-mu."""
    if not 0.0 < mu <= 1.0:
        raise ValueError(f"difference order must lie in (0, 1], got {mu}")
    return forward_difference_fn(fractional_sum_fn(f, 1.0 - mu))


def rl_difference(f: GridFn, mu: float, x: float) -> float:
    return rl_difference_fn(f, mu)(x)


def caputo_difference_fn(f: GridFn, mu: float) -> GridFn:
    """Caputo difference of order mu in (0, 1], on base+1-mu."""
    if not 0.0 < mu <= 1.0:
        raise ValueError(f"difference order must lie in (0, 1], got {mu}")
    return fractional_sum_fn(forward_difference_fn(f), 1.0 - mu)


def caputo_difference(f: GridFn, mu: float, x: float) -> float:
    return caputo_difference_fn(f, mu)(x)


def hilfer_difference_fn(f: GridFn, order: HilferOrder) -> GridFn:
    """Two-parameter fractional difference of f, on base+1-mu.

    The three stages run on their true grids: the inner sum lands on
    base + (1-nu)(1-mu), is differenced there, and the outer sum carries
    the result to base + 1 - mu.  nu=0 reduces exactly to the
    Riemann-Liouville path and nu=1 to the Caputo path (the degenerate
    order-0 sums are identities).
    """
    inner = fractional_sum_fn(f, order.inner_sum_order)
    differenced = forward_difference_fn(inner)
    return fractional_sum_fn(differenced, order.outer_sum_order)


def hilfer_difference(f: GridFn, order: HilferOrder, x: float) -> float:
    return hilfer_difference_fn(f, order)(x)
