"""Function-sampled symmetric matrices and their entrywise m-norm limits.

The central object is the n-by-n symmetric matrix whose (i, j) entry is
f(min(i,j)/max(i,j)) for a function f defined on (0, 1].  For Riemann
integrable f the normalized entrywise norm (1/n^2) * sum |a_ij|^m tends
to the integral of |f|^m over [0, 1]; this module computes both sides of
that comparison without ever materializing the full matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import EvaluationError, QuadratureError

#: Absolute tolerance of predict_limit's adaptive quadrature.
QUADRATURE_TOL = 1e-10
#: Subdivision budget of predict_limit (panel count before giving up).
QUADRATURE_PANEL_BUDGET = 2**20
#: Left edge of the quadrature interval.  The integration interval is open
#: at 0: integrands are never evaluated at or below this point, and the
#: truncated mass is negligible (< 1e-16) for bounded or log-singular f.
OPEN_LEFT_EDGE = 2.0**-60

_MAX_RECURSION_DEPTH = 80


@dataclass(frozen=True)
class Integrand:
    """A deterministic real function on (0, 1] with a short label.

    ``eval`` must be finite at every rational j/k with 1 <= j <= k; sample
    points never include 0.  ``eval_array`` is an optional vectorized
    evaluation over a float64 array, used to speed up row sampling; it must
    agree with ``eval`` up to floating-point rounding.
    """

    eval: Callable[[float], float]
    label: str
    eval_array: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __call__(self, x: float) -> float:
        return self.eval(x)


@dataclass(frozen=True)
class SampledMatrixSpec:
    """Order-n symmetric matrix with entries integrand(min(i,j)/max(i,j))."""

    integrand: Integrand
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


@dataclass(frozen=True)
class NormReport:
    """One row of a norm-convergence experiment.

    ``raw_norm_power`` is sum |a_ij|^m over all n^2 entries, ``normalized``
    is that value divided by n^2, and ``abs_error`` is the distance of the
    normalized value from the caller-supplied predicted limit.
    """

    order: int
    exponent: float
    raw_norm_power: float
    normalized: float
    predicted_limit: float
    abs_error: float


@dataclass(frozen=True)
class CesaroInput:
    """A finite real sequence a_1..a_n together with its claimed limit b."""

    terms: Sequence[float]
    claimed_limit: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(float(t) for t in self.terms))
        if not self.terms:
            raise ValueError("terms must be nonempty")


def matrix_entry(spec: SampledMatrixSpec, i: int, j: int) -> float:
    """Entry (i, j) of the sampled matrix, 1-based; symmetric in (i, j)."""
    n = spec.order
    if not (1 <= i <= n) or not (1 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) outside 1..{n}")
    return spec.integrand.eval(min(i, j) / max(i, j))


def sample_row(integrand: Integrand, k: int) -> np.ndarray:
    """Values f(j/k) for j = 1..k as a float64 array.

    Raises EvaluationError naming the offending sample point if the
    integrand returns a non-finite value anywhere in the row.
    """
    x = np.arange(1, k + 1, dtype=np.float64) / k
    if integrand.eval_array is not None:
        values = np.asarray(integrand.eval_array(x), dtype=np.float64)
    else:
        values = np.array([integrand.eval(float(t)) for t in x], dtype=np.float64)
    if not np.all(np.isfinite(values)):
        j = int(np.argmin(np.isfinite(values))) + 1
        raise EvaluationError(
            f"integrand {integrand.label!r} is not finite at {j}/{k}"
        )
    return values


def _abs_power(values: np.ndarray, m: float) -> np.ndarray:
    if m == 1.0:
        return np.abs(values)
    if m == 2.0:
        return values * values
    return np.abs(values) ** m


def norm_power(spec: SampledMatrixSpec, m: float) -> float:
    """sum |a_ij|^m over all n^2 entries, streamed over the lower triangle.

    By symmetry the full sum equals twice the triangle sum minus the
    diagonal, and every diagonal entry is f(k/k) = f(1).  Rows are
    evaluated in ascending k, terms in ascending j, and all partial sums
    use exact (error-cancelling) accumulation, so the result is
    reproducible bit for bit on a given platform.  Memory stays O(n).
    """
    if m < 1.0:
        raise ValueError(f"norm exponent must be >= 1, got {m}")
    f = spec.integrand
    row_sums = []
    for k in range(1, spec.order + 1):
        terms = _abs_power(sample_row(f, k), m)
        row_sums.append(math.fsum(terms.tolist()))
    triangle = math.fsum(row_sums)
    # row_sums[0] is |f(1)|^m, the shared value of every diagonal entry
    return 2.0 * triangle - spec.order * row_sums[0]


def norm_report(spec: SampledMatrixSpec, m: float, predicted: float) -> NormReport:
    """Raw and normalized m-norm power of the matrix against a predicted limit."""
    raw = norm_power(spec, m)
    n2 = spec.order * spec.order
    normalized = raw / n2
    return NormReport(
        order=spec.order,
        exponent=float(m),
        raw_norm_power=raw,
        normalized=normalized,
        predicted_limit=float(predicted),
        abs_error=abs(normalized - predicted),
    )


def predict_limit(integrand: Integrand, m: float) -> float:
    """Adaptive-quadrature value of the integral of |f(x)|^m over (0, 1].

    Composite Simpson with recursive bisection; each split halves the local
    tolerance, so the total error stays below QUADRATURE_TOL.  The interval
    is open at 0 (no evaluation at or below OPEN_LEFT_EDGE), which handles
    integrands with an integrable logarithmic singularity at the origin.
    Raises QuadratureError once QUADRATURE_PANEL_BUDGET panels are spent.
    """
    if m < 1.0:
        raise ValueError(f"norm exponent must be >= 1, got {m}")
    f = integrand.eval
    panels = 0

    def g(x: float) -> float:
        return abs(f(x)) ** m

    def simpson(a: float, b: float, fa: float, fmid: float, fb: float) -> float:
        return (b - a) / 6.0 * (fa + 4.0 * fmid + fb)

    def refine(a, mid, b, fa, fmid, fb, whole, tol, depth):
        nonlocal panels
        panels += 2
        if panels > QUADRATURE_PANEL_BUDGET:
            raise QuadratureError(
                f"quadrature for {integrand.label!r}^({m}) exceeded "
                f"{QUADRATURE_PANEL_BUDGET} panels"
            )
        lm = 0.5 * (a + mid)
        rm = 0.5 * (mid + b)
        flm = g(lm)
        frm = g(rm)
        left = simpson(a, mid, fa, flm, fmid)
        right = simpson(mid, b, fmid, frm, fb)
        delta = left + right - whole
        # past _MAX_RECURSION_DEPTH the interval width is at the limit of
        # float resolution and the Richardson estimate is pure roundoff
        if abs(delta) <= 15.0 * tol or depth >= _MAX_RECURSION_DEPTH:
            return left + right + delta / 15.0
        return refine(
            a, lm, mid, fa, flm, fmid, left, 0.5 * tol, depth + 1
        ) + refine(mid, rm, b, fmid, frm, fb, right, 0.5 * tol, depth + 1)

    a, b = OPEN_LEFT_EDGE, 1.0
    mid = 0.5 * (a + b)
    fa, fmid, fb = g(a), g(mid), g(b)
    panels += 3
    whole = simpson(a, b, fa, fmid, fb)
    return refine(a, mid, b, fa, fmid, fb, whole, QUADRATURE_TOL, 0)


def weighted_cesaro(data: CesaroInput) -> float:
    """(a_1 + 2*a_2 + ... + n*a_n) / n^2.

    For sequences with a_k -> b this weighted mean approaches b/2.
    """
    terms = data.terms
    if not all(math.isfinite(t) for t in terms):
        raise ValueError("terms must all be finite")
    n = len(terms)
    return math.fsum(k * a for k, a in enumerate(terms, start=1)) / (n * n)


def convergence_table(
    integrand: Integrand, m: float, orders: Iterable[int]
) -> list[NormReport]:
    """One NormReport per order, all against the same predict_limit value.

    Orders must be strictly increasing.  Nothing is emitted if any inner
    computation fails.
    """
    orders = list(orders)
    if not orders:
        raise ValueError("orders must be nonempty")
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError(f"orders must be strictly increasing, got {orders}")
    predicted = predict_limit(integrand, m)
    return [
        norm_report(SampledMatrixSpec(integrand, n), m, predicted) for n in orders
    ]
