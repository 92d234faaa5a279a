"""Closed-form lower bounds on the spectral gap 2*Delta - q(H).

For a proper subgraph H of a connected Delta-regular graph G on n vertices,
q(H) stays strictly below the regular ceiling 2*Delta, and the shortfall
admits closed-form lower bounds in terms of G's parameters:

* ``bound_thm1`` (diameter form):      1 / (n (D - 1/4))
* ``bound_thm2`` (connectivity form):  2(k-1)^2 / (2(n-Δ)(n-Δ+2k-4) + (n+1)(k-1)^2)

The same diameter expression bounds 2*Delta - q(G) for connected irregular G
(``bound_eq1``), and ``bound_eq2`` is the irregular-graph bound that also
uses the edge count.  ``thresholds`` gives the connectivity levels at which
one form provably dominates the other, ``cycle_case_bound`` is the quantity
the connectivity form reduces to on cycles, and ``lemma1_gap`` exposes the
scalar inequality a(x-y)^2 + b y^2 >= a b x^2 / (a+b) underlying the proofs.

All functions are pure double-precision arithmetic on integer parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "bound_thm1",
    "bound_thm2",
    "bound_eq1",
    "bound_eq2",
    "thresholds",
    "cycle_case_bound",
    "lemma1_gap",
    "Thresholds",
    "BoundReport",
    "bound_report",
]


def bound_thm1(n: int, D: int) -> float:
    """Diameter-form gap bound 1 / (n (D - 1/4)) for n >= 2, D >= 1."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if D < 1:
        raise ValueError(f"diameter must be at least 1, got {D}")
    return 1.0 / (n * (D - 0.25))


def bound_eq1(n: int, D: int) -> float:
    """Same expression as :func:`bound_thm1`, under the irregular-graph
    hypothesis (bounds 2*Delta - q of a connected irregular graph itself)."""
    return bound_thm1(n, D)


def bound_thm2(n: int, delta_max: int, k: int) -> float:
    """Connectivity-form gap bound for a k-connected Delta-regular ambient
    graph; requires k >= 2 and n > delta_max >= k."""
    if k < 2:
        raise ValueError(f"connectivity k must be at least 2, got {k}")
    if delta_max < k:
        raise ValueError(f"max degree {delta_max} cannot be below k={k}")
    if n <= delta_max:
        raise ValueError(f"n must exceed the max degree, got n={n}, Δ={delta_max}")
    nd = n - delta_max
    denom = 2.0 * nd * (nd + 2 * k - 4) + (n + 1) * (k - 1) ** 2
    return 2.0 * (k - 1) ** 2 / denom


def bound_eq2(n: int, delta_max: int, m: int, k: int) -> float:
    """Irregular-graph gap bound using the edge count m; requires
    n*delta_max > 2m (irregularity) and k >= 1."""
    if k < 1:
        raise ValueError(f"connectivity k must be at least 1, got {k}")
    surplus = n * delta_max - 2 * m
    if surplus <= 0:
        raise ValueError(
            f"n*Δ - 2m must be positive (irregular graph), got {surplus}"
        )
    denom = 2.0 * surplus * (n * n - 2 * (n - k)) + n * k**2
    return 2.0 * surplus * k**2 / denom


class Thresholds(NamedTuple):
    """Connectivity crossover levels between the two gap-bound forms."""

    hi: float
    lo: float


def thresholds(n: int, delta_max: int, D: int) -> Thresholds:
    """Crossover connectivities: integer k > hi makes the connectivity form
    dominate; k < lo makes the diameter form dominate.

    hi = 2*sqrt((n-Δ)(n+Δ-4) / (n(4D-3)-2)) + 1
    lo = 2*(n-Δ) / sqrt(n(4D-3)-2) + 1
    """
    if n <= delta_max:
        raise ValueError(f"n must exceed the max degree, got n={n}, Δ={delta_max}")
    scale = n * (4 * D - 3) - 2
    if scale <= 0:
        raise ValueError(f"n(4D-3) - 2 must be positive, got {scale}")
    radicand = (n - delta_max) * (n + delta_max - 4) / scale
    if radicand <= 0:
        raise ValueError(f"threshold radicand must be positive, got {radicand}")
    hi = 2.0 * math.sqrt(radicand) + 1.0
    lo = 2.0 * (n - delta_max) / math.sqrt(scale) + 1.0
    return Thresholds(hi, lo)


def cycle_case_bound(n: int) -> float:
    """The value 2 / (2n^2 - 7n + 9); equals bound_thm2(n, 2, 2), and is
    strictly below the cycle-path gap 4 sin^2(pi / 2n)."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return 2.0 / (2 * n * n - 7 * n + 9)


def lemma1_gap(a: float, b: float, x: float, y: float) -> float:
    """Slack of the scalar inequality a(x-y)^2 + b y^2 >= a b x^2 / (a+b).

    Nonnegative for a, b > 0; zero exactly at y = a x / (a + b).
    """
    if not a > 0 or not b > 0:
        raise ValueError(f"a and b must be positive, got a={a}, b={b}")
    return a * (x - y) ** 2 + b * y**2 - a * b * x**2 / (a + b)


@dataclass(frozen=True)
class BoundReport:
    """All bound values evaluable from one parameter set.

    ``eq4`` is absent (None) when k < 2; ``eq2`` is absent without an edge
    count or when the parameters are regular (n*Δ = 2m); the thresholds are
    absent when their radicand degenerates.  ``dominant`` names the larger
    of eq3/eq4 and is absent when eq4 is.
    """

    eq1: float
    eq3: float
    eq4: float | None
    eq2: float | None
    threshold_hi: float | None
    threshold_lo: float | None
    dominant: str | None


def bound_report(
    n: int,
    max_degree: int,
    diameter: int,
    connectivity: int,
    m: int | None = None,
) -> BoundReport:
    """Evaluate every applicable bound for one parameter set."""
    eq3 = bound_thm1(n, diameter)
    eq1 = bound_eq1(n, diameter)
    eq4 = None
    if connectivity >= 2:
        eq4 = bound_thm2(n, max_degree, connectivity)
    eq2 = None
    if m is not None and connectivity >= 1 and n * max_degree - 2 * m > 0:
        eq2 = bound_eq2(n, max_degree, m, connectivity)
    try:
        hi, lo = thresholds(n, max_degree, diameter)
    except ValueError:
        hi = lo = None
    dominant = None
    if eq4 is not None:
        dominant = "eq4" if eq4 > eq3 else "eq3"
    return BoundReport(
        eq1=eq1,
        eq3=eq3,
        eq4=eq4,
        eq2=eq2,
        threshold_hi=hi,
        threshold_lo=lo,
        dominant=dominant,
    )
