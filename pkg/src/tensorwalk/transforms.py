"""Binomial transforms of sequences and of truncated generating functions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .series import PowerSeries


def _pascal_rows(n_max: int):
    row = [1]
    for n in range(n_max + 1):
        yield row
        row = [1] + [row[i] + row[i + 1] for i in range(n)] + [1]


def bt_power(a: Sequence[int], k: int) -> list:
    """k-th binomial transform: sum_i k**(n-i) * C(n, i) * a[i]."""
    if not a:
        return []
    powers = [1]
    for _ in range(len(a) - 1):
        powers.append(powers[-1] * k)
    out = []
    for n, row in enumerate(_pascal_rows(len(a) - 1)):
        out.append(sum(powers[n - i] * row[i] * a[i] for i in range(n + 1)))
    return out


def bt_series(g: PowerSeries, k: int) -> PowerSeries:
    """(1/(1 - k t)) * g(t / (1 - k t)) truncated at the order of g."""
    n = g.order
    denom = PowerSeries.from_coeffs([1, -k], n)
    inner = PowerSeries.from_coeffs([0, 1], n) / denom
    return g.compose(inner) / denom


def series_of(a: Sequence, order: int | None = None) -> PowerSeries:
    order = len(a) - 1 if order is None else order
    return PowerSeries([Fraction(x) for x in a[: order + 1]], order)
