"""Truncated power series over exact rationals.

Used to machine-check, coefficient by coefficient, the identity that turns
the arc-weighted structure counts into a composition of the perfect-matching
series: with q(x) = w^2 x^2 - x + 1,

    sum_n [sum_h T'(n,h) w^(2h)] x^n
        = (1/q) * sum_m M(2m) * (w x / q)^(2m),

where T'(n,h) counts structures on n vertices with h arcs and M(2m) counts
k-noncrossing perfect matchings on 2m vertices.  The weight w enters only
through w^2, so it is kept as a fixed rational parameter and only x is a
series indeterminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .counting import count_table, perfect_matchings

__all__ = [
    "TruncSeries",
    "IdentityCheck",
    "truncated",
    "one",
    "series_add",
    "series_scale",
    "series_mul",
    "series_inv",
    "series_pow",
    "structure_series",
    "matching_composition_series",
    "verify_identity",
]

Rational = Union[Fraction, int]


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients of x^0 .. x^order, exact rationals, no rounding ever."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]


def truncated(values: Iterable[Rational], order: int) -> TruncSeries:
    """Series from leading coefficients, zero-padded or cut to the order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    cs = [Fraction(v) for v in values][: order + 1]
    cs += [Fraction(0)] * (order + 1 - len(cs))
    return TruncSeries(tuple(cs))


def one(order: int) -> TruncSeries:
    return truncated([1], order)


def _same_order(a: TruncSeries, b: TruncSeries) -> int:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _same_order(a, b)
    return TruncSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_scale(a: TruncSeries, c: Rational) -> TruncSeries:
    c = Fraction(c)
    return TruncSeries(tuple(x * c for x in a.coeffs))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = _same_order(a, b)
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncSeries(tuple(out))


def series_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; needs a nonzero constant term.
    b_0 = 1/a_0,  b_m = -(sum_{i=1..m} a_i b_{m-i}) / a_0."""
    if not a.coeffs[0]:
        raise ValueError("cannot invert a series with zero constant term")
    n = a.order
    inv0 = 1 / a.coeffs[0]
    out = [Fraction(0)] * (n + 1)
    out[0] = inv0
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            if a.coeffs[i]:
                s += a.coeffs[i] * out[m - i]
        out[m] = -s * inv0
    return TruncSeries(tuple(out))


def series_pow(a: TruncSeries, exponent: int) -> TruncSeries:
    """Integer power by binary exponentiation (negative via inversion)."""
    if exponent < 0:
        return series_pow(series_inv(a), -exponent)
    result = one(a.order)
    base = a
    e = exponent
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def structure_series(k: int, w: Rational, order: int) -> TruncSeries:
    """Arc-weighted structure counting series: the x^n coefficient is
    sum_h T'(n,h) w^(2h), assembled directly from the exact count tables."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    w2 = Fraction(w) ** 2
    coeffs = []
    for n in range(order + 1):
        row = count_table(k, n).by_arcs
        acc = Fraction(0)
        wp = Fraction(1)
        for h in range(n // 2 + 1):
            acc += row[h] * wp
            wp *= w2
        coeffs.append(acc)
    return TruncSeries(tuple(coeffs))


def matching_composition_series(k: int, w: Rational, order: int) -> TruncSeries:
    """Right-hand side of the identity: (1/q) * sum_m M(2m) (w x / q)^(2m)
    with q = w^2 x^2 - x + 1.  The composed argument has valuation 1 in x
    (for w != 0), so the outer sum stops at m = order // 2."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    w = Fraction(w)
    q = truncated([1, -1, w * w], order)
    qinv = series_inv(q)
    # w x / q
    arg = series_scale(
        TruncSeries((Fraction(0),) + qinv.coeffs[:order]), w
    )
    arg_sq = series_mul(arg, arg)
    power = one(order)
    acc = truncated([], order)
    for m in range(order // 2 + 1):
        acc = series_add(acc, series_scale(power, perfect_matchings(k, m)))
        if 2 * (m + 1) > order:
            break
        power = series_mul(power, arg_sq)
    return series_mul(qinv, acc)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of a coefficientwise comparison; on failure carries the
    smallest disagreeing order and both coefficients."""

    ok: bool
    mismatch_order: Optional[int] = None
    lhs_coeff: Optional[Fraction] = None
    rhs_coeff: Optional[Fraction] = None


def verify_identity(k: int, w: Rational, order: int) -> IdentityCheck:
    """Compare both routes coefficientwise through the given order."""
    lhs = structure_series(k, w, order)
    rhs = matching_composition_series(k, w, order)
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            return IdentityCheck(False, n, lhs[n], rhs[n])
    return IdentityCheck(True)
