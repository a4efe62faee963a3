"""Limit behaviour of the arc-count distribution.

The arc-weighted generating function, with weight w = e^(s/2), has a
dominant singularity rho_k(s) that moves smoothly with s.  Its logarithmic
derivatives at s = 0 give the density constants of the Gaussian limit:

    mu     = -rho'(0) / rho(0)
    sigma2 = mu^2 - rho''(0) / rho(0)

For k = 3 the singularity is the smallest root of
    e^s z^2 - (1 + 4 e^(s/2)) z + 1,
for k = 2 of
    e^s z^2 - (1 + 2 e^(s/2)) z + 1
(the matching series for k = 2 is the Catalan series with singularity 1/4,
pulled back through y = (e^(s/2) z / (e^s z^2 - z + 1))^2; for k = 3 the
inner singularity is 1/16).

This module also measures, on the exact finite-n distributions, how fast
the Gaussian limit is approached: a Kolmogorov (sup-CDF) distance for the
central limit theorem and a sup over lattice points of the rescaled point
probabilities against the Gaussian density for the local limit theorem.

All real arithmetic runs at PREC_BITS of mantissa; exact rationals are
converted to reals as the last step.  Growth like 4.79^n overflows double
precision long before n = 1000, high precision is not optional.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from mpmath import mp, mpf

from .counting import count_table, structure_total

__all__ = [
    "PREC_BITS",
    "S_BAND",
    "as_mpf",
    "SingularityData",
    "LimitConstants",
    "ArcDistribution",
    "DistanceReport",
    "dominant_singularity",
    "singularities",
    "singularity_derivatives",
    "singularity_derivatives_fd",
    "limit_constants",
    "asymptotic_count_k3",
    "implied_amplitude_k3",
    "distribution",
    "ks_distance",
    "llt_distance",
    "ks_distance_row",
    "llt_distance_row",
    "llt_profile",
    "binomial_row",
    "sign_flip_row",
    "distance_report",
]

PREC_BITS = 120

# Validated band for the singularity formulas.  The square roots develop
# branch points only at complex s of modulus about 6.43, so |s| <= 0.1 is
# comfortably analytic; inputs beyond it are rejected rather than trusted.
S_BAND = 0.1

Real = Union[int, float, str, mpf]


def as_mpf(x) -> mpf:
    """Lossless-as-possible conversion to mpf; Fractions divide at the
    ambient precision rather than round-tripping through floats."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / mpf(x.denominator)
    return mpf(x)


def _ratio(num, den) -> mpf:
    """Exact-integer or rational quotient as an mpf, division done last."""
    if isinstance(num, Fraction) or isinstance(den, Fraction):
        q = Fraction(num) / Fraction(den)
        return as_mpf(q)
    return mpf(num) / mpf(den)


def _check_k(k: int) -> None:
    if k not in (2, 3):
        raise ValueError("limit-law routines cover k=2 and k=3 only")


def _check_band(s) -> mpf:
    s = as_mpf(s)
    if abs(s) > S_BAND:
        raise ValueError(f"|s| = {float(abs(s))} outside the validated band {S_BAND}")
    return s


def dominant_singularity(k: int, s: Real) -> mpf:
    """rho_k(s): minimal-modulus root of the defining quadratic, evaluated
    in high precision.  Real and positive throughout the band."""
    _check_k(k)
    with mp.workprec(PREC_BITS):
        sv = _check_band(s)
        u = mp.exp(sv / 2)
        if k == 3:
            return (4 * u + 1 - mp.sqrt(12 * u * u + 8 * u + 1)) / (2 * u * u)
        return (2 * u + 1 - mp.sqrt(4 * u + 1)) / (2 * u * u)


@dataclass(frozen=True)
class SingularityData:
    """The six singularities of the continued arc-weighted series for k=3.

    roots[0:2] solve e^s z^2 - z + 1 (complex conjugates near |z| = 1);
    roots[2:4] solve e^s z^2 - (1 + 4e^(s/2)) z + 1;
    roots[4:6] solve e^s z^2 + (4e^(s/2) - 1) z + 1.
    rho is roots[2], the unique one of minimal modulus.
    """

    k: int
    s: mpf
    rho: mpf
    roots: tuple


def singularities(s: Real) -> SingularityData:
    """All six singularities at parameter s, for k = 3."""
    with mp.workprec(PREC_BITS):
        sv = _check_band(s)
        es = mp.exp(sv)
        u = mp.exp(sv / 2)
        disc_pre = mp.sqrt(mp.mpc(1 - 4 * es))
        z1 = (1 - disc_pre) / (2 * es)
        z2 = (1 + disc_pre) / (2 * es)
        theta_plus = mp.sqrt(12 * es + 8 * u + 1)
        theta_minus = mp.sqrt(12 * es - 8 * u + 1)
        z3 = (1 + 4 * u - theta_plus) / (2 * es)
        z4 = (1 + 4 * u + theta_plus) / (2 * es)
        z5 = (1 - 4 * u + theta_minus) / (2 * es)
        z6 = (1 - 4 * u - theta_minus) / (2 * es)
        return SingularityData(k=3, s=sv, rho=z3, roots=(z1, z2, z3, z4, z5, z6))


def singularity_derivatives(k: int) -> tuple[mpf, mpf, mpf]:
    """(rho(0), rho'(0), rho''(0)) from hand-differentiated closed forms.

    k=3: rho(0) = (5 - sqrt21)/2, rho'(0) = -3/2 + (13/42) sqrt21,
         rho''(0) = 1 - (94/441) sqrt21.
    k=2: rho(0) = (3 - sqrt5)/2,  rho'(0) = -1 + (2/5) sqrt5,
         rho''(0) = 3/4 - (33/100) sqrt5.
    """
    _check_k(k)
    with mp.workprec(PREC_BITS):
        if k == 3:
            r = mp.sqrt(21)
            return (
                (5 - r) / 2,
                mpf(-3) / 2 + 13 * r / 42,
                1 - 94 * r / 441,
            )
        r = mp.sqrt(5)
        return (
            (3 - r) / 2,
            -1 + 2 * r / 5,
            mpf(3) / 4 - 33 * r / 100,
        )


def singularity_derivatives_fd(k: int, step: float = 1e-4) -> tuple[mpf, mpf]:
    """(rho'(0), rho''(0)) by central finite differences, an independent
    check on the closed forms.  High precision makes the stencil error
    O(step^2) the only error."""
    with mp.workprec(PREC_BITS):
        h = mpf(step)
        f_plus = dominant_singularity(k, h)
        f_minus = dominant_singularity(k, -h)
        f_zero = dominant_singularity(k, 0)
        d1 = (f_plus - f_minus) / (2 * h)
        d2 = (f_plus - 2 * f_zero + f_minus) / (h * h)
        return d1, d2


@dataclass(frozen=True)
class LimitConstants:
    """Density constants of the Gaussian limit of the arc count.

    mean and variance of the arc count grow like mu*n and sigma2*n; gamma
    is the exponential growth rate of the structure totals.  The
    subexponential data (polynomial degree 5 and amplitude 10.4724 * 4!)
    is only available for k = 3.
    """

    k: int
    mu: mpf
    sigma2: mpf
    gamma: mpf
    subexp_exponent: Optional[int] = None
    amplitude: Optional[mpf] = None


# Growth-law amplitude for k=3; a fitted constant, carried to the digits
# it is known to.  The polynomial factor is n(n-1)...(n-4).
_K3_AMPLITUDE_BASE = "10.4724"
_K3_SUBEXP_EXPONENT = 5


def limit_constants(k: int) -> LimitConstants:
    """mu, sigma2 and the growth rate, from the closed-form derivatives."""
    _check_k(k)
    with mp.workprec(PREC_BITS):
        rho0, d1, d2 = singularity_derivatives(k)
        mu = -d1 / rho0
        sigma2 = mu * mu - d2 / rho0
        gamma = 1 / rho0
        if k == 3:
            return LimitConstants(
                k=3,
                mu=mu,
                sigma2=sigma2,
                gamma=gamma,
                subexp_exponent=_K3_SUBEXP_EXPONENT,
                amplitude=mpf(_K3_AMPLITUDE_BASE) * 24,
            )
        return LimitConstants(k=2, mu=mu, sigma2=sigma2, gamma=gamma)


def asymptotic_count_k3(n: int) -> tuple[mpf, mpf]:
    """Asymptotic number of structures for k=3:

        amplitude / (n (n-1) (n-2) (n-3) (n-4)) * gamma^n,

    evaluated through logarithms so no intermediate overflows; returns
    (value, natural log of value)."""
    if n < 5:
        raise ValueError("asymptotic formula needs n >= 5")
    with mp.workprec(PREC_BITS):
        gamma = (5 + mp.sqrt(21)) / 2
        log_val = mp.log(mpf(_K3_AMPLITUDE_BASE) * 24)
        for i in range(5):
            log_val -= mp.log(n - i)
        log_val += n * mp.log(gamma)
        return mp.exp(log_val), log_val


def implied_amplitude_k3(n: int) -> mpf:
    """Amplitude the exact total implies at finite n: total * n(n-1)..(n-4)
    * gamma^(-n) / 4!.  Reported alongside the fitted constant so the two
    can be compared."""
    if n < 5:
        raise ValueError("needs n >= 5")
    with mp.workprec(PREC_BITS):
        gamma = (5 + mp.sqrt(21)) / 2
        falling = 1
        for i in range(5):
            falling *= n - i
        log_val = (
            mp.log(as_mpf(structure_total(3, n)))
            + mp.log(mpf(falling))
            - n * mp.log(gamma)
            - mp.log(24)
        )
        return mp.exp(log_val)


@dataclass(frozen=True)
class ArcDistribution:
    """Exact arc-count law P(X_n = h) = by_arcs[h] / total.

    probs are exact rationals summing to exactly 1; mean and variance are
    computed in rational arithmetic first and converted to reals last.
    """

    n: int
    k: int
    probs: tuple[Fraction, ...]
    mean_exact: Fraction
    variance_exact: Fraction
    mean: mpf
    variance: mpf


def distribution(n: int, k: int) -> ArcDistribution:
    """Exact distribution of the arc count on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = count_table(k, n)
    probs = tuple(
        Fraction(table.by_arcs[h], table.total) for h in range(n // 2 + 1)
    )
    assert sum(probs) == 1
    mean = sum((h * p for h, p in enumerate(probs)), Fraction(0))
    second = sum((h * h * p for h, p in enumerate(probs)), Fraction(0))
    variance = second - mean * mean
    with mp.workprec(PREC_BITS):
        return ArcDistribution(
            n=n,
            k=k,
            probs=probs,
            mean_exact=mean,
            variance_exact=variance,
            mean=as_mpf(mean),
            variance=as_mpf(variance),
        )


def ks_distance_row(weights: Sequence, mean, variance) -> mpf:
    """sup over lattice points h of |CDF(h) - Phi((h + 1/2 - mean)/sd)|.

    weights h -> 0..len-1 need not be probabilities; they are normalised
    by their (exact) sum.  The half-step is the usual lattice-to-continuous
    continuity correction.  mean and variance are the comparison Gaussian's,
    already scaled to the row (not densities per step)."""
    total = sum(weights)
    if total == 0:
        raise ValueError("weights sum to zero")
    with mp.workprec(PREC_BITS):
        mean = as_mpf(mean)
        sd = mp.sqrt(as_mpf(variance))
        best = mpf(0)
        cum = 0
        for h, wgt in enumerate(weights):
            cum = cum + wgt
            diff = abs(_ratio(cum, total) - mp.ncdf((h + mpf(1) / 2 - mean) / sd))
            if diff > best:
                best = diff
        return best


def llt_distance_row(weights: Sequence, mean, variance) -> mpf:
    """sup over lattice points h of |sd * P(h) - phi((h - mean)/sd)| where
    phi is the standard normal density.  Same conventions as the CDF
    version; this is the local-limit metric."""
    total = sum(weights)
    if total == 0:
        raise ValueError("weights sum to zero")
    with mp.workprec(PREC_BITS):
        mean = as_mpf(mean)
        sd = mp.sqrt(as_mpf(variance))
        best = mpf(0)
        for h, wgt in enumerate(weights):
            diff = abs(sd * _ratio(wgt, total) - mp.npdf((h - mean) / sd))
            if diff > best:
                best = diff
        return best


def _asymptotic_moments(n: int, k: int) -> tuple[mpf, mpf]:
    c = limit_constants(k)
    with mp.workprec(PREC_BITS):
        return c.mu * n, c.sigma2 * n


def ks_distance(n: int, k: int) -> mpf:
    """Kolmogorov distance of the exact arc-count law from the Gaussian
    with the asymptotic moments mu*n, sigma2*n (the limit constants, not
    the finite-n moments, which converge to them)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    table = count_table(k, n)
    weights = [table.by_arcs[h] for h in range(n // 2 + 1)]
    mean_n, var_n = _asymptotic_moments(n, k)
    return ks_distance_row(weights, mean_n, var_n)


def llt_distance(n: int, k: int) -> mpf:
    """Local-limit distance of the exact arc-count law from the Gaussian
    density, with the asymptotic moments."""
    if n < 2:
        raise ValueError("n must be at least 2")
    table = count_table(k, n)
    weights = [table.by_arcs[h] for h in range(n // 2 + 1)]
    mean_n, var_n = _asymptotic_moments(n, k)
    return llt_distance_row(weights, mean_n, var_n)


def llt_profile(n: int, k: int) -> list[tuple[int, mpf, mpf, mpf]]:
    """Per-lattice-point view of the local-limit comparison: rows
    (h, x, sd * P(X=h), phi(x)) with x = (h - mu n)/sd.  The difference of
    the last two columns peaks near the centre of the distribution."""
    table = count_table(k, n)
    mean_n, var_n = _asymptotic_moments(n, k)
    with mp.workprec(PREC_BITS):
        sd = mp.sqrt(var_n)
        rows = []
        for h in range(n // 2 + 1):
            x = (h - mean_n) / sd
            scaled = sd * _ratio(table.by_arcs[h], table.total)
            rows.append((h, x, scaled, mp.npdf(x)))
        return rows


def binomial_row(n: int) -> list[int]:
    """Binomial counts, the textbook lattice law satisfying both limit
    theorems with mean n/2 and variance n/4: the positive control.
    Built by the multiplicative recurrence, one pass even at n = 10^4."""
    row = [1]
    c = 1
    for h in range(n):
        c = c * (n - h) // (h + 1)
        row.append(c)
    return row


def sign_flip_row(n: int) -> list[int]:
    """Binomial counts modulated by an alternating sign,
    (1 + 2 (-1)^h) * C(n, h): flips between 3*C(n,h) and -C(n,h).

    The row still sums to 2^n and still obeys a central limit theorem with
    mean n/2 and variance n/4, but the rescaled point values oscillate, so
    no local limit theorem holds: the negative control.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return [c * (1 + 2 * (-1) ** h) for h, c in enumerate(binomial_row(n))]


@dataclass(frozen=True)
class DistanceReport:
    """Exact moments of the arc-count law next to both limit metrics, so
    the gap between finite-n and asymptotic normalisation stays visible."""

    n: int
    k: int
    mean: mpf
    variance: mpf
    ks_distance: mpf
    llt_distance: mpf


def distance_report(n: int, k: int) -> DistanceReport:
    d = distribution(n, k)
    return DistanceReport(
        n=n,
        k=k,
        mean=d.mean,
        variance=d.variance,
        ks_distance=ks_distance(n, k),
        llt_distance=llt_distance(n, k),
    )
