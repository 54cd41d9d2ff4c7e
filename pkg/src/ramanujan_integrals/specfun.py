"""Special-function building blocks, evaluated without cancellation or overflow.

Everything here is elementary but easy to get wrong in binary64:

* ``gamma_half_ratio`` forms Gamma(m+1)/Gamma(m+3/2) by a multiplicative
  recurrence.  Gamma itself overflows binary64 already at argument 172, while
  the ratio decays slowly like m**-0.5 and is representable for any practical m.
* ``gauss_f`` sums the terminating Gauss series 2F1(-n, 1; 3/2; 2) in exact
  rational arithmetic.  At argument 2 the series alternates with terms that
  grow like 2**n, so a floating-point summation loses all significant digits
  long before n = 50; the exact sum stays O(1) and is rounded once at the end.
* ``theta_psi`` truncates the theta sum against a rigorous geometric tail
  majorant instead of an ad-hoc term count.

Exact rationals are ``fractions.Fraction`` values; the stdlib type already
maintains a positive denominator and a fully reduced numerator/denominator
pair after every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExactRational",
    "ThetaSum",
    "gamma_half_ratio",
    "kummer_terminating",
    "gauss_f",
    "theta_psi",
    "lambda_factor",
]

ExactRational = Fraction

_SQRT_PI = math.sqrt(math.pi)

# Relative truncation level used when a theta sum must carry full binary64
# precision (its absolute size is not known in advance by the caller).
_THETA_REL = 1e-16


def gamma_half_ratio(m: int) -> float:
    """Return R(m) = Gamma(m+1)/Gamma(m+3/2).

    Computed by the recurrence R(m) = m*R(m-1)/(m+1/2) from R(0) = 2/sqrt(pi),
    which keeps full relative precision and cannot overflow: R is strictly
    decreasing, with R(m) ~ m**-0.5 for large m.
    """
    if m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m}")
    r = 2.0 / _SQRT_PI
    for i in range(1, m + 1):
        r = (i * r) / (i + 0.5)
    return r


def kummer_terminating(k: int, z: float) -> float:
    """Return 1F1(-k; 3/2; z), a terminating Kummer sum of k+1 terms.

    Terms follow the ratio recurrence
    term_{r+1} = term_r * (r-k) * z / ((r+3/2)(r+1)).
    """
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    total = term = 1.0
    for r in range(k):
        term *= (r - k) * z / ((r + 1.5) * (r + 1.0))
        total += term
    return total


def gauss_f(n: int) -> Fraction:
    """Return F_n = 2F1(-n, 1; 3/2; 2) as an exact rational.

    The term ratio is term_r / term_{r-1} = 4*(r-1-n) / (2r+1); summing in
    ``Fraction`` arithmetic keeps the alternating, exponentially growing
    terms exact.  Convert with ``float()`` only once the sum is complete.
    """
    if n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}")
    total = term = Fraction(1)
    for r in range(1, n + 1):
        term *= Fraction(4 * (r - 1 - n), 2 * r + 1)
        total += term
    return total


def theta_psi(tau: float, tol: float) -> float:
    """Return Psi(tau) = sum_{n>=1} exp(-pi n^2 tau) to absolute accuracy tol.

    The sum stops after the first term smaller than tol*(1 - exp(-pi*tau)):
    the omitted tail obeys

        sum_{n>N} exp(-pi n^2 tau) < exp(-pi (N+1)^2 tau) / (1 - exp(-pi*tau)),

    so the truncation error is below tol.  A term that underflows to zero
    ends the sum regardless of tol.
    """
    if tau <= 0.0:
        raise ValueError(f"tau must be positive, got {tau}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    q = math.exp(-math.pi * tau)
    if q == 0.0:
        # pi*tau > 745: even the leading term underflows.
        return 0.0
    threshold = tol * (1.0 - q)
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * tau)
        total += term
        if term < threshold or term == 0.0:
            return total
        n += 1


def _theta_rel(tau: float) -> float:
    """Psi(tau) at full relative precision.

    Scales the truncation tolerance to the leading term exp(-pi*tau), which
    dominates the sum for every tau > 0.  Returns 0.0 once that term
    underflows (tau > 237); past that point the sum is zero in binary64.
    """
    q = math.exp(-math.pi * tau)
    if q == 0.0:
        return 0.0
    tol = _THETA_REL * q
    if tol == 0.0:
        # q is denormal (tau > 213): the n=2 term is ~exp(-3*pi*tau) times
        # smaller, so the sum equals its first term to machine precision.
        return q
    return theta_psi(tau, tol)


def lambda_factor(a: float) -> float:
    """Elementary majorant factor with Psi(a) < lambda_factor(a) * exp(-pi*a).

    lambda(a) = 1 + exp(-3*pi*a) + exp(-2*pi*a) / (1 - exp(-pi*a)); it exceeds
    1 for every a > 0 and tends to 1 as a grows.
    """
    if a <= 0.0:
        raise ValueError(f"a must be positive, got {a}")
    e1 = math.exp(-math.pi * a)
    return 1.0 + math.exp(-3.0 * math.pi * a) + math.exp(-2.0 * math.pi * a) / (1.0 - e1)


@dataclass(frozen=True)
class ThetaSum:
    """One evaluated theta sum: argument, truncation tolerance and value."""

    tau: float
    tol: float
    value: float

    def __post_init__(self) -> None:
        if self.tau <= 0.0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if self.tol <= 0.0:
            raise ValueError(f"tol must be positive, got {self.tol}")

    @classmethod
    def evaluate(cls, tau: float, tol: float) -> "ThetaSum":
        return cls(tau, tol, theta_psi(tau, tol))

    def geometric_majorant(self) -> float:
        """Strict upper bound sum_{n>=1} exp(-pi n tau) on the value."""
        q = math.exp(-math.pi * self.tau)
        return q / (1.0 - q)
