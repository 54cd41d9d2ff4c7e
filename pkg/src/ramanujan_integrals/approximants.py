"""Closed-form approximants T_n(a), remainder bounds B_n(a), the large-index
estimate, and the quartic-root approximations to J.

Sign convention: J_n(a) = sigma * T_n(a) + eps_n(a) with sigma = +1 for even n
and sigma = -1 for odd n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import IntegralParams, QuadResult, j_integral, epsilon_integral, u_scaled
from .specfun import gamma_half_ratio, gauss_f, lambda_factor

__all__ = [
    "ApproxReport",
    "t_even",
    "t_odd",
    "bound_even",
    "bound_odd",
    "bound_asymptotic",
    "drz_approx",
    "drz_small_a",
    "drz_large_a",
    "ramanujan_i",
    "ramanujan_i_approx",
    "approx_report",
    "sigma",
]

_SQRT_HALF_PI = math.sqrt(math.pi / 2.0)
_BOUND_COEF = 1.0 / (4.0 * math.sqrt(2.0) * math.pi)


def sigma(n: int) -> int:
    """Sign with which T_n enters J_n = sigma*T_n + eps_n."""
    return -1 if n % 2 else 1


def _check_a(a: float) -> None:
    if not (a > 0.0 and math.isfinite(a)):
        raise ValueError(f"a must be positive and finite, got {a}")


def t_even(k: int, a: float) -> float:
    """T_2k(a) = 1/(4 pi a) * ((1+sqrt(a))/2 * sqrt(pi/2) * R(2k) - F_2k)
    with R(m) = Gamma(m+1)/Gamma(m+3/2) and F_n = 2F1(-n,1;3/2;2).

    O(1/a) as a -> 0 and O(a**-0.5) as a -> infinity, so it approximates
    J_2k(a) well only for a = O(1).
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_a(a)
    ratio_term = 0.5 * (1.0 + math.sqrt(a)) * _SQRT_HALF_PI * gamma_half_ratio(2 * k)
    return (ratio_term - float(gauss_f(2 * k))) / (4.0 * math.pi * a)


def t_odd(k: int, a: float) -> float:
    """T_{2k+1}(a) = 1/(4 pi a) * ((1-sqrt(a))/2 * sqrt(pi/2) * R(2k+1) + F_{2k+1}).

    At a = 1 the gamma-ratio term vanishes and T_{2k+1}(1) = F_{2k+1}/(4 pi);
    note J = -T + eps for odd index.
    """
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    _check_a(a)
    ratio_term = 0.5 * (1.0 - math.sqrt(a)) * _SQRT_HALF_PI * gamma_half_ratio(2 * k + 1)
    return (ratio_term + float(gauss_f(2 * k + 1))) / (4.0 * math.pi * a)


def _majorant_energy(x: float, n: int) -> float:
    """E_n(x) with the theta sum replaced by its elementary majorant:
    x^(1/4) * lambda(x) * exp(-pi*x) * G_n(2*pi*x)."""
    return x ** 0.25 * lambda_factor(x) * math.exp(-math.pi * x) * u_scaled(n, 2.0 * math.pi * x)


def _bound(n: int, a: float) -> float:
    # G_n(2*pi*x) = n! U(n+1, 1/2, 2*pi*x) is evaluated as one integral; the
    # explicit factorial would overflow binary64 from n = 171 on.
    if a == 1.0:
        e = _majorant_energy(1.0, n)
        pair = e + e
    else:
        pair = _majorant_energy(a, n) + _majorant_energy(1.0 / a, n)
    return a ** -0.75 * _BOUND_COEF * pair


def bound_even(k: int, a: float) -> float:
    """Upper bound B_2k(a) on the remainder eps_2k(a):

        B_2k(a) = a^(-3/4)/(4 sqrt(2) pi) * (E_2k(a) + E_2k(1/a)),
        E_2k(x) = x^(1/4) * lambda(x) * exp(-pi*x) * G_2k(2*pi*x).

    The theta sum Psi(x) is majorised by lambda(x)*exp(-pi*x), which keeps the
    bound rigorous (Psi(x) is strictly smaller) and reproduces the tabulated
    reference values.  By formula symmetry B_2k(1/a) = a^(3/2) * B_2k(a).
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_a(a)
    return _bound(2 * k, a)


def bound_odd(k: int, a: float) -> float:
    """Upper bound B_{2k+1}(a) on |eps_{2k+1}(a)|; same shape as bound_even
    with G_{2k+1}.  Not sharp near a = 1, where eps_{2k+1} itself vanishes."""
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    _check_a(a)
    return _bound(2 * k + 1, a)


def bound_asymptotic(k: int, a: float) -> float:
    """Large-k estimate of B_2k(a):

        a^(-3/4) k^(-1/2) / (8 sqrt(pi)) *
            (a^(1/4) lambda(a) e^(-4 sqrt(pi a k))
             + a^(-1/4) lambda(1/a) e^(-4 sqrt(pi k / a)))

    Valid for pi/(2k) << a << 2k/pi; the window is documented, not enforced.
    At a = 1 this reduces to lambda(1)/(4 sqrt(pi)) k^(-1/2) e^(-4 sqrt(pi k)).
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_a(a)
    front = a ** -0.75 / (8.0 * math.sqrt(math.pi) * math.sqrt(k))
    term_a = a ** 0.25 * lambda_factor(a) * math.exp(-4.0 * math.sqrt(math.pi * a * k))
    term_inv = a ** -0.25 * lambda_factor(1.0 / a) * math.exp(-4.0 * math.sqrt(math.pi * k / a))
    return front * (term_a + term_inv)


def drz_approx(k: int, a: float) -> float:
    """Quartic-root approximation to J_2k(a):

        J_2k(a) ~ -F/(4 pi a) * (1 - (1 + a^2 + 2 pi a/(3F))^(1/4)),
        F = 2F1(-2k, 1; 3/2; 2).

    Accurate for small and large a with k fixed; for a = O(1) its relative
    error grows with k.  Even index only.
    """
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    _check_a(a)
    f = float(gauss_f(2 * k))
    radicand = 1.0 + a * a + 2.0 * math.pi * a / (3.0 * f)
    if radicand < 0.0:
        raise ValueError(f"negative radicand {radicand} (F_2k = {f})")
    return -f / (4.0 * math.pi * a) * (1.0 - radicand ** 0.25)


def drz_small_a(k: int, a: float) -> float:
    """Leading small-a behaviour of drz_approx: 1/24 + a*(F/(16 pi) - pi/(96 F)).

    A polynomial in a, so a = 0 is allowed and gives the limiting value 1/24.
    """
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    if not (a >= 0.0 and math.isfinite(a)):
        raise ValueError(f"a must be non-negative and finite, got {a}")
    f = float(gauss_f(2 * k))
    return 1.0 / 24.0 + a * (f / (16.0 * math.pi) - math.pi / (96.0 * f))


def drz_large_a(k: int, a: float) -> float:
    """Leading large-a behaviour of drz_approx:
    F/(4 pi sqrt(a)) * (1 - 1/sqrt(a) + pi/(6 a F))."""
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    _check_a(a)
    f = float(gauss_f(2 * k))
    sq = math.sqrt(a)
    return f / (4.0 * math.pi * sq) * (1.0 - 1.0 / sq + math.pi / (6.0 * a * f))


def ramanujan_i(alpha: float, tol: float = 1e-13) -> float:
    """I(alpha) = alpha^(-1/4) * (1 + 4*alpha*J_0(alpha/pi)) by quadrature.

    Satisfies the functional equation I(alpha) = I(beta) with alpha*beta = pi^2.
    """
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha must be positive and finite, got {alpha}")
    j0 = j_integral(IntegralParams(0, alpha / math.pi, tol))
    return alpha ** -0.25 * (1.0 + 4.0 * alpha * j0.value)


def ramanujan_i_approx(alpha: float) -> float:
    """Quartic-root approximation (1/alpha + 1/beta + 2/3)^(1/4), beta = pi^2/alpha.

    beta is always derived from alpha at the use site; the modular constraint
    alpha*beta = pi^2 has a single source of truth.
    """
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha must be positive and finite, got {alpha}")
    return (1.0 / alpha + alpha / math.pi ** 2 + 2.0 / 3.0) ** 0.25


@dataclass(frozen=True)
class ApproxReport:
    """One verification row: quadrature value, approximant, remainder, bound,
    large-k estimate and the closure residual J - sigma*T - eps."""

    params: IntegralParams
    j_quad: float
    t_value: float
    epsilon: float
    bound: float
    estimate: float
    residual: float


def approx_report(p: IntegralParams) -> ApproxReport:
    """Evaluate every quantity of the decomposition J_n = sigma*T_n + eps_n.

    Requires n >= 1 (the even approximant starts at index 2).  The remainder
    is integrated with a bound-scaled tolerance so that it keeps relative
    accuracy even when exponentially small.  ``estimate`` is NaN for n < 2
    where the large-k formula has no meaning.
    """
    n, a = p.n, p.a
    if n < 1:
        raise ValueError("approx_report requires n >= 1")
    k = n // 2 if n % 2 == 0 else (n - 1) // 2
    if n % 2 == 0:
        t = t_even(k, a)
        b = bound_even(k, a)
    else:
        t = t_odd(k, a)
        b = bound_odd(k, a)
    eps = epsilon_integral(IntegralParams(n, a, min(p.tol, 1e-6 * b)))
    j = j_integral(p)
    estimate = bound_asymptotic(k, a) if k >= 1 else math.nan
    residual = j.value - sigma(n) * t - eps.value
    return ApproxReport(p, j.value, t, eps.value, b, estimate, residual)
