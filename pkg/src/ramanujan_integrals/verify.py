"""Reference-table reproduction and the numeric identity suite.

The suite turns the analytic statements behind the library into residual
checks: the theta-sum transformation, the finite check integrals against
their closed forms, closure of J = sigma*T + eps, remainder signs, bound
dominance, the modular relations between reciprocal arguments, and the
accuracy profile of the quartic-root approximation.  A failing check —
including a quadrature that cannot reach its tolerance — is recorded and
never aborts the run.

Everything here is pure computation; reports carry no timestamps and have a
deterministic check order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .approximants import bound_even, bound_odd, drz_approx, sigma, t_even, t_odd
from .quadrature import (
    AccuracyError,
    IntegralParams,
    QuadResult,
    epsilon_integral,
    finite_check_integrals,
    j_integral,
)
from .specfun import gamma_half_ratio, gauss_f, theta_psi

__all__ = [
    "TableRow",
    "CheckResult",
    "SuiteReport",
    "TolProfile",
    "ALL_CHECK_GROUPS",
    "TABLE_GRIDS",
    "script_j",
    "reproduce_table",
    "check_modular",
    "run_suite",
]

# (even-index?, k values, a values) for reference tables 1..3.
TABLE_GRIDS: dict[int, tuple[bool, tuple[int, ...], tuple[float, ...]]] = {
    1: (True, (1, 2, 3, 5, 10, 20, 30, 50), (1.0,)),
    2: (True, (1, 2, 3, 5, 10, 20, 30, 50), (2.0, 0.5)),
    3: (False, (0, 1, 2, 5, 10, 20, 30, 40), (2.0, 0.5)),
}

ALL_CHECK_GROUPS = ("poisson", "finite", "consistency", "sign", "dominance", "modular", "drz")

_POISSON_TAUS = (0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0)
_THETA_TOL = 1e-16
# remainder tolerance as a fraction of its bound; keeps eps accurate in the
# relative sense even at 1e-24
_EPS_REL_OF_BOUND = 1e-6


@dataclass(frozen=True)
class TableRow:
    """One reference-table row: index k, scale a, |remainder| and its bound."""

    k: int
    a: float
    script_j: float
    bound: float

    def __post_init__(self) -> None:
        if not self.script_j >= 0.0:
            raise ValueError("script_j must be non-negative")
        if not self.bound > 0.0:
            raise ValueError("bound must be positive")
        if self.script_j > self.bound:
            raise ValueError(
                f"remainder {self.script_j} exceeds its bound {self.bound} (k={self.k}, a={self.a})"
            )


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class SuiteReport:
    checks: tuple[CheckResult, ...]
    overall: bool

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in self.checks
            ],
        }


@dataclass(frozen=True)
class TolProfile:
    """Tolerances for the identity suite, plus an optional check selection.

    ``checks=None`` runs every group; an empty tuple runs nothing and passes
    vacuously.
    """

    quad_tol: float = 1e-13
    poisson_tol: float = 1e-13
    finite_rel_tol: float = 1e-12
    consistency_tol: float = 1e-12
    consistency_window: float = 1e-12
    modular_tol: float = 1e-10
    drz_margin_points: float = 0.3
    checks: tuple[str, ...] | None = None

    def selected(self) -> tuple[str, ...]:
        if self.checks is None:
            return ALL_CHECK_GROUPS
        unknown = set(self.checks) - set(ALL_CHECK_GROUPS)
        if unknown:
            raise ValueError(f"unknown check groups: {sorted(unknown)}")
        return self.checks


def _bound_for(n: int, a: float) -> float:
    return bound_even(n // 2, a) if n % 2 == 0 else bound_odd((n - 1) // 2, a)


def _t_for(n: int, a: float) -> float:
    return t_even(n // 2, a) if n % 2 == 0 else t_odd((n - 1) // 2, a)


def _epsilon_precise(n: int, a: float, bound: float | None = None) -> QuadResult:
    """Remainder with tolerance scaled to its own bound (cheap to compute),
    giving ~6 significant digits regardless of magnitude."""
    b = _bound_for(n, a) if bound is None else bound
    return epsilon_integral(IntegralParams(n, a, tol=_EPS_REL_OF_BOUND * b))


def script_j(n: int, a: float, tol: float | None = None) -> float:
    """|eps_n(a)| as tabulated; magnitudes sidestep the sign convention of the
    odd-index rows (the remainder itself is negative for odd n, a > 1)."""
    if tol is None:
        return abs(_epsilon_precise(n, a).value)
    return abs(epsilon_integral(IntegralParams(n, a, tol=tol)).value)


def reproduce_table(table_id: int) -> list[TableRow]:
    """Recompute a reference table on its exact (k, a) grid.

    Each row pairs the remainder magnitude with its bound; the bound is
    evaluated first and sets the remainder's quadrature tolerance.
    """
    if table_id not in TABLE_GRIDS:
        raise ValueError(f"table id must be 1, 2 or 3, got {table_id}")
    even, ks, a_values = TABLE_GRIDS[table_id]
    rows = []
    for a in a_values:
        for k in ks:
            n = 2 * k if even else 2 * k + 1
            b = _bound_for(n, a)
            sj = abs(_epsilon_precise(n, a, bound=b).value)
            rows.append(TableRow(k=k, a=a, script_j=sj, bound=b))
    return rows


def check_modular(parity: str, k: int, a: float, tol: float = 1e-13) -> float:
    """Residual of the reciprocal-argument relation at alpha = pi*a, beta = pi/a.

    Even:  alpha^(-1/4) F + 4 alpha^(3/4) J(alpha)  equals the same at beta.
    Odd:   the beta side carries an overall minus sign.
    Both J values come from independent quadratures; returns |lhs - rhs|.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    n = 2 * k if parity == "even" else 2 * k + 1
    f = float(gauss_f(n))
    alpha = math.pi * a
    beta = math.pi / a
    lhs = alpha ** -0.25 * f + 4.0 * alpha ** 0.75 * j_integral(IntegralParams(n, a, tol)).value
    rhs = beta ** -0.25 * f + 4.0 * beta ** 0.75 * j_integral(IntegralParams(n, 1.0 / a, tol)).value
    if parity == "odd":
        rhs = -rhs
    return abs(lhs - rhs)


def _check(name: str, tolerance: float, residual_fn) -> CheckResult:
    """Build one check; a quadrature accuracy failure scores as infinite residual."""
    try:
        residual = residual_fn()
    except AccuracyError:
        return CheckResult(name, math.inf, tolerance, False)
    return CheckResult(name, residual, tolerance, residual < tolerance)


def _checks_poisson(profile: TolProfile) -> list[CheckResult]:
    out = []
    for tau in _POISSON_TAUS:

        def residual(tau=tau):
            lhs = theta_psi(tau, _THETA_TOL) + 0.5 * (1.0 - tau ** -0.5)
            rhs = tau ** -0.5 * theta_psi(1.0 / tau, _THETA_TOL)
            return abs(lhs - rhs)

        out.append(_check(f"poisson/tau={tau:g}", profile.poisson_tol, residual))
    return out


def _checks_finite(profile: TolProfile) -> list[CheckResult]:
    out = []
    for parity in ("even", "odd"):
        for k in (0, 1, 2, 5, 10, 20, 30):

            def residual(parity=parity, k=k):
                first, second = finite_check_integrals(k, parity)
                m = 2 * k + (1 if parity == "odd" else 0)
                closed_first = math.sqrt(math.pi / 2.0) * gamma_half_ratio(m)
                f2 = 2.0 * float(gauss_f(m))
                closed_second = f2 - closed_first if parity == "even" else f2 + closed_first
                return max(
                    abs(first - closed_first) / closed_first,
                    abs(second - closed_second) / abs(closed_second),
                )

            out.append(_check(f"finite/{parity}/k={k}", profile.finite_rel_tol, residual))
    return out


def _checks_consistency(profile: TolProfile) -> list[CheckResult]:
    out = []
    for a in (0.5, 1.0, 2.0):
        for n in (1, 2, 3, 4, 5, 6, 7):
            name = f"consistency/n={n}/a={a:g}"
            try:
                eps = _epsilon_precise(n, a).value
            except AccuracyError:
                out.append(CheckResult(name, math.inf, profile.consistency_tol, False))
                continue
            if abs(eps) <= profile.consistency_window:
                continue  # eps below the cancellation floor of J - sigma*T

            def residual(n=n, a=a, eps=eps):
                j = j_integral(IntegralParams(n, a, profile.quad_tol)).value
                return abs(j - sigma(n) * _t_for(n, a) - eps)

            out.append(_check(name, profile.consistency_tol, residual))
    return out


def _checks_sign(profile: TolProfile) -> list[CheckResult]:
    out = []
    for k in (1, 2, 3):
        for a in (0.5, 1.0, 2.0):
            out.append(
                _check(
                    f"sign/even/k={k}/a={a:g}",
                    0.0,
                    lambda k=k, a=a: -_epsilon_precise(2 * k, a).value,
                )
            )
    for k in (0, 1):
        for a in (0.25, 0.5, 0.9, 1.1, 2.0, 4.0):
            # sign(eps_{2k+1}(a)) must equal sign(1 - a)
            out.append(
                _check(
                    f"sign/odd/k={k}/a={a:g}",
                    0.0,
                    lambda k=k, a=a: -math.copysign(1.0, 1.0 - a)
                    * _epsilon_precise(2 * k + 1, a).value,
                )
            )
    return out


def _checks_dominance(profile: TolProfile) -> list[CheckResult]:
    out = []
    for n in (*range(1, 11), 20, 41):
        for a in (0.5, 1.0, 2.0):

            def residual(n=n, a=a):
                b = _bound_for(n, a)
                return abs(_epsilon_precise(n, a, bound=b).value) - b

            out.append(_check(f"dominance/n={n}/a={a:g}", 0.0, residual))
    return out


def _checks_modular(profile: TolProfile) -> list[CheckResult]:
    out = []
    for parity in ("even", "odd"):
        for k in (0, 1, 2):
            for a in (0.5, 2.0):
                out.append(
                    _check(
                        f"modular/{parity}/k={k}/a={a:g}",
                        profile.modular_tol,
                        lambda parity=parity, k=k, a=a: check_modular(
                            parity, k, a, profile.quad_tol
                        ),
                    )
                )
    return out


def _checks_drz(profile: TolProfile) -> list[CheckResult]:
    reference = {5: 8.8, 10: 19.2}
    out = []
    errors: dict[int, float] = {}
    for k in (5, 10):
        name = f"drz/relative-error/k={k}"
        try:
            j = j_integral(IntegralParams(2 * k, 1.0, profile.quad_tol)).value
            errors[k] = abs(drz_approx(k, 1.0) - j) / abs(j) * 100.0
        except AccuracyError:
            out.append(CheckResult(name, math.inf, profile.drz_margin_points, False))
            continue
        residual = abs(errors[k] - reference[k])
        out.append(
            CheckResult(name, residual, profile.drz_margin_points, residual < profile.drz_margin_points)
        )
    if len(errors) == 2:
        growth = errors[10] - errors[5]
        out.append(CheckResult("drz/error-growth", -growth, 0.0, growth > 0.0))
    else:
        out.append(CheckResult("drz/error-growth", math.inf, 0.0, False))
    return out


_GROUP_RUNNERS = {
    "poisson": _checks_poisson,
    "finite": _checks_finite,
    "consistency": _checks_consistency,
    "sign": _checks_sign,
    "dominance": _checks_dominance,
    "modular": _checks_modular,
    "drz": _checks_drz,
}


def run_suite(profile: TolProfile | None = None) -> SuiteReport:
    """Run the identity suite under the given tolerance profile.

    The report's overall flag is the conjunction of all per-check flags
    (vacuously true for an empty selection).
    """
    profile = profile or TolProfile()
    results: list[CheckResult] = []
    for group in profile.selected():
        results.extend(_GROUP_RUNNERS[group](profile))
    return SuiteReport(tuple(results), all(c.passed for c in results))
