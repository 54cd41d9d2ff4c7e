"""Acceptance suite: every exit criterion at its stated tolerance.

Each criterion prints one pass/fail line (run with ``pytest -s`` to see them
inline).  Criterion values marked as reference-table data compare against the
published 4-significant-digit values within plus or minus two units of the
fourth significant digit.

Two comparisons are expected to fail and are left failing on purpose:

* criterion 2 contains one bound cell (table 3, a=0.5, k=2) whose printed
  value 1.106e-5 is inconsistent with the bound formula and with every
  neighbouring row (recomputation gives 1.0156e-5; the printed figure looks
  like a digit transposition of 1.016e-5);
* the order-of-magnitude note on the large-k estimate asks for agreement
  within a factor of 2 down to k=10, but the true estimate/bound ratio at
  k=10 is 2.09 (it enters the factor-2 band only from k=12 on).
"""

import math
import time
from fractions import Fraction

import pytest

import ramanujan_integrals as ri
from reference_tables import TABLE1, TABLE2, TABLE3, fourth_digit_tol


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    line = f"acceptance {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)


@pytest.fixture(scope="module")
def table1_rows():
    start = time.perf_counter()
    rows = ri.reproduce_table(1)
    return rows, time.perf_counter() - start


@pytest.fixture(scope="module")
def tables23_rows():
    start = time.perf_counter()
    rows = {2: ri.reproduce_table(2), 3: ri.reproduce_table(3)}
    return rows, time.perf_counter() - start


def _compare_rows(rows, reference):
    """Yield mismatch descriptions for computed rows vs printed (k, J, B)."""
    by_key = {(row.k, row.a): row for row in rows}
    for a, block in reference.items():
        for k, printed_j, printed_b in block:
            row = by_key[(k, a)]
            if abs(row.script_j - printed_j) > fourth_digit_tol(printed_j):
                yield f"k={k} a={a}: remainder {row.script_j:.4e} vs printed {printed_j:.4e}"
            if abs(row.bound - printed_b) > fourth_digit_tol(printed_b):
                yield f"k={k} a={a}: bound {row.bound:.4e} vs printed {printed_b:.4e}"


def test_criterion_01_table1(table1_rows):
    rows, elapsed = table1_rows
    mismatches = list(_compare_rows(rows, TABLE1))
    ok = not mismatches and elapsed < 60.0
    _report("crit-01 table-1 reproduction", ok, f"{elapsed:.2f}s")
    assert elapsed < 60.0
    assert not mismatches, mismatches


def test_criterion_02_tables_2_and_3(tables23_rows):
    rows, elapsed = tables23_rows
    mismatches = list(_compare_rows(rows[2], TABLE2)) + list(_compare_rows(rows[3], TABLE3))
    ok = not mismatches and elapsed < 120.0
    _report("crit-02 tables-2-3 reproduction", ok, f"{elapsed:.2f}s; {len(mismatches)} mismatch(es)")
    assert elapsed < 120.0
    # One bound cell of the printed reference data (table 3, a=0.5, k=2:
    # 1.106e-5) is not reproducible from the bound formula; recomputation
    # with two independent implementations gives 1.0156e-5, and the
    # neighbouring rows' bound/remainder ratios (~1.064 throughout, 1.158
    # for this cell alone) point to a digit transposition in the source.
    assert not mismatches, mismatches


def test_criterion_03_exact_odd_evaluation():
    failures = []
    for k in (0, 1, 2, 5):
        n = 2 * k + 1
        j = ri.j_integral(ri.IntegralParams(n, 1.0)).value
        exact = -float(ri.gauss_f(n)) / (4.0 * math.pi)
        if abs(j - exact) > 1e-11:
            failures.append(f"k={k}: |{j} - {exact}| > 1e-11")
        if ri.epsilon_integral(ri.IntegralParams(n, 1.0)).value != 0.0:
            failures.append(f"k={k}: odd remainder at a=1 not exactly zero")
    _report("crit-03 exact odd evaluation", not failures)
    assert not failures, failures


def test_criterion_04_decomposition_consistency():
    failures = []
    window = 0
    for a in (0.5, 1.0, 2.0):
        for n in range(1, 11):
            b = ri.bound_even(n // 2, a) if n % 2 == 0 else ri.bound_odd((n - 1) // 2, a)
            eps = ri.epsilon_integral(ri.IntegralParams(n, a, tol=1e-6 * b)).value
            if abs(eps) <= 1e-12:
                continue
            window += 1
            t = ri.t_even(n // 2, a) if n % 2 == 0 else ri.t_odd((n - 1) // 2, a)
            j = ri.j_integral(ri.IntegralParams(n, a)).value
            residual = abs(j - ri.sigma(n) * t - eps)
            if residual >= 1e-12:
                failures.append(f"n={n} a={a}: residual {residual:.3e}")
    _report("crit-04 decomposition consistency", not failures, f"{window} cases in window")
    assert window >= 20
    assert not failures, failures


def test_criterion_05_bound_dominance():
    failures = []
    count = 0
    for n in (*range(1, 11), 20, 41):
        for a in (0.5, 1.0, 2.0):
            count += 1
            b = ri.bound_even(n // 2, a) if n % 2 == 0 else ri.bound_odd((n - 1) // 2, a)
            eps = abs(ri.epsilon_integral(ri.IntegralParams(n, a, tol=1e-6 * b)).value)
            if not eps < b:
                failures.append(f"n={n} a={a}: |eps|={eps:.4e} !< B={b:.4e}")
    _report("crit-05 bound dominance", not failures, f"{count} assertions")
    assert count == 36
    assert not failures, failures


def test_criterion_06_poisson_identity():
    failures = []
    for tau in (0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0):
        lhs = ri.theta_psi(tau, 1e-16) + 0.5 * (1.0 - tau ** -0.5)
        rhs = tau ** -0.5 * ri.theta_psi(1.0 / tau, 1e-16)
        if abs(lhs - rhs) >= 1e-13:
            failures.append(f"tau={tau}: residual {abs(lhs - rhs):.3e}")
    _report("crit-06 poisson identity", not failures)
    assert not failures, failures


def test_criterion_07_modular_relations():
    failures = []
    for parity in ("even", "odd"):
        for k in (0, 1, 2):
            for a in (0.5, 2.0):
                residual = ri.check_modular(parity, k, a)
                if residual >= 1e-10:
                    failures.append(f"{parity} k={k} a={a}: residual {residual:.3e}")
    _report("crit-07 modular relations", not failures)
    assert not failures, failures


def test_criterion_08_quartic_root_error_profile():
    j10 = ri.j_integral(ri.IntegralParams(10, 1.0)).value
    j20 = ri.j_integral(ri.IntegralParams(20, 1.0)).value
    err5 = abs(ri.drz_approx(5, 1.0) - j10) / abs(j10) * 100.0
    err10 = abs(ri.drz_approx(10, 1.0) - j20) / abs(j20) * 100.0
    ok = abs(err5 - 8.8) < 0.3 and abs(err10 - 19.2) < 0.3 and err10 > err5
    _report("crit-08 quartic-root error profile", ok, f"{err5:.2f}%, {err10:.2f}%")
    assert abs(err5 - 8.8) < 0.3
    assert abs(err10 - 19.2) < 0.3
    assert err10 > err5


def test_criterion_09_small_scale_limit():
    failures = []
    for n in (2, 3):
        j = ri.j_integral(ri.IntegralParams(n, 1e-4)).value
        if abs(j - 1.0 / 24.0) >= 5e-4:
            failures.append(f"n={n}: J = {j}")
    _report("crit-09 small-scale limit", not failures)
    assert not failures, failures


def _gauss_f_recurrence(n: int) -> Fraction:
    previous, current = Fraction(1), Fraction(-1, 3)
    if n == 0:
        return previous
    for m in range(1, n):
        previous, current = current, (2 * m * previous - current) / (2 * m + 3)
    return current


def test_criterion_10_property_suite():
    failures = []

    for n in range(201):
        if ri.gauss_f(n) != _gauss_f_recurrence(n):
            failures.append(f"exact rational vs recurrence differ at n={n}")

    z = 2.0 * math.pi
    g_by_n = [ri.u_scaled(n, z) for n in (0, 1, 2, 5, 9)]
    if not all(b < a for a, b in zip(g_by_n, g_by_n[1:])):
        failures.append("scaled-U not decreasing in the index")
    for n in (0, 2):
        g_by_z = [ri.u_scaled(n, z) for z in (1.0, 2.0, 6.0, 20.0)]
        if not all(b < a for a, b in zip(g_by_z, g_by_z[1:])):
            failures.append(f"scaled-U not decreasing in the argument at n={n}")

    for k, a in ((1, 2.0), (5, 4.0)):
        left = ri.bound_even(k, 1.0 / a)
        right = a ** 1.5 * ri.bound_even(k, a)
        if abs(left - right) / right >= 1e-13:
            failures.append(f"even bound symmetry k={k} a={a}")
        left = ri.bound_odd(k, 1.0 / a)
        right = a ** 1.5 * ri.bound_odd(k, a)
        if abs(left - right) / right >= 1e-13:
            failures.append(f"odd bound symmetry k={k} a={a}")

    for a in (0.25, 0.5, 0.9, 1.1, 2.0, 4.0):
        for k in (0, 1):
            eps = ri.epsilon_integral(ri.IntegralParams(2 * k + 1, a, tol=1e-15)).value
            if math.copysign(1.0, eps) != math.copysign(1.0, 1.0 - a):
                failures.append(f"odd remainder sign at k={k} a={a}")

    _report("crit-10 property suite", not failures)
    assert not failures, failures


def test_note_large_k_estimate_order_of_magnitude():
    ratios = {k: ri.bound_asymptotic(k, 1.0) / ri.bound_even(k, 1.0) for k in (10, 20, 30, 50)}
    gaps = [abs(math.log(r)) for r in ratios.values()]
    monotone = all(b < a for a, b in zip(gaps, gaps[1:]))
    outside = {k: r for k, r in ratios.items() if abs(math.log(r)) >= math.log(2.0)}
    ok = monotone and not outside
    _report(
        "note large-k estimate",
        ok,
        "ratios " + ", ".join(f"k={k}: {r:.3f}" for k, r in ratios.items()),
    )
    assert monotone
    # The factor-2 band is not attainable at k=10: the estimate/bound ratio
    # there is 2.09 by direct evaluation (and by the published table values
    # themselves); the band is entered from k=12 onward.  Left failing on
    # purpose rather than widening the tolerance.
    assert not outside, f"estimate/bound ratio outside [0.5, 2]: {outside}"
