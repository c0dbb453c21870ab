"""Replayable verification sweeps, exposed through the CLI verify command.

Each suite exhaustively re-checks one family of identities over a
configurable range and reports aggregate pass/fail results with the first
failure spelled out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bridgeland import (
    collapsing_wall,
    exceptional_pair_wall,
    kernel_cokernel_slopes,
    nested,
)
from .chern import exceptional_character, euler_pairing
from .contfrac import check_exceptional_cf
from .exactnum import QuadSurd, fraction_str, surd_cmp
from .exceptional import dot, enumerate_slopes, epsilon, exceptional_slope_of, hilbert_poly
from .resolution import CASE_BELOW_DOT, classical_gaeta, gaeta_resolution, kronecker_data
from .resolution import KroneckerNotApplicableError
from .stability import gamma, gamma_inv

DEFAULT_DEPTHS = {
    "cf": 10,
    "intervals": 8,
    "gamma": 1000,
    "resolution": 500,
    "kronecker": 500,
    "walls": 500,
}

PAIR_DEPTH = 8
CHAIN_LENGTH = 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _aggregate(name: str, failures: list, total: int) -> CheckResult:
    if failures:
        return CheckResult(
            name, False, "%d/%d failed, first: %s" % (len(failures), total, failures[0])
        )
    return CheckResult(name, True, "%d checks" % total)


def _suite_cf(depth: int) -> list[CheckResult]:
    slopes = enumerate_slopes(depth, 0, 1)
    flag_failures = []
    congruence_failures = []
    for s in slopes:
        report = check_exceptional_cf(s)
        if not all(report.values()):
            flag_failures.append("slope %s: %s" % (fraction_str(s.value), report))
        num = (s.value * s.rank).numerator
        if (num * num + 1) % s.rank != 0:
            congruence_failures.append("slope %s" % fraction_str(s.value))
    return [
        _aggregate("cf structure flags", flag_failures, len(slopes)),
        _aggregate("numerator congruence", congruence_failures, len(slopes)),
    ]


def _suite_intervals(depth: int) -> list[CheckResult]:
    slopes = enumerate_slopes(depth, 0, 3)
    failures = []
    total = 0
    for i, lo in enumerate(slopes):
        hi_edge = lo.value + lo.interval_radius
        for hi in slopes[i + 1 :]:
            total += 1
            if surd_cmp(hi_edge, hi.value - hi.interval_radius) > 0:
                failures.append(
                    "overlap I_%s and I_%s"
                    % (fraction_str(lo.value), fraction_str(hi.value))
                )
    return [_aggregate("interval disjointness", failures, total)]


def _suite_gamma(depth: int) -> list[CheckResult]:
    failures = []
    prev = Fraction(-1)
    for n in range(1, depth + 1):
        mu = gamma_inv(Fraction(n))
        if gamma(mu) != n:
            failures.append("gamma round trip failed at %d" % n)
        if mu <= prev:
            failures.append("gamma_inv not increasing at %d" % n)
        prev = mu
    return [_aggregate("gamma inversion", failures, depth)]


def _suite_resolution(depth: int) -> list[CheckResult]:
    assemble_failures = []
    rank_failures = []
    bound_failures = []
    m3_failures = []
    classical_failures = []
    classical_total = 0
    for n in range(2, depth + 1):
        res = gaeta_resolution(n)
        if res.ideal_character().astuple() != (1, 0, -n):
            assemble_failures.append("n=%d terms" % n)
        rd = res.dot_slope.rank
        pairing = euler_pairing(
            exceptional_character(-res.dot_slope.value),
            res.ideal_character(),
        )
        expected = res.m3 if res.case == CASE_BELOW_DOT else -res.m3
        if pairing != expected:
            m3_failures.append("n=%d m3 vs pairing" % n)
        if res.case == CASE_BELOW_DOT and not res.sporadic:
            if res.m3 * rd != 1 + res.w_char.r:
                rank_failures.append("n=%d rank identity" % n)
            ratio = Fraction(res.m1, res.m2)
            left = rd * res.dot_slope.interval_radius
            right = Fraction(rd, 3 * res.beta.rank * rd - res.alpha.rank)
            if not (left < ratio <= right):
                bound_failures.append("n=%d multiplicity bounds" % n)
        if res.dot_slope.rank == 1:
            classical_total += 1
            if res.complex_terms() != classical_gaeta(n).complex_terms():
                classical_failures.append("n=%d classical mismatch" % n)
    total = depth - 1
    return [
        _aggregate("character assembly", assemble_failures, total),
        _aggregate("m3 against the Euler pairing", m3_failures, total),
        _aggregate("rank identity", rank_failures, total),
        _aggregate("multiplicity bounds", bound_failures, total),
        _aggregate("integer-slope classical agreement", classical_failures, classical_total),
    ]


def _suite_kronecker(depth: int) -> list[CheckResult]:
    failures = []
    applicable = 0
    for n in range(2, depth + 1):
        try:
            kd = kronecker_data(n)
        except KroneckerNotApplicableError:
            continue
        applicable += 1
        if not kd.slope_in_window:
            failures.append("n=%d slope outside window" % n)
        if not kd.hilb_dim_excess:
            failures.append("n=%d quiver dimension not smaller" % n)
    return [_aggregate("kronecker window and dimension", failures, applicable)]


def _triad_configs(depth: int):
    for q in range(1, depth + 1):
        for p in range(0, 1 << q, 2):
            yield p, q


def _suite_walls(depth: int) -> list[CheckResult]:
    collapse_failures = []
    for n in range(2, depth + 1):
        wall = collapsing_wall(n)
        lam = gamma_inv(Fraction(n))
        if (lam + Fraction(3, 2)) ** 2 - 2 * n <= Fraction(5, 4):
            collapse_failures.append("n=%d radius bound" % n)
        if wall.is_empty():
            collapse_failures.append("n=%d empty collapsing wall" % n)
    results = [_aggregate("collapsing walls", collapse_failures, depth - 1)]

    radius_failures = []
    ratio_failures = []
    nest_failures = []
    pair_total = 0
    bound = Fraction(5, 4)
    for p, q in _triad_configs(PAIR_DEPTH):
        alpha = epsilon((p, q))
        beta = epsilon((p + 1, q))
        eta = epsilon((p + 2, q))
        pair_total += 1
        for x, y in ((alpha, beta), (beta, eta)):
            if exceptional_pair_wall(x, y).radius_sq >= bound:
                radius_failures.append("pair (%s, %s)" % (x.value, y.value))
        r1 = (beta.discriminant - alpha.discriminant) / (alpha.value - beta.value)
        r2 = (eta.discriminant - beta.discriminant) / (beta.value - eta.value)
        if q == 1:
            ok = r1 == Fraction(-3, 4) and r2 == Fraction(3, 4)
        else:
            ok = r1 < -1 and r2 > 1
        if not ok:
            ratio_failures.append("triad p=%d q=%d" % (p, q))
        mid_left = exceptional_slope_of(dot(alpha, beta.value))
        mid_right = exceptional_slope_of(dot(beta.value, eta))
        left_ok = nested(
            exceptional_pair_wall(alpha, beta),
            exceptional_pair_wall(alpha, mid_left),
            alpha.value,
        )
        right_ok = nested(
            exceptional_pair_wall(eta, beta),
            exceptional_pair_wall(eta, mid_right),
            eta.value,
        )
        if not (left_ok and right_ok and 2 * beta.discriminant < 1):
            nest_failures.append("triad p=%d q=%d" % (p, q))
    results.append(_aggregate("pair wall radius bound", radius_failures, 2 * pair_total))
    results.append(_aggregate("center ratio estimates", ratio_failures, pair_total))
    results.append(_aggregate("pair wall nesting", nest_failures, pair_total))

    chain_failures = []
    chain_total = 0
    for p, q in _triad_configs(CHAIN_LENGTH):
        alpha = epsilon((p, q))
        second = epsilon((p + 1, q))
        chain_total += 1
        prev_sq = exceptional_pair_wall(alpha, second).radius_sq
        for _ in range(CHAIN_LENGTH - 1):
            second = exceptional_slope_of(dot(alpha, second.value))
            cur_sq = exceptional_pair_wall(alpha, second).radius_sq
            if not (prev_sq < cur_sq < bound):
                chain_failures.append("chain at p=%d q=%d" % (p, q))
                break
            prev_sq = cur_sq
    results.append(_aggregate("chain radius growth", chain_failures, chain_total))

    balance_failures = []
    balance_total = 0
    for p, q in _triad_configs(min(PAIR_DEPTH, 6)):
        balance_total += 1
        triad = kernel_cokernel_slopes(p, q)
        if not (triad.balance_first and triad.balance_second):
            balance_failures.append("triad p=%d q=%d" % (p, q))
    results.append(_aggregate("triad character balances", balance_failures, balance_total))
    return results


_SUITES = {
    "cf": _suite_cf,
    "intervals": _suite_intervals,
    "gamma": _suite_gamma,
    "resolution": _suite_resolution,
    "kronecker": _suite_kronecker,
    "walls": _suite_walls,
}


def run_suite(suite: str, depth: int | None = None) -> list[CheckResult]:
    """Run one named suite, or all of them, at the given (or default) depth."""
    if suite == "all":
        out = []
        for name in _SUITES:
            out.extend(run_suite(name, depth))
        return out
    if suite not in _SUITES:
        raise ValueError("unknown suite %r" % suite)
    return _SUITES[suite](depth if depth is not None else DEFAULT_DEPTHS[suite])


def format_report(results: list[CheckResult]) -> tuple[str, int]:
    """Render results as text plus a process exit code (0 iff all passed)."""
    lines = []
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failed += 0 if res.passed else 1
        lines.append("%s %s (%s)" % (status, res.name, res.detail))
    lines.append(
        "%d/%d checks passed" % (len(results) - failed, len(results))
    )
    return "\n".join(lines), 0 if failed == 0 else 1
