"""Acceptance criteria.  Each check prints one PASS/FAIL line.

Run under pytest (lines are echoed in the terminal summary) or directly
with ``python3 tests/test_acceptance.py``.
"""
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import ACCEPTANCE_LINES, SHIPPED, configuration_from, conic_with, load_shipped  # noqa: E402
from oracles import dense_quotient_dimension  # noqa: E402

from dfseq.algebra import parse_polynomial, standard_monomials  # noqa: E402
from dfseq.geometry import make_test_configuration, rational_normal_curve, variety_from_input  # noqa: E402
from dfseq.invariants import analyze  # noqa: E402
from dfseq.numeric import (  # noqa: E402
    A_of_t_estimate,
    CurveScene,
    bergman_deviation,
    f_dot_estimate,
    gram,
)
from dfseq.sequences import mu_gamma_terms, proposition_report  # noqa: E402

F = Fraction


def _check(conditions):
    failed = [name for name, ok in conditions if not ok]
    return not failed, failed


def criterion_1():
    start = time.perf_counter()
    tc = make_test_configuration(rational_normal_curve(1), (0, 1))
    b = analyze(tc, 30, order=5)
    rep = proposition_report(tc, b)
    elapsed = time.perf_counter() - start
    ok, failed = _check(
        [
            ("N_k = k+1", all(r.N == r.k + 1 for r in b.table.rows)),
            ("w_k = -k(k+1)/2", all(r.w == -r.k * (r.k + 1) // 2 for r in b.table.rows)),
            ("F0 = -1/2", b.expansion.F0 == F(-1, 2)),
            ("F1..F5 = 0", len(b.expansion.F) >= 6 and all(x == 0 for x in b.expansion.F[1:6])),
            ("rFirst = inf", b.expansion.r_first == math.inf),
            ("norm1 = 1", b.norms.norm1 == 1),
            ("normInf = 1/2", b.norms.norm_inf == F(1, 2)),
            ("T_gamma = 0", all(r.T.coefficient == 0 for r in rep.rows) and len(rep.rows) == 30),
            ("r = +inf branch", "F1({mu_gamma}) = 0" in rep.branch),
            ("runtime < 5 s", elapsed < 5),
        ]
    )
    return ok, f"P^1 product line, gamma <= 30, {elapsed:.2f} s" + (f"; failed: {failed}" if failed else "")


def criterion_2():
    start = time.perf_counter()
    v = variety_from_input([parse_polynomial("z0*z2 - z1^2", 3)], 2, 3)
    tc = make_test_configuration(v, (0, 0, 1))
    b = analyze(tc, 200)
    rep = proposition_report(tc, b)
    elapsed = time.perf_counter() - start
    target = -8 / (9 * math.pi)
    worst = max(abs(r.T.value / target - 1) for r in rep.rows if r.gamma >= 150)
    ok, failed = _check(
        [
            ("F0,F1,F2", b.expansion.F[:3] == (F(-1, 8), F(-1, 8), F(1, 8))),
            ("rFirst = 1", b.expansion.r_first == 1),
            ("norms 1/3", b.norms.norm1 == F(1, 3) and b.norms.norm_inf == F(1, 3)),
            ("central fiber (z0*z2)", [str(g) for g in tc.central_fiber] == ["z0*z2"]),
            ("flatness N_k = k+1", tc.flatness_dims == tuple(2 * g + 1 for g in tc.flatness_checked)),
            ("table N_k = k+1", all(r.N == r.k + 1 for r in b.table.rows)),
            ("T within 1% for gamma >= 150", worst < 0.01),
            ("decay exponent >= 0.9", rep.decay_exponent is not None and rep.decay_exponent >= 0.9),
            ("runtime < 60 s", elapsed < 60),
        ]
    )
    detail = (
        f"conic, gamma <= 200, {elapsed:.2f} s, worst rel. error {worst:.4%} (tol 1%), "
        f"decay exponent {rep.decay_exponent:.3f} (min 0.9)"
    )
    return ok, detail + (f"; failed: {failed}" if failed else "")


def criterion_3():
    bad = []
    for name in SHIPPED:
        doc = load_shipped(name)
        b = analyze(configuration_from(doc), doc["gammaMax"])
        if not b.f0.agree:
            bad.append(name)
    return not bad, f"two F0 formulas agree exactly on {len(SHIPPED) - len(bad)}/{len(SHIPPED)} shipped inputs" + (
        f"; disagree: {bad}" if bad else ""
    )


def criterion_4():
    bad = []
    for name in SHIPPED:
        tc = configuration_from(load_shipped(name))
        for g in range(1, 7):
            count = len(standard_monomials(tc.central_leading, g, tc.nvars))
            if count != dense_quotient_dimension(tc.variety.ideal, g, tc.nvars):
                bad.append((name, g))
    return not bad, f"standard-monomial counts = dense rank oracle for gamma <= 6 on {len(SHIPPED)} inputs" + (
        f"; mismatches: {bad}" if bad else ""
    )


def _covariance_cases():
    cubic = [parse_polynomial(s, 4) for s in ("z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2")]
    cubic_v = variety_from_input(cubic, 3, 4)
    quadric_v = variety_from_input([parse_polynomial("z0*z3 - z1*z2", 4)], 1, 4)
    return [
        ("conic", lambda c: conic_with(c), (0, 0, 1), 2),
        ("twisted cubic", lambda c: make_test_configuration(cubic_v, c), (0, 0, 0, 1), 3),
        ("quadric", lambda c: make_test_configuration(quadric_v, c), (0, 0, 0, 1), 1),
    ]


def criterion_5(gamma_max=24):
    failed = []
    for label, build, c, ell in _covariance_cases():
        base_tc = build(c)
        base = analyze(base_tc, gamma_max)
        base_T = [r.T for r in mu_gamma_terms(base_tc, base).records]
        for m in (2, 3):
            tc = build(tuple(m * x for x in c))
            s = analyze(tc, gamma_max)
            checks = [
                all(r1.w == m * r0.w for r0, r1 in zip(base.table.rows, s.table.rows)),
                s.norms.norm1 == m * base.norms.norm1,
                s.norms.norm_inf == m * base.norms.norm_inf,
                s.expansion.F == tuple(m * x for x in base.expansion.F),
                s.norms.delta == base.norms.delta,
                s.expansion.r_first == base.expansion.r_first,
                [r.T for r in mu_gamma_terms(tc, s).records] == base_T,
            ]
            if not all(checks):
                failed.append(f"{label} scale m={m}")
            tc = build(tuple(x + m for x in c))
            s = analyze(tc, gamma_max)
            checks = [
                s.norms.b == base.norms.b,
                s.norms.norm1 == base.norms.norm1 and s.norms.norm_inf == base.norms.norm_inf,
                s.norms.delta == base.norms.delta,
                s.expansion.F[1:] == base.expansion.F[1:],
                s.expansion.F0 == base.expansion.F0 - F(m, ell),
            ]
            if not all(checks):
                failed.append(f"{label} shift m={m}")
    return not failed, "scale and shift covariance, m in {2, 3}, on conic, twisted cubic, quadric" + (
        f"; failed: {failed}" if failed else ""
    )


def criterion_6():
    start = time.perf_counter()
    tc = make_test_configuration(rational_normal_curve(1), (0, 1))
    scene = CurveScene()
    tol = scene.tol
    failed = []
    errors = []
    for t in (0.4, 0.7, 1.0):
        est = A_of_t_estimate(scene, tc, t)
        errors.append(est.error)
        if abs(est.value - 0.5) > 1e-3:
            failed.append(f"A({t}) = {est.value}")
    for gamma in (4, 8, 16):
        ests = [f_dot_estimate(scene, tc, gamma, s) for s in (-2.0, -1.0, 0.0)]
        errors += [e.error for e in ests]
        if not all(a.value <= b.value + 2 * tol for a, b in zip(ests, ests[1:])):
            failed.append(f"f_dot not monotone at gamma={gamma}")
    for k in (3, 8):
        dev = bergman_deviation(scene, k)
        errors.append(gram(scene, k).error)
        if dev >= 1e-8:
            failed.append(f"Bergman deviation {dev} at k={k}")
    if max(errors) > 1e-6:
        failed.append(f"node doubling error {max(errors)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        failed.append("runtime")
    return not failed, f"P^1 numeric suite, {elapsed:.2f} s, max node-doubling change {max(errors):.1e}" + (
        f"; failed: {failed}" if failed else ""
    )


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


def _record(n, fn):
    ok, detail = fn()
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok, detail


def test_criterion_1_p1_product_line():
    ok, detail = _record(1, criterion_1)
    assert ok, detail


def test_criterion_2_conic_degeneration():
    ok, detail = _record(2, criterion_2)
    assert ok, detail


def test_criterion_3_f0_formulas_agree():
    ok, detail = _record(3, criterion_3)
    assert ok, detail


def test_criterion_4_dense_rank_oracle():
    ok, detail = _record(4, criterion_4)
    assert ok, detail


def test_criterion_5_covariance():
    ok, detail = _record(5, criterion_5)
    assert ok, detail


def test_criterion_6_numeric_suite():
    ok, detail = _record(6, criterion_6)
    assert ok, detail


if __name__ == "__main__":
    results = [_record(n, fn)[0] for n, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(results) else 1)
