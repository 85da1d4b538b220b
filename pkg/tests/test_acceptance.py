"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are collected in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import time
from fractions import Fraction as F

import numpy as np
import scipy.linalg

from rwinv.characteristic import (
    GOLDEN,
    OG6_DIAMOND,
    b2_inequality_margin,
    bounds_dim4,
    bounds_dim6,
    chern_from_chi_dim6,
    chi_from_hodge,
    lemma_six_check,
    rw_from_chern,
    theta_theta2_relation,
    todd4_identity_check,
    verify_known_tables,
)
from rwinv.cli import main as cli_main
from rwinv.evaluate import eval_cubic, eval_theta, eval_theta2, eval_theta2_terms, eval_theta3
from rwinv.experiment import ExperimentConfig, run_trials, summarize
from rwinv.oracle import oracle_check
from rwinv.tensor import (
    SymTensor4,
    apply_tau,
    matching_epsilon,
    random_curvature,
    standard_quaternionic,
    standard_symplectic,
)

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def rel(a, b):
    return abs(a - b) / abs(b)


def run_cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


# 1 -------------------------------------------------------------------------


def test_criterion_1_golden_table():
    start = time.perf_counter()
    report = verify_known_tables()
    elapsed = time.perf_counter() - start
    want = {
        ("K3", "Theta [chern]"): 48,
        ("S^[2]", "Theta^2 [betti]"): 3600,
        ("S^[2]", "Theta_2 [betti]"): -144,
        ("S^[2]", "Theta^2 [betti->chern]"): 3600,
        ("S^[2]", "Theta_2 [betti->chern]"): -144,
        ("K_2(A)", "Theta^2 [betti]"): 3888,
        ("K_2(A)", "Theta_2 [betti]"): -432,
        ("K_2(A)", "Theta^2 [betti->chern]"): 3888,
        ("K_2(A)", "Theta_2 [betti->chern]"): -432,
        ("S^[3]", "Theta^3 [chern]"): 373248,
        ("S^[3]", "ThetaTheta_2 [chern]"): -13824,
        ("S^[3]", "Theta_3 [chern]"): 512,
        ("K_3(A)", "Theta^3 [chern]"): 442368,
        ("K_3(A)", "ThetaTheta_2 [chern]"): -36864,
        ("K_3(A)", "Theta_3 [chern]"): 2560,
        ("OG6", "Theta^3 [chi->chern]"): 442368,
        ("OG6", "ThetaTheta_2 [chi->chern]"): -36864,
        ("OG6", "Theta_3 [chi->chern]"): 3072,
    }
    computed = {(c.example, c.quantity): c.computed for c in report.checks}
    regenerated = all(computed.get(k) == v for k, v in want.items())
    ok = report.ok and regenerated and elapsed < 1.0
    record(1, "golden table", ok,
           f"{len(report.checks)} checks, {len(report.mismatches)} mismatches, "
           f"{len(want)} required entries regenerated={regenerated}, {elapsed:.3f}s")


# 2 -------------------------------------------------------------------------


def test_criterion_2_og6_pipeline():
    chi = chi_from_hodge(OG6_DIAMOND)
    chern = chern_from_chi_dim6(chi)
    rw = rw_from_chern(chern)
    ok = (
        chi.chi == (4, -24, 348, -1168, 348, -24, 4)
        and chern.vector() == (30720, 7680, 1920)
        and (rw["Theta^3"], rw["ThetaTheta_2"], rw["Theta_3"]) == (442368, -36864, 3072)
    )
    record(2, "OG6 pipeline", ok, f"chi={chi.chi} chern={tuple(map(int, chern.vector()))} "
           f"rw=({rw['Theta^3']}, {rw['ThetaTheta_2']}, {rw['Theta_3']})")


# 3 -------------------------------------------------------------------------


def test_criterion_3_bounds():
    start = time.perf_counter()
    code6, out6 = run_cli("bounds", "--dim", "6")
    code4, out4 = run_cli("bounds", "--dim", "4")
    elapsed = time.perf_counter() - start
    lines6, lines4 = set(out6.splitlines()), set(out4.splitlines())
    need6 = {"b2 <= 1451519", "b2 + 4 <= 1451523", "b_Theta^3 <= 580608", "Ahat^(1/2) <= 7/8",
             "b_Theta^3 (Jiang) <= 23224296/35"}
    need4 = {"b_Theta_2 <= -144", "3600 <= b_Theta^2 <= 4192", "25/32 <= Ahat^(1/2) <= 131/144"}
    values6 = {b.label: b.value for b in bounds_dim6()}
    exact = values6["b2"] == 1451519 and values6["Ahat^(1/2)"] == F(7, 8)
    exact &= [b.value for b in bounds_dim4()][1] == (3600, 4192)
    ok = code6 == code4 == 0 and need6 <= lines6 and need4 <= lines4 and exact and elapsed < 1.0
    record(3, "bounds", ok, f"dim 6 {sorted(need6 & lines6)}; dim 4 {sorted(need4 & lines4)}; {elapsed:.3f}s")


# 4 -------------------------------------------------------------------------


def test_criterion_4_equality_cases():
    margins = {
        name: b2_inequality_margin(3, GOLDEN[name].rw["Theta^3"], GOLDEN[name].rw["ThetaTheta_2"], b2)
        for name, b2 in (("S^[3]", 23), ("OG6", 8), ("K_3(A)", 7))
    }
    ok = margins == {"S^[3]": 0, "OG6": 0, "K_3(A)": 36864}
    record(4, "b2 equality cases", ok, ", ".join(f"{k}: {v}" for k, v in margins.items()))


# 5 -------------------------------------------------------------------------


def test_criterion_5_monte_carlo_signs():
    counts = {}
    timings = {}
    for n in (1, 2, 3):
        start = time.perf_counter()
        records = run_trials(ExperimentConfig(n, trials=500, master_seed=1))
        timings[n] = time.perf_counter() - start
        counts[n] = summarize(records)
    th_pos = sum(counts[n].per_graph["theta"].count_positive for n in (1, 2, 3))
    th2_neg = sum(counts[n].per_graph["theta2"].count_negative for n in (2, 3))
    th3_pos = counts[3].per_graph["theta3"].count_positive
    code, _ = run_cli("experiment", "--dim-n", "3", "--trials", "500", "--seed", "1")
    ok = th_pos == 1500 and th2_neg == 1000 and th3_pos == 500 and code == 0 and timings[3] < 60
    record(5, "Monte Carlo signs", ok,
           f"Th>0 {th_pos}/1500, Th2<0 {th2_neg}/1000, Th3>0 {th3_pos}/500, exit {code}, "
           f"n=3 run {timings[3]:.1f}s")


# 6 -------------------------------------------------------------------------


def test_criterion_6_oracle_equivalence():
    results = oracle_check(20)
    ok = all(r.ok and r.n_tensors >= 20 for r in results)
    worst = max(r.max_rel_error for r in results)
    routes = "; ".join(f"{r.graph} n={r.n} {r.route}" for r in results)
    record(6, "oracle equivalence", ok, f"max rel err {worst:.2e} over {routes}")


# 7 -------------------------------------------------------------------------


def _frobenius_ok():
    worst = 0.0
    for n in (1, 2, 3):
        for s in range(20):
            omega = random_curvature(n, s)
            worst = max(worst, rel(eval_theta(omega).real, float(np.sum(np.abs(omega.data) ** 2))))
    return worst < 1e-12, f"Frobenius {worst:.1e}"


def _homogeneity_ok():
    worst = 0.0
    omega = random_curvature(3, 9)
    for c in (-1.7, 0.4, 2.5):
        scaled = SymTensor4(c * omega.data)
        for fn, deg in ((eval_theta, 2), (eval_theta2, 4), (eval_theta3, 6), (eval_cubic, 3)):
            worst = max(worst, rel(fn(scaled).value, c**deg * fn(omega).value))
    return worst < 1e-12, f"homogeneity {worst:.1e}"


def _symplectic_ok():
    worst = 0.0
    rng = np.random.default_rng(5)
    for n in (2, 3):
        eps = standard_symplectic(n)
        for s in range(5):
            h = rng.normal(size=(2 * n, 2 * n)) * 0.3
            S = scipy.linalg.expm(eps.matrix @ (h + h.T))
            omega = random_curvature(n, s)
            moved = SymTensor4(np.einsum("abcd,ai,bj,ck,dl->ijkl", omega.data, S, S, S, S))
            fns = (eval_theta, eval_theta2, eval_theta3) if n == 3 else (eval_theta, eval_theta2)
            for fn in fns:
                worst = max(worst, rel(fn(moved, real=False).value, fn(omega).value))
    return worst < 1e-8, f"symplectic {worst:.1e}"


def _tau_ok():
    ok = True
    for n in (1, 2, 3):
        J = standard_quaternionic(n)
        rng = np.random.default_rng(n)
        R = rng.normal(size=(2 * n,) * 4) + 1j * rng.normal(size=(2 * n,) * 4)
        ok &= np.array_equal(apply_tau(apply_tau(R, J), J), R)
        omega = random_curvature(n, n)
        ok &= np.array_equal(apply_tau(omega.data, J), omega.data)
    return bool(ok), "tau exact"


def _epsilon_ok():
    ok = True
    for n, k in ((1, 1), (1, 2), (2, 2), (2, 3), (1, 3)):
        arr = matching_epsilon(standard_symplectic(n), k).to_array()
        for a in range(2 * k):
            for b in range(a + 1, 2 * k):
                ok &= np.array_equal(np.swapaxes(arr, a, b), -arr)
        if k > n:
            ok &= not np.any(arr)
    return bool(ok), "epsilon antisymmetry/vanishing"


def _terms_ok():
    worst, observed = 0.0, False
    for s in range(500):
        omega = random_curvature(3, s)
        terms = eval_theta2_terms(omega)
        total = eval_theta2(omega).value
        worst = max(worst, rel(sum(terms), total))
        observed |= total.real < 0 and any(t.real >= 0 for t in terms)
    return worst < 1e-12 and observed, f"terms sum {worst:.1e}, non-negative term seen={observed}"


def test_criterion_7_structural_invariants():
    parts = [_frobenius_ok(), _homogeneity_ok(), _symplectic_ok(), _tau_ok(), _epsilon_ok(), _terms_ok()]
    record(7, "structural invariants", all(ok for ok, _ in parts), "; ".join(d for _, d in parts))


# 8 -------------------------------------------------------------------------


def test_criterion_8_identities():
    todd = todd4_identity_check()
    dim6 = [GOLDEN[name].rw for name in ("S^[3]", "K_3(A)", "OG6")]
    lemma = [lemma_six_check(rw) for rw in dim6]
    relation = all(theta_theta2_relation(rw["Theta^3"]) == rw["ThetaTheta_2"] for rw in dim6)
    ok = todd and lemma == [331776] * 3 and relation
    record(8, "identities", ok, f"todd4={todd}, Theta^3+3ThetaTheta_2={list(map(int, lemma))}, relation={relation}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                with contextlib.redirect_stdout(io.StringIO()):
                    fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
