"""Exit criteria.  Each test records one PASS/FAIL line, printed in the terminal summary."""

import random
import time
from fractions import Fraction
from math import factorial

import pytest

from chromapoly.chromatic import (
    chromatic_deletion_contraction,
    chromatic_subset_expansion,
    interpolate_from_counts,
)
from chromapoly.complete import (
    a1_complete,
    a1_complete_piecewise,
    a1_complete_recursive,
    float_power_sums,
    reciprocal_power_sums,
    series_check,
    zemyan_identity_residual,
)
from chromapoly.core import complete_graph, complete_hypergraph
from chromapoly.recursion import A1Solver, b_direct, b_partition, coefficients_recursive, sign_bound_audit
from chromapoly.whitney import (
    BrokenFamily,
    EdgeOrdering,
    berge_cycle_broken_sets,
    delta_cycle_broken_sets,
    enumerate_broken_cyclic,
    forest_counts,
    nbc_counts,
    pruned_expansion,
)
from conftest import ACCEPTANCE, graphs, hypergraphs

pytestmark = pytest.mark.acceptance

CRIT1_GRAPHS = graphs(200, 7, p=0.5, seed=2024)
CRIT1_HYPERGRAPHS = hypergraphs(100, 6, max_edges=8, seed=2025)


def record(label, ok, detail):
    ACCEPTANCE[label] = (ok, detail)
    assert ok, f"{label}: {detail}"


def stirling1_signed(n_max):
    """s(n, i) from s(n+1, i) = s(n, i-1) - n s(n, i); table[n][i]."""
    table = [[1]]
    for n in range(n_max):
        prev = table[-1] + [0]
        row = [0] * (n + 2)
        for i in range(1, n + 2):
            row[i] = prev[i - 1] - n * prev[i]
        table.append(row)
    return table


def all_coefficient_vectors(H, orderings):
    out = {
        "expand": chromatic_subset_expansion(H),
        "brute": interpolate_from_counts(H),
        "recursion": coefficients_recursive(H),
    }
    if H.is_graph:
        out["delcon"] = chromatic_deletion_contraction(H)
    for k, order in enumerate(orderings):
        if H.is_graph:
            out[f"whitney/{k}"] = nbc_counts(H, order).signed
        families = {
            "none": BrokenFamily(order),
            "delta": delta_cycle_broken_sets(H, order),
            "berge": berge_cycle_broken_sets(H, order),
            "maximal": enumerate_broken_cyclic(H, order),
        }
        for name, fam in families.items():
            out[f"pruned-{name}/{k}"] = pruned_expansion(H, fam)
    return out


def test_criterion_1_cross_algorithm_equality():
    rng = random.Random(1)
    t0 = time.perf_counter()
    bad = []
    runs = 0
    for H in CRIT1_GRAPHS + CRIT1_HYPERGRAPHS:
        orders = [EdgeOrdering.random(H.m, rng) for _ in range(5)]
        vecs = all_coefficient_vectors(H, orders)
        runs += len(vecs)
        ref = vecs["expand"]
        bad += [(H, name) for name, v in vecs.items() if v != ref]
    elapsed = time.perf_counter() - t0
    record("1 cross-algorithm equality", not bad and elapsed < 60,
           f"{runs} runs on 300 instances, {len(bad)} mismatches, {elapsed:.1f}s (limit 60s)")


def test_criterion_2_b_partition_matches_b_direct():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for H in hypergraphs(50, 6, max_edges=8, seed=77):
        solver = A1Solver(H)
        for e in range(H.m):
            for i in range(1, H.n + 1):
                for j in range(i + 1, H.n + 1):
                    checked += 1
                    if b_partition(H, e, i, j, solver) != b_direct(H, e, i, j):
                        bad.append((H, e, i, j))
    elapsed = time.perf_counter() - t0
    record("2 b_partition = b_direct", not bad and elapsed < 30,
           f"{checked} (e,i,j) triples, {len(bad)} mismatches, {elapsed:.1f}s (limit 30s)")


def test_criterion_3_complete_graphs_are_stirling():
    s = stirling1_signed(9)
    bad = []
    for n in range(1, 10):
        K = complete_graph(n)
        expected = tuple(s[n][1:])
        got = [coefficients_recursive(K).coeffs]
        if n <= 7:
            got.append(chromatic_deletion_contraction(K).coeffs)
        if n <= 6:
            got.append(chromatic_subset_expansion(K).coeffs)
        bad += [n for g in got if g != expected]
    record("3 K_n coefficients = signed Stirling (n<=9)", not bad, f"mismatch at n={bad}" if bad else "exact")


def test_criterion_4_theorem_stack():
    t0 = time.perf_counter()
    bad = []
    for r in range(2, 7):
        moments = reciprocal_power_sums(r - 1, 25)
        for n in range(1, 26):
            val = a1_complete(r, n, moments)
            if val != a1_complete_recursive(r, n):
                bad.append(("recursive", r, n))
            if n <= 2 * r and val != a1_complete_piecewise(r, n):
                bad.append(("piecewise", r, n))
            if r <= 4 and n <= 6 and val != chromatic_subset_expansion(complete_hypergraph(n, r))[1]:
                bad.append(("expansion", r, n))
    elapsed = time.perf_counter() - t0
    record("4 a1(K_n^r): closed form = recursion = table = expansion", not bad and elapsed < 60,
           f"{len(bad)} mismatches {bad[:3]}, {elapsed:.1f}s (limit 60s)")


def cos_table(n):
    """2^(1 - n/2) cos(n pi / 4) as an exact rational, period 8 in the angle."""
    odd_sign = {1: 1, 3: -1, 5: -1, 7: 1}
    even_sign = {0: 1, 2: 0, 4: -1, 6: 0}
    k = n % 8
    if n % 2:
        return odd_sign[k] * Fraction(1, 2 ** ((n - 1) // 2))
    return even_sign[k] * Fraction(2, 2 ** (n // 2))


def test_criterion_5_closed_forms_r2_r3():
    bad = [n for n in range(1, 21) if a1_complete(2, n) != (-1) ** (n - 1) * factorial(n - 1)]
    m3 = reciprocal_power_sums(2, 30)
    for n in range(1, 31):
        if a1_complete(3, n, m3) != (-1) ** (n - 1) * factorial(n - 1) * cos_table(n):
            bad.append(("r=3", n))
    record("5 closed forms r=2 (n<=20), r=3 cosine (n<=30)", not bad, f"mismatches {bad}" if bad else "exact")


def test_criterion_6_zemyan_identity():
    bad = [(r, m) for r in range(2, 6) for m in range(1, 11) if zemyan_identity_residual(r, m) != 0]
    record("6 Zemyan residual = 0 (r=2..5, m=1..10)", not bad, f"non-zero at {bad}" if bad else "all zero")


def test_criterion_7_generating_function():
    ok = series_check(3, 12) and series_check(4, 12)
    record("7 series E'/E matches a1/n! (r=3,4, 12 terms)", ok, "exact rational match" if ok else "mismatch")


def test_criterion_8_float_root_cross_check():
    worst = 0.0
    for rr in range(1, 9):
        exact = reciprocal_power_sums(rr, 12)
        approx = float_power_sums(rr, 12)
        for n in range(1, 13):
            mu = float(exact[n])
            worst = max(worst, abs(approx[n - 1] - mu) / max(1.0, abs(mu)))
    record("8 root-finder power sums vs Newton (r-1<=8, n<=12)", worst <= 1e-8, f"worst relative error {worst:.2e} (tol 1e-8)")


@pytest.fixture(scope="module")
def audits():
    return [sign_bound_audit(G, chromatic_subset_expansion(G)) for G in CRIT1_GRAPHS]


def test_criterion_9a_sign_and_bound_inequalities(audits):
    bad = [
        (G, fam)
        for G, a in zip(CRIT1_GRAPHS, audits)
        for fam in ("partial_sums", "coefficients")
        if not (a.clause_passed(fam, "nonneg") and a.clause_passed(fam, "within_bound"))
    ]
    edgeless = sum(1 for G, _ in bad if G.m == 0)
    record("9a 0 <= (-1)^(n-i) b^i, a_i <= K_n values", not bad,
           f"{len(bad)} violations over {len(audits)} graphs ({edgeless} on edgeless graphs)")


def test_criterion_9b_coefficient_sharpness(audits):
    bad = [
        a.n for a in audits
        if not (a.clause_passed("coefficients", "left_sharpness_ok") and a.clause_passed("coefficients", "right_sharpness_ok"))
    ]
    record("9b sharpness of the a_i inequalities", not bad, f"{len(bad)} graphs violate, over {len(audits)}")


def test_criterion_9c_partial_sum_sharpness(audits):
    failing = [a for a in audits
               if not (a.clause_passed("partial_sums", "left_sharpness_ok")
                       and a.clause_passed("partial_sums", "right_sharpness_ok"))]
    examples = [f"n={a.n}, k={a.k}: {f}" for a in failing[:1] for f in a.failures()]
    record("9c sharpness of the b^i (partial-sum) inequalities", not failing,
           f"{len(failing)} of {len(audits)} graphs violate, e.g. {examples}")


def test_criterion_10_forest_identity_and_whitney():
    rng = random.Random(10)
    bad = []
    checks = 0
    for G in graphs(100, 6, p=0.5, seed=4242):
        a = chromatic_subset_expansion(G)
        for _ in range(5):
            order = EdgeOrdering.random(G.m, rng)
            nbc = nbc_counts(G, order)
            checks += 1
            if nbc.signed != a:
                bad.append(("whitney", G))
            if G.m:
                fc = forest_counts(G, order)
                ok = all(nbc.h[i - 1] == fc.c[i - 1] + fc.c[i] for i in range(1, G.n + 1))
                if not ok:
                    bad.append(("lemma5", G))
    record("10 h_i = c_(i-1) + c_i and Whitney a_i (100 graphs x 5 orders)", not bad,
           f"{checks} (graph, ordering) pairs, {len(bad)} failures")
