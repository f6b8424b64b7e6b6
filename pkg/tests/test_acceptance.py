"""End-to-end acceptance checks over every connected labelled graph with n <= 6.

Each test records one PASS/FAIL line in ``RESULTS``; the terminal summary hook in
conftest prints them after the run (they also go to stdout under ``-s``).
"""

from __future__ import annotations

import json
import math
import random
import subprocess
import sys
import time
from collections import Counter

import pytest

import oracles
from stardom.algebraic import AlgebraicNumber
from stardom.domination import DOMINATION, TOTAL, DominationVariant, gamma, gamma_t, minimum_size
from stardom.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    encode_graph6,
    enumerate_connected,
    is_complete,
    parse_graph6,
    star,
)
from stardom.poly import IntPolynomial
from stardom.spectra import cluster, jacobi_eigenvalues, matrix_of, rank_of_graph, spectrum
from stardom.verifier import Census, Check, Status, sweep, verify_thm33, verify_tok

pytestmark = pytest.mark.slow

RESULTS: dict[int, str] = {}
ORDERS = range(2, 7)
CONNECTED_COUNTS = {2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def record(number: int, ok: bool, text: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {text}"
    RESULTS[number] = line
    print(line)


def labelled_krs(r: int, s: int) -> int:
    return math.comb(r + s, r) // (2 if r == s else 1)


def all_graphs() -> list[Graph]:
    return [g for n in ORDERS for g in enumerate_connected(n)]


@pytest.fixture(scope="module")
def bound_sweep(tmp_path_factory):
    """The plain domination bound, run cold through the CLI so its time is honest."""
    census_file = tmp_path_factory.mktemp("acc") / "census.json"
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "stardom", "sweep", "--enumerate", "2-6", "--checks", "thm31",
         "--census", str(census_file), "--out", str(census_file.with_suffix(".csv"))],
        capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - start
    return proc.returncode, json.loads(census_file.read_text()), elapsed


@pytest.fixture(scope="module")
def full_sweep():
    census = Census()
    checks = [Check.TOTAL_EQUALITY, Check.STAR_MACHINERY, Check.STAR_COMPLEMENT_P_DOMINATING,
              Check.P_DOMINATION_BOUND, Check.ANNIHILATOR, Check.PRIVATE_NEIGHBOR_BOUND]
    reports = list(sweep(all_graphs(), checks, (1, 2, 3), census))
    return census, reports


def by_check(reports, check: Check) -> list:
    return [r for r in reports if r.check == check]


def test_criterion_1_domination_bound_sweep(bound_sweep):
    code, census, elapsed = bound_sweep
    graphs = census["graphs"]
    ok = code == 0 and census["violations"] == 0 and graphs == sum(CONNECTED_COUNTS.values())
    ok &= elapsed < 120
    record(1, ok, f"domination bound over {graphs} graphs (2 <= n <= 6): "
                  f"{census['violations']} violations, {elapsed:.1f}s single process")
    assert ok


def test_criterion_2_domination_equality_census(bound_sweep):
    _, census, _ = bound_sweep
    found = Counter(e["eq_class"] for e in census["equalities"])
    expected = Counter({"MinusOneKn": len(ORDERS), "OneK2": 1})
    for r in range(2, 4):
        for s in range(r, 7 - r):
            expected[f"ZeroKrs({r},{s})"] = labelled_krs(r, s)
    # every census entry is what its label claims, by networkx isomorphism
    structural = True
    for e in census["equalities"]:
        fam = oracles.family_of(oracles.to_nx(parse_graph6(e["graph6"])))
        cls, lam = e["eq_class"], e["lam"]
        if cls == "MinusOneKn":
            structural &= fam[0] == "K" and lam == "-1"
        elif cls == "OneK2":
            structural &= fam == ("K", 2) and lam == "1"
        else:
            structural &= fam[0] == "Krs" and f"ZeroKrs({fam[1]},{fam[2]})" == cls and lam == "0"
    k1 = list(sweep([complete(1)], [Check.DOMINATION_BOUND]))[0]
    ok = found == expected and structural and k1.status == Status.EDGE_CASE
    record(2, ok, f"domination equality census {dict(sorted(found.items()))}; "
                  f"K1 status {k1.status.value}")
    assert ok


def test_criterion_3_total_equality_census(full_sweep):
    census, reports = full_sweep
    rows = [(rep, row) for rep in by_check(reports, Check.TOTAL_EQUALITY) for row in rep.rows]
    eq = [(rep, row) for rep, row in rows if row.status == Status.EQUALITY]
    irrational = Counter(row.eq_class for _, row in eq if not row.lam.is_rational)
    golden = IntPolynomial((-1, 1, 1))
    sqrt2 = IntPolynomial((-2, 0, 1))
    ok_irr = irrational == Counter({"GoldenC5": 24, "Sqrt2K12": 6})
    for rep, row in eq:
        if row.lam.is_rational:
            continue
        fam = oracles.family_of(oracles.to_nx(parse_graph6(rep.graph6)))
        mp = row.lam.minimal_polynomial
        ok_irr &= (fam == ("C", 5) and mp == golden) or (fam == ("Krs", 1, 2) and mp == sqrt2)
    zero_graphs = {rep.graph6 for rep, row in eq if row.lam == 0}
    bipartite = set()
    for g in all_graphs():
        fam = oracles.family_of(oracles.to_nx(g))
        if fam[0] == "Krs":
            bipartite.add(encode_graph6(g))
    # K_2 = K_{1,1} has no zero eigenvalue, so it cannot appear
    ok_zero = zero_graphs == bipartite - {"A_"}
    scoped = [(rep, row) for rep, row in eq if row.lam.is_rational
              and not is_complete(parse_graph6(rep.graph6))]
    ok_int = all(row.lam.is_integer and row.lam.rational_value <= 1 for _, row in scoped)
    edge = [(rep.graph6, row.lam.display()) for rep, row in rows if row.status == Status.EDGE_CASE]
    violated = sum(rep.status == Status.VIOLATED for rep in by_check(reports, Check.TOTAL_EQUALITY))
    ok = ok_irr and ok_zero and ok_int and violated == 0 and edge == [("Bw", "2")]
    record(3, ok, f"total domination census: irrational {dict(irrational)}, "
                  f"{len(zero_graphs)} complete bipartite graphs at 0, rational values "
                  f"{sorted({str(r.lam.rational_value) for _, r in scoped})}, "
                  f"outside scope {edge}")
    assert ok


def test_criterion_4_star_machinery(full_sweep):
    _, reports = full_sweep
    reps = by_check(reports, Check.STAR_MACHINERY)
    bad = [r.graph6 for r in reps if r.status == Status.VIOLATED]
    pairs = sum(len(r.rows) for r in reps)
    ok = not bad and len(reps) == sum(CONNECTED_COUNTS.values())
    record(4, ok, f"star sets, connected complements, domination and location-domination on "
                  f"{pairs} (graph, eigenvalue) pairs: {len(bad)} failures")
    assert ok


def test_criterion_5_star_complements_p_dominate(full_sweep):
    _, reports = full_sweep
    gene = by_check(reports, Check.STAR_COMPLEMENT_P_DOMINATING)
    cor = by_check(reports, Check.P_DOMINATION_BOUND)
    applied = sum(r.status != Status.SKIPPED for r in gene)
    bad = sum(r.status == Status.VIOLATED for r in gene + cor)
    ok = bad == 0 and applied > 0
    record(5, ok, f"every star complement p-dominating and gamma_p bound, p in 1..3: "
                  f"{applied} (graph, p) cases in scope, {bad} failures")
    assert ok


@pytest.mark.xfail(strict=True, reason=(
    "the private-neighbour bound fails on 105 six-vertex graphs at p = 3 under the "
    "conservative reading; see test_criterion_6_counterexamples_are_genuine"))
def test_criterion_6_private_neighbour_bound(full_sweep):
    _, reports = full_sweep
    lemma = by_check(reports, Check.ANNIHILATOR)
    tok = by_check(reports, Check.PRIVATE_NEIGHBOR_BOUND)
    lemma_bad = sum(r.status == Status.VIOLATED for r in lemma)
    bad = [r for r in tok if r.status == Status.VIOLATED]
    in_scope = sum(r.status != Status.SKIPPED for r in tok)
    per_p = Counter((r.p, r.n) for r in bad)
    ok = lemma_bad == 0 and not bad
    record(6, ok, f"annihilator lemma {lemma_bad} failures; private-neighbour bound "
                  f"{len(bad)} violations among {in_scope} (graph, p) cases in scope, "
                  f"by (p, n): {dict(sorted(per_p.items()))}")
    assert ok


def test_criterion_6_counterexamples_are_genuine(full_sweep):
    """Each violation is re-derived with networkx and numpy, outside the package."""
    _, reports = full_sweep
    bad = [r for r in by_check(reports, Check.PRIVATE_NEIGHBOR_BOUND)
           if r.status == Status.VIOLATED]
    assert len(bad) == 105 and {(r.p, r.n) for r in bad} == {(3, 6)}
    for rep in bad:
        g = parse_graph6(rep.graph6)
        G = oracles.to_nx(g)
        size, witness = oracles.brute_min(G, "domination", 3)
        max_mult = max(k for kind in ("adjacency", "laplacian")
                       for _, k in oracles.float_spectrum(
                           oracles.adjacency(G) if kind == "adjacency" else oracles.laplacian(G)))
        assert size > g.n - max_mult
        # the hypothesis really holds: some minimum set has witnessed 3-subsets covering it
        assert verify_tok(g, 3, "weak").status == Status.VIOLATED
        # the stricter readings never apply on this range, so they are vacuous here
        assert verify_tok(g, 3, "swap").status == Status.SKIPPED
        assert verify_tok(g, 3, "strong").status == Status.SKIPPED


def test_criterion_7_spectra_match_float_solver():
    rng = random.Random(20240607)
    mismatches = 0
    for _ in range(1000):
        n = rng.randint(4, 12)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        density = rng.random()
        edges |= {(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density}
        g = Graph.from_edges(n, sorted(edges))
        exact = spectrum(g).eigs
        approx = cluster(jacobi_eigenvalues(matrix_of(g)), tol=1e-8)
        same = [m for _, m in exact] == [k for _, k in approx] and all(
            abs(lam.approx - x) < 1e-7 for (lam, _), (x, _) in zip(exact, approx))
        mismatches += not same
    record(7, mismatches == 0, f"exact multiplicities vs Jacobi eigenvalues on 1000 random "
                               f"connected graphs (4 <= n <= 12): {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_8_domination_matches_enumeration():
    variants = [("domination", 1, DOMINATION), ("total", 1, TOTAL),
                ("domination", 2, DominationVariant.pdom(2)),
                ("domination", 3, DominationVariant.pdom(3))]
    mismatches = 0
    compared = 0
    graphs = [g for n in range(1, 7) for g in enumerate_connected(n)]
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 10)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        edges |= {(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.3}
        graphs.append(Graph.from_edges(n, sorted(edges)))
    for g in graphs:
        for kind, p, variant in variants:
            compared += 1
            mismatches += minimum_size(g, variant) != oracles.brute_min_rows(list(g.adj), kind, p)
    record(8, mismatches == 0, f"branch and bound vs full subset enumeration, {compared} "
                               f"(graph, variant) pairs: {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_9_named_values():
    c5 = spectrum(cycle(5))
    golden = IntPolynomial((-1, 1, 1))
    k12 = verify_thm33(complete_bipartite(1, 2))
    checks = {
        "gamma(K_1,5) = 1": gamma(star(6)) == 1,
        "gamma_t(K_6) = 2": gamma_t(complete(6)) == 2,
        "C5 spectrum": [m for _, m in c5.eigs] == [2, 2, 1]
        and c5.eigs[2][0] == AlgebraicNumber.from_rational(2)
        and all(lam.minimal_polynomial == golden for lam, _ in c5.eigs[:2]),
        "gamma_t(C5) = 3 = n - 2": gamma_t(cycle(5)) == 3 == 5 - c5.eigs[0][1],
        "K_1,2 equality at both square roots of 2": [
            r.eq_class for r in k12.rows if r.status == Status.EQUALITY
            and not r.lam.is_rational] == ["Sqrt2K12", "Sqrt2K12"],
        "rank(K_3,4) = 2": rank_of_graph(complete_bipartite(3, 4)) == 2,
    }
    failed = [k for k, v in checks.items() if not v]
    record(9, not failed, f"named values {len(checks) - len(failed)}/{len(checks)} exact"
                          + (f"; failed {failed}" if failed else ""))
    assert not failed
