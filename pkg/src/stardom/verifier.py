"""Per-graph theorem checks, equality classification and sweeps over graph streams.

Every check compares an exact domination-type number against ``n - m_G(lambda)``
for each eigenvalue and records a row per eigenvalue.  Check identifiers
(``thm31`` ...) are the stable names used by the CLI and the CSV/JSON reports.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from .algebraic import AlgebraicNumber, UnsupportedDegreeError
from .domination import (
    DOMINATION,
    TOTAL,
    DominationVariant,
    is_p_dominating,
    minimum_size,
    tok_hypothesis,
)
from .graph import (
    GRAPH6_MAX_ORDER,
    Graph,
    complete_bipartite_parts,
    encode_graph6,
    is_complete,
    is_connected,
    is_cycle,
)
from .poly import IntPolynomial
from .spectra import ADJ, LAP, MatrixKind, is_lambda_annihilator, multiplicity, spectrum
from .starsets import (
    enumerate_star_sets,
    find_connected_star_complement,
    find_star_set,
    is_location_dominating,
    is_star_set,
)

EXHAUSTIVE_STAR_ORDER = 6
GOLDEN = IntPolynomial((-1, 1, 1))
SQRT2 = IntPolynomial((-2, 0, 1))


class Check(str, enum.Enum):
    DOMINATION_BOUND = "thm31"
    TOTAL_DOMINATION_BOUND = "thm31total"
    TOTAL_EQUALITY = "thm33"
    REGULAR_LAPLACIAN = "corregularlaplacian"
    STAR_COMPLEMENT_P_DOMINATING = "thm41gene"
    P_DOMINATION_BOUND = "cor42"
    ANNIHILATOR = "lem43"
    PRIVATE_NEIGHBOR_BOUND = "thm44tok"
    STAR_MACHINERY = "starsets"

    @classmethod
    def parse(cls, token: str) -> Check:
        t = token.strip().lower()
        t = t.replace("-", "").replace("_", "")
        for c in cls:
            if c.value == t:
                return c
        raise ValueError(f"unknown check {token!r}; choose from {[c.value for c in cls]}")


P_CHECKS = {Check.STAR_COMPLEMENT_P_DOMINATING, Check.P_DOMINATION_BOUND,
            Check.PRIVATE_NEIGHBOR_BOUND}
DEFAULT_CHECKS = tuple(Check)


class Status(str, enum.Enum):
    HOLDS = "holds"
    EQUALITY = "equality"
    VIOLATED = "violated"
    SKIPPED = "skipped"
    EDGE_CASE = "edge-case"


_PRIORITY = [Status.VIOLATED, Status.EDGE_CASE, Status.EQUALITY, Status.HOLDS, Status.SKIPPED]


@dataclass
class Row:
    lam: AlgebraicNumber | None
    mult: int | None
    bound: int | None
    variant: str
    value: int | float | None
    status: Status
    eq_class: str = "n/a"
    kind: MatrixKind = ADJ
    note: str = ""
    payload: dict | None = None

    @property
    def slack(self) -> int | float | None:
        if self.bound is None or self.value is None:
            return None
        return self.bound - self.value


@dataclass
class TheoremReport:
    graph6: str
    n: int
    check: Check
    status: Status
    rows: list[Row] = field(default_factory=list)
    reason: str = ""
    p: int | None = None

    def csv_rows(self) -> list[dict]:
        label = self.check.value + (f"[p={self.p}]" if self.p is not None else "")
        if not self.rows:
            return [dict(graph6=self.graph6, n=self.n, check=label, lambda_poly="",
                         lambda_approx="", mult="", n_minus_mult="", gamma_variant="",
                         gamma_value="", slack="", status=_status_text(self.status, self.reason),
                         **{"class": ""})]
        out = []
        for r in self.rows:
            lam = r.lam.canonical() if r.lam is not None else None
            out.append(dict(
                graph6=self.graph6,
                n=self.n,
                check=label + ("/laplacian" if r.kind == LAP else ""),
                lambda_poly=str(lam.poly) if lam else "",
                lambda_approx=f"{lam.approx:.12g}" if lam else "",
                mult=_blank(r.mult),
                n_minus_mult=_blank(r.bound),
                gamma_variant=r.variant,
                gamma_value=_num(r.value),
                slack=_num(r.slack),
                status=_status_text(r.status, r.note if r.status == Status.SKIPPED else ""),
                **{"class": r.eq_class},
            ))
        return out

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "check": self.check.value,
            "p": self.p,
            "status": self.status.value,
            "reason": self.reason,
            "details": [
                {
                    "lambda": r.lam.display() if r.lam else None,
                    "lambda_approx": r.lam.approx if r.lam else None,
                    "matrix": r.kind.value,
                    "mult": r.mult,
                    "n_minus_mult": r.bound,
                    "gamma_variant": r.variant,
                    "gamma_value": _num(r.value) if r.value is not None else None,
                    "slack": _num(r.slack) if r.slack is not None else None,
                    "status": r.status.value,
                    "class": r.eq_class,
                    "note": r.note,
                    **({"counterexample": r.payload} if r.payload else {}),
                }
                for r in self.rows
            ],
        }


CSV_COLUMNS = ["graph6", "n", "check", "lambda_poly", "lambda_approx", "mult", "n_minus_mult",
               "gamma_variant", "gamma_value", "slack", "status", "class"]


def _blank(x) -> str:
    return "" if x is None else str(x)


def _num(x) -> str:
    if x is None:
        return ""
    return "infinite" if x == math.inf else str(x)


def _status_text(status: Status, reason: str) -> str:
    return f"{status.value}:{reason}" if reason else status.value


def _aggregate(rows: list[Row]) -> Status:
    present = {r.status for r in rows}
    for s in _PRIORITY:
        if s in present:
            return s
    return Status.HOLDS


def _g6(g: Graph) -> str:
    return encode_graph6(g) if g.n <= GRAPH6_MAX_ORDER else f"n{g.n}:{g.adj}"


def _payload(g: Graph, lam: AlgebraicNumber, **witnesses) -> dict:
    return {"graph6": _g6(g), "lambda_poly": str(lam.poly),
            "lambda_interval": [str(lam.interval.lo), str(lam.interval.hi)],
            **{k: list(v) if isinstance(v, tuple) else v for k, v in witnesses.items()}}


def _report(g: Graph, check: Check, rows: list[Row], p: int | None = None,
            reason: str = "") -> TheoremReport:
    return TheoremReport(_g6(g), g.n, check, _aggregate(rows), rows, reason, p)


def _skipped(g: Graph, check: Check, reason: str, p: int | None = None) -> TheoremReport:
    return TheoremReport(_g6(g), g.n, check, Status.SKIPPED, [], reason, p)


@lru_cache(maxsize=4096)
def _min_size(g: Graph, variant: DominationVariant):
    return minimum_size(g, variant)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("theorem checks need a connected graph")


# ---------------------------------------------------------------- classification

def classify_domination_equality(g: Graph, lam: AlgebraicNumber) -> str:
    """Structural membership in the family where gamma meets the spectral bound."""
    if g.n == 1:
        return "ZeroK1" if lam == 0 else "NotEquality"
    if is_complete(g):
        if lam == -1:
            return "MinusOneKn"
        if g.n == 2 and lam == 1:
            return "OneK2"
        return "NotEquality"
    parts = complete_bipartite_parts(g)
    if parts and min(parts) >= 2 and lam == 0:
        return f"ZeroKrs({parts[0]},{parts[1]})"
    return "NotEquality"


def classify_total_equality(g: Graph, lam: AlgebraicNumber) -> str:
    """Structural membership in the families where gamma_t meets the spectral bound."""
    if g.n == 5 and is_cycle(g) and lam.is_root_of(GOLDEN):
        return "GoldenC5"
    if complete_bipartite_parts(g) == (1, 2) and lam.is_root_of(SQRT2):
        return "Sqrt2K12"
    parts = complete_bipartite_parts(g)
    if parts and lam == 0:
        return f"ZeroKrs({parts[0]},{parts[1]})"
    return "NotEquality"


# ---------------------------------------------------------------- checks

def verify_thm31(g: Graph) -> TheoremReport:
    """gamma(G) <= n - m(lambda) for every adjacency eigenvalue, equality only in the family."""
    _require_connected(g)
    gam = _min_size(g, DOMINATION)
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        bound = g.n - m
        cls = classify_domination_equality(g, lam)
        if g.n == 1:
            rows.append(Row(lam, m, bound, "gamma", gam, Status.EDGE_CASE, cls,
                            note="listed equality case, but gamma(K1)=1 > 0"))
            continue
        if gam > bound:
            rows.append(Row(lam, m, bound, "gamma", gam, Status.VIOLATED, cls,
                            note="bound fails", payload=_payload(g, lam)))
        elif gam == bound:
            if cls == "NotEquality":
                rows.append(Row(lam, m, bound, "gamma", gam, Status.VIOLATED, cls,
                                note="equality outside the characterized family",
                                payload=_payload(g, lam)))
            else:
                rows.append(Row(lam, m, bound, "gamma", gam, Status.EQUALITY, cls))
        else:
            status = Status.HOLDS
            note = ""
            if cls != "NotEquality":
                status, note = Status.VIOLATED, "family member without equality"
            rows.append(Row(lam, m, bound, "gamma", gam, status, "NotEquality", note=note,
                            payload=_payload(g, lam) if note else None))
    return _report(g, Check.DOMINATION_BOUND, rows)


def verify_thm31_total(g: Graph) -> TheoremReport:
    """gamma_t(G) <= n - m(lambda) for every adjacency eigenvalue when G is not complete."""
    _require_connected(g)
    if is_complete(g):
        return _skipped(g, Check.TOTAL_DOMINATION_BOUND, "complete graph")
    gt = _min_size(g, TOTAL)
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        bound = g.n - m
        if gt > bound:
            rows.append(Row(lam, m, bound, "gamma_t", gt, Status.VIOLATED, "NotEquality",
                            note="bound fails", payload=_payload(g, lam)))
        else:
            st = Status.EQUALITY if gt == bound else Status.HOLDS
            rows.append(Row(lam, m, bound, "gamma_t", gt, st,
                            classify_total_equality(g, lam) if gt == bound else "NotEquality"))
    return _report(g, Check.TOTAL_DOMINATION_BOUND, rows)


def verify_thm33(g: Graph) -> TheoremReport:
    """Where gamma_t meets the bound: irrational only for C5/K_{1,2}, rational only integers <= 1, zero only for K_{r,s}."""
    _require_connected(g)
    gt = _min_size(g, TOTAL)
    if gt == math.inf:
        return _skipped(g, Check.TOTAL_EQUALITY, "gamma_t infinite")
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        bound = g.n - m
        cls = classify_total_equality(g, lam)
        row = Row(lam, m, bound, "gamma_t", gt, Status.HOLDS, "NotEquality")
        if gt == bound:
            row.status = Status.EQUALITY
            row.eq_class = cls
            q = lam.rational_value
            if q is None:
                if cls not in ("GoldenC5", "Sqrt2K12"):
                    row.status, row.note = Status.VIOLATED, "irrational equality outside C5, K_{1,2}"
            elif q.denominator != 1 or q > 1:
                if is_complete(g):
                    # gamma_t(K_3) = 2 = 3 - m(2): complete graphs sit outside the gamma_t bound
                    row.status, row.eq_class = Status.EDGE_CASE, f"CompleteGraph({q})"
                    row.note = "equality at an integer > 1 on a complete graph"
                else:
                    row.status, row.note = Status.VIOLATED, "rational equality not an integer <= 1"
            elif q == 0:
                if not cls.startswith("ZeroKrs"):
                    row.status, row.note = Status.VIOLATED, "equality at 0 for a non-K_{r,s}"
            else:
                row.eq_class = f"IntegerOpen({q})"
        elif cls != "NotEquality":
            row.status, row.note = Status.VIOLATED, f"{cls} without equality"
        if gt > bound and not is_complete(g):
            row.status, row.note = Status.VIOLATED, "bound fails"
        if row.status == Status.VIOLATED:
            row.payload = _payload(g, lam)
        rows.append(row)
    return _report(g, Check.TOTAL_EQUALITY, rows)


def verify_cor_regular(g: Graph) -> TheoremReport:
    """For regular G: gamma <= n - m_L(mu) for Laplacian eigenvalues, and m_L(k - lam) = m_A(lam)."""
    _require_connected(g)
    if not g.is_regular():
        return _skipped(g, Check.REGULAR_LAPLACIAN, "not regular")
    k = g.degree(0)
    gam = _min_size(g, DOMINATION)
    rows = []
    for lam, m in spectrum(g, LAP).eigs:
        bound = g.n - m
        st = Status.VIOLATED if gam > bound else (Status.EQUALITY if gam == bound else Status.HOLDS)
        note = ""
        if g.n == 1:
            st, note = Status.EDGE_CASE, "gamma(K1)=1 > 0, as in the adjacency bound"
        rows.append(Row(lam, m, bound, "gamma", gam, st, kind=LAP, note=note,
                        payload=_payload(g, lam) if st == Status.VIOLATED else None))
    for lam, m in spectrum(g, ADJ).eigs:
        ml = multiplicity(g, LAP, lam.k_minus(k))
        if ml != m:
            rows.append(Row(lam, m, None, "m_L(k-lambda)", ml, Status.VIOLATED,
                            note="Laplacian shift mismatch", payload=_payload(g, lam)))
    return _report(g, Check.REGULAR_LAPLACIAN, rows)


def _gene_precondition(g: Graph, p: int) -> str | None:
    delta = g.min_degree
    if p > delta:
        return f"p > min degree ({p} > {delta})"
    s = spectrum(g, ADJ).s
    if s < g.n - delta + p:
        return f"s < n - delta + p ({s} < {g.n - delta + p})"
    return None


def verify_gene(g: Graph, p: int) -> TheoremReport:
    """With s >= n - delta + p, every star complement is p-dominating (all of them for small n)."""
    _require_connected(g)
    why = _gene_precondition(g, p)
    if why:
        return _skipped(g, Check.STAR_COMPLEMENT_P_DOMINATING, why, p)
    gp = _min_size(g, DominationVariant.pdom(p))
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        part = find_star_set(g, lam)
        bad = None if is_p_dominating(g, part.complement, p) else part.star_set
        if bad is None and g.n <= EXHAUSTIVE_STAR_ORDER:
            full = set(range(g.n))
            for x in enumerate_star_sets(g, lam):
                if not is_p_dominating(g, full - set(x), p):
                    bad = x
                    break
        bound = g.n - m
        if bad is not None:
            rows.append(Row(lam, m, bound, DominationVariant.pdom(p).name, gp, Status.VIOLATED,
                            note="star complement not p-dominating",
                            payload=_payload(g, lam, star_set=bad)))
        elif gp > bound:
            rows.append(Row(lam, m, bound, DominationVariant.pdom(p).name, gp, Status.VIOLATED,
                            note="bound fails", payload=_payload(g, lam)))
        else:
            rows.append(Row(lam, m, bound, DominationVariant.pdom(p).name, gp,
                            Status.EQUALITY if gp == bound else Status.HOLDS))
    return _report(g, Check.STAR_COMPLEMENT_P_DOMINATING, rows, p)


def verify_cor42(g: Graph, p: int) -> TheoremReport:
    """gamma_p <= n - m(lambda) under the same distinct-eigenvalue condition."""
    _require_connected(g)
    why = _gene_precondition(g, p)
    if why:
        return _skipped(g, Check.P_DOMINATION_BOUND, why, p)
    gp = _min_size(g, DominationVariant.pdom(p))
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        bound = g.n - m
        st = Status.VIOLATED if gp > bound else (Status.EQUALITY if gp == bound else Status.HOLDS)
        rows.append(Row(lam, m, bound, DominationVariant.pdom(p).name, gp, st,
                        payload=_payload(g, lam) if st == Status.VIOLATED else None))
    return _report(g, Check.P_DOMINATION_BOUND, rows, p)


def verify_lem43(g: Graph) -> TheoremReport:
    """Each greedy star set is a lambda-annihilator, and annihilators bound the multiplicity."""
    _require_connected(g)
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        part = find_star_set(g, lam)
        try:
            star_ok = is_lambda_annihilator(g, ADJ, lam, part.star_set)
            comp_ok = bool(part.complement) and is_lambda_annihilator(
                g, ADJ, lam, part.complement)
        except UnsupportedDegreeError:
            rows.append(Row(lam, m, g.n - m, "annihilator_size", None, Status.SKIPPED,
                            note="eigenvalue degree > 2"))
            continue
        row = Row(lam, m, g.n - m, "annihilator_size", len(part.star_set), Status.HOLDS,
                  note=f"complement annihilates: {comp_ok}")
        if not star_ok:
            row.status, row.note = Status.VIOLATED, "star set is not a lambda-annihilator"
        elif m > len(part.star_set) or (comp_ok and m > len(part.complement)):
            row.status, row.note = Status.VIOLATED, "annihilator smaller than multiplicity"
        if row.status == Status.VIOLATED:
            row.payload = _payload(g, lam, star_set=part.star_set)
        rows.append(row)
    return _report(g, Check.ANNIHILATOR, rows)


def verify_tok(g: Graph, p: int, reading: str = "conservative") -> TheoremReport:
    """If gamma_p > p and the private-neighbour hypothesis holds, gamma_p <= n - m for A and L."""
    _require_connected(g)
    hyp = tok_hypothesis(g, p, reading)
    if not hyp.holds:
        return _skipped(g, Check.PRIVATE_NEIGHBOR_BOUND, hyp.reason, p)
    gp = hyp.gamma_p
    witness = set(hyp.witness_set)
    others = [v for v in range(g.n) if v not in witness]
    rows = []
    for kind in (ADJ, LAP):
        for lam, m in spectrum(g, kind).eigs:
            bound = g.n - m
            try:
                ann = is_lambda_annihilator(g, kind, lam, others)
                note = "annihilator" if ann else "complement of witness is not an annihilator"
            except UnsupportedDegreeError:
                ann, note = None, "annihilator path skipped: degree > 2"
            row = Row(lam, m, bound, DominationVariant.pdom(p).name, gp,
                      Status.EQUALITY if gp == bound else Status.HOLDS, kind=kind, note=note)
            if gp > bound:
                row.status, row.note = Status.VIOLATED, "bound fails"
            elif ann and m > len(others):
                row.status, row.note = Status.VIOLATED, "annihilator smaller than multiplicity"
            if row.status == Status.VIOLATED:
                row.payload = _payload(g, lam, witness_set=hyp.witness_set)
            rows.append(row)
    return _report(g, Check.PRIVATE_NEIGHBOR_BOUND, rows, p,
                   reason="" if hyp.swap_connected else "hypothesis holds without swap connectivity")


def _tok_with(reading: str):
    return lambda g, p: verify_tok(g, p, reading)


def verify_star_machinery(g: Graph) -> TheoremReport:
    """Star-set constructions succeed and their complements dominate as expected."""
    _require_connected(g)
    rows = []
    for lam, m in spectrum(g, ADJ).eigs:
        part = find_star_set(g, lam)
        conn = find_connected_star_complement(g, lam)
        problems = []
        if not is_star_set(g, lam, part.star_set):
            problems.append("greedy output is not a star set")
        if not is_star_set(g, lam, conn.star_set):
            problems.append("connected complement is not a star complement")
        if conn.complement and not conn.complement_connected(g):
            problems.append("complement not connected")
        if lam != 0 and not is_p_dominating(g, part.complement, 1):
            problems.append("complement not dominating")
        if g.n > 1 and not is_p_dominating(g, conn.complement, 1):
            problems.append("connected complement not dominating")
        if lam != 0 and lam != -1:
            if not is_location_dominating(g, part.complement):
                problems.append("complement not location-dominating")
        st = Status.VIOLATED if problems else Status.HOLDS
        rows.append(Row(lam, m, g.n - m, "star_complement_size", len(part.complement), st,
                        note="; ".join(problems),
                        payload=_payload(g, lam, star_set=part.star_set,
                                         connected_complement=conn.complement)
                        if problems else None))
    return _report(g, Check.STAR_MACHINERY, rows)


def run_checks(g: Graph, checks: Iterable[Check] = DEFAULT_CHECKS,
               p_values: Iterable[int] = (1, 2, 3),
               tok_reading: str = "conservative") -> list[TheoremReport]:
    p_values = tuple(p_values)
    out = []
    for c in checks:
        if c in P_CHECKS:
            fn = {Check.STAR_COMPLEMENT_P_DOMINATING: verify_gene,
                  Check.P_DOMINATION_BOUND: verify_cor42,
                  Check.PRIVATE_NEIGHBOR_BOUND: _tok_with(tok_reading)}[c]
            out.extend(fn(g, p) for p in p_values)
        else:
            fn = {Check.DOMINATION_BOUND: verify_thm31,
                  Check.TOTAL_DOMINATION_BOUND: verify_thm31_total,
                  Check.TOTAL_EQUALITY: verify_thm33,
                  Check.REGULAR_LAPLACIAN: verify_cor_regular,
                  Check.ANNIHILATOR: verify_lem43,
                  Check.STAR_MACHINERY: verify_star_machinery}[c]
            out.append(fn(g))
    return out


# ---------------------------------------------------------------- census and sweeps

@dataclass(frozen=True)
class CensusEntry:
    check: str
    graph6: str
    lam: str
    eq_class: str
    matrix: str = "adjacency"


@dataclass
class Census:
    graphs: int = 0
    disconnected: int = 0
    violations: int = 0
    statuses: Counter = field(default_factory=Counter)
    equalities: list[CensusEntry] = field(default_factory=list)

    def add(self, report: TheoremReport) -> None:
        key = report.check.value + (f"[p={report.p}]" if report.p is not None else "")
        self.statuses[(key, report.status.value)] += 1
        if report.status == Status.VIOLATED:
            self.violations += 1
        for r in report.rows:
            if r.status == Status.EQUALITY:
                self.equalities.append(CensusEntry(key, report.graph6, r.lam.display(),
                                                   r.eq_class, r.kind.value))

    def merge(self, other: Census) -> Census:
        return Census(self.graphs + other.graphs, self.disconnected + other.disconnected,
                      self.violations + other.violations, self.statuses + other.statuses,
                      sorted(self.equalities + other.equalities, key=_entry_key))

    def class_counts(self, check: str) -> Counter:
        return Counter(e.eq_class for e in self.equalities if e.check == check)

    def summary_lines(self) -> list[str]:
        lines = [f"graphs: {self.graphs}", f"disconnected skipped: {self.disconnected}",
                 f"violated reports: {self.violations}"]
        for (check, status), k in sorted(self.statuses.items()):
            lines.append(f"{check} {status}: {k}")
        counts = Counter((e.check, e.matrix, e.eq_class) for e in self.equalities)
        for (check, matrix, cls), k in sorted(counts.items()):
            lines.append(f"equality {check} {matrix} {cls}: {k}")
        return lines

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "disconnected": self.disconnected,
            "violations": self.violations,
            "statuses": {f"{c}:{s}": k for (c, s), k in sorted(self.statuses.items())},
            "equalities": [e.__dict__ for e in sorted(self.equalities, key=_entry_key)],
        }


def _entry_key(e: CensusEntry) -> tuple:
    return (e.check, e.graph6, e.matrix, e.lam, e.eq_class)


def _work(args) -> list[TheoremReport] | None:
    g, checks, p_values, reading = args
    if not is_connected(g):
        return None
    return run_checks(g, checks, p_values, reading)


def sweep(source: Iterable[Graph], checks: Iterable[Check] = DEFAULT_CHECKS,
          p_values: Iterable[int] = (1, 2, 3), census: Census | None = None,
          keep_going: bool = True, jobs: int = 1,
          tok_reading: str = "conservative") -> Iterator[TheoremReport]:
    """Run ``checks`` over every graph of ``source`` in order, feeding ``census``.

    With ``keep_going=False`` the stream stops after the first violated report.
    Disconnected graphs are counted and skipped.
    """
    checks = tuple(checks)
    p_values = tuple(p_values)
    census = census if census is not None else Census()
    tasks = ((g, checks, p_values, tok_reading) for g in source)
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
        results = pool.imap(_work, tasks, chunksize=256)
    else:
        pool = None
        results = map(_work, tasks)
    try:
        for reports in results:
            census.graphs += 1
            if reports is None:
                census.disconnected += 1
                continue
            stop = False
            for rep in reports:
                census.add(rep)
                yield rep
                stop |= rep.status == Status.VIOLATED
            if stop and not keep_going:
                return
    finally:
        if pool is not None:
            pool.terminate()
