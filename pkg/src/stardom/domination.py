"""Exact domination, total domination and p-domination numbers with witnesses."""

from __future__ import annotations

import itertools
import json
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from .graph import Graph, is_connected, mask_of, popcount, vertices_of


@dataclass(frozen=True)
class DominationVariant:
    kind: str  # "domination" | "total" | "p"
    p: int = 1

    def __post_init__(self):
        if self.kind not in ("domination", "total", "p"):
            raise ValueError(f"unknown domination variant {self.kind!r}")
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        if self.kind == "p" and self.p == 1:
            object.__setattr__(self, "kind", "domination")

    @classmethod
    def pdom(cls, p: int) -> DominationVariant:
        return cls("p", p)

    @property
    def name(self) -> str:
        if self.kind == "total":
            return "gamma_t"
        return "gamma" if self.p == 1 else f"gamma_{self.p}"


DOMINATION = DominationVariant("domination")
TOTAL = DominationVariant("total")


@dataclass(frozen=True)
class DominationCertificate:
    variant: DominationVariant
    value: int | float  # math.inf when no feasible set exists
    witness: tuple[int, ...] | None = field(default=None)

    @property
    def infinite(self) -> bool:
        return self.value == math.inf

    def to_dict(self) -> dict:
        d = {"variant": self.variant.kind}
        if self.variant.kind == "p":
            d["p"] = self.variant.p
        d["value"] = "infinite" if self.infinite else self.value
        d["witness"] = None if self.witness is None else list(self.witness)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------- predicates

def _p_dominating_mask(g: Graph, s: int, p: int) -> bool:
    outside = g.full_mask & ~s
    while outside:
        low = outside & -outside
        if popcount(g.adj[low.bit_length() - 1] & s) < p:
            return False
        outside ^= low
    return True


def _total_dominating_mask(g: Graph, s: int) -> bool:
    return all(a & s for a in g.adj)


def satisfies(g: Graph, s: int, variant: DominationVariant) -> bool:
    if variant.kind == "total":
        return _total_dominating_mask(g, s)
    return _p_dominating_mask(g, s, variant.p)


def is_p_dominating(g: Graph, s: Iterable[int], p: int = 1) -> bool:
    return _p_dominating_mask(g, mask_of(s), p)


def is_total_dominating(g: Graph, s: Iterable[int]) -> bool:
    return _total_dominating_mask(g, mask_of(s))


# ---------------------------------------------------------------- solver

def _first_unsatisfied(g: Graph, s: int, variant: DominationVariant) -> int | None:
    if variant.kind == "total":
        for v, a in enumerate(g.adj):
            if not a & s:
                return v
        return None
    p = variant.p
    for v, a in enumerate(g.adj):
        if not s >> v & 1 and popcount(a & s) < p:
            return v
    return None


def _branches(g: Graph, u: int, s: int, variant: DominationVariant) -> int:
    """Vertices whose addition makes progress on the unsatisfied vertex ``u``."""
    if variant.kind == "total":
        return g.adj[u] & ~s
    return (g.adj[u] | 1 << u) & ~s


def satisfies_vertex(g: Graph, s: int, v: int, variant: DominationVariant) -> bool:
    if variant.kind == "total":
        return bool(g.adj[v] & s)
    return bool(s >> v & 1) or popcount(g.adj[v] & s) >= variant.p


def _unsatisfied(g: Graph, s: int, variant: DominationVariant) -> int:
    return sum(1 for v in range(g.n) if not satisfies_vertex(g, s, v, variant))


def _greedy(g: Graph, variant: DominationVariant) -> int | None:
    s = 0
    while True:
        u = _first_unsatisfied(g, s, variant)
        if u is None:
            return s
        cand = _branches(g, u, s, variant)
        if not cand:
            return None
        v = min(vertices_of(cand), key=lambda v: _unsatisfied(g, s | 1 << v, variant))
        s |= 1 << v


def minimum_size(g: Graph, variant: DominationVariant) -> int | float:
    """Branch and bound on the lowest-index unsatisfied vertex."""
    start = _greedy(g, variant)
    if start is None:
        return math.inf
    best = popcount(start)
    seen: set[int] = set()

    def search(s: int, size: int) -> None:
        nonlocal best
        if s in seen:
            return
        seen.add(s)
        u = _first_unsatisfied(g, s, variant)
        if u is None:
            best = min(best, size)
            return
        if size + 1 >= best:
            return
        for v in vertices_of(_branches(g, u, s, variant)):
            search(s | 1 << v, size + 1)

    search(0, 0)
    return best


def least_witness(g: Graph, size: int, variant: DominationVariant) -> tuple[int, ...]:
    """Lexicographically least feasible set of the given size."""
    for combo in itertools.combinations(range(g.n), size):
        if satisfies(g, mask_of(combo), variant):
            return combo
    raise ValueError(f"no {variant.name} set of size {size}")


def minimum_sets(g: Graph, variant: DominationVariant) -> list[tuple[int, ...]]:
    """All minimum feasible sets, in lexicographic order."""
    k = minimum_size(g, variant)
    if k == math.inf:
        return []
    return [c for c in itertools.combinations(range(g.n), k)
            if satisfies(g, mask_of(c), variant)]


def domination_number(g: Graph, variant: DominationVariant = DOMINATION) -> DominationCertificate:
    if not is_connected(g):
        raise ValueError("domination numbers are computed for connected graphs only")
    k = minimum_size(g, variant)
    if k == math.inf:
        return DominationCertificate(variant, math.inf, None)
    return DominationCertificate(variant, k, least_witness(g, k, variant))


def gamma(g: Graph) -> int:
    return domination_number(g, DOMINATION).value


def gamma_t(g: Graph) -> int | float:
    return domination_number(g, TOTAL).value


def gamma_p(g: Graph, p: int) -> int:
    return domination_number(g, DominationVariant.pdom(p)).value


# ---------------------------------------------------------------- private neighbours

def epn_witnesses(g: Graph, s: Iterable[int], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Pairs ``(T, u)``: ``u`` outside ``S`` whose neighbourhood in ``S`` is exactly ``T``, ``|T| = p``."""
    sm = mask_of(s)
    out = []
    for u in range(g.n):
        if sm >> u & 1:
            continue
        t = g.adj[u] & sm
        if popcount(t) == p:
            out.append((vertices_of(t), u))
    return out


TOK_READINGS = ("conservative", "weak", "swap", "strong")


@dataclass(frozen=True)
class TokResult:
    holds: bool
    witness_set: tuple[int, ...] | None
    reason: str
    gamma_p: int | float
    reading: str = "conservative"
    # every vertex of S lies in a witnessed p-subset, overlap ignored
    weak_holds: bool = False
    # swap graph of witnessed subsets connects S, which forces every
    # eigenvector vanishing off S to vanish on S as well
    swap_connected: bool = False
    # every p-subset of S has an external private neighbour
    strong_holds: bool = False


def _components_connected(nodes: list, adjacent) -> bool:
    if not nodes:
        return False
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(nodes)):
            if j not in seen and adjacent(nodes[i], nodes[j]):
                seen.add(j)
                stack.append(j)
    return len(seen) == len(nodes)


def private_neighbor_condition(g: Graph, s: tuple[int, ...], p: int) -> dict[str, bool]:
    """Truth of each reading of the private-neighbour hypothesis for the set ``s``.

    ``conservative``: witnessed p-subsets cover ``s`` and are connected when joined
    on sharing ``p - 1`` vertices.  ``weak``: coverage only.  ``swap``: coverage, and
    the vertices of ``s`` are connected by the swaps ``x -> y`` between witnessed
    subsets ``T + x`` and ``T + y``.  ``strong``: every p-subset of ``s`` is witnessed.
    """
    witnessed = sorted({t for t, _ in epn_witnesses(g, s, p)})
    covered = set().union(*map(set, witnessed)) if witnessed else set()
    weak = covered == set(s)
    overlap_ok = weak and _components_connected(
        witnessed, lambda a, b: len(set(a) & set(b)) == p - 1)
    swap_edges = {v: set() for v in s}
    for a, b in itertools.combinations(witnessed, 2):
        sa, sb = set(a), set(b)
        if len(sa & sb) == p - 1:
            (x,), (y,) = sa - sb, sb - sa
            swap_edges[x].add(y)
            swap_edges[y].add(x)
    verts = list(s)
    swap_ok = weak and (p == 1 or _components_connected(
        verts, lambda x, y: y in swap_edges[x]))
    strong = len(witnessed) == math.comb(len(s), p)
    return {"conservative": overlap_ok, "weak": weak, "swap": swap_ok, "strong": strong}


def tok_hypothesis(g: Graph, p: int, reading: str = "conservative") -> TokResult:
    """Search the minimum p-dominating sets for one meeting the private-neighbour hypothesis.

    The default reading: every vertex of ``S`` lies in some p-subset that has an
    external private neighbour, and those witnessed p-subsets form a connected
    graph when two are joined whenever they share ``p - 1`` vertices.  Other
    readings are listed in :func:`private_neighbor_condition`.
    """
    if reading not in TOK_READINGS:
        raise ValueError(f"unknown reading {reading!r}; choose from {TOK_READINGS}")
    variant = DominationVariant.pdom(p)
    gp = minimum_size(g, variant)
    if gp <= p:
        return TokResult(False, None, f"gamma_p <= p ({gp} <= {p})", gp, reading)
    seen = dict.fromkeys(TOK_READINGS, False)
    for s in minimum_sets(g, variant):
        flags = private_neighbor_condition(g, s, p)
        for k, v in flags.items():
            seen[k] |= v
        if flags[reading]:
            return TokResult(True, s, "ok", gp, reading, flags["weak"], flags["swap"],
                             flags["strong"])
    if seen["weak"]:
        reason = f"{reading} reading fails on every minimum p-dominating set"
    else:
        reason = "no minimum p-dominating set has the private-neighbour property"
    return TokResult(False, None, reason, gp, reading, seen["weak"], seen["swap"], seen["strong"])
