"""Star sets, star complements and location-domination."""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .algebraic import AlgebraicNumber
from .graph import Graph, is_connected, is_connected_mask, mask_of, popcount, vertices_of
from .spectra import ADJ, MatrixKind, induced_charpoly, multiplicity, root_multiplicity


@dataclass(frozen=True)
class StarPartition:
    lam: AlgebraicNumber
    star_set: tuple[int, ...]
    complement: tuple[int, ...]
    kind: MatrixKind = ADJ

    def complement_connected(self, g: Graph) -> bool:
        return bool(self.complement) and is_connected_mask(g, mask_of(self.complement))

    def to_dict(self, g: Graph) -> dict:
        return {
            "lambda": self.lam.display(),
            "star_set": list(self.star_set),
            "complement": list(self.complement),
            "complement_connected": self.complement_connected(g),
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g))


def _lam_absent(g: Graph, mask: int, lam: AlgebraicNumber) -> bool:
    return not lam.is_root_of(induced_charpoly(g, mask))


def _mult_in(g: Graph, mask: int, lam: AlgebraicNumber) -> int:
    return root_multiplicity(induced_charpoly(g, mask), lam)


def is_star_set(g: Graph, lam: AlgebraicNumber, x: Iterable[int]) -> bool:
    xm = mask_of(x)
    if popcount(xm) != multiplicity(g, ADJ, lam):
        return False
    return _lam_absent(g, g.full_mask & ~xm, lam)


def find_star_set(g: Graph, lam: AlgebraicNumber) -> StarPartition:
    """Greedy star set: repeatedly delete the lowest vertex that lowers the multiplicity."""
    key = (g, lam.key)
    hit = _STAR_MEMO.get(key)
    if hit is None:
        if len(_STAR_MEMO) > 4096:
            _STAR_MEMO.clear()
        hit = _STAR_MEMO[key] = _greedy_star_set(g, lam)
    return hit


_STAR_MEMO: dict = {}


def _greedy_star_set(g: Graph, lam: AlgebraicNumber) -> StarPartition:
    m = multiplicity(g, ADJ, lam)
    if m == 0:
        raise ValueError(f"{lam.display()} is not an eigenvalue of the graph")
    rest = g.full_mask
    current = m
    removed = 0
    while current:
        for v in vertices_of(rest):
            if _mult_in(g, rest & ~(1 << v), lam) == current - 1:
                rest &= ~(1 << v)
                removed |= 1 << v
                current -= 1
                break
        else:
            raise AssertionError("no multiplicity-reducing vertex; interlacing violated")
    return StarPartition(lam, vertices_of(removed), vertices_of(rest))


def enumerate_star_sets(g: Graph, lam: AlgebraicNumber) -> Iterator[tuple[int, ...]]:
    """Every star set for ``lam``, by brute force over all ``m``-subsets."""
    m = multiplicity(g, ADJ, lam)
    if m == 0:
        return
    for x in itertools.combinations(range(g.n), m):
        if _lam_absent(g, g.full_mask & ~mask_of(x), lam):
            yield x


def _default_seed(g: Graph, lam: AlgebraicNumber) -> int:
    if lam != 0:
        return 1
    for u, v in g.edges():
        return 1 << u | 1 << v
    raise ValueError("graph has no edge to seed a complement for eigenvalue 0")


def find_connected_star_complement(g: Graph, lam: AlgebraicNumber,
                                   seed: Iterable[int] | None = None) -> StarPartition:
    """Grow a connected star complement from ``seed`` by depth-first search.

    Extensions keeping ``lam`` absent are tried first; backtracking covers the rest.
    """
    if not is_connected(g):
        raise ValueError("connected star complements need a connected graph")
    m = multiplicity(g, ADJ, lam)
    if m == 0:
        raise ValueError(f"{lam.display()} is not an eigenvalue of the graph")
    target = g.n - m
    if target == 0:
        if seed:
            raise ValueError("the star complement is empty; no seed can be contained")
        return StarPartition(lam, tuple(range(g.n)), ())
    if seed is None:
        start = _default_seed(g, lam)
    else:
        start = mask_of(seed)
        if not start or start & ~g.full_mask:
            raise ValueError("seed must be a nonempty set of vertices of the graph")
        if not is_connected_mask(g, start):
            raise ValueError("seed must induce a connected subgraph")
        if not _lam_absent(g, start, lam):
            raise ValueError(f"{lam.display()} is an eigenvalue of the seed subgraph")
        if popcount(start) > target:
            raise ValueError("seed is larger than a star complement")
    # Intermediate sets may carry lam (the paw graph at -1 forces a K_2 on the
    # way to a P_3 complement), so absence is only required at full size.
    failed: set[int] = set()

    def grow(c: int) -> int | None:
        if popcount(c) == target:
            return c if _lam_absent(g, c, lam) else None
        if c in failed:
            return None
        frontier = 0
        for v in vertices_of(c):
            frontier |= g.adj[v]
        ext = [c | 1 << w for w in vertices_of(frontier & ~c)]
        ext.sort(key=lambda nxt: not _lam_absent(g, nxt, lam))
        for nxt in ext:
            found = grow(nxt)
            if found is not None:
                return found
        failed.add(c)
        return None

    comp = grow(start)
    if comp is None:
        raise AssertionError("no connected star complement found")
    return StarPartition(lam, vertices_of(g.full_mask & ~comp), vertices_of(comp))


def is_location_dominating(g: Graph, s: Iterable[int]) -> bool:
    sm = mask_of(s)
    seen = set()
    for v in vertices_of(g.full_mask & ~sm):
        nb = g.adj[v] & sm
        if not nb or nb in seen:
            return False
        seen.add(nb)
    return True
