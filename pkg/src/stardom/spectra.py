"""Exact spectra of graph adjacency and Laplacian matrices."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebraic import (
    AlgebraicNumber,
    QuadraticElement,
    UnsupportedDegreeError,
    squarefree_decompose,
)
from .graph import Graph, induced_adjacency
from .matrix import charpoly, exact_rank, rank_mod_p
from .poly import IntPolynomial, isolate_real_roots, squarefree_part, sturm_count, yun_squarefree


class MatrixKind(str, enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"


ADJ = MatrixKind.ADJACENCY
LAP = MatrixKind.LAPLACIAN


def _matrix(adj: tuple[int, ...], kind: MatrixKind) -> list[list[int]]:
    n = len(adj)
    a = [[adj[i] >> j & 1 for j in range(n)] for i in range(n)]
    if kind == LAP:
        for i in range(n):
            a[i] = [-x for x in a[i]]
            a[i][i] = adj[i].bit_count()
    return a


def matrix_of(g: Graph, kind: MatrixKind = ADJ) -> list[list[int]]:
    return _matrix(g.adj, kind)


@lru_cache(maxsize=1 << 18)
def _charpoly_of(adj: tuple[int, ...], kind: MatrixKind) -> IntPolynomial:
    return charpoly(_matrix(adj, kind))


def graph_charpoly(g: Graph, kind: MatrixKind = ADJ) -> IntPolynomial:
    return _charpoly_of(g.adj, kind)


def induced_charpoly(g: Graph, mask: int, kind: MatrixKind = ADJ) -> IntPolynomial:
    """Characteristic polynomial of ``G[mask]``; the empty graph gives 1."""
    if not mask:
        return IntPolynomial((1,))
    return _charpoly_of(induced_adjacency(g, mask), kind)


@dataclass(frozen=True)
class SpectrumSummary:
    kind: MatrixKind
    eigs: tuple[tuple[AlgebraicNumber, int], ...]

    @property
    def s(self) -> int:
        """Number of distinct eigenvalues."""
        return len(self.eigs)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.eigs)

    @property
    def eigenvalues(self) -> list[AlgebraicNumber]:
        return [lam for lam, _ in self.eigs]

    def multiplicity(self, lam: AlgebraicNumber) -> int:
        for mu, m in self.eigs:
            if mu == lam:
                return m
        return 0

    def __str__(self) -> str:
        return "{" + ", ".join(f"{lam.display()}: {m}" for lam, m in self.eigs) + "}"


@lru_cache(maxsize=1 << 14)
def _spectrum_of(coeffs: tuple[int, ...], kind: MatrixKind) -> SpectrumSummary:
    p = IntPolynomial(coeffs)
    factors = yun_squarefree(p)
    sf = squarefree_part(p)
    eigs = []
    for iv in isolate_real_roots(sf):
        for f, e in factors:
            if sturm_count(f, iv, check=False) == 1:
                eigs.append((AlgebraicNumber(f, iv), e))
                break
    return SpectrumSummary(kind, tuple(eigs))


def spectrum(g: Graph, kind: MatrixKind = ADJ) -> SpectrumSummary:
    return _spectrum_of(graph_charpoly(g, kind).coeffs, kind)


def root_multiplicity(p: IntPolynomial, lam: AlgebraicNumber) -> int:
    """Multiplicity of ``lam`` as a root of ``p`` (0 if not a root)."""
    if not lam.is_root_of(p):
        return 0
    for f, e in yun_squarefree(p):
        if lam.is_root_of(f):
            return e
    raise AssertionError("root lost in square-free decomposition")


def multiplicity(g: Graph, kind: MatrixKind, lam: AlgebraicNumber) -> int:
    return root_multiplicity(graph_charpoly(g, kind), lam)


def is_eigenvalue_of(h: Graph, kind: MatrixKind, lam: AlgebraicNumber) -> bool:
    return lam.is_root_of(graph_charpoly(h, kind))


def rank_of_graph(g: Graph) -> int:
    return g.n - multiplicity(g, ADJ, AlgebraicNumber.from_rational(0))


def shifted_matrix(g: Graph, kind: MatrixKind, lam: AlgebraicNumber) -> list[list]:
    """A nonzero scalar multiple of ``M - lam*I`` with entries in Z or Z[sqrt d].

    Raises :class:`UnsupportedDegreeError` when ``lam`` has degree above 2.
    """
    mp = lam.minimal_polynomial
    if mp is None:
        raise UnsupportedDegreeError(
            f"eigenvalue {lam.display()} has degree > 2; annihilator test unsupported")
    m = matrix_of(g, kind)
    n = g.n
    if mp.degree == 1:
        num, den = -mp.coeffs[0], mp.coeffs[1]
        return [[den * m[i][j] - (num if i == j else 0) for j in range(n)] for i in range(n)]
    c, b, a = mp.coeffs
    f, d = squarefree_decompose(b * b - 4 * a * c)
    # lam = (-b + sign*f*sqrt(d)) / (2a); sign read off the side of -b/(2a)
    centre = IntPolynomial((b, 2 * a))
    sign = 1 if _above(lam, centre) else -1
    return [[QuadraticElement(2 * a * m[i][j] + (b if i == j else 0),
                              -sign * f if i == j else 0, d)
             for j in range(n)] for i in range(n)]


def _above(lam: AlgebraicNumber, linear: IntPolynomial) -> bool:
    """Whether ``lam`` exceeds the root of the linear polynomial."""
    root = AlgebraicNumber(linear, isolate_real_roots(linear)[0])
    return root < lam


# primes congruent to 3 mod 4, so square roots are a single modular power
_PRIMES = (2**61 - 1, 2**31 - 1, 4294967291, 1000000007, 1000000087)


def _lam_mod_p(mp: IntPolynomial, p: int) -> int | None:
    """Image of a root of ``mp`` (degree 1 or 2) under some ring map into F_p."""
    if mp.degree == 1:
        return -mp.coeffs[0] * pow(mp.coeffs[1], -1, p) % p
    c, b, a = mp.coeffs
    disc = (b * b - 4 * a * c) % p
    if pow(disc, (p - 1) // 2, p) not in (0, 1):
        return None
    root = pow(disc, (p + 1) // 4, p)
    return (-b + root) * pow(2 * a, -1, p) % p


def is_lambda_annihilator(g: Graph, kind: MatrixKind, lam: AlgebraicNumber,
                          s: Iterable[int]) -> bool:
    """True iff no nonzero ``lam``-eigenvector of ``M`` vanishes on all of ``s``.

    Equivalently the columns of ``M - lam*I`` outside ``s`` are independent.
    Full rank modulo a prime certifies this (reduction never raises rank);
    otherwise the rank is computed exactly over Q or Q(sqrt d).
    """
    if multiplicity(g, kind, lam) == 0:
        raise ValueError(f"{lam.display()} is not an eigenvalue")
    mp = lam.minimal_polynomial
    if mp is None:
        raise UnsupportedDegreeError(
            f"eigenvalue {lam.display()} has degree > 2; annihilator test unsupported")
    inside = set(s)
    free = [j for j in range(g.n) if j not in inside]
    if not free:
        return True
    m = matrix_of(g, kind)
    for p in _PRIMES:
        r = _lam_mod_p(mp, p)
        if r is None:
            continue
        rows = [[m[i][j] - (r if i == j else 0) for j in free] for i in range(g.n)]
        if rank_mod_p(rows, p) == len(free):
            return True
        break
    shifted = shifted_matrix(g, kind, lam)
    return exact_rank([[row[j] for j in free] for row in shifted]) == len(free)


# ---------------------------------------------------------------- float oracle

def jacobi_eigenvalues(m, tol: float = 1e-14, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1))
                if theta == 0:
                    t = 1.0
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))


def cluster(values: Iterable[float], tol: float = 1e-8) -> list[tuple[float, int]]:
    """Group sorted floats whose consecutive gaps are below ``tol``."""
    out: list[list] = []
    for x in sorted(values):
        if out and x - out[-1][2] < tol:
            out[-1][1] += 1
            out[-1][2] = x
        else:
            out.append([x, 1, x])
    return [(first, k) for first, k, _ in out]

