from __future__ import annotations

import math
from fractions import Fraction

import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

import oracles
from stardom.graph import complete, cycle, path
from stardom.matrix import bareiss_det, charpoly, exact_rank, rank_mod_p
from stardom.poly import (
    Interval,
    IntPolynomial,
    cauchy_bound,
    isolate_real_roots,
    poly_gcd,
    refine_to,
    squarefree_part,
    sturm_count,
    yun_squarefree,
)
from stardom.spectra import matrix_of

P = IntPolynomial.of
X2_MINUS_2 = P(-2, 0, 1)
GOLDEN = P(-1, 1, 1)


def expand(factors) -> IntPolynomial:
    out = P(1)
    for f, e in factors:
        out = out * f ** e
    return out


small_ints = st.integers(-6, 6)


@st.composite
def factored_polys(draw):
    """Products of (x - r)^e with integer r, so the true decomposition is known."""
    roots = draw(st.lists(small_ints, min_size=1, max_size=5, unique=True))
    exps = [draw(st.integers(1, 3)) for _ in roots]
    return roots, exps


class TestCharpoly:
    def test_triangle(self):
        assert charpoly(matrix_of(complete(3))) == P(-2, -3, 0, 1)

    def test_single_vertex(self):
        assert charpoly([[0]]) == P(0, 1)

    def test_five_cycle(self):
        assert charpoly(matrix_of(cycle(5))) == P(-2, 5, 0, -5, 0, 1)

    def test_factorisations(self):
        assert charpoly(matrix_of(complete(3))) == P(-2, 1) * P(1, 1) ** 2
        assert charpoly(matrix_of(cycle(5))) == P(-2, 1) * GOLDEN ** 2

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            charpoly([[1, 2]])

    @given(graphs(max_n=7, connected=False))
    def test_matches_interpolation_oracle(self, g):
        m = matrix_of(g)
        assert charpoly(m).coeffs == oracles.charpoly_interp(m)

    @given(st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                           min_size=n, max_size=n)))
    def test_trace_and_determinant(self, m):
        n = len(m)
        c = charpoly(m).coeffs
        assert c[n] == 1
        assert c[n - 1] == -sum(m[i][i] for i in range(n))
        assert c[0] == (-1) ** n * bareiss_det(m)
        assert bareiss_det(m) == oracles.det_fraction(m)

    @given(graphs(max_n=8, connected=False))
    def test_adjacency_charpoly_positive_at_n(self, g):
        assert charpoly(matrix_of(g))(g.n) > 0


class TestSquareFree:
    def test_triangle_charpoly(self):
        assert yun_squarefree(P(-2, -3, 0, 1)) == [(P(-2, 1), 1), (P(1, 1), 2)]

    def test_five_cycle_charpoly(self):
        assert yun_squarefree(P(-2, 5, 0, -5, 0, 1)) == [(P(-2, 1), 1), (GOLDEN, 2)]

    def test_already_square_free(self):
        assert yun_squarefree(X2_MINUS_2) == [(X2_MINUS_2, 1)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            yun_squarefree(P())

    @given(factored_polys(), st.integers(1, 4))
    def test_re_expansion(self, rf, content):
        roots, exps = rf
        p = expand([(P(-r, 1), e) for r, e in zip(roots, exps)]) * content
        dec = yun_squarefree(p)
        assert expand(dec) * content == p
        assert [e for _, e in dec] == sorted({e for e in exps})
        for f, e in dec:
            assert f.content() == 1 and f.lc > 0
            assert poly_gcd(f, f.derivative()).degree == 0
            assert f.degree == sum(1 for x in exps if x == e)

    @given(graphs(max_n=7, connected=False))
    def test_re_expansion_on_charpolys(self, g):
        p = charpoly(matrix_of(g))
        assert expand(yun_squarefree(p)) == p


class TestSturm:
    def test_examples(self):
        assert sturm_count(X2_MINUS_2, Interval(0, 2)) == 1
        assert sturm_count(X2_MINUS_2, Interval(-2, 2)) == 2
        assert sturm_count(GOLDEN, Interval(0, 1)) == 1

    def test_half_open_endpoints(self):
        # x(x-1): root 1 counted in (0, 1], root 0 excluded
        p = P(0, -1, 1)
        assert sturm_count(p, Interval(0, 1)) == 1
        assert sturm_count(p, Interval(-1, 0)) == 1
        assert sturm_count(p, Interval(Fraction(1, 2), 2)) == 1

    def test_requires_square_free(self):
        with pytest.raises(ValueError):
            sturm_count(P(1, 2, 1), Interval(-2, 2))

    def test_golden_root_location(self):
        root = oracles.bisection(lambda x: x * x + x - 1, 0, 1)
        iv = refine_to(GOLDEN, Interval(0, 1), Fraction(1, 10**9))
        assert float(iv.lo) <= root <= float(iv.hi)

    @given(factored_polys(), st.integers(1, 6))
    def test_totality_over_partitions(self, rf, pieces):
        roots, _ = rf
        p = expand([(P(-r, 1), 1) for r in roots])
        b = cauchy_bound(p)
        cuts = [Fraction(-b) + Fraction(2 * b * k, pieces) for k in range(pieces + 1)]
        total = sum(sturm_count(p, Interval(lo, hi)) for lo, hi in zip(cuts, cuts[1:]))
        assert total == len(roots) == squarefree_part(p).degree


class TestIsolation:
    def test_sqrt_two(self):
        lo, hi = isolate_real_roots(X2_MINUS_2)
        b = cauchy_bound(X2_MINUS_2)
        assert -b <= lo.lo and hi.hi <= b and lo.hi <= hi.lo
        assert float(lo.lo) < -math.sqrt(2) < float(lo.hi)
        assert float(hi.lo) < math.sqrt(2) < float(hi.hi)

    def test_golden(self):
        ivs = isolate_real_roots(GOLDEN)
        for iv, x in zip(ivs, (-1.618033988749895, 0.6180339887498949)):
            assert x in Interval(iv.lo, iv.hi) or float(iv.lo) < x <= float(iv.hi)

    def test_linear(self):
        (iv,) = isolate_real_roots(P(-2, 1))
        assert 2 in iv

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            isolate_real_roots(P(3))

    @given(factored_polys())
    def test_intervals_isolate_and_endpoints_are_not_roots(self, rf):
        roots, _ = rf
        p = expand([(P(-r, 1), 1) for r in roots])
        ivs = isolate_real_roots(p)
        assert len(ivs) == len(roots)
        for iv, r in zip(ivs, sorted(roots)):
            assert r in iv
            assert p.sign_at(iv.lo) != 0 and p.sign_at(iv.hi) != 0
        assert all(a.hi <= b.lo for a, b in zip(ivs, ivs[1:]))


class TestGcd:
    def test_linear_factor(self):
        assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)

    def test_path_charpolys(self):
        p4 = charpoly(matrix_of(path(4)))
        p3 = charpoly(matrix_of(path(3)))
        assert poly_gcd(p4, GOLDEN) == GOLDEN
        assert poly_gcd(p3, GOLDEN) == P(1)

    @given(factored_polys(), factored_polys())
    def test_common_roots(self, a, b):
        pa = expand([(P(-r, 1), e) for r, e in zip(*a)])
        pb = expand([(P(-r, 1), e) for r, e in zip(*b)])
        expected = expand([(P(-r, 1), min(ea, eb)) for r, ea in zip(*a)
                           for s, eb in zip(*b) if r == s])
        assert poly_gcd(pa, pb) == expected


class TestRank:
    @given(st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                           min_size=1, max_size=7)))
    def test_exact_rank_matches_fraction_elimination(self, rows):
        r = oracles.fraction_rank(rows)
        assert exact_rank(rows) == r
        assert rank_mod_p(rows, 2**61 - 1) <= r
