"""Real algebraic numbers by isolating interval, and elements of Q(sqrt d)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .poly import (
    IntPolynomial,
    cauchy_bound,
    Interval,
    isolate_real_roots,
    poly_gcd,
    refine,
    refine_to,
    squarefree_part,
    sturm_count,
)

_APPROX_WIDTH = Fraction(1, 2**60)


class UnsupportedDegreeError(ValueError):
    """An operation needs a rational or quadratic number but got a higher degree."""


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small = [d for d in range(1, math.isqrt(k) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


@lru_cache(maxsize=1 << 16)
def _root_test(f: tuple[int, ...], key: tuple) -> bool:
    poly = IntPolynomial(key[0])
    g = poly_gcd(IntPolynomial(f), poly)
    if g.degree < 1:
        return False
    return sturm_count(g, Interval(key[1], key[2]), check=False) == 1


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """The unique root of square-free ``poly`` in ``interval``.

    Interval endpoints are never roots of ``poly``.
    """

    poly: IntPolynomial
    interval: Interval

    def __post_init__(self):
        p = self.poly.primitive()
        object.__setattr__(self, "poly", p)
        if p.degree < 1:
            raise ValueError("algebraic number needs a nonconstant polynomial")
        iv = self.interval
        if p.sign_at(iv.lo) == 0 or p.sign_at(iv.hi) == 0:
            raise ValueError(f"interval endpoint is a root of {p}")
        if sturm_count(p, iv) != 1:
            raise ValueError(f"{iv} does not isolate a single root of {p}")
        object.__setattr__(self, "_root_memo", {})

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> AlgebraicNumber:
        q = Fraction(q)
        return cls(IntPolynomial((-q.numerator, q.denominator)), Interval(q - 1, q + 1))

    @classmethod
    def roots_of(cls, poly: IntPolynomial) -> list[AlgebraicNumber]:
        """All real roots of ``poly``, ascending."""
        sf = squarefree_part(poly)
        return [cls(sf, iv) for iv in isolate_real_roots(sf)]

    # -- basic queries --------------------------------------------------

    @property
    def key(self) -> tuple:
        """Hashable representation (not canonical across different intervals)."""
        return (self.poly.coeffs, self.interval.lo, self.interval.hi)

    def is_root_of(self, f: IntPolynomial) -> bool:
        if not f:
            return True
        memo = self._root_memo
        hit = memo.get(f.coeffs)
        if hit is None:
            hit = memo[f.coeffs] = _root_test(f.coeffs, self.key)
        return hit

    def refined(self, width) -> AlgebraicNumber:
        iv = refine_to(self.poly, self.interval, Fraction(width))
        return AlgebraicNumber(self.poly, iv)

    @cached_property
    def approx(self) -> float:
        """Floating approximation, for display only."""
        q = self.rational_value
        if q is not None:
            return float(q)
        return float(refine_to(self.poly, self.interval, _APPROX_WIDTH).mid)

    @cached_property
    def rational_value(self) -> Fraction | None:
        iv = refine_to(self.poly, self.interval, Fraction(1))
        for q in _divisors(self.poly.lc):
            lo = math.floor(iv.lo * q) + 1
            hi = math.floor(iv.hi * q)
            for a in range(lo, hi + 1):
                x = Fraction(a, q)
                if self.poly.sign_at(x) == 0:
                    return x
        return None

    @property
    def is_rational(self) -> bool:
        return self.rational_value is not None

    @property
    def is_integer(self) -> bool:
        q = self.rational_value
        return q is not None and q.denominator == 1

    @cached_property
    def minimal_polynomial(self) -> IntPolynomial | None:
        """Minimal polynomial over Z when the degree is at most 2, else None."""
        return _minimal_polynomial(self.key)

    @property
    def degree(self) -> int | None:
        mp = self.minimal_polynomial
        return mp.degree if mp is not None else None

    def canonical(self) -> AlgebraicNumber:
        """Re-express over the minimal polynomial when it has degree <= 2."""
        mp = self.minimal_polynomial
        if mp is None or mp == self.poly:
            return self
        for other in AlgebraicNumber.roots_of(mp):
            if other == self:
                return other
        raise AssertionError("minimal polynomial lost its root")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return other in self.interval and self.poly.sign_at(Fraction(other)) == 0
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        g = poly_gcd(self.poly, other.poly)
        if g.degree < 1:
            return False
        common = self.interval.intersect(other.interval)
        return common is not None and sturm_count(g, common, check=False) == 1

    __hash__ = None

    def __lt__(self, other: AlgebraicNumber) -> bool:
        if self == other:
            return False
        a, b = self.interval, other.interval
        while a.intersect(b) is not None:
            a = refine(self.poly, a)
            b = refine(other.poly, b)
        return a.hi <= b.lo

    def __le__(self, other: AlgebraicNumber) -> bool:
        return self == other or self < other

    def k_minus(self, k: int) -> AlgebraicNumber:
        """The number ``k - self``."""
        p = self.poly.compose_affine(-1, k)
        iv = self.interval
        return AlgebraicNumber(p, Interval(k - iv.hi, k - iv.lo))

    def display(self) -> str:
        q = self.rational_value
        if q is not None:
            return str(q)
        c = self.canonical()
        return f"root of {c.poly} in {c.interval} ~ {self.approx:.12g} (approx)"

    def __str__(self) -> str:
        return self.display()

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.display()!s} ~ {self.approx:.12g})"


@lru_cache(maxsize=1 << 14)
def _minimal_polynomial(key: tuple) -> IntPolynomial | None:
    lam = AlgebraicNumber(IntPolynomial(key[0]), Interval(key[1], key[2]))
    q = lam.rational_value
    if q is not None:
        return IntPolynomial((-q.numerator, q.denominator))
    p = lam.poly
    if p.degree == 2:
        return p
    # rounding -a(lam+mu) and a*lam*mu needs error below 1/2; candidates are checked exactly
    width = Fraction(1, 16 * p.lc * (cauchy_bound(p) + 1))
    fine = lam.refined(width).interval.mid
    for iv in isolate_real_roots(p):
        if lam.interval.intersect(iv) and sturm_count(p, lam.interval.intersect(iv),
                                                        check=False) == 1:
            continue
        mu = refine_to(p, iv, width).mid
        for a in _divisors(p.lc):
            b = round(-a * (fine + mu))
            c = round(a * fine * mu)
            cand = IntPolynomial((c, b, a))
            try:
                p.exact_div(cand)
            except ValueError:
                continue
            if lam.is_root_of(cand):
                return cand.primitive()
    return None


class QuadraticElement:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and square-free ``d != 1``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = a
        self.b = b
        self.d = d

    def _coerce(self, other) -> QuadraticElement:
        if isinstance(other, QuadraticElement):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        return QuadraticElement(other, 0, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        return QuadraticElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuadraticElement):
            return QuadraticElement(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        return QuadraticElement(self.a * o.a + self.d * self.b * o.b,
                                self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticElement:
        return QuadraticElement(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        nrm = Fraction(o.norm())
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadraticElement(num.a / nrm, num.b / nrm, self.d)

    def __floordiv__(self, k: int):
        return QuadraticElement(self.a // k, self.b // k, self.d)

    def int_parts(self) -> tuple:
        return self.a, self.b

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        return self.a == o.a and self.b == o.b

    __hash__ = None

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self) -> str:
        return f"QuadraticElement({self.a}, {self.b}, {self.d})"


def squarefree_decompose(k: int) -> tuple[int, int]:
    """``k = f**2 * d`` with ``d`` square-free (sign kept in ``d``)."""
    if k == 0:
        return 0, 0
    sign = -1 if k < 0 else 1
    k = abs(k)
    f = 1
    p = 2
    while p * p <= k:
        while k % (p * p) == 0:
            k //= p * p
            f *= p
        p += 1
    return f, sign * k
