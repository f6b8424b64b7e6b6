"""Exact integer polynomials: gcd, square-free decomposition, Sturm root isolation.

Polynomials are immutable coefficient tuples, lowest degree first.  Rational
scalars are :class:`fractions.Fraction`.  Intervals are half-open ``(lo, hi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if c and c[-1] == 0:
            end = len(c)
            while end and c[end - 1] == 0:
                end -= 1
            object.__setattr__(self, "coeffs", tuple(c[:end]))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def x_minus(cls, k: int) -> IntPolynomial:
        return cls((-k, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of ``p(x)`` evaluated with integers only."""
        a, b = x.numerator, x.denominator
        d = self.degree
        acc = 0
        bpow = 1
        # p(a/b) * b^d = sum c_i a^i b^(d-i); b > 0 keeps the sign
        for c in reversed(self.coeffs):
            acc = acc * a + c * bpow
            bpow *= b
        return (acc > 0) - (acc < 0) if d >= 0 else 0

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        """Nonnegative gcd of the coefficients."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> IntPolynomial:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient ``self / other`` in Z[x]; raises if the division is not exact."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if rem:
                raise ValueError("inexact polynomial division")
            return IntPolynomial(())
        q = [0] * (dq + 1)
        lcb = other.lc
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top % lcb:
                raise ValueError("inexact polynomial division")
            t = top // lcb
            q[k] = t
            if t:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= t * c
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(tuple(q))

    def compose_affine(self, a: int, b: int) -> IntPolynomial:
        """``p(a*x + b)``."""
        lin = IntPolynomial((b, a))
        acc = IntPolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * lin + IntPolynomial((c,))
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
            if not parts:
                parts.append(f"{c}{mono}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}{mono}")
        return " ".join(parts)


ONE = IntPolynomial((1,))


def pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``lc(b)^(deg a - deg b + 1) * a mod b``, computed in Z[x]."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lcb = b.lc
    delta = len(r) - 1 - db
    if delta < 0:
        return a
    for _ in range(delta + 1):
        r = [c * lcb for c in r]
    for k in range(len(r) - 1, db - 1, -1):
        t = r[k] // lcb
        if t:
            for i, c in enumerate(b.coeffs):
                r[k - db + i] -= t * c
    return IntPolynomial(tuple(r[:db]))


@lru_cache(maxsize=1 << 16)
def _gcd_cached(a: tuple[int, ...], b: tuple[int, ...]) -> IntPolynomial:
    f = IntPolynomial(a).primitive()
    g = IntPolynomial(b).primitive()
    if not f:
        return g
    if not g:
        return f
    if f.degree < g.degree:
        f, g = g, f
    # subresultant PRS
    gg = hh = 1
    while True:
        delta = f.degree - g.degree
        r = pseudo_rem(f, g)
        if not r:
            return g.primitive()
        if r.degree == 0:
            return ONE
        f = g
        div = gg * hh ** delta
        g = IntPolynomial(tuple(c // div for c in r.coeffs))
        gg = f.lc
        if delta:
            hh = gg ** delta // hh ** (delta - 1)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q with positive leading coefficient."""
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p.coeffs, q.coeffs
    if a > b:
        a, b = b, a
    return _gcd_cached(a, b)


@lru_cache(maxsize=1 << 14)
def _yun_cached(coeffs: tuple[int, ...]) -> tuple[tuple[IntPolynomial, int], ...]:
    f = IntPolynomial(coeffs).primitive()
    if f.degree <= 0:
        return ()
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b
        b = b.exact_div(a)
        c = d.exact_div(a)
        if a.degree > 0:
            out.append((a, i))
        d = c - b.derivative()
        i += 1
    return tuple(out)


def yun_squarefree(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Square-free decomposition ``p = sign*content * prod f_i^e_i``.

    Factors are primitive with positive leading coefficient, pairwise coprime,
    listed by ascending exponent.
    """
    if not p:
        raise ValueError("square-free decomposition of the zero polynomial")
    return list(_yun_cached(p.coeffs))


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    out = ONE
    for f, _ in yun_squarefree(p):
        out = out * f
    return out


@lru_cache(maxsize=1 << 14)
def _is_squarefree(coeffs: tuple[int, ...]) -> bool:
    p = IntPolynomial(coeffs)
    return poly_gcd(p, p.derivative()).degree <= 0


@lru_cache(maxsize=1 << 14)
def sturm_chain(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm sequence of ``p`` scaled by positive constants only."""
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = pseudo_rem(a, b)
        if not r:
            break
        if b.lc < 0 and (a.degree - b.degree + 1) % 2:
            r = -r
        g = r.content()
        chain.append(IntPolynomial(tuple(-c // g for c in r.coeffs)))
    return tuple(chain)


def _variations(chain: tuple[IntPolynomial, ...], x: Fraction) -> int:
    count = 0
    last = 0
    for q in chain:
        s = q.sign_at(x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


@dataclass(frozen=True)
class Interval:
    """Half-open rational interval ``(lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo < x <= self.hi

    def intersect(self, other: Interval) -> Interval | None:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo < hi else None

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi}]"


def sturm_count(p: IntPolynomial, interval: Interval, check: bool = True) -> int:
    """Number of distinct real roots of square-free ``p`` in ``(lo, hi]``.

    Roots sitting exactly on an endpoint are counted by the half-open rule,
    so no endpoint perturbation is needed.
    """
    if p.degree < 0:
        raise ValueError("Sturm count of the zero polynomial")
    if p.degree == 0:
        return 0
    if check and not _is_squarefree(p.coeffs):
        raise ValueError(f"polynomial {p} is not square-free")
    chain = sturm_chain(p)
    return _variations(chain, interval.lo) - _variations(chain, interval.hi)


def cauchy_bound(p: IntPolynomial) -> int:
    """Integer ``B`` with every complex root strictly inside ``|z| < B``."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc)


def isolate_real_roots(p: IntPolynomial) -> list[Interval]:
    """Disjoint ascending isolating intervals, one per distinct real root.

    Endpoints are never roots of ``p``.
    """
    if p.degree < 1:
        raise ValueError("root isolation needs a nonconstant polynomial")
    if not _is_squarefree(p.coeffs):
        raise ValueError(f"polynomial {p} is not square-free")
    B = cauchy_bound(p)
    found: list[Interval] = []
    stack = [Interval(-B, B)]
    while stack:
        iv = stack.pop()
        k = sturm_count(p, iv, check=False)
        if k == 0:
            continue
        if k == 1:
            found.append(iv)
            continue
        m = iv.mid
        # right half pushed first so the left half is processed first
        stack.append(Interval(m, iv.hi))
        stack.append(Interval(iv.lo, m))
    found.sort(key=lambda iv: iv.lo)
    # move right endpoints that are roots into a root-free gap
    for idx, iv in enumerate(found):
        if p.sign_at(iv.hi) != 0:
            continue
        w = iv.width / 2
        while sturm_count(p, Interval(iv.hi, iv.hi + w), check=False):
            w /= 2
        new_hi = iv.hi + w
        found[idx] = Interval(iv.lo, new_hi)
        if idx + 1 < len(found) and found[idx + 1].lo < new_hi:
            found[idx + 1] = Interval(new_hi, found[idx + 1].hi)
    return found


def refine(p: IntPolynomial, iv: Interval) -> Interval:
    """Halve an isolating interval of square-free ``p``; endpoints stay non-roots."""
    m = iv.mid
    s = p.sign_at(m)
    if s == 0:
        q = iv.width / 4
        return Interval(m - q, m + q)
    left = Interval(iv.lo, m)
    if sturm_count(p, left, check=False) == 1:
        return left
    return Interval(m, iv.hi)


def refine_to(p: IntPolynomial, iv: Interval, width: Fraction) -> Interval:
    while iv.width >= width:
        iv = refine(p, iv)
    return iv
