"""Exact univariate polynomials and real-root counting with Sturm chains."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from . import fields


class UniPoly:
    """Polynomial in one variable with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "UniPoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quot), UniPoly(rem[:len(other.coeffs) - 1])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UniPoly":
        return self * (1 / self.lead) if self.coeffs else self

    def primitive(self) -> "UniPoly":
        """Positive rational multiple with coprime integer coefficients."""
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return UniPoly([Fraction(v, g) for v in ints])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            a = abs(c)
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            body = str(a) if not mono else (mono if a == 1 else f"{a} * {mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime f_i with p = c * prod f_i^i."""
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def sturm_chain(f: UniPoly) -> list[UniPoly]:
    """Sturm sequence of ``f``; each member scaled by a positive constant to a primitive form."""
    chain = [f.primitive(), f.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return [s for s in chain if not s.is_zero()]


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_real_roots(f: UniPoly) -> int:
    """Number of distinct real roots of ``f`` (Sturm's theorem on the whole line)."""
    if f.degree < 1:
        return 0
    chain = sturm_chain(f)
    at_pos = [1 if s.lead > 0 else -1 for s in chain]
    at_neg = [(1 if s.lead > 0 else -1) * (-1) ** s.degree for s in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


class RootCensus(NamedTuple):
    is_real_rooted: bool
    distinct_real_roots: int


def real_root_census(p: UniPoly) -> RootCensus:
    """Decide exactly whether all complex roots of ``p`` are real.

    The zero polynomial and constants count as real-rooted. Each squarefree
    factor from Yun's decomposition must have as many distinct real roots
    as its degree.
    """
    if p.degree < 1:
        return RootCensus(True, 0)
    real_rooted = True
    total = 0
    for f, _mult in squarefree_decomposition(p):
        k = count_real_roots(f)
        total += k
        if k != f.degree:
            real_rooted = False
    return RootCensus(real_rooted, total)


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant via the Sylvester determinant."""
    m, n = a.degree, b.degree
    if m < 0 or n < 0:
        return Fraction(0)
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    ra = list(reversed(a.coeffs))
    rb = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + ra + [Fraction(0)] * (size - i - len(ra)))
    for i in range(m):
        rows.append([Fraction(0)] * i + rb + [Fraction(0)] * (size - i - len(rb)))
    return fields.det(rows, "rational")


def discriminant(p: UniPoly) -> Fraction:
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lead
