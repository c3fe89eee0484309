"""Exact sparse multivariate polynomials over element-indexed variables.

A ``SparsePoly`` lives in a namespace: an ordered tuple of labels, one
variable ``y_label`` per label. Monomials are exponent tuples aligned with
the namespace. Coefficients are ``Fraction``s and zero terms are never
stored, so equal polynomials compare equal term by term.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from operator import add
from typing import Iterable, Mapping, Sequence

from .errors import NamespaceMismatch, NonPositiveAssignment, OverlappingSets, ParseError
from .fields import parse_scalar
from .matroid import Matroid, bits, popcount
from .unipoly import UniPoly

Assignment = Mapping[str, Fraction]


def _scalar(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floats are not exact scalars")
    return c if isinstance(c, Fraction) else Fraction(c)


def _glex_key(mono: tuple[int, ...]):
    return (-sum(mono), tuple(-e for e in mono))


class SparsePoly:
    __slots__ = ("labels", "terms")

    def __init__(self, labels: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.labels = tuple(labels)
        clean = {}
        if terms:
            n = len(self.labels)
            for mono, c in terms.items():
                if len(mono) != n:
                    raise NamespaceMismatch("monomial length does not match namespace")
                c = _scalar(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, labels: Sequence[str], c=1) -> "SparsePoly":
        labels = tuple(labels)
        return cls(labels, {(0,) * len(labels): c})

    @classmethod
    def variable(cls, labels: Sequence[str], label) -> "SparsePoly":
        labels = tuple(labels)
        mono = [0] * len(labels)
        mono[labels.index(str(label))] = 1
        return cls(labels, {tuple(mono): 1})

    @classmethod
    def monomial(cls, labels: Sequence[str], exps: Mapping[str, int], c=1) -> "SparsePoly":
        labels = tuple(labels)
        mono = [0] * len(labels)
        for lab, e in exps.items():
            mono[labels.index(str(lab))] += e
        return cls(labels, {tuple(mono): c})

    # arithmetic

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.labels != self.labels:
                raise NamespaceMismatch(f"namespaces differ: {self.labels} vs {other.labels}")
            return other
        return SparsePoly.constant(self.labels, _scalar(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePoly(self.labels, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.labels, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = _scalar(other)
            return SparsePoly(self.labels, {m: c * v for m, v in self.terms.items()})
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(add, m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly(self.labels, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.labels, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.labels == other.labels and self.terms == other.terms
        try:
            c = _scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return not self.terms
        return self.terms == {(0,) * len(self.labels): c}

    def __hash__(self):
        return hash((self.labels, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs.pop() == degree

    def variables(self) -> tuple[str, ...]:
        used = [False] * len(self.labels)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(lab for lab, u in zip(self.labels, used) if u)

    def coefficient(self, exps: Mapping[str, int]) -> Fraction:
        mono = [0] * len(self.labels)
        for lab, e in exps.items():
            mono[self.labels.index(str(lab))] = e
        return self.terms.get(tuple(mono), Fraction(0))

    def min_coefficient(self) -> Fraction | None:
        return min(self.terms.values(), default=None)

    def is_multilinear(self) -> bool:
        return all(e <= 1 for m in self.terms for e in m)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded lexicographic order, highest degree first."""
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]))

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((0,) * len(self.labels), Fraction(0))

    # substitution

    def substitute(self, assignment: Assignment) -> "SparsePoly":
        """Replace the assigned variables by scalars; others stay symbolic."""
        idx = []
        for lab, v in assignment.items():
            try:
                idx.append((self.labels.index(str(lab)), _scalar(v)))
            except ValueError:
                raise NamespaceMismatch(f"{lab!r} is not a variable here") from None
        out: dict = {}
        for m, c in self.terms.items():
            m = list(m)
            for i, v in idx:
                if m[i]:
                    c = c * v ** m[i]
                    m[i] = 0
            key = tuple(m)
            out[key] = out.get(key, 0) + c
        return SparsePoly(self.labels, out)

    def evaluate(self, assignment: Assignment) -> Fraction:
        """Value at a point; every variable that occurs must be assigned."""
        p = self.substitute({k: v for k, v in assignment.items() if str(k) in self.labels})
        return p.constant_value()

    def compose(self, target: Sequence[str], mapping: Mapping[str, object]) -> "SparsePoly":
        """Substitute polynomials over namespace ``target`` for variables.

        Variables absent from ``mapping`` must also be labels of ``target``
        and are carried across unchanged.
        """
        target = tuple(target)
        images = []
        for lab in self.labels:
            if lab in mapping:
                v = mapping[lab]
                if not isinstance(v, SparsePoly):
                    v = SparsePoly.constant(target, v)
                elif v.labels != target:
                    raise NamespaceMismatch("image polynomial is in the wrong namespace")
                images.append(v)
            elif lab in target:
                images.append(SparsePoly.variable(target, lab))
            else:
                images.append(None)
        result = SparsePoly(target)
        powers: dict = {}
        for m, c in self.terms.items():
            term = SparsePoly.constant(target, c)
            for i, e in enumerate(m):
                if not e:
                    continue
                if images[i] is None:
                    raise NamespaceMismatch(f"no image for variable {self.labels[i]!r}")
                key = (i, e)
                if key not in powers:
                    powers[key] = images[i] ** e
                term = term * powers[key]
            result = result + term
        return result

    def embed(self, target: Sequence[str]) -> "SparsePoly":
        """The same polynomial viewed in a namespace containing all used variables."""
        target = tuple(target)
        pos = {lab: i for i, lab in enumerate(target)}
        out = {}
        for m, c in self.terms.items():
            mono = [0] * len(target)
            for i, e in enumerate(m):
                if e:
                    if self.labels[i] not in pos:
                        raise NamespaceMismatch(f"variable {self.labels[i]!r} missing in target")
                    mono[pos[self.labels[i]]] = e
            out[tuple(mono)] = c
        return SparsePoly(target, out)

    def to_unipoly(self) -> UniPoly:
        """Convert a polynomial in at most one variable."""
        used = self.variables()
        if len(used) > 1:
            raise ValueError(f"more than one variable: {used}")
        if not used:
            return UniPoly([self.constant_value()])
        i = self.labels.index(used[0])
        coeffs: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            coeffs[m[i]] = coeffs.get(m[i], 0) + c
        return UniPoly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])

    # text form

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePoly({format_poly(self)!r})"


def _format_mono(labels, mono) -> str:
    parts = []
    for lab, e in zip(labels, mono):
        if e == 1:
            parts.append(f"y_{lab}")
        elif e > 1:
            parts.append(f"y_{lab}^{e}")
    return " * ".join(parts)


def format_poly(p: SparsePoly) -> str:
    """Serialize as ``coef * y_a^2 * y_b + ...`` in graded lexicographic order."""
    if not p.terms:
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = _format_mono(p.labels, mono)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a} * {body}"
        if k == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_VAR = re.compile(r"^y_([^\s^*]+)(?:\^(\d+))?$")


def parse_poly(text: str, labels: Sequence[str]) -> SparsePoly:
    """Inverse of :func:`format_poly` (also accepts any term order)."""
    labels = tuple(labels)
    text = " ".join(text.split())
    if text == "0":
        return SparsePoly(labels)
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    result = SparsePoly(labels)
    for sgn, term in zip(signs, pieces[0::2]):
        coef = Fraction(sgn)
        exps: dict[str, int] = {}
        for factor in term.split("*"):
            factor = factor.strip()
            m = _VAR.match(factor)
            if m:
                lab = m.group(1)
                if lab not in labels:
                    raise ParseError(f"unknown variable y_{lab}")
                exps[lab] = exps.get(lab, 0) + int(m.group(2) or 1)
            else:
                try:
                    coef *= parse_scalar(factor)
                except ValueError as exc:
                    raise ParseError(f"bad factor {factor!r}") from exc
        result = result + SparsePoly.monomial(labels, exps, coef)
    return result


def parse_assignment(text: str) -> dict[str, Fraction]:
    """Parse ``label=value,label=value`` with exact rational values."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ParseError(f"expected label=value, got {item!r}")
        lab, val = item.split("=", 1)
        out[lab.strip()] = parse_scalar(val)
    return out


def format_assignment(a: Assignment) -> dict[str, str]:
    return {str(k): str(Fraction(v)) for k, v in a.items()}


# matroid polynomials

def _mono_of(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def basis_poly(M: Matroid) -> SparsePoly:
    """Basis-generating polynomial: one monomial y^B per basis B."""
    n = M.size
    return SparsePoly(M.labels, {_mono_of(b, n): 1 for b in M.bases})


def _as_mask(M: Matroid, X) -> int:
    if isinstance(X, int):
        return X
    if isinstance(X, str):
        X = [X]
    return M.mask(X)


def minor_poly(M: Matroid, I: Iterable | int = (), J: Iterable | int = ()) -> SparsePoly:
    """Sum of y^(B - I) over bases B of M containing I and avoiding J.

    This is the partition convention, in which
    ``basis_poly(M) == y_g * minor_poly(M, g) + minor_poly(M, (), g)``
    holds for every element g. When I contains a loop (or any dependent
    set) the result is the zero polynomial.
    """
    i, j = _as_mask(M, I), _as_mask(M, J)
    if i & j:
        raise OverlappingSets("contract and delete sets overlap")
    n = M.size
    return SparsePoly(M.labels, {_mono_of(b & ~i, n): 1 for b in M.bases
                                 if b & i == i and not b & j})


def _check_positive(M: Matroid, a: Assignment) -> list[Fraction]:
    vals = []
    for lab in M.labels:
        if lab not in a:
            raise NonPositiveAssignment(f"no value assigned to {lab!r}")
        v = _scalar(a[lab])
        if v <= 0:
            raise NonPositiveAssignment(f"value of {lab!r} is {v}, not positive")
        vals.append(v)
    return vals


def basis_weights(M: Matroid, values: Sequence[Fraction]) -> list[Fraction]:
    """y^B for each basis B (in ``M.bases`` order), given values by position."""
    out = []
    for b in M.bases:
        w = Fraction(1)
        for i in bits(b):
            w *= values[i]
        out.append(w)
    return out


def partition_poly(M: Matroid, S: Iterable, a: Assignment,
                   constraints: Sequence[tuple[Iterable, int]] = ()) -> UniPoly:
    """Sum over j of M_j(y) x^j, with M_j summing y^B over bases meeting S in j elements.

    Each constraint (C, c) keeps only bases meeting C in exactly c
    elements. S and the constraint classes must be pairwise disjoint and
    every element must carry a positive value.
    """
    smask = _as_mask(M, S)
    cons = [(_as_mask(M, C), int(c)) for C, c in constraints]
    seen = smask
    for cm, _ in cons:
        if seen & cm:
            raise OverlappingSets("S and constraint classes must be pairwise disjoint")
        seen |= cm
    vals = _check_positive(M, a)
    coeffs = [Fraction(0)] * (popcount(smask) + 1)
    for b, w in zip(M.bases, basis_weights(M, vals)):
        if all(popcount(b & cm) == c for cm, c in cons):
            coeffs[popcount(b & smask)] += w
    return UniPoly(coeffs)


def subsets_of_size(n: int, k: int) -> Iterable[int]:
    for c in combinations(range(n), k):
        yield sum(1 << i for i in c)
