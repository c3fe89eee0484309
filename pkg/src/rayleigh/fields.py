"""Matrices over GF(2), GF(3) and the rationals, with exact elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MatroidError

FIELDS = ("gf2", "gf3", "rational")
_CHAR = {"gf2": 2, "gf3": 3}


def _coerce(value, field: str):
    if field == "rational":
        if isinstance(value, float):
            raise MatroidError("floating point entries are not exact; use Fraction or 'p/q'")
        return Fraction(value)
    p = _CHAR[field]
    v = Fraction(value)
    if v.denominator != 1:
        raise MatroidError(f"entry {value!r} is not an element of {field.upper()}")
    return int(v) % p


@dataclass(frozen=True)
class FieldMatrix:
    """A dense matrix with entries in one of GF(2), GF(3), Q.

    Entries are reduced on construction: ints mod p for the finite fields,
    ``Fraction`` for the rationals.
    """

    field: str
    rows: tuple

    def __init__(self, field: str, rows: Sequence[Sequence]):
        field = field.lower()
        if field not in FIELDS:
            raise MatroidError(f"unknown field {field!r}; expected one of {FIELDS}")
        rows = tuple(tuple(_coerce(x, field) for x in row) for row in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise MatroidError("ragged matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self, cols: Sequence[int]) -> list[list]:
        """Submatrix on the given columns, as a mutable list of rows."""
        return [[r[j] for j in cols] for r in self.rows]

    def rank(self) -> int:
        return rank([list(r) for r in self.rows], self.field)

    def column_rank(self, cols: Sequence[int]) -> int:
        return rank(self.columns(cols), self.field)

    def det(self, cols: Sequence[int]):
        """Determinant of the square submatrix on ``cols``."""
        if len(cols) != self.nrows:
            raise MatroidError("determinant needs as many columns as rows")
        return det(self.columns(cols), self.field)


def _inverse(a, field):
    if field == "rational":
        return 1 / a
    p = _CHAR[field]
    return pow(a, p - 2, p)


def _reduce(rows: list[list], field: str) -> tuple[int, object]:
    """In-place row echelon form. Returns (rank, determinant factor)."""
    p = _CHAR.get(field)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    r = 0
    det_acc = Fraction(1) if p is None else 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            det_acc = -det_acc
        lead = rows[r][c]
        det_acc = det_acc * lead
        inv = _inverse(lead, field)
        for i in range(r + 1, nr):
            if rows[i][c] != 0:
                k = rows[i][c] * inv
                row_i, row_r = rows[i], rows[r]
                if p is None:
                    for j in range(c, nc):
                        row_i[j] = row_i[j] - k * row_r[j]
                else:
                    for j in range(c, nc):
                        row_i[j] = (row_i[j] - k * row_r[j]) % p
        r += 1
        if r == nr:
            break
    if p is not None:
        det_acc %= p
    return r, det_acc


def rank(rows: list[list], field: str) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return _reduce(rows, field)[0]


def det(rows: list[list], field: str):
    n = len(rows)
    if n == 0:
        return Fraction(1) if field == "rational" else 1
    rows = [list(r) for r in rows]
    rk, d = _reduce(rows, field)
    if rk < n:
        return Fraction(0) if field == "rational" else 0
    return d


def parse_scalar(text: str) -> Fraction:
    """Parse an exact rational written as an integer or ``p/q``.

    Decimal notation is refused so that inputs stay exact end to end.
    """
    text = text.strip()
    if not text or any(ch in text for ch in ".eE"):
        raise MatroidError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatroidError(f"not an exact rational: {text!r}") from exc
