"""Matroids stored as explicit basis families over a labelled ground set.

Subsets of the ground set are int bitmasks: bit ``i`` is the element at
position ``i`` of ``Matroid.labels``. Ground sets are capped at 31 elements.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import fields
from .errors import (
    EmptyFamily,
    ExchangeAxiomViolation,
    GlueElementDegenerate,
    InvalidGeometry,
    LabelCollision,
    MatroidError,
    MixedCardinality,
    OverlappingSets,
    ZeroMatrix,
)

MAX_GROUND = 31


class Element(NamedTuple):
    label: str
    index: int


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> list[int]:
    """Positions of the set bits of ``x``, ascending."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def _normalize_labels(labels) -> tuple[str, ...]:
    if isinstance(labels, int):
        labels = [str(i) for i in range(1, labels + 1)]
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise MatroidError("element labels must be pairwise distinct")
    if len(labels) > MAX_GROUND:
        raise MatroidError(f"ground set of {len(labels)} elements exceeds the cap of {MAX_GROUND}")
    for lab in labels:
        if not lab or any(ch.isspace() for ch in lab) or "#" in lab:
            raise MatroidError(f"invalid element label {lab!r}")
    return labels


class Matroid:
    """An immutable matroid given by its full list of bases.

    ``bases`` is a sorted tuple of bitmasks. Construct through the module
    level builders; the constructor itself trusts its input unless
    ``check=True``.
    """

    __slots__ = ("labels", "rank", "bases", "name", "provenance", "_index", "_basis_set")

    def __init__(self, labels, bases: Iterable[int], *, name: str | None = None,
                 provenance: str | None = None, check: bool = False):
        labels = _normalize_labels(labels)
        bases = tuple(sorted(set(bases)))
        if not bases:
            raise EmptyFamily("a matroid needs at least one basis")
        ranks = {popcount(b) for b in bases}
        if len(ranks) != 1:
            raise MixedCardinality(f"bases of different sizes {sorted(ranks)}")
        full = (1 << len(labels)) - 1
        if any(b & ~full for b in bases):
            raise MatroidError("basis outside the ground set")
        self.labels = labels
        self.rank = ranks.pop()
        self.bases = bases
        self.name = name
        self.provenance = provenance
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._basis_set = frozenset(bases)
        if check:
            check_exchange(self)

    # ground set helpers

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def ground_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(lab, i) for i, lab in enumerate(self.labels))

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise MatroidError(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def is_basis(self, mask: int) -> bool:
        return mask in self._basis_set

    def basis_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.labels_of(b)) for b in self.bases]

    def rank_of(self, mask: int) -> int:
        return max(popcount(b & mask) for b in self.bases)

    def is_independent(self, mask: int) -> bool:
        return any(b & mask == mask for b in self.bases)

    def count(self, contains: int = 0, avoids: int = 0) -> int:
        """Number of bases B with ``contains`` inside B and B disjoint from ``avoids``."""
        return sum(1 for b in self.bases if b & contains == contains and not b & avoids)

    @property
    def loops(self) -> tuple[str, ...]:
        union = 0
        for b in self.bases:
            union |= b
        return self.labels_of(self.ground_mask & ~union)

    @property
    def coloops(self) -> tuple[str, ...]:
        inter = self.ground_mask
        for b in self.bases:
            inter &= b
        return self.labels_of(inter)

    def relabel(self, mapping: Mapping[str, str] | None = None, *, prefix: str = "",
                name: str | None = None) -> "Matroid":
        mapping = mapping or {}
        labels = [prefix + mapping.get(lab, lab) for lab in self.labels]
        return Matroid(labels, self.bases, name=name or self.name, provenance=self.provenance)

    def family_key(self) -> tuple:
        return (self.labels, self.bases)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.family_key() == other.family_key()

    def __hash__(self):
        return hash(self.family_key())

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        tag = f"{self.name!r}, " if self.name else ""
        return f"Matroid({tag}rank={self.rank}, size={self.size}, bases={len(self.bases)})"


def check_exchange(M: Matroid) -> None:
    """Raise ExchangeAxiomViolation unless the basis family obeys the exchange axiom."""
    bases = M.bases
    basis_set = M._basis_set
    n = M.size
    for b1 in bases:
        outside = M.ground_mask & ~b1
        for x in bits(b1):
            rest = b1 & ~(1 << x)
            reach = 0
            for y in range(n):
                if outside >> y & 1 and (rest | 1 << y) in basis_set:
                    reach |= 1 << y
            for b2 in bases:
                if not b2 >> x & 1 and not (b2 & ~b1 & reach):
                    raise ExchangeAxiomViolation(
                        M.labels_of(b1), M.labels_of(b2), M.labels[x])


# constructors

def from_bases(labels, basis_list: Iterable[Iterable], *, name: str | None = None) -> Matroid:
    """Matroid from an explicit list of bases, each a collection of labels.

    ``labels`` may be an int ``n``, meaning the labels ``"1"..."n"``.
    The exchange axiom is verified on every pair of bases.
    """
    labels = _normalize_labels(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    masks = []
    sizes = set()
    for basis in basis_list:
        m = 0
        items = [str(x) for x in basis]
        for lab in items:
            if lab not in index:
                raise MatroidError(f"basis element {lab!r} is not in the ground set")
            m |= 1 << index[lab]
        sizes.add(len(set(items)))
        masks.append(m)
    if not masks:
        raise EmptyFamily("a matroid needs at least one basis")
    if len(sizes) != 1:
        raise MixedCardinality(f"bases of different sizes {sorted(sizes)}")
    return Matroid(labels, masks, name=name, provenance="bases", check=True)


def from_matrix(A: fields.FieldMatrix, labels=None, *, name: str | None = None) -> Matroid:
    """Column matroid of ``A`` over its field."""
    if A.ncols == 0:
        raise ZeroMatrix("matrix has no columns")
    labels = _normalize_labels(A.ncols if labels is None else labels)
    if len(labels) != A.ncols:
        raise MatroidError(f"{len(labels)} labels for {A.ncols} columns")
    r = A.rank()
    if r == 0:
        return Matroid(labels, [0], name=name, provenance="matrix")
    if r == A.nrows:
        test = lambda cols: A.det(cols) != 0  # noqa: E731
    else:
        test = lambda cols: A.column_rank(cols) == r  # noqa: E731
    masks = [sum(1 << j for j in cols)
             for cols in combinations(range(A.ncols), r) if test(cols)]
    return Matroid(labels, masks, name=name, provenance="matrix")


def _max_matching(elements: Sequence[int], options: Sequence[Sequence[int]]) -> int:
    """Size of a maximum matching from ``elements`` into set indices (Kuhn)."""
    owner: dict[int, int] = {}

    def augment(e, seen):
        for s in options[e]:
            if s in seen:
                continue
            seen.add(s)
            if s not in owner or augment(owner[s], seen):
                owner[s] = e
                return True
        return False

    return sum(1 for e in elements if augment(e, set()))


def from_transversal(labels, set_system: Sequence[Iterable], *, name: str | None = None) -> Matroid:
    """Transversal matroid: bases are the maximum partial transversals of ``set_system``."""
    labels = _normalize_labels(labels)
    if not set_system:
        raise MatroidError("empty set system")
    index = {lab: i for i, lab in enumerate(labels)}
    sets = []
    for s in set_system:
        members = {str(x) for x in s}
        unknown = members - index.keys()
        if unknown:
            raise MatroidError(f"set members not in ground set: {sorted(unknown)}")
        sets.append({index[x] for x in members})
    options = [[k for k, s in enumerate(sets) if i in s] for i in range(len(labels))]
    r = _max_matching(range(len(labels)), options)
    masks = [sum(1 << i for i in cols) for cols in combinations(range(len(labels)), r)
             if _max_matching(cols, options) == r]
    return Matroid(labels, masks, name=name, provenance="transversal")


def from_lines_rank3(labels, lines: Sequence[Iterable], *, name: str | None = None) -> Matroid:
    """Simple rank-3 matroid whose only dependent triples are the given lines."""
    labels = _normalize_labels(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    line_masks = []
    for line in lines:
        pts = {str(x) for x in line}
        if len(pts) != 3 or not pts <= index.keys():
            raise InvalidGeometry(f"line {sorted(pts)} is not a 3-subset of the ground set")
        line_masks.append(sum(1 << index[x] for x in pts))
    for a, b in combinations(line_masks, 2):
        if popcount(a & b) > 1:
            raise InvalidGeometry(
                "lines share two points: "
                f"{[labels[i] for i in bits(a)]} and {[labels[i] for i in bits(b)]}")
    dead = set(line_masks)
    masks = [m for m in (sum(1 << i for i in c) for c in combinations(range(len(labels)), 3))
             if m not in dead]
    if not masks:
        raise InvalidGeometry("no bases left")
    return Matroid(labels, masks, name=name, provenance="lines")


def uniform(r: int, m: int, labels=None, *, name: str | None = None) -> Matroid:
    if not 0 <= r <= m:
        raise MatroidError(f"uniform matroid needs 0 <= r <= m, got r={r}, m={m}")
    labels = _normalize_labels(m if labels is None else labels)
    masks = [sum(1 << i for i in c) for c in combinations(range(m), r)]
    return Matroid(labels, masks, name=name or f"U{r},{m}", provenance="uniform")


# structural operations

def dual(M: Matroid) -> Matroid:
    full = M.ground_mask
    name = None
    if M.name:
        name = M.name[:-1] if M.name.endswith("*") else M.name + "*"
    return Matroid(M.labels, (full & ~b for b in M.bases), name=name, provenance="derived")


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for k, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << k
    return out


def minor_bases(bases: Iterable[int], contract: int, delete: int) -> list[int]:
    """Basis family (on the original positions) of the minor M/contract\\delete."""
    bases = list(bases)
    best = max(popcount(b & contract) for b in bases)
    fam = {b & ~contract for b in bases if popcount(b & contract) == best}
    least = min(popcount(b & delete) for b in fam)
    return sorted({b & ~delete for b in fam if popcount(b & delete) == least})


def matroid_minor(M: Matroid, I: Iterable = (), J: Iterable = (), *,
                  name: str | None = None) -> Matroid:
    """The minor M/I\\J (contract ``I``, delete ``J``) in the standard sense."""
    ci, dj = M.mask(I), M.mask(J)
    if ci & dj:
        raise OverlappingSets(f"contract and delete sets overlap on {M.labels_of(ci & dj)}")
    fam = minor_bases(M.bases, ci, dj)
    keep = bits(M.ground_mask & ~(ci | dj))
    labels = [M.labels[i] for i in keep]
    return Matroid(labels, (_compress(b, keep) for b in fam), name=name, provenance="derived")


def two_sum(M: Matroid, Q: Matroid, g_M, g_Q, *, name: str | None = None) -> Matroid:
    """2-sum of ``M`` and ``Q`` glued along ``g_M`` in M and ``g_Q`` in Q.

    Bases are B1 | B2 with B1 from M/g and B2 from Q\\g, or B1 from M\\g and
    B2 from Q/g. The glue element must be neither a loop nor a coloop in
    either factor. The result lists M's elements first, then Q's.
    """
    gm, gq = M.index(g_M), Q.index(g_Q)
    for X, g in ((M, gm), (Q, gq)):
        lab = X.labels[g]
        if lab in X.loops or lab in X.coloops:
            raise GlueElementDegenerate(f"glue element {lab!r} is a loop or coloop")
    keep_m = [i for i in range(M.size) if i != gm]
    keep_q = [i for i in range(Q.size) if i != gq]
    labels_m = [M.labels[i] for i in keep_m]
    labels_q = [Q.labels[i] for i in keep_q]
    clash = set(labels_m) & set(labels_q)
    if clash:
        raise LabelCollision(f"labels used by both factors: {sorted(clash)}")
    shift = len(keep_m)
    m_con = [_compress(b, keep_m) for b in M.bases if b >> gm & 1]
    m_del = [_compress(b, keep_m) for b in M.bases if not b >> gm & 1]
    q_con = [_compress(b, keep_q) << shift for b in Q.bases if b >> gq & 1]
    q_del = [_compress(b, keep_q) << shift for b in Q.bases if not b >> gq & 1]
    masks = [a | b for a in m_con for b in q_del] + [a | b for a in m_del for b in q_con]
    return Matroid(labels_m + labels_q, masks, name=name, provenance="derived")


def copy_label(label: str, k: int, m: int) -> str:
    """Label of the ``k``-th copy (1-based) of ``label`` in a class of size ``m``."""
    return label if m == 1 else f"{label}_{k}"


def parallel_expand(M: Matroid, m: Mapping | Sequence[int], *, name: str | None = None) -> Matroid:
    """Replace each element e by a parallel class of ``m[e]`` copies.

    ``m`` is either a sequence aligned with ``M.labels`` or a mapping from
    labels (missing labels default to 1). Copies of e are labelled ``e_1``,
    ``e_2``, ...; an element with multiplicity 1 keeps its label.
    """
    if isinstance(m, Mapping):
        mult = [int(m.get(lab, 1)) for lab in M.labels]
    else:
        mult = [int(x) for x in m]
        if len(mult) != M.size:
            raise MatroidError(f"{len(mult)} multiplicities for {M.size} elements")
    if any(x < 1 for x in mult):
        raise MatroidError("multiplicities must be positive")
    labels = []
    first = []
    for lab, k in zip(M.labels, mult):
        first.append(len(labels))
        labels.extend(copy_label(lab, j, k) for j in range(1, k + 1))
    if len(labels) > MAX_GROUND:
        raise MatroidError(f"expansion has {len(labels)} elements, above the cap of {MAX_GROUND}")
    masks = []
    for b in M.bases:
        partial = [0]
        for e in bits(b):
            partial = [p | 1 << (first[e] + j) for p in partial for j in range(mult[e])]
        masks.extend(partial)
    return Matroid(labels, masks, name=name, provenance="derived")


def profile(M: Matroid) -> dict:
    return {
        "name": M.name,
        "rank": M.rank,
        "size": M.size,
        "bases": len(M.bases),
        "loops": list(M.loops),
        "coloops": list(M.coloops),
    }


def membership_counts(M: Matroid) -> list[int]:
    """Number of bases containing each element, by position."""
    c = Counter()
    for b in M.bases:
        for i in bits(b):
            c[i] += 1
    return [c[i] for i in range(M.size)]
