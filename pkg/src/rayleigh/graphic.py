"""Multigraphs, spanning-tree matroids, effective conductance and cycle-sign certificates."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import fields
from .analysis import _Evaluator, _int_point, _pair_delta, _stamp, rayleigh_diff
from .errors import DisconnectedGraph, GroundTooLarge, MatroidError
from .matroid import Matroid, _normalize_labels, bits
from .poly import SparsePoly
from .report import POSITIVE, PropertyReport, SampleDomain, Sampler, Verdict, complete_point, fmt, fmt_assignment

MAX_EDGES = 20


class Edge(NamedTuple):
    label: str
    tail: str
    head: str


@dataclass(frozen=True)
class Graph:
    """Multigraph with labeled edges; the first endpoint of an edge is its tail."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __init__(self, edges: Iterable[Sequence], vertices: Iterable | None = None):
        es = tuple(Edge(str(l), str(u), str(v)) for l, u, v in edges)
        if es:
            _normalize_labels([e.label for e in es])
        verts = list(dict.fromkeys(str(v) for v in (vertices or ())))
        for e in es:
            for v in (e.tail, e.head):
                if v not in verts:
                    if vertices is not None:
                        raise MatroidError(f"edge {e.label} uses unknown vertex {v}")
                    verts.append(v)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "edges", es)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def edge(self, label) -> Edge:
        for e in self.edges:
            if e.label == str(label):
                return e
        raise MatroidError(f"unknown edge {label!r}")

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.tail].add(e.head)
            adj[e.head].add(e.tail)
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def merge(self, a, b) -> "Graph":
        """Identify vertex b with a; edges between them become loops."""
        a, b = str(a), str(b)
        ren = lambda v: a if v == b else v  # noqa: E731
        return Graph([(e.label, ren(e.tail), ren(e.head)) for e in self.edges],
                     [v for v in self.vertices if v != b])

    def add_edge(self, label, u, v) -> "Graph":
        return Graph(list(self.edges) + [(label, u, v)], self.vertices)

    def reversed(self, labels: Iterable) -> "Graph":
        flip = {str(x) for x in labels}
        return Graph([(e.label, e.head, e.tail) if e.label in flip else e for e in self.edges],
                     self.vertices)


def _find(parent: dict, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _is_forest(G: Graph, idx: Iterable[int]) -> bool:
    parent = {v: v for v in G.vertices}
    for i in idx:
        e = G.edges[i]
        ra, rb = _find(parent, e.tail), _find(parent, e.head)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def spanning_trees(G: Graph) -> list[int]:
    """Edge-index bitmasks of all spanning trees."""
    if not G.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if len(G.edges) > MAX_EDGES:
        raise GroundTooLarge(f"tree enumeration limited to {MAX_EDGES} edges")
    r = len(G.vertices) - 1
    usable = [i for i, e in enumerate(G.edges) if e.tail != e.head]
    return [sum(1 << i for i in S) for S in combinations(usable, r) if _is_forest(G, S)]


def graphic_matroid(G: Graph, *, name: str | None = None) -> Matroid:
    return Matroid(G.labels, spanning_trees(G), name=name, provenance="graph")


def tree_polynomial_value(G: Graph, y: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for t in spanning_trees(G):
        term = Fraction(1)
        for i in bits(t):
            term *= y[i]
        total += term
    return total


def laplacian_tree_value(G: Graph, y: Sequence[Fraction]) -> Fraction:
    """Matrix-tree theorem: determinant of the weighted Laplacian with one vertex removed."""
    n = len(G.vertices)
    if n <= 1:
        return Fraction(1)
    pos = {v: k for k, v in enumerate(G.vertices)}
    L = [[Fraction(0)] * n for _ in range(n)]
    for w, e in zip(y, G.edges):
        a, b = pos[e.tail], pos[e.head]
        if a == b:
            continue
        L[a][a] += w
        L[b][b] += w
        L[a][b] -= w
        L[b][a] -= w
    return fields.det([row[1:] for row in L[1:]], "rational")


def effective_conductance(G: Graph, a, b, y: Mapping[str, object] | None = None) -> Fraction:
    """Y_ab = T(G; y) / T(G/ab; y) with T the weighted spanning-tree sum."""
    a, b = str(a), str(b)
    if a == b:
        raise MatroidError("poles must be distinct")
    for v in (a, b):
        if v not in G.vertices:
            raise MatroidError(f"unknown vertex {v!r}")
    vals = complete_point(G.labels, y or {})
    if any(v <= 0 for v in vals):
        raise MatroidError("conductances must be positive")
    return tree_polynomial_value(G, vals) / tree_polynomial_value(G.merge(a, b), vals)


def _fresh_label(G: Graph, base: str = "pole") -> str:
    label, k = base, 0
    while label in G.labels:
        k += 1
        label = f"{base}{k}"
    return label


def monotonicity_check(G: Graph, a, b, samples: int = 100, seed: int = 0,
                       bound: int = 100) -> PropertyReport:
    """Rayleigh monotonicity of Y_ab in each edge, in its Rayleigh-difference form.

    A new edge f joins the poles, and Delta_H{e, f} >= 0 is checked for
    every edge e of G at all ones and at ``samples`` random positive
    points. HOLDS means every checked point passed.
    """
    t0 = time.perf_counter()
    a, b = str(a), str(b)
    if a == b:
        raise MatroidError("poles must be distinct")
    f = _fresh_label(G)
    H = graphic_matroid(G.add_edge(f, a, b), name="H")
    ev = _Evaluator(H)
    fi = H.index(f)
    scale = 2 * H.rank - 2
    sampler = Sampler(SampleDomain(POSITIVE, bound), seed)
    points = [complete_point(H.labels, {})] + [sampler.point(H.size) for _ in range(samples)]
    bad = []
    for vals in points:
        n, D = _int_point(vals)
        W = ev.weights(n)
        for ei in range(H.size):
            if ei == fi:
                continue
            v = _pair_delta(ev.sums(tuple(sorted((ei, fi))), n, W))
            if v < 0:
                bad.append({"pair": [H.labels[ei], f], "assignment": fmt_assignment(H.labels, vals),
                            "value": fmt(v / Fraction(D) ** scale)})
        if bad:
            break
    params = {"poles": [a, b], "seed": seed, "samples": samples, "bound": bound}
    rep = PropertyReport("rayleigh-monotonicity", Verdict.VIOLATED if bad else Verdict.HOLDS, None,
                         params, bad, {"edges": len(G.edges), "samples": len(points)})
    return _stamp(rep, t0)


def _tree_path(G: Graph, tree: Iterable[int], src: str, dst: str) -> list[tuple[int, str, str]]:
    """Edges of the tree path src -> dst as (edge index, from vertex, to vertex)."""
    adj: dict[str, list] = {v: [] for v in G.vertices}
    for i in tree:
        e = G.edges[i]
        adj[e.tail].append((i, e.head))
        adj[e.head].append((i, e.tail))
    back = {src: None}
    todo = deque([src])
    while todo:
        u = todo.popleft()
        for i, w in adj[u]:
            if w not in back:
                back[w] = (i, u)
                todo.append(w)
    path = []
    v = dst
    while back[v] is not None:
        i, u = back[v]
        path.append((i, u, v))
        v = u
    return path[::-1]


class CycleCertificate(NamedTuple):
    P: SparsePoly
    verified: bool


def cycle_sign(G: Graph, S: Iterable[int], e: int, f: int) -> int:
    """+1 if e and f point the same way around the unique cycle of S + e + f, else -1."""
    ef, ff = G.edges[e], G.edges[f]
    # the cycle runs along f from tail to head, then back through the tree S + e
    for i, u, v in _tree_path(G, list(S) + [e], ff.head, ff.tail):
        if i == e:
            return 1 if (u, v) == (ef.tail, ef.head) else -1
    raise MatroidError("edge e is not on the cycle")  # pragma: no cover


def square_certificate(G: Graph, e, f, M: Matroid | None = None) -> CycleCertificate:
    """P = sum over S of C_ef(S) y^S, and whether Delta{e, f} equals P^2."""
    M = M or graphic_matroid(G)
    i, j = M.index(e), M.index(f)
    if i == j:
        raise MatroidError("edges must be distinct")
    terms: dict[tuple, Fraction] = {}
    bases = M._basis_set
    for t in M.bases:
        if t >> i & 1 and not t >> j & 1:
            S = t & ~(1 << i)
            if S | (1 << j) in bases:
                sign = cycle_sign(G, bits(S), i, j)
                mono = tuple((S >> k) & 1 for k in range(M.size))
                terms[mono] = Fraction(sign)
    P = SparsePoly(M.labels, terms)
    return CycleCertificate(P, rayleigh_diff(M, e, f) == P * P)


# generators

def complete_graph(n: int) -> Graph:
    vs = [str(k) for k in range(1, n + 1)]
    return Graph([(f"{u}{v}" if n < 10 else f"{u}-{v}", u, v) for u, v in combinations(vs, 2)], vs)


def complete_bipartite(a: int, b: int) -> Graph:
    left = [f"a{k}" for k in range(1, a + 1)]
    right = [f"b{k}" for k in range(1, b + 1)]
    return Graph([(f"{u}{v}", u, v) for u in left for v in right], left + right)


def g_ab(a: int, b: int) -> Graph:
    """Path of b edges, each replaced by a parallel edges, closed by a root edge labeled g."""
    if a < 1 or b < 1:
        raise MatroidError("G(a,b) needs positive a and b")
    edges = [(f"{i}.{k}", str(i - 1), str(i)) for i in range(1, b + 1) for k in range(1, a + 1)]
    edges.append(("g", "0", str(b)))
    return Graph(edges, [str(v) for v in range(b + 1)])
