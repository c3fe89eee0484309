"""Reader and writer for the line-oriented ``.mtr`` matroid text format.

::

    # comment
    name S8
    elements 1 2 3 4 5 6 7 8
    field gf2
    matrix
    1 1 1 1 1 1 1 0
    ...

Exactly one body section follows the header: ``field``/``matrix``,
``bases``, ``transversal``, ``lines3``, ``uniform r m`` or ``graph``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import MatroidError, ParseError
from .fields import FieldMatrix, parse_scalar
from .graphic import Graph, graphic_matroid
from .matroid import (
    Matroid,
    from_bases,
    from_lines_rank3,
    from_matrix,
    from_transversal,
    uniform,
)

BODY_SECTIONS = ("field", "bases", "transversal", "lines3", "uniform", "graph")


@dataclass
class MtrDocument:
    name: str | None
    labels: tuple[str, ...]
    kind: str
    matroid: Matroid
    graph: Graph | None = None


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_document(text: str) -> MtrDocument:
    name = None
    labels = None
    lines = list(_lines(text))
    k = 0
    while k < len(lines):
        no, line = lines[k]
        head, _, rest = line.partition(" ")
        if head == "name":
            if not rest.strip():
                raise ParseError("empty name", no)
            name = rest.strip()
        elif head == "elements":
            labels = tuple(rest.split())
            if not labels:
                raise ParseError("no elements listed", no)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate element labels", no)
        elif head in BODY_SECTIONS:
            break
        else:
            raise ParseError(f"unknown keyword {head!r}", no)
        k += 1
    if k == len(lines):
        raise ParseError("missing body section", lines[-1][0] if lines else 1)
    if labels is None:
        raise ParseError("missing 'elements' line before the body", lines[k][0])
    no, line = lines[k]
    head, *args = line.split()
    body = lines[k + 1:]
    for bno, bline in body:
        first = bline.split()[0]
        if first in BODY_SECTIONS and first not in labels:
            raise ParseError("only one body section is allowed", bno)
    try:
        return _build(name, labels, head, args, no, body)
    except ParseError:
        raise
    except MatroidError as exc:
        raise ParseError(str(exc), no) from exc


def _check_labels(labels, items, no):
    for x in items:
        if x not in labels:
            raise ParseError(f"unknown element {x!r}", no)


def _build(name, labels, head, args, no, body) -> MtrDocument:
    if head == "field":
        if len(args) != 1:
            raise ParseError("expected 'field gf2|gf3|rational'", no)
        field = args[0].lower()
        if not body or body[0][1] != "matrix":
            raise ParseError("expected 'matrix' after 'field'", body[0][0] if body else no)
        rows = []
        for rno, rline in body[1:]:
            try:
                row = [parse_scalar(x) for x in rline.split()]
            except MatroidError as exc:
                raise ParseError(str(exc), rno) from exc
            if len(row) != len(labels):
                raise ParseError(f"row has {len(row)} entries, expected {len(labels)}", rno)
            rows.append(row)
        if not rows:
            raise ParseError("matrix has no rows", no)
        M = from_matrix(FieldMatrix(field, rows), labels, name=name)
        return MtrDocument(name, labels, "matrix", M)
    if head == "uniform":
        if len(args) != 2:
            raise ParseError("expected 'uniform <r> <m>'", no)
        if body:
            raise ParseError("unexpected content after 'uniform'", body[0][0])
        try:
            r, m = int(args[0]), int(args[1])
        except ValueError as exc:
            raise ParseError("uniform parameters must be integers", no) from exc
        if m != len(labels):
            raise ParseError(f"uniform m={m} but {len(labels)} elements", no)
        return MtrDocument(name, labels, "uniform", uniform(r, m, labels, name=name))
    if args:
        raise ParseError(f"unexpected arguments after {head!r}", no)
    sets = []
    for sno, sline in body:
        items = sline.split()
        if head == "graph":
            if len(items) != 3:
                raise ParseError("edge lines are '<label> <vertex> <vertex>'", sno)
            _check_labels(labels, items[:1], sno)
        elif not (head == "bases" and items == ["-"]):
            _check_labels(labels, items, sno)
        sets.append((sno, items))
    if head == "bases":
        # the empty basis of a rank-0 matroid is written as a lone '-'
        fam = [[] if items == ["-"] else items for _, items in sets]
        return MtrDocument(name, labels, "bases", from_bases(labels, fam, name=name))
    if head == "transversal":
        return MtrDocument(name, labels, "transversal",
                           from_transversal(labels, [s for _, s in sets], name=name))
    if head == "lines3":
        return MtrDocument(name, labels, "lines3",
                           from_lines_rank3(labels, [s for _, s in sets], name=name))
    # graph
    edge_labels = [s[0] for _, s in sets]
    if sorted(edge_labels) != sorted(labels):
        raise ParseError("graph edges must match the element list exactly", no)
    order = {lab: i for i, lab in enumerate(labels)}
    G = Graph(sorted((s for _, s in sets), key=lambda s: order[s[0]]))
    return MtrDocument(name, labels, "graph", graphic_matroid(G, name=name), G)


def parse_matroid(text: str) -> Matroid:
    return parse_document(text).matroid


def load(path: str | Path) -> MtrDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def dump_matroid(M: Matroid) -> str:
    """Serialize as an explicit basis list; parsing the result gives an equal matroid."""
    out = []
    if M.name:
        out.append(f"name {M.name}")
    out.append("elements " + " ".join(M.labels))
    out.append("bases")
    for b in M.bases:
        labs = M.labels_of(b)
        out.append(" ".join(labs) if labs else "-")
    return "\n".join(out) + "\n"


def dump_graph(G: Graph, name: str | None = None) -> str:
    out = [f"name {name}"] if name else []
    out.append("elements " + " ".join(G.labels))
    out.append("graph")
    out.extend(f"{e.label} {e.tail} {e.head}" for e in G.edges)
    return "\n".join(out) + "\n"
