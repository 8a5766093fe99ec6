"""Matroid and listing file formats.

Matroid files start with ``matroid <kind>`` where kind is uniform,
graphic, linear or table; the body grammar per kind is fixed so that
parse -> serialize -> parse is the identity on oracles.  ``#`` lines and
blank lines are ignored.  Listing files hold one ``list <id> : tok ...``
line per element.
"""

from __future__ import annotations

import itertools

from .constructions import (
    GraphSpec,
    TableSpec,
    VectorSpec,
    from_table,
    graphic,
    linear,
    tabulate,
    uniform,
)
from .core import Matroid, MatroidError, set_literal


class ParseError(MatroidError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_subset_literal(text: str) -> tuple[int, ...]:
    """Parse ``{i,j,k}`` (ascending ids required, ``{}`` for empty)."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise MatroidError(f"subset literal must look like {{0,1}}, got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    try:
        ids = tuple(int(p.strip()) for p in inner.split(","))
    except ValueError:
        raise MatroidError(f"non-integer id in subset literal {text!r}") from None
    if list(ids) != sorted(set(ids)):
        raise MatroidError(
            f"subset literal must list distinct ids in ascending order: {text!r}"
        )
    return ids


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def parse_matroid_text(text: str) -> Matroid:
    """Parse and construct a matroid; table kinds are validated on the spot."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty matroid file")
    first_no, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "matroid":
        raise ParseError(first_no, f"expected 'matroid <kind>', got {first!r}")
    kind = parts[1]
    body = lines[1:]
    if kind == "uniform":
        return _parse_uniform(body)
    if kind == "graphic":
        return _parse_graphic(body)
    if kind == "linear":
        return _parse_linear(body)
    if kind == "table":
        return _parse_table(body)
    raise ParseError(first_no, f"unknown matroid kind {kind!r}")


def _want_int(no: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(no, f"{what} must be an integer, got {token!r}") from None


def _parse_uniform(body) -> Matroid:
    vals = {}
    for no, line in body:
        parts = line.split()
        if len(parts) != 2 or parts[0] not in ("n", "k"):
            raise ParseError(no, f"expected 'n <int>' or 'k <int>', got {line!r}")
        if parts[0] in vals:
            raise ParseError(no, f"duplicate '{parts[0]}' line")
        vals[parts[0]] = _want_int(no, parts[1], parts[0])
    if "n" not in vals or "k" not in vals:
        raise ParseError(1, "uniform matroid needs both 'n' and 'k' lines")
    return uniform(vals["n"], vals["k"])


def _parse_graphic(body) -> Matroid:
    edges = []
    for no, line in body:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "edge":
            raise ParseError(no, f"expected 'edge <id> <u> <v>', got {line!r}")
        edges.append((_want_int(no, parts[1], "edge id"), parts[2], parts[3]))
    return graphic(GraphSpec(tuple(edges)))


def _parse_linear(body) -> Matroid:
    p = dim = None
    rows: dict[int, tuple[int, ...]] = {}
    for no, line in body:
        parts = line.split()
        if parts[0] == "field" and len(parts) == 2:
            p = _want_int(no, parts[1], "field")
        elif parts[0] == "dim" and len(parts) == 2:
            dim = _want_int(no, parts[1], "dim")
        elif parts[0] == "vec":
            if dim is None:
                raise ParseError(no, "'dim' must appear before 'vec' lines")
            if len(parts) != 2 + dim:
                raise ParseError(no, f"vec needs id plus {dim} coordinates")
            vid = _want_int(no, parts[1], "vec id")
            if vid in rows:
                raise ParseError(no, f"duplicate vector id {vid}")
            rows[vid] = tuple(_want_int(no, c, "coordinate") for c in parts[2:])
        else:
            raise ParseError(no, f"unexpected line {line!r}")
    if p is None or dim is None:
        raise ParseError(1, "linear matroid needs 'field' and 'dim' lines")
    if sorted(rows) != list(range(len(rows))):
        raise ParseError(1, "vector ids must be dense 0..n-1")
    vectors = tuple(rows[i] for i in range(len(rows)))
    return linear(VectorSpec(p, dim, vectors))


def _parse_table(body) -> Matroid:
    n = None
    ranks: dict[frozenset[int], int] = {}
    for no, line in body:
        parts = line.split(maxsplit=2)
        if parts[0] == "n" and len(parts) == 2:
            n = _want_int(no, parts[1], "n")
        elif parts[0] == "rank" and len(parts) == 3:
            try:
                subset = parse_subset_literal(parts[1])
            except MatroidError as e:
                raise ParseError(no, str(e)) from None
            key = frozenset(subset)
            if key in ranks:
                raise ParseError(no, f"duplicate rank line for {parts[1]}")
            ranks[key] = _want_int(no, parts[2], "rank value")
        else:
            raise ParseError(no, f"expected 'n <int>' or 'rank {{..}} <int>', got {line!r}")
    if n is None:
        raise ParseError(1, "table matroid needs an 'n' line")
    for key in ranks:
        if any(e < 0 or e >= n for e in key):
            raise ParseError(1, f"subset {set_literal(key)} outside ground set (n={n})")
    return from_table(TableSpec(n, ranks))


def serialize_matroid(m: Matroid) -> str:
    """Canonical text for a matroid, preferring its construction kind.

    Matroids built by uniform/graphic/linear/table re-emit their own
    grammar; anything else (restrictions, contractions) is frozen into a
    table.  Output is byte-deterministic.
    """
    if hasattr(m, "uniform_spec"):
        n, k = m.uniform_spec
        return f"matroid uniform\nn {n}\nk {k}\n"
    if hasattr(m, "graph_spec"):
        lines = ["matroid graphic"]
        for eid, u, v in sorted(m.graph_spec.edges):
            lines.append(f"edge {eid} {u} {v}")
        return "\n".join(lines) + "\n"
    if hasattr(m, "vector_spec"):
        spec = m.vector_spec
        lines = [f"matroid linear", f"field {spec.p}", f"dim {spec.dim}"]
        for i, vec in enumerate(spec.vectors):
            lines.append("vec " + str(i) + " " + " ".join(str(c) for c in vec))
        return "\n".join(lines) + "\n"
    spec = m.table_spec if hasattr(m, "table_spec") else tabulate(m)
    lines = ["matroid table", f"n {spec.n}"]
    for size in range(spec.n + 1):
        for combo in itertools.combinations(range(spec.n), size):
            lines.append(f"rank {set_literal(combo)} {spec.ranks[frozenset(combo)]}")
    return "\n".join(lines) + "\n"


def parse_listing_text(text: str, n: int | None = None) -> dict[int, frozenset]:
    """Parse ``list <id> : <tok> ...`` lines into an id -> color-set map.

    When n is given, the listing must cover exactly the ids 0..n-1.
    """
    lists: dict[int, frozenset] = {}
    for no, line in _content_lines(text):
        parts = line.split()
        if len(parts) < 3 or parts[0] != "list" or parts[2] != ":":
            raise ParseError(no, f"expected 'list <id> : <tok> ...', got {line!r}")
        lid = _want_int(no, parts[1], "element id")
        if lid in lists:
            raise ParseError(no, f"element {lid} listed twice")
        lists[lid] = frozenset(parts[3:])
    if n is not None and set(lists) != set(range(n)):
        raise MatroidError(
            f"listing covers {sorted(lists)} but the ground set is 0..{n-1}"
        )
    return lists


def serialize_listing(lists) -> str:
    lines = []
    for x in sorted(lists):
        toks = " ".join(sorted(str(c) for c in lists[x]))
        lines.append(f"list {x} : {toks}")
    return "\n".join(lines) + "\n"
