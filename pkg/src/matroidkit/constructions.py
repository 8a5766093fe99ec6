"""Concrete rank oracles: uniform, graphic, linear over GF(p), tables, restriction."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    AxiomError,
    GroundSetError,
    Matroid,
    bits,
    canonical,
    mask_of,
    set_literal,
    validate_axioms,
)


def uniform(n: int, k: int) -> Matroid:
    """Uniform matroid: rank(A) = min(|A|, k)."""
    if n < 0 or k < 0 or k > n:
        raise GroundSetError(f"uniform needs 0 <= k <= n, got n={n}, k={k}")
    m = Matroid(n, lambda a: min(len(a), k), name=f"uniform({n},{k})")
    m.uniform_spec = (n, k)
    return m


@dataclass(frozen=True)
class GraphSpec:
    """A multigraph given as (edge id, endpoint, endpoint) triples.

    Vertex tokens are arbitrary strings; self-loops (u == v) and parallel
    edges are allowed.  Edge ids must be exactly 0..len-1.
    """

    edges: tuple[tuple[int, str, str], ...]

    def __post_init__(self):
        ids = [e[0] for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GroundSetError("duplicate edge ids in graph spec")
        if sorted(ids) != list(range(len(ids))):
            raise GroundSetError("edge ids must be dense 0..n-1")


def graphic(spec: GraphSpec | list[tuple[int, str, str]]) -> Matroid:
    """Cycle matroid of a multigraph.

    rank(A) = (vertices covered by A) - (connected components of the
    subgraph those edges induce).  A self-loop covers one vertex and one
    component, hence has rank 0.
    """
    if not isinstance(spec, GraphSpec):
        spec = GraphSpec(tuple(spec))
    by_id = {e[0]: (e[1], e[2]) for e in spec.edges}
    n = len(spec.edges)

    def rank(a: frozenset[int]) -> int:
        parent: dict[str, str] = {}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        covered = set()
        for e in a:
            u, v = by_id[e]
            covered.update((u, v))
        for v in covered:
            parent[v] = v
        comps = len(covered)
        for e in a:
            u, v = by_id[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return len(covered) - comps

    m = Matroid(n, rank, name=f"graphic({n} edges)")
    m.graph_spec = spec
    return m


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class VectorSpec:
    """Vectors over GF(p): a prime, a dimension, and one row per element."""

    p: int
    dim: int
    vectors: tuple[tuple[int, ...], ...]  # vectors[id] = coordinates

    def __post_init__(self):
        if not _is_prime(self.p):
            raise GroundSetError(f"field order {self.p} is not prime")
        if self.dim < 1:
            raise GroundSetError("dimension must be positive")
        for i, v in enumerate(self.vectors):
            if len(v) != self.dim:
                raise GroundSetError(f"vector {i} has length {len(v)}, want {self.dim}")


def _gf_rank(rows: list[list[int]], p: int) -> int:
    """Gaussian elimination mod p with exact integer arithmetic."""
    rows = [r[:] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    row = 0
    for col in range(cols):
        pivot = next((i for i in range(row, len(rows)) if rows[i][col] % p != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = pow(rows[row][col], p - 2, p) if p > 2 else rows[row][col] % p
        rows[row] = [(x * inv) % p for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col] % p:
                f = rows[i][col] % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[row])]
        row += 1
        rank += 1
    return rank


def linear(spec: VectorSpec) -> Matroid:
    """Linear matroid of a list of vectors over a prime field.

    rank(A) = dimension of the span of A's vectors, computed exactly.
    Coordinates are reduced mod p at construction.
    """
    vecs = [[c % spec.p for c in v] for v in spec.vectors]

    def rank(a: frozenset[int]) -> int:
        if not a:
            return 0
        return _gf_rank([vecs[i] for i in sorted(a)], spec.p)

    m = Matroid(len(vecs), rank, name=f"linear(GF({spec.p}),{len(vecs)} vecs)")
    m.vector_spec = spec
    return m


@dataclass(frozen=True)
class TableSpec:
    """An explicit rank table: one value per subset of range(n)."""

    n: int
    ranks: dict[frozenset[int], int] = field(hash=False)

    def __post_init__(self):
        want = 1 << self.n
        if len(self.ranks) != want:
            missing = want - len(self.ranks)
            raise GroundSetError(
                f"rank table incomplete: {len(self.ranks)} of {want} subsets "
                f"({missing} missing)"
            )


def from_table(spec: TableSpec) -> Matroid:
    """Matroid backed by an explicit table; rejects non-matroids.

    Construction runs the full axiom check and raises AxiomError (with the
    witness) if the table is not a matroid rank function.
    """
    m = Matroid(spec.n, lambda a: spec.ranks[a], name=f"table(n={spec.n})")
    report = validate_axioms(m)
    if not report.ok:
        raise AxiomError(report)
    m.table_spec = spec
    return m


def tabulate(m: Matroid) -> TableSpec:
    """Freeze a matroid's oracle into an explicit table."""
    table = m.mask_table()
    ranks = {frozenset(bits(mask)): table[mask] for mask in range(1 << m.n)}
    return TableSpec(m.n, ranks)


def restrict(m: Matroid, elements) -> Matroid:
    """Restriction to a subset, re-indexed densely.

    The result's ``element_map`` sends new ids back to the original ones,
    and composes: restricting a restriction maps through to the root.
    """
    keep = canonical(m.check_subset(elements))
    base_map = m.element_map

    def rank(a: frozenset[int]) -> int:
        return m.rank(keep[i] for i in a)

    element_map = tuple(base_map[e] for e in keep) if base_map else keep
    return Matroid(
        len(keep),
        rank,
        name=f"{m.name}|{set_literal(keep)}",
        element_map=element_map,
    )
