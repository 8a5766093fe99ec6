"""Ground sets, rank oracles, matroid axioms, independence, circuits.

A matroid here is a finite ground set {0, .., n-1} together with a rank
oracle: a pure function from subsets to nonnegative integers satisfying
normalization, monotonicity, subcardinality and submodularity.  Everything
downstream (closure, contraction, bases, coloring) talks to the oracle
only through :class:`Matroid`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

# Exhaustive-check ceilings.  Operations that enumerate all 2^n subsets
# refuse above these rather than silently sampling.
VALIDATION_BOUND = 16
CIRCUIT_BOUND = 12


class MatroidError(Exception):
    """Base class for all library errors."""


class GroundSetError(MatroidError, ValueError):
    """An element id is out of range, duplicated, or a set is malformed."""


class BoundExceededError(MatroidError):
    """An exhaustive operation was asked to run above its size ceiling."""


class AxiomError(MatroidError):
    """A rank table fails the matroid axioms (carries the report)."""

    def __init__(self, report: "AxiomReport"):
        super().__init__(f"not a matroid: {report.describe()}")
        self.report = report


class LoopError(MatroidError):
    """An operation that requires a loop-free matroid met a loop."""


def canonical(elements: Iterable[int]) -> tuple[int, ...]:
    """Sorted duplicate-free tuple of element ids."""
    out = tuple(sorted(set(elements)))
    return out


def set_literal(elements: Iterable[int]) -> str:
    """Render a subset as ``{i,j,k}`` with ascending ids (``{}`` if empty)."""
    return "{" + ",".join(str(e) for e in canonical(elements)) + "}"


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Matroid:
    """A finite matroid given by a rank oracle over subsets of range(n).

    The oracle must be pure: identical subsets give identical ranks.  Rank
    values are memoized per canonical subset, so repeated axiom and lemma
    sweeps do not re-pay oracle cost.  Instances are immutable after
    construction apart from the memo, which only ever gains entries.
    """

    def __init__(
        self,
        n: int,
        oracle: Callable[[frozenset[int]], int],
        name: str = "",
        element_map: tuple[int, ...] | None = None,
    ):
        if n < 0:
            raise GroundSetError("ground set size must be nonnegative")
        self.n = n
        self.name = name or f"matroid(n={n})"
        #: for derived matroids (restriction, contraction): new id -> original id
        self.element_map = element_map
        self._oracle = oracle
        self._memo: dict[frozenset[int], int] = {}
        self._mask_table: list[int] | None = None

    def __repr__(self):
        return f"<Matroid {self.name}>"

    def check_subset(self, elements: Iterable[int]) -> frozenset[int]:
        s = frozenset(elements)
        for e in s:
            if not isinstance(e, int) or e < 0 or e >= self.n:
                raise GroundSetError(
                    f"element {e!r} outside ground set of size {self.n}"
                )
        return s

    def ground_set(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    def rank(self, elements: Iterable[int]) -> int:
        """Rank of a subset; memoized; 0 <= rank <= |subset|."""
        s = self.check_subset(elements)
        r = self._memo.get(s)
        if r is None:
            r = self._oracle(s)
            if not isinstance(r, int) or r < 0:
                raise MatroidError(f"oracle returned {r!r} for {set_literal(s)}")
            self._memo[s] = r
        return r

    def is_independent(self, elements: Iterable[int]) -> bool:
        """True iff the subset's rank equals its size."""
        s = self.check_subset(elements)
        return self.rank(s) == len(s)

    def full_rank(self) -> int:
        return self.rank(range(self.n))

    def rank_of_mask(self, mask: int) -> int:
        """Rank by bitmask, backed by the full 2^n table (small n only)."""
        return self.mask_table()[mask]

    def mask_table(self, max_n: int | None = None) -> list[int]:
        """Rank of every subset, indexed by bitmask.  Built once, cached.

        The table is the workhorse behind every exhaustive sweep; it is
        only sensible for small n (2^n entries).
        """
        if self._mask_table is None:
            bound = VALIDATION_BOUND if max_n is None else max_n
            if self.n > bound:
                raise BoundExceededError(
                    f"mask table needs n <= {bound}, got {self.n}"
                )
            table = []
            for mask in range(1 << self.n):
                table.append(self.rank(frozenset(bits(mask))))
            self._mask_table = table
        return self._mask_table


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    On failure, ``axiom`` names the first violated property in the scan
    order (normalization, subcardinality, monotonicity, submodularity) and
    ``witness`` holds the offending subsets, smallest first.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple[tuple[int, ...], ...] = ()
    detail: str = ""

    def describe(self) -> str:
        if self.ok:
            return "all axioms hold"
        sets = ", ".join(set_literal(w) for w in self.witness)
        return f"{self.axiom} fails at {sets}: {self.detail}"


def _masks_by_size(n: int) -> list[int]:
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            out.append(mask_of(combo))
    return out


def validate_axioms(m: Matroid, max_n: int | None = None) -> AxiomReport:
    """Exhaustively check the four rank axioms over all subsets/pairs.

    Refuses (rather than sampling) when n exceeds the bound.  Witnesses
    are found scanning subsets by (size, lexicographic) order, so the
    reported counterexample is minimal in that order.
    """
    bound = VALIDATION_BOUND if max_n is None else max_n
    if m.n > bound:
        raise BoundExceededError(
            f"validate_axioms is exhaustive; n={m.n} exceeds bound {bound}"
        )
    table = m.mask_table(max_n=bound)
    full = (1 << m.n) - 1

    if table[0] != 0:
        return AxiomReport(False, "normalization", ((),), f"rank({{}}) = {table[0]}")

    order = _masks_by_size(m.n)
    popcount = {mask: bin(mask).count("1") for mask in range(1 << m.n)}

    for a in order:
        if table[a] > popcount[a]:
            return AxiomReport(
                False,
                "subcardinality",
                (tuple(bits(a)),),
                f"rank {table[a]} > size {popcount[a]}",
            )

    for a in order:
        # iterate strict supersets of a
        rest = full & ~a
        sup = rest
        while True:
            b = a | sup
            if table[a] > table[b]:
                return AxiomReport(
                    False,
                    "monotonicity",
                    (tuple(bits(a)), tuple(bits(b))),
                    f"rank {table[a]} > rank {table[b]}",
                )
            if sup == 0:
                break
            sup = (sup - 1) & rest

    for a in order:
        for b in order:
            if b < a:
                continue
            if table[a] + table[b] < table[a & b] + table[a | b]:
                return AxiomReport(
                    False,
                    "submodularity",
                    (tuple(bits(a)), tuple(bits(b))),
                    f"{table[a]}+{table[b]} < {table[a & b]}+{table[a | b]}",
                )

    return AxiomReport(True)


@dataclass(frozen=True)
class Circuit:
    """A minimal dependent set, stored in canonical ascending order."""

    members: tuple[int, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def mask(self) -> int:
        return mask_of(self.members)


def circuits(m: Matroid, max_n: int | None = None) -> list[Circuit]:
    """All minimal dependent sets, ordered by (size, lexicographic).

    Enumerates subsets by increasing size; a dependent set is a circuit
    iff it contains no smaller circuit (and none of the size-(k-1)
    subsets is dependent, which the minimal-superset filter covers).
    """
    bound = CIRCUIT_BOUND if max_n is None else max_n
    if m.n > bound:
        raise BoundExceededError(
            f"circuit enumeration is exhaustive; n={m.n} exceeds bound {bound}"
        )
    table = m.mask_table(max_n=bound)
    found: list[Circuit] = []
    found_masks: list[int] = []
    for size in range(1, m.n + 1):
        for combo in itertools.combinations(range(m.n), size):
            mask = mask_of(combo)
            if table[mask] == size:
                continue  # independent
            if any(cm & ~mask == 0 for cm in found_masks):
                continue  # contains a smaller circuit
            found.append(Circuit(combo))
            found_masks.append(mask)
    return found


def is_loop_free(m: Matroid) -> bool:
    """True iff every singleton has rank 1."""
    return all(m.rank({x}) == 1 for x in range(m.n))


def loops(m: Matroid) -> tuple[int, ...]:
    return tuple(x for x in range(m.n) if m.rank({x}) == 0)


@dataclass(frozen=True)
class EliminationReport:
    """Result of the circuit-elimination sweep over all circuit pairs.

    ``counterexample`` (when not ok) is (C1, C2, e, e1_or_None): the pair,
    the common element being eliminated, and the element that could not be
    kept (None when even the weak form failed).
    """

    ok: bool
    pairs_checked: int
    counterexample: tuple | None = None


def check_circuit_elimination(m: Matroid, max_n: int | None = None) -> EliminationReport:
    """Verify circuit elimination on every ordered pair of circuits.

    For circuits C1 != C2 and e in their intersection there must be a
    circuit inside (C1 u C2) - e; additionally, for every e1 in C1 - C2
    one such circuit must contain e1.
    """
    circs = circuits(m, max_n=max_n)
    masks = [c.mask() for c in circs]
    pairs = 0
    for i, c1 in enumerate(circs):
        for j, c2 in enumerate(circs):
            if i == j:
                continue
            common = masks[i] & masks[j]
            if common == 0:
                continue
            pairs += 1
            union = masks[i] | masks[j]
            only1 = masks[i] & ~masks[j]
            for e in bits(common):
                allowed = union & ~(1 << e)
                inside = [cm for cm in masks if cm & ~allowed == 0]
                if not inside:
                    return EliminationReport(
                        False, pairs, (c1.members, c2.members, e, None)
                    )
                for e1 in bits(only1):
                    if not any(cm & (1 << e1) for cm in inside):
                        return EliminationReport(
                            False, pairs, (c1.members, c2.members, e, e1)
                        )
    return EliminationReport(True, pairs)
