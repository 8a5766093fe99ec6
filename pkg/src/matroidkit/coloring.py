"""Proper colorings, chromatic number, list coloring, and the base-driven
coloring construction.

A coloring is proper iff every color class is independent, equivalently
iff no circuit is monochromatic; both routes are implemented and kept in
agreement by the test suite.  List-colorability verification leans on one
fact: assigning pairwise distinct list colors is always proper in a
loop-free matroid, so a k-listing can only be uncolorable if it has no
system of distinct representatives, i.e. some j elements jointly carry
fewer than j colors.  Enumerating (up to color renaming) just those
Hall-violating listings therefore decides whether *every* k-listing is
colorable; the full canonical enumeration survives as the naive oracle.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .bases import OrderedBase, anchor_classes
from .closure import closure
from .core import (
    BoundExceededError,
    Circuit,
    GroundSetError,
    LoopError,
    Matroid,
    MatroidError,
    circuits,
    loops,
    set_literal,
)

LIST_ENUM_N_BOUND = 5
LIST_ENUM_KMAX = 4
CHROMATIC_BOUND = 12

logger = logging.getLogger(__name__)


class ListDeficitError(MatroidError):
    """A color list is smaller than the anchor class containing its element."""


def _check_total(m: Matroid, mapping, kind: str):
    keys = set(mapping)
    want = set(range(m.n))
    if keys != want:
        missing = sorted(want - keys)
        extra = sorted(keys - want)
        parts = []
        if missing:
            parts.append(f"missing {set_literal(missing)}")
        if extra:
            parts.append(f"unknown {extra}")
        raise GroundSetError(f"{kind} must cover the ground set exactly: " + ", ".join(parts))


def color_classes(phi) -> dict:
    out: dict = {}
    for x, c in phi.items():
        out.setdefault(c, set()).add(x)
    return out


def is_proper(m: Matroid, phi) -> bool:
    """True iff every color class of the (total) coloring is independent."""
    _check_total(m, phi, "coloring")
    return all(m.is_independent(cls) for cls in color_classes(phi).values())


def find_monochromatic_circuit(m: Matroid, phi, max_n: int | None = None) -> Circuit | None:
    """Secondary properness route: first circuit inside one color class."""
    _check_total(m, phi, "coloring")
    classes = [frozenset(v) for v in color_classes(phi).values()]
    for c in circuits(m, max_n=max_n):
        cset = frozenset(c.members)
        for cls in classes:
            if cset <= cls:
                return c
    return None


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    coloring: dict[int, int] = field(hash=False)


def chromatic_number(m: Matroid, max_n: int | None = None) -> ChromaticResult:
    """Smallest k admitting a partition into k independent classes.

    Iterative deepening over k with first-occurrence symmetry breaking
    (element 0 opens class 0, a new class may only be the next unused
    index).  Raises LoopError when no proper coloring exists at all.
    """
    lp = loops(m)
    if lp:
        raise LoopError(f"no proper coloring exists: loops {set_literal(lp)}")
    bound = CHROMATIC_BOUND if max_n is None else max_n
    if m.n > bound:
        raise BoundExceededError(
            f"chromatic search is exhaustive; n={m.n} exceeds bound {bound}"
        )
    if m.n == 0:
        return ChromaticResult(0, {})
    table = m.mask_table(max_n=bound)
    popcount = [bin(i).count("1") for i in range(1 << m.n)]

    def attempt(k: int) -> dict[int, int] | None:
        assignment: dict[int, int] = {}
        masks = [0] * k

        def dfs(x: int, opened: int) -> bool:
            if x == m.n:
                return True
            limit = min(opened + 1, k)
            for c in range(limit):
                new = masks[c] | (1 << x)
                if table[new] != popcount[new]:
                    continue
                masks[c] = new
                assignment[x] = c
                if dfs(x + 1, max(opened, c + 1)):
                    return True
                masks[c] ^= 1 << x
                del assignment[x]
            return False

        return dict(assignment) if dfs(0, 0) else None

    for k in range(1, m.n + 1):
        witness = attempt(k)
        if witness is not None:
            return ChromaticResult(k, witness)
    raise AssertionError("loop-free matroid must be |S|-colorable")


def _color_sort_key(c):
    return (c.__class__.__name__, str(c))


def is_list_colorable(m: Matroid, lists, max_n: int | None = None):
    """First proper coloring drawing each element's color from its list.

    Backtracks over the product of the lists, visiting elements by
    ascending list size (ties by id) and colors in sorted order, so the
    returned coloring is the first in that deterministic order.  Returns
    None if the lists admit no proper coloring (immediately so when some
    list is empty).
    """
    _check_total(m, lists, "listing")
    norm = {x: tuple(sorted(lists[x], key=_color_sort_key)) for x in lists}
    empty = sorted(x for x, v in norm.items() if not v)
    if empty:
        logger.debug("no list coloring: empty lists on %s", set_literal(empty))
        return None
    if m.n == 0:
        return {}
    circ_masks = [c.mask() for c in circuits(m, max_n=max_n)]
    order = sorted(range(m.n), key=lambda x: (len(norm[x]), x))
    phi: dict[int, object] = {}
    class_masks: dict[object, int] = {}

    def dfs(i: int) -> bool:
        if i == m.n:
            return True
        x = order[i]
        bit = 1 << x
        for c in norm[x]:
            new = class_masks.get(c, 0) | bit
            if any(cm & ~new == 0 for cm in circ_masks):
                continue
            prev = class_masks.get(c)
            class_masks[c] = new
            phi[x] = c
            if dfs(i + 1):
                return True
            del phi[x]
            if prev is None:
                del class_masks[c]
            else:
                class_masks[c] = prev
        return False

    return dict(phi) if dfs(0) else None


# --- canonical k-listing enumeration -------------------------------------

def canonical_listing(lists_seq) -> tuple[tuple[int, ...], ...]:
    """Relabel colors by first occurrence (elements in id order, lists sorted)."""
    relabel: dict = {}
    out = []
    for lst in lists_seq:
        for c in sorted(lst, key=_color_sort_key):
            if c not in relabel:
                relabel[c] = len(relabel)
        out.append(tuple(sorted(relabel[c] for c in lst)))
    return tuple(out)


def all_canonical_listings(n: int, k: int):
    """Every k-listing on n elements up to color renaming (naive oracle).

    Element i chooses a k-set from the colors seen so far plus a run of
    fresh ones; fresh colors take the next unused labels, which is exactly
    the first-occurrence canonical form.
    """
    acc: list[tuple[int, ...]] = []

    def rec(i: int, used: int):
        if i == n:
            yield tuple(acc)
            return
        for fresh in range(k + 1):
            for old in itertools.combinations(range(used), k - fresh):
                acc.append(tuple(sorted(old + tuple(range(used, used + fresh)))))
                yield from rec(i + 1, used + fresh)
                acc.pop()

    yield from rec(0, 0)


def hall_violator_listings(n: int, k: int):
    """Canonical k-listings in which some j elements carry < j colors.

    Every uncolorable k-listing of a loop-free matroid is of this shape
    (distinct representatives would otherwise give a proper coloring), so
    checking these candidates decides k-list-colorability.  Yields each
    canonical form once, in a fixed order.
    """
    seen: set[tuple] = set()
    for j in range(k + 1, n + 1):
        for u in range(k, j):
            for violator in itertools.combinations(range(n), j):
                vset = set(violator)
                acc: list[tuple[int, ...]] = []

                def rec(i: int, used: int):
                    if i == n:
                        cf = canonical_listing(acc)
                        if cf not in seen:
                            seen.add(cf)
                            yield cf
                        return
                    if i in vset:
                        for combo in itertools.combinations(range(u), k):
                            acc.append(combo)
                            yield from rec(i + 1, used)
                            acc.pop()
                    else:
                        for fresh in range(k + 1):
                            for old in itertools.combinations(range(used), k - fresh):
                                acc.append(
                                    tuple(sorted(old + tuple(range(used, used + fresh))))
                                )
                                yield from rec(i + 1, used + fresh)
                                acc.pop()

                yield from rec(0, u)


def _listing_colorable(circ_masks, listing, n: int) -> bool:
    order = sorted(range(n), key=lambda x: (len(listing[x]), x))
    class_masks: dict[int, int] = {}

    def dfs(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        bit = 1 << x
        for c in listing[x]:
            new = class_masks.get(c, 0) | bit
            if any(cm & ~new == 0 for cm in circ_masks):
                continue
            prev = class_masks.get(c)
            class_masks[c] = new
            if dfs(i + 1):
                return True
            if prev is None:
                del class_masks[c]
            else:
                class_masks[c] = prev
        return False

    return dfs(0)


@dataclass(frozen=True)
class ListChromaticResult:
    """Outcome of the exact list-chromatic computation.

    value is the least k <= kmax for which every k-listing is colorable,
    or None if kmax was exhausted (the true value is then >= kmax + 1).
    bad_listings maps each failed k to a witness uncolorable k-listing.
    """

    value: int | None
    kmax: int
    bad_listings: dict[int, dict[int, tuple[int, ...]]] = field(hash=False)

    @property
    def lower_bound(self) -> int:
        return self.value if self.value is not None else self.kmax + 1


def list_chromatic_number(
    m: Matroid,
    kmax: int = LIST_ENUM_KMAX,
    max_n: int | None = None,
    naive: bool = False,
) -> ListChromaticResult:
    """Least k such that every k-listing admits a proper list coloring.

    Exact, by enumeration of canonical listings: the fast route checks
    only Hall-violating candidates (see module docstring), the naive route
    (test oracle) sweeps the full canonical space.  For each k below the
    answer a witness uncolorable listing is recorded.
    """
    lp = loops(m)
    if lp:
        raise LoopError(f"no list coloring exists: loops {set_literal(lp)}")
    bound = LIST_ENUM_N_BOUND if max_n is None else max_n
    if m.n > bound:
        raise BoundExceededError(
            f"listing enumeration needs n <= {bound}, got {m.n}"
        )
    if kmax < 1 or kmax > LIST_ENUM_KMAX:
        raise BoundExceededError(f"kmax must be in 1..{LIST_ENUM_KMAX}, got {kmax}")
    if m.n == 0:
        return ListChromaticResult(0, kmax, {})
    circ_masks = [c.mask() for c in circuits(m)]
    bad_listings: dict[int, dict[int, tuple[int, ...]]] = {}
    for k in range(1, kmax + 1):
        gen = all_canonical_listings(m.n, k) if naive else hall_violator_listings(m.n, k)
        bad = next(
            (cand for cand in gen if not _listing_colorable(circ_masks, cand, m.n)),
            None,
        )
        if bad is None:
            return ListChromaticResult(k, kmax, bad_listings)
        bad_listings[k] = {x: bad[x] for x in range(m.n)}
    return ListChromaticResult(None, kmax, bad_listings)


# --- the base-driven construction ----------------------------------------

def color_from_base(m: Matroid, b: OrderedBase, lists) -> dict:
    """Proper list coloring built from an ordered base's anchor classes.

    Within each anchor class, elements greedily take a list color unused
    by the class so far; injectivity inside every class is what makes the
    result proper (any circuit carries two elements with equal anchors).
    Every element's list must be at least as large as its class.
    """
    _check_total(m, lists, "listing")
    decomp = anchor_classes(m, b)
    for base_elem, members in decomp.classes.items():
        need = len(members)
        for x in members:
            if len(lists[x]) < need:
                raise ListDeficitError(
                    f"class of base element {base_elem} has {need} members but "
                    f"element {x} lists only {len(lists[x])} colors "
                    f"(short by {need - len(lists[x])})"
                )
    phi: dict[int, object] = {}
    for base_elem in b:
        used = set()
        for x in decomp.classes[base_elem]:
            c = next(
                c
                for c in sorted(lists[x], key=_color_sort_key)
                if c not in used
            )
            phi[x] = c
            used.add(c)
    if not is_proper(m, phi):
        raise AssertionError("class-injective coloring was not proper")
    return phi


def distinct_color_fallback(m: Matroid, lists) -> dict:
    """All-distinct list coloring; exists whenever every list has >= n colors."""
    _check_total(m, lists, "listing")
    used = set()
    phi: dict[int, object] = {}
    for x in range(m.n):
        free = [c for c in sorted(lists[x], key=_color_sort_key) if c not in used]
        if not free:
            raise GroundSetError(
                f"list of element {x} exhausted; needs >= {m.n} colors for the fallback"
            )
        phi[x] = free[0]
        used.add(free[0])
    return phi


@dataclass(frozen=True)
class DegreeReport:
    """Flat-extension degree facts around one subset A.

    flat_extension holds the elements outside A that keep A's rank;
    part (i): every (|A|+1)-subset of them is dependent;
    part (ii): there are at most Chr * |A| of them.
    """

    ok: bool
    subset: tuple[int, ...]
    flat_extension: tuple[int, ...]
    chromatic: int
    dependent_subsets_checked: int
    witness: tuple[int, ...] | None = None
    detail: str = ""


def degree_bound_check(m: Matroid, a) -> DegreeReport:
    """Check the two degree bounds for the flat extension of a subset."""
    a = m.check_subset(a)
    if loops(m):
        raise LoopError("degree bounds need a loop-free matroid")
    flat = tuple(x for x in closure(m, a) if x not in a)
    asort = tuple(sorted(a))
    chrom = chromatic_number(m).value
    checked = 0
    for combo in itertools.combinations(flat, len(a) + 1):
        checked += 1
        if m.rank(combo) == len(combo):
            return DegreeReport(
                False,
                asort,
                flat,
                chrom,
                checked,
                witness=combo,
                detail="flat-extension elements formed an independent set",
            )
    if len(flat) > chrom * len(a):
        return DegreeReport(
            False,
            asort,
            flat,
            chrom,
            checked,
            witness=flat,
            detail=f"{len(flat)} flat-extension elements exceed {chrom}*{len(a)}",
        )
    return DegreeReport(True, asort, flat, chrom, checked)
