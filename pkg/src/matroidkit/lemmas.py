"""The lemma battery: exhaustive desk-scale checks of the structure theory.

Each entry verifies one named property (rank/maximal-independent agreement,
circuit elimination, closure calculus, contraction, anchor repetition, the
coloring degree bounds) on a concrete matroid, by enumeration.  Keys L1..L19
are stable battery ids; a check either passes, fails with a witness, or is
skipped above its size bound.  Vacuously-true cases pass with a note.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .bases import all_bases, anchor_classes, is_base, ordered_bases
from .closure import closed_sets, closure_by_intersection, is_closed
from .closure import closure as closure_of
from .coloring import chromatic_number, distinct_color_fallback, is_proper
from .contraction import contract
from .core import (
    LoopError,
    Matroid,
    MatroidError,
    bits,
    check_circuit_elimination,
    circuits,
    is_loop_free,
    mask_of,
    set_literal,
    validate_axioms,
)

LEMMA_BOUND = 8


@dataclass(frozen=True)
class LemmaResult:
    key: str
    title: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _masks(n: int):
    return range(1 << n)


def _sub_masks(mask: int):
    """All subsets of a mask, including 0 and itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _fail(key, title, detail):
    return LemmaResult(key, title, "fail", detail)


def _ok(key, title, detail=""):
    return LemmaResult(key, title, "pass", detail)


def check_maximal_independent_size(m: Matroid) -> LemmaResult:
    key, title = "L1", "maximal independent subsets all have the subset's rank"
    t = m.mask_table()
    pop = [bin(x).count("1") for x in _masks(m.n)]
    for a in _masks(m.n):
        for b in _sub_masks(a):
            if t[b] != pop[b]:
                continue
            # maximal inside a?
            if any(
                t[b | (1 << x)] == pop[b] + 1 for x in bits(a & ~b)
            ):
                continue
            if pop[b] != t[a]:
                return _fail(
                    key,
                    title,
                    f"max independent {set_literal(bits(b))} has size {pop[b]} "
                    f"but rank({set_literal(bits(a))}) = {t[a]}",
                )
    return _ok(key, title)


def check_weak_elimination(m: Matroid) -> LemmaResult:
    key, title = "L2a", "circuit elimination (weak)"
    cmasks = [c.mask() for c in circuits(m)]
    pairs = 0
    for i, c1 in enumerate(cmasks):
        for j, c2 in enumerate(cmasks):
            if i == j or not c1 & c2:
                continue
            pairs += 1
            for e in bits(c1 & c2):
                allowed = (c1 | c2) & ~(1 << e)
                if not any(cm & ~allowed == 0 for cm in cmasks):
                    return _fail(
                        key,
                        title,
                        f"no circuit inside {set_literal(bits(c1 | c2))}-{{{e}}}",
                    )
    return _ok(key, title, "" if pairs else "vacuous: no intersecting circuit pair")


def check_strong_elimination(m: Matroid) -> LemmaResult:
    key, title = "L2b", "circuit elimination keeping a chosen element"
    report = check_circuit_elimination(m)
    if report.ok:
        note = "" if report.pairs_checked else "vacuous: no intersecting circuit pair"
        return _ok(key, title, note)
    c1, c2, e, e1 = report.counterexample
    return _fail(key, title, f"pair {set_literal(c1)},{set_literal(c2)} drop {e} keep {e1}")


def check_unique_circuit_in_base_extension(m: Matroid) -> LemmaResult:
    key, title = "L3", "exactly one circuit inside base + outside element"
    cmasks = [c.mask() for c in circuits(m)]
    all_b = all_bases(m)
    for b in all_b:
        bmask = mask_of(b)
        for x in range(m.n):
            if bmask >> x & 1:
                continue
            inside = [cm for cm in cmasks if cm & ~(bmask | 1 << x) == 0]
            if len(inside) != 1:
                return _fail(
                    key,
                    title,
                    f"base {set_literal(b)} + {x}: {len(inside)} circuits",
                )
    note = "vacuous: no base/element pair" if not all_b or all(len(b) == m.n for b in all_b) else ""
    return _ok(key, title, note)


def check_flatness_monotone(m: Matroid) -> LemmaResult:
    key, title = "L4", "rank-preserving extension transfers to supersets"
    t = m.mask_table()
    full = (1 << m.n) - 1
    for b in _masks(m.n):
        for a in _sub_masks(b):
            for x in bits(full & ~b):
                if t[a | 1 << x] == t[a] and t[b | 1 << x] != t[b]:
                    return _fail(
                        key,
                        title,
                        f"A={set_literal(bits(a))} B={set_literal(bits(b))} x={x}",
                    )
    return _ok(key, title)


def check_flatness_joint(m: Matroid) -> LemmaResult:
    key, title = "L5", "jointly adding rank-preserving elements preserves rank"
    t = m.mask_table()
    full = (1 << m.n) - 1
    for a in _masks(m.n):
        flat = mask_of(
            x for x in bits(full & ~a) if t[a | 1 << x] == t[a]
        )
        for xs in _sub_masks(flat):
            if t[a | xs] != t[a]:
                return _fail(
                    key,
                    title,
                    f"A={set_literal(bits(a))} X={set_literal(bits(xs))}",
                )
    return _ok(key, title)


def check_closed_intersection(m: Matroid, seed: int = 0) -> LemmaResult:
    key, title = "L6", "intersections of closed sets are closed"
    closed = [mask_of(z) for z in closed_sets(m)]
    closed_set = set(closed)
    for z1 in closed:
        for z2 in closed:
            if z1 & z2 not in closed_set:
                return _fail(
                    key,
                    title,
                    f"{set_literal(bits(z1))} meet {set_literal(bits(z2))}",
                )
    rng = random.Random(seed)
    for _ in range(20):
        if not closed:
            break
        fam = [rng.choice(closed) for _ in range(rng.randint(2, 4))]
        acc = (1 << m.n) - 1
        for z in fam:
            acc &= z
        if acc not in closed_set:
            return _fail(key, title, f"family of {len(fam)} closed sets")
    return _ok(key, title)


def check_closure_minimality(m: Matroid) -> LemmaResult:
    key, title = "L7abc", "closure is the least closed superset, monotone, idempotent"
    closed = [mask_of(z) for z in closed_sets(m)]
    sig = {}
    for x in _masks(m.n):
        sig[x] = mask_of(closure_of(m, frozenset(bits(x))))
    for x in _masks(m.n):
        for z in closed:
            if x & ~z == 0 and sig[x] & ~z != 0:
                return _fail(
                    key, title, f"closure({set_literal(bits(x))}) exceeds a closed superset"
                )
    for y in _masks(m.n):
        for x in _sub_masks(y):
            if sig[x] & ~sig[y] != 0:
                return _fail(
                    key, title, f"not monotone at {set_literal(bits(x))} <= {set_literal(bits(y))}"
                )
    for x in _masks(m.n):
        if sig[sig[x]] != sig[x]:
            return _fail(key, title, f"not idempotent at {set_literal(bits(x))}")
    return _ok(key, title)


def check_closure_routes_agree(m: Matroid) -> LemmaResult:
    key, title = "L8", "flat-extension closure equals intersection of closed supersets"
    for x in _masks(m.n):
        xs = frozenset(bits(x))
        fast = closure_of(m, xs)
        slow = closure_by_intersection(m, xs, max_n=m.n)
        if fast != slow:
            return _fail(
                key,
                title,
                f"X={set_literal(xs)}: {set_literal(fast)} vs {set_literal(slow)}",
            )
    return _ok(key, title)


def check_base_characterization(m: Matroid) -> LemmaResult:
    key, title = "L9", "bases are exactly the independent sets with full closure"
    t = m.mask_table()
    pop = [bin(x).count("1") for x in _masks(m.n)]
    for b in _masks(m.n):
        indep = t[b] == pop[b]
        maximal = indep and all(
            t[b | 1 << x] == pop[b] for x in range(m.n) if not b >> x & 1
        )
        via_closure = is_base(m, frozenset(bits(b)))
        if maximal != via_closure:
            return _fail(key, title, f"B={set_literal(bits(b))}")
    return _ok(key, title)


def check_fitting_monotone(m: Matroid) -> LemmaResult:
    key, title = "L10a", "supersets of a fitting set fit"
    t = m.mask_table()
    full = (1 << m.n) - 1
    for z in _masks(m.n):
        for a in _sub_masks(full & ~z):
            target = t[a | z] - t[z]
            for z1 in _sub_masks(z):
                r1 = t[a | z1] - t[z1]
                for z0 in _sub_masks(z1):
                    if t[a | z0] - t[z0] == target and r1 != target:
                        return _fail(
                            key,
                            title,
                            f"Z={set_literal(bits(z))} A={set_literal(bits(a))} "
                            f"Z0={set_literal(bits(z0))} Z1={set_literal(bits(z1))}",
                        )
    return _ok(key, title)


def check_fitting_common(m: Matroid) -> LemmaResult:
    key, title = "L10b", "one finite set fits a whole finite family"
    t = m.mask_table()
    full = (1 << m.n) - 1
    for z in _masks(m.n):
        rest = full & ~z
        family = [mask_of(c) for size in (1, 2) for c in itertools.combinations(list(bits(rest)), size)]
        if not family:
            continue
        union = 0
        for a in family:
            # first fitting subset in (size, lex) order
            target = t[a | z] - t[z]
            fit = next(
                mask_of(c)
                for size in range(bin(z).count("1") + 1)
                for c in itertools.combinations(list(bits(z)), size)
                if t[a | mask_of(c)] - t[mask_of(c)] == target
            )
            union |= fit
        for a in family:
            if t[a | union] - t[union] != t[a | z] - t[z]:
                return _fail(
                    key,
                    title,
                    f"Z={set_literal(bits(z))}: union of fitting sets misses "
                    f"A={set_literal(bits(a))}",
                )
    return _ok(key, title)


def check_contraction_is_matroid(m: Matroid) -> LemmaResult:
    key, title = "L11", "contraction never raises rank and is a matroid"
    t = m.mask_table()
    full = (1 << m.n) - 1
    for z in _masks(m.n):
        zset = frozenset(bits(z))
        mc = contract(m, zset)
        for a in _sub_masks(full & ~z):
            if t[a | z] - t[z] > t[a]:
                return _fail(
                    key, title, f"Z={set_literal(zset)} A={set_literal(bits(a))}"
                )
        report = validate_axioms(mc)
        if not report.ok:
            return _fail(key, title, f"Z={set_literal(zset)}: {report.describe()}")
    return _ok(key, title)


def check_contraction_independence(m: Matroid) -> LemmaResult:
    key, title = "L12", "independent in contraction iff union with independent parts stays independent"
    t = m.mask_table()
    pop = [bin(x).count("1") for x in _masks(m.n)]
    full = (1 << m.n) - 1
    for z in _masks(m.n):
        indep_in_z = [y for y in _sub_masks(z) if t[y] == pop[y]]
        for x in _sub_masks(full & ~z):
            lhs = t[x | z] - t[z] == pop[x]
            rhs = all(t[x | y] == pop[x] + pop[y] for y in indep_in_z)
            if lhs != rhs:
                return _fail(
                    key, title, f"Z={set_literal(bits(z))} X={set_literal(bits(x))}"
                )
    return _ok(key, title)


def check_contraction_loop_free(m: Matroid) -> LemmaResult:
    key, title = "L13", "contraction is loop-free iff the contracted set is closed"
    for z in _masks(m.n):
        zset = frozenset(bits(z))
        mc = contract(m, zset)
        if is_loop_free(mc) != is_closed(m, zset):
            return _fail(key, title, f"Z={set_literal(zset)}")
    return _ok(key, title)


def check_colorability_iff_loop_free(m: Matroid) -> LemmaResult:
    key, title = "L14", "proper colorings exist exactly for loop-free matroids"
    lf = is_loop_free(m)
    try:
        result = chromatic_number(m)
    except LoopError:
        if lf:
            return _fail(key, title, "loop-free matroid refused a coloring")
        return _ok(key, title, "loopy matroid correctly refused")
    if not lf:
        return _fail(key, title, "loopy matroid produced a coloring")
    if not is_proper(m, result.coloring):
        return _fail(key, title, "witness coloring is not proper")
    return _ok(key, title)


def check_distinct_fallback(m: Matroid, seed: int = 0) -> LemmaResult:
    key, title = "L15", "full-size lists always admit an all-distinct coloring"
    if not is_loop_free(m):
        return _ok(key, title, "vacuous: loops present")
    if m.n == 0:
        return _ok(key, title, "vacuous: empty ground set")
    rng = random.Random(seed)
    pool = [f"c{i}" for i in range(2 * m.n)]
    for _ in range(3):
        lists = {x: frozenset(rng.sample(pool, m.n)) for x in range(m.n)}
        phi = distinct_color_fallback(m, lists)
        if not is_proper(m, phi):
            return _fail(key, title, "fallback coloring not proper")
        if any(phi[x] not in lists[x] for x in range(m.n)):
            return _fail(key, title, "fallback coloring ignored a list")
    return _ok(key, title)


def check_circuit_closure_absorption(m: Matroid) -> LemmaResult:
    key, title = "L16", "a circuit nearly inside a closed set is inside it"
    cmasks = [c.mask() for c in circuits(m)]
    for z in closed_sets(m):
        zmask = mask_of(z)
        for cm in cmasks:
            if bin(cm & ~zmask).count("1") == 1:
                return _fail(
                    key,
                    title,
                    f"circuit {set_literal(bits(cm))} sticks one element out of "
                    f"{set_literal(z)}",
                )
    return _ok(key, title, "" if cmasks else "vacuous: no circuits")


def check_anchor_repetition(m: Matroid) -> LemmaResult:
    key, title = "L17", "every circuit repeats an anchor value"
    if not is_loop_free(m):
        return _ok(key, title, "vacuous: loops present")
    circs = [c.members for c in circuits(m)]
    if not circs:
        return _ok(key, title, "vacuous: no circuits")
    for ob in ordered_bases(m):
        decomp = anchor_classes(m, ob)
        for c in circs:
            anchors = [decomp.mapping[x] for x in c]
            if len(set(anchors)) == len(anchors):
                return _fail(
                    key,
                    title,
                    f"base {ob.elements} circuit {set_literal(c)}: all anchors distinct",
                )
    return _ok(key, title)


def check_flat_extension_dependence(m: Matroid) -> LemmaResult:
    key, title = "L18", "flat-extension elements beyond |A| are dependent"
    t = m.mask_table()
    pop = [bin(x).count("1") for x in _masks(m.n)]
    full = (1 << m.n) - 1
    for a in _masks(m.n):
        flat = [
            x for x in bits(full & ~a) if t[a | 1 << x] == t[a]
        ]
        for combo in itertools.combinations(flat, pop[a] + 1):
            cm = mask_of(combo)
            if t[cm] == pop[cm]:
                return _fail(
                    key,
                    title,
                    f"A={set_literal(bits(a))} X={set_literal(combo)} independent",
                )
    return _ok(key, title)


def check_flat_extension_count(m: Matroid) -> LemmaResult:
    key, title = "L19-analog", "flat extensions hold at most Chr * |A| elements"
    if not is_loop_free(m):
        return _ok(key, title, "vacuous: loops present")
    t = m.mask_table()
    full = (1 << m.n) - 1
    chrom = chromatic_number(m).value
    for a in _masks(m.n):
        flat = [x for x in bits(full & ~a) if t[a | 1 << x] == t[a]]
        if len(flat) > chrom * bin(a).count("1"):
            return _fail(
                key,
                title,
                f"A={set_literal(bits(a))}: {len(flat)} > {chrom}*{bin(a).count('1')}",
            )
    return _ok(key, title)


BATTERY = (
    ("L1", check_maximal_independent_size),
    ("L2a", check_weak_elimination),
    ("L2b", check_strong_elimination),
    ("L3", check_unique_circuit_in_base_extension),
    ("L4", check_flatness_monotone),
    ("L5", check_flatness_joint),
    ("L6", check_closed_intersection),
    ("L7abc", check_closure_minimality),
    ("L8", check_closure_routes_agree),
    ("L9", check_base_characterization),
    ("L10ab", None),  # composed below
    ("L11", check_contraction_is_matroid),
    ("L12", check_contraction_independence),
    ("L13", check_contraction_loop_free),
    ("L14", check_colorability_iff_loop_free),
    ("L15", check_distinct_fallback),
    ("L16", check_circuit_closure_absorption),
    ("L17", check_anchor_repetition),
    ("L18", check_flat_extension_dependence),
    ("L19-analog", check_flat_extension_count),
)


def _combined_fitting(m: Matroid) -> LemmaResult:
    title = "fitting sets grow and combine"
    a = check_fitting_monotone(m)
    if a.status == "fail":
        return LemmaResult("L10ab", title, "fail", a.detail)
    b = check_fitting_common(m)
    return LemmaResult("L10ab", title, b.status, b.detail)


def run_lemma_battery(m: Matroid, max_n: int | None = None) -> list[LemmaResult]:
    """Run every battery check on one matroid, skipping above the bound."""
    bound = LEMMA_BOUND if max_n is None else max_n
    if m.n > bound:
        return [
            LemmaResult(key, "", "skipped", f"skipped (size {m.n} > {bound})")
            for key, _ in BATTERY
        ]
    results = []
    for key, fn in BATTERY:
        try:
            if key == "L10ab":
                results.append(_combined_fitting(m))
            else:
                results.append(fn(m))
        except (MatroidError, AssertionError) as e:
            # a check blowing up on a malformed oracle is still a failure
            results.append(LemmaResult(key, "", "fail", f"check aborted: {e}"))
    return results
