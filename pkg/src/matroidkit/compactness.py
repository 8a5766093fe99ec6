"""Extend list colorings along a growing chain of finite restrictions.

A chain is a sequence of matroids m_0, m_1, ... on nested ground sets
(element ids are shared prefixes) whose ranks agree wherever both are
defined, i.e. successive finite restrictions of one underlying matroid.
Any proper list coloring of a level restricts to a proper coloring of
every earlier level, so the proper colorings of the levels form a
finitely-branching tree under restriction; a finite-depth backtracking
walk of that tree is the constructive stand-in for choosing a coherent
coloring of the whole chain at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .constructions import graphic, uniform
from .core import (
    BoundExceededError,
    GroundSetError,
    Matroid,
    MatroidError,
    circuits,
    set_literal,
)

LEVEL_SIZE_BOUND = 16
CONSISTENCY_EXHAUSTIVE = 12  # check all subsets of the smaller level up to 2^12


class ChainError(MatroidError):
    """The levels of a chain are not restrictions of one matroid."""


@dataclass
class MatroidChain:
    """Lazily evaluated chain of growing finite restrictions."""

    name: str
    level_fn: Callable[[int], Matroid]

    def __post_init__(self):
        self._cache: dict[int, Matroid] = {}

    def level(self, i: int) -> Matroid:
        """Level i, with growth and rank-consistency checked on first access."""
        if i < 0:
            raise GroundSetError("chain levels are indexed from 0")
        if i not in self._cache:
            m = self.level_fn(i)
            if i > 0:
                prev = self.level(i - 1)
                if m.n <= prev.n:
                    raise ChainError(
                        f"level {i} has {m.n} elements, not more than level "
                        f"{i-1}'s {prev.n}"
                    )
                _check_consistent(prev, m, i)
            self._cache[i] = m
        return self._cache[i]


def _check_consistent(small: Matroid, big: Matroid, level: int):
    """Ranks of the larger level must agree on the smaller ground set."""
    if small.n <= CONSISTENCY_EXHAUSTIVE:
        subsets = itertools.chain.from_iterable(
            itertools.combinations(range(small.n), size)
            for size in range(small.n + 1)
        )
    else:
        subsets = (tuple(range(0, small.n, step)) for step in range(1, small.n + 1))
    for a in subsets:
        if small.rank(a) != big.rank(a):
            raise ChainError(
                f"level {level} disagrees with level {level-1} on "
                f"{set_literal(a)}: {big.rank(a)} vs {small.rank(a)}"
            )


# --- built-in families ----------------------------------------------------

def disjoint_triangles() -> MatroidChain:
    """Level i: i+1 vertex-disjoint triangles (3 new edges per level)."""

    def build(i: int) -> Matroid:
        edges = []
        for t in range(i + 1):
            a, b, c = f"t{t}a", f"t{t}b", f"t{t}c"
            edges += [(3 * t, a, b), (3 * t + 1, a, c), (3 * t + 2, b, c)]
        m = graphic(edges)
        m.name = f"triangles(level {i})"
        return m

    return MatroidChain("disjoint-triangles", build)


def growing_cycle() -> MatroidChain:
    """Level i: a fan with i+1 cycles (triangle plus 2 new edges per level).

    Vertices 0,1,2,...; edge 2j is the rim edge {j, j+1}, edge 2j+1 the
    spoke {0, j+1}; every level closes one more cycle.
    """

    def build(i: int) -> Matroid:
        edges = [(0, "v0", "v1")]
        eid = 1
        for j in range(1, i + 2):
            edges.append((eid, f"v{j}", f"v{j+1}"))
            eid += 1
            edges.append((eid, "v0", f"v{j+1}"))
            eid += 1
        m = graphic(edges)
        m.name = f"fan(level {i})"
        return m

    return MatroidChain("growing-cycle", build)


def growing_uniform(k: int = 2) -> MatroidChain:
    """Level i: uniform matroid of rank k on k+1+i elements."""

    def build(i: int) -> Matroid:
        return uniform(k + 1 + i, k)

    return MatroidChain("growing-uniform", build)


BUILTIN_FAMILIES = {
    "disjoint-triangles": disjoint_triangles,
    "growing-cycle": growing_cycle,
    "growing-uniform": growing_uniform,
}


def chain_from_matroids(ms: list[Matroid], name: str = "file-chain") -> MatroidChain:
    """Chain whose levels are the given matroids (consistency still checked)."""
    if not ms:
        raise GroundSetError("a chain needs at least one level")

    def build(i: int) -> Matroid:
        if i >= len(ms):
            raise GroundSetError(f"chain has {len(ms)} levels, level {i} requested")
        return ms[i]

    return MatroidChain(name, build)


# --- coloring along the chain ----------------------------------------------

def _level_lists(m: Matroid, lists) -> dict[int, tuple]:
    out = {}
    for x in range(m.n):
        if x not in lists:
            raise GroundSetError(f"listing does not cover element {x}")
        out[x] = tuple(sorted(lists[x], key=lambda c: (c.__class__.__name__, str(c))))
    return out


def restriction_colorings(chain: MatroidChain, lists, i: int, max_level: int | None = None):
    """All proper list colorings of level i, in lexicographic assignment order."""
    m = chain.level(i)
    bound = LEVEL_SIZE_BOUND if max_level is None else max_level
    if m.n > bound:
        raise BoundExceededError(f"level {i} has {m.n} elements, bound is {bound}")
    norm = _level_lists(m, lists)
    if any(not v for v in norm.values()):
        return []
    circ_masks = [c.mask() for c in circuits(m, max_n=bound)]
    out = []

    def dfs(x: int, phi: dict, class_masks: dict):
        if x == m.n:
            out.append(dict(phi))
            return
        bit = 1 << x
        for c in norm[x]:
            new = class_masks.get(c, 0) | bit
            if any(cm & ~new == 0 for cm in circ_masks):
                continue
            prev = class_masks.get(c)
            class_masks[c] = new
            phi[x] = c
            dfs(x + 1, phi, class_masks)
            del phi[x]
            if prev is None:
                del class_masks[c]
            else:
                class_masks[c] = prev

    dfs(0, {}, {})
    return out


def extend_coloring(chain: MatroidChain, lists, depth: int, max_level: int | None = None):
    """Proper list coloring of level `depth` found by walking the level tree.

    Backtracks over proper colorings level by level; a coloring chosen at
    level i is only ever extended (new elements assigned), so on success
    the result restricts to a proper coloring of every earlier level.
    Returns None when no coloring of the deepest level exists.
    """
    bound = LEVEL_SIZE_BOUND if max_level is None else max_level
    levels = [chain.level(i) for i in range(depth + 1)]
    for i, m in enumerate(levels):
        if m.n > bound:
            raise BoundExceededError(f"level {i} has {m.n} elements, bound is {bound}")
    norms = [_level_lists(m, lists) for m in levels]
    circ_masks = [[c.mask() for c in circuits(m, max_n=bound)] for m in levels]

    def extensions(i: int, phi: dict, class_masks: dict):
        """Proper colorings of level i extending phi (over its new elements)."""
        m = levels[i]
        start = levels[i - 1].n if i else 0
        if any(not norms[i][x] for x in range(start, m.n)):
            return

        def dfs(x: int):
            if x == m.n:
                yield dict(phi), dict(class_masks)
                return
            bit = 1 << x
            for c in norms[i][x]:
                new = class_masks.get(c, 0) | bit
                if any(cm & ~new == 0 for cm in circ_masks[i]):
                    continue
                prev = class_masks.get(c)
                class_masks[c] = new
                phi[x] = c
                yield from dfs(x + 1)
                del phi[x]
                if prev is None:
                    del class_masks[c]
                else:
                    class_masks[c] = prev

        yield from dfs(start)

    def walk(i: int, phi: dict, class_masks: dict):
        for full_phi, full_masks in extensions(i, dict(phi), dict(class_masks)):
            if i == depth:
                return full_phi
            found = walk(i + 1, full_phi, full_masks)
            if found is not None:
                return found
        return None

    return walk(0, {}, {})


def first_uncolorable_level(chain: MatroidChain, lists, depth: int, max_level: int | None = None):
    """Smallest level index up to depth with no proper list coloring, or None."""
    for i in range(depth + 1):
        if not restriction_colorings(chain, lists, i, max_level=max_level):
            return i
    return None
