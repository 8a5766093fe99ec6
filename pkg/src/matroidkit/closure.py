"""Closed sets and the closure operator.

Two routes are provided: the production one adds every element whose
arrival keeps the rank flat (n oracle calls), and an intersection-of-
closed-supersets form that exists purely as an independent check of the
same operator.
"""

from __future__ import annotations

from .core import BoundExceededError, CIRCUIT_BOUND, Matroid, canonical


def is_closed(m: Matroid, z) -> bool:
    """True iff adding any outside element strictly raises the rank."""
    zs = m.check_subset(z)
    rz = m.rank(zs)
    return all(m.rank(zs | {x}) > rz for x in range(m.n) if x not in zs)


def closure(m: Matroid, x) -> tuple[int, ...]:
    """Smallest closed superset: x plus every element that keeps rank flat."""
    xs = m.check_subset(x)
    rx = m.rank(xs)
    out = set(xs)
    for y in range(m.n):
        if y not in xs and m.rank(xs | {y}) == rx:
            out.add(y)
    return canonical(out)


def closure_by_intersection(m: Matroid, x, max_n: int | None = None) -> tuple[int, ...]:
    """Intersection of all closed supersets of x.

    Enumerates every subset, so it is bounded; it serves as the
    independent oracle against which :func:`closure` is tested.
    """
    bound = CIRCUIT_BOUND if max_n is None else max_n
    if m.n > bound:
        raise BoundExceededError(
            f"closure_by_intersection enumerates 2^n subsets; n={m.n} exceeds {bound}"
        )
    xs = m.check_subset(x)
    acc = set(range(m.n))
    for mask in range(1 << m.n):
        z = frozenset(i for i in range(m.n) if mask >> i & 1)
        if xs <= z and is_closed(m, z):
            acc &= z
    return canonical(acc)


def closed_sets(m: Matroid) -> list[tuple[int, ...]]:
    """All closed subsets, in (size, lexicographic) order."""
    out = []
    for mask in range(1 << m.n):
        z = frozenset(i for i in range(m.n) if mask >> i & 1)
        if is_closed(m, z):
            out.append(canonical(z))
    out.sort(key=lambda t: (len(t), t))
    return out
