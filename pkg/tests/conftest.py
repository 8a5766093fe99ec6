"""Shared brute-force oracles and instance fixtures.

The oracles here re-derive facts from first principles (powerset sweeps,
independence-only definitions) so the library's faster routes are always
checked against an independent computation.
"""

import itertools

import pytest

from matroidkit import catalog


def powerset(iterable):
    s = list(iterable)
    return itertools.chain.from_iterable(
        itertools.combinations(s, r) for r in range(len(s) + 1)
    )


def brute_circuits(m):
    """Minimal dependent sets straight from the independence definition."""
    dependent = [
        frozenset(c) for c in powerset(range(m.n)) if not m.is_independent(c)
    ]
    return sorted(
        (
            tuple(sorted(d))
            for d in dependent
            if not any(other < d for other in dependent)
        ),
        key=lambda t: (len(t), t),
    )


def brute_max_independent_size(m, subset):
    """Largest independent subset of `subset`, by full enumeration."""
    best = 0
    for c in powerset(sorted(subset)):
        if m.is_independent(c):
            best = max(best, len(c))
    return best


@pytest.fixture(scope="session")
def suite6():
    return catalog.desk_suite(6)


@pytest.fixture(scope="session")
def suite7():
    return catalog.desk_suite(7)
