import pytest

from matroidkit import (
    GroundSetError,
    circuits,
    contract,
    contracted_rank_by_minimization,
    fits,
    is_closed,
    is_loop_free,
    uniform,
    validate_axioms,
)
from matroidkit.catalog import theta, triangle

from conftest import powerset


def test_contract_u24_is_u13():
    mc = contract(uniform(4, 2), {0})
    assert mc.n == 3
    assert mc.element_map == (1, 2, 3)
    for a in powerset(range(3)):
        assert mc.rank(a) == min(len(a), 1)
    assert [c.members for c in circuits(mc)] == [(0, 1), (0, 2), (1, 2)]


def test_contract_nothing_is_identity():
    m = uniform(4, 2)
    mc = contract(m, set())
    for a in powerset(range(4)):
        assert mc.rank(a) == m.rank(a)


def test_contract_triangle_edge_gives_parallel_pair():
    mc = contract(triangle(), {0})
    assert mc.n == 2
    assert mc.rank({0, 1}) == 1
    assert [c.members for c in circuits(mc)] == [(0, 1)]


def test_contract_everything():
    mc = contract(uniform(3, 2), {0, 1, 2})
    assert mc.n == 0 and mc.rank(()) == 0


def test_shortcut_matches_minimization(suite6):
    for m in suite6:
        for z in powerset(range(m.n)):
            zs = frozenset(z)
            mc = contract(m, zs)
            others = [x for x in range(m.n) if x not in zs]
            for a in powerset(others):
                direct = m.rank(set(a) | zs) - m.rank(zs)
                assert direct == contracted_rank_by_minimization(m, zs, a), m.name


def test_fits_examples():
    m = uniform(4, 2)
    assert fits(m, {0}, {1}, set())  # both sides are 1
    assert fits(m, {0, 1}, {2}, {0, 1})  # the whole set always fits
    # theta: contracting the tree {bc, bd} makes {ab, ca} a parallel pair
    t = theta()
    assert not fits(t, {1, 3}, {0, 2}, set())  # r(a)=2 but contracted rank is 1
    assert t.rank({0, 2}) == 2
    assert contract(t, {1, 3}).rank({0, 1}) == 1


def test_fits_validates_inputs():
    m = uniform(4, 2)
    with pytest.raises(GroundSetError):
        fits(m, {0}, {1}, {2})  # z0 not inside z
    with pytest.raises(GroundSetError):
        fits(m, {0}, {0, 1}, set())  # a meets z


def test_contractions_are_matroids(suite6):
    for m in suite6:
        for z in powerset(range(m.n)):
            assert validate_axioms(contract(m, z)).ok, m.name


def test_loop_free_iff_closed(suite6):
    for m in suite6:
        for z in powerset(range(m.n)):
            assert is_loop_free(contract(m, z)) == is_closed(m, z), m.name


def test_independence_transfer(suite6):
    # independent in the contraction iff joinable with every independent
    # subset of the contracted part
    for m in suite6:
        if m.n > 5:
            continue
        for z in powerset(range(m.n)):
            zs = frozenset(z)
            mc = contract(m, zs)
            keep = sorted(x for x in range(m.n) if x not in zs)
            to_old = {i: e for i, e in enumerate(keep)}
            indep_z = [frozenset(y) for y in powerset(sorted(zs)) if m.is_independent(y)]
            for xs in powerset(range(mc.n)):
                old = frozenset(to_old[i] for i in xs)
                lhs = mc.is_independent(xs)
                rhs = all(m.is_independent(old | y) for y in indep_z)
                assert lhs == rhs, m.name
