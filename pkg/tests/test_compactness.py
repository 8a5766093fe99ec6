import pytest

from matroidkit import (
    BUILTIN_FAMILIES,
    ChainError,
    MatroidChain,
    chain_from_matroids,
    extend_coloring,
    first_uncolorable_level,
    is_proper,
    restriction_colorings,
    uniform,
)
from matroidkit.compactness import disjoint_triangles, growing_cycle, growing_uniform


def two_lists(n, colors=("a", "b")):
    return {x: frozenset(colors) for x in range(n)}


def test_families_are_consistent_chains():
    for name, factory in BUILTIN_FAMILIES.items():
        chain = factory()
        sizes = [chain.level(i).n for i in range(4)]
        assert sizes == sorted(set(sizes)), name  # strictly increasing


def test_family_shapes():
    assert [disjoint_triangles().level(i).n for i in range(3)] == [3, 6, 9]
    assert [growing_cycle().level(i).n for i in range(3)] == [3, 5, 7]
    assert [growing_uniform().level(i).n for i in range(3)] == [3, 4, 5]
    assert growing_uniform(3).level(0).n == 4


def test_restriction_colorings_one_triangle():
    chain = disjoint_triangles()
    cols = restriction_colorings(chain, two_lists(3), 0)
    assert len(cols) == 6  # 2^3 assignments minus the two monochromatic ones
    m0 = chain.level(0)
    for phi in cols:
        assert is_proper(m0, phi)


def test_restriction_colorings_free_chain_single_lists():
    chain = MatroidChain("free", lambda i: uniform(i + 1, i + 1))
    for i in range(3):
        lists = {x: frozenset(["z"]) for x in range(i + 1)}
        assert len(restriction_colorings(chain, lists, i)) == 1


def test_restriction_colorings_forced_monochromatic():
    chain = disjoint_triangles()
    lists = {x: frozenset(["a"]) for x in range(3)}
    assert restriction_colorings(chain, lists, 0) == []


def test_extend_coloring_depth3():
    chain = disjoint_triangles()
    lists = two_lists(chain.level(3).n)
    phi = extend_coloring(chain, lists, 3)
    assert phi is not None and len(phi) == 12
    for i in range(4):
        mi = chain.level(i)
        assert is_proper(mi, {x: phi[x] for x in range(mi.n)})
        # each triangle is bichromatic
    for t in range(4):
        assert len({phi[3 * t], phi[3 * t + 1], phi[3 * t + 2]}) == 2


def test_extend_coloring_depth0():
    chain = disjoint_triangles()
    phi = extend_coloring(chain, two_lists(3), 0)
    assert phi == restriction_colorings(chain, two_lists(3), 0)[0]


def test_extend_coloring_uncolorable_level():
    chain = disjoint_triangles()
    lists = two_lists(chain.level(3).n)
    for x in (6, 7, 8):  # the triangle introduced at level 2
        lists[x] = frozenset(["a"])
    assert extend_coloring(chain, lists, 3) is None
    assert first_uncolorable_level(chain, lists, 3) == 2
    # monotone failure: deeper searches fail too, shallower ones succeed
    assert extend_coloring(chain, lists, 2) is None
    assert extend_coloring(chain, lists, 1) is not None


def test_growing_cycle_extension():
    chain = growing_cycle()
    lists = two_lists(chain.level(3).n, ("x", "y"))
    phi = extend_coloring(chain, lists, 3)
    assert phi is not None
    for i in range(4):
        mi = chain.level(i)
        assert is_proper(mi, {x: phi[x] for x in range(mi.n)})


def test_growing_uniform_needs_enough_colors():
    chain = growing_uniform(2)  # rank 2: color classes hold at most 2 elements
    lists5 = {x: frozenset(["a", "b"]) for x in range(chain.level(2).n)}
    assert extend_coloring(chain, lists5, 2) is None  # 5 elements, 2 colors
    assert first_uncolorable_level(chain, lists5, 2) == 2
    lists4 = {x: frozenset(["a", "b"]) for x in range(chain.level(1).n)}
    assert extend_coloring(chain, lists4, 1) is not None


def test_inconsistent_chain_rejected():
    def level(i):
        # level 1 pretends the pair {0, 1} is independent while level 0 puts
        # a cap of 1 on it: not restrictions of one matroid
        return uniform(2, 1) if i == 0 else uniform(3, 3)

    chain = MatroidChain("broken", level)
    with pytest.raises(ChainError) as err:
        chain.level(1)
    assert "{0,1}" in str(err.value)


def test_non_growing_chain_rejected():
    chain = MatroidChain("flat", lambda i: uniform(3, 2))
    with pytest.raises(ChainError):
        chain.level(1)


def test_chain_from_matroids():
    chain = chain_from_matroids([uniform(3, 2), uniform(4, 2), uniform(5, 2)])
    assert chain.level(2).n == 5
    phi = extend_coloring(chain, two_lists(5, ("a", "b", "c")), 2)
    assert phi is not None
