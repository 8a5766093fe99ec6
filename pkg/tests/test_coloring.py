import pytest

from matroidkit import (
    GroundSetError,
    ListDeficitError,
    LoopError,
    OrderedBase,
    chromatic_number,
    color_from_base,
    degree_bound_check,
    distinct_color_fallback,
    find_monochromatic_circuit,
    greedy_base,
    is_list_colorable,
    is_proper,
    list_chromatic_number,
    ordered_bases,
    uniform,
)
from matroidkit.catalog import triangle
from matroidkit.core import is_loop_free


def test_is_proper_examples():
    m = uniform(4, 2)
    assert is_proper(m, {0: "a", 1: "a", 2: "b", 3: "b"})
    assert not is_proper(m, {0: "a", 1: "a", 2: "a", 3: "b"})
    loopy = uniform(3, 0)
    assert not is_proper(loopy, {0: "a", 1: "b", 2: "c"})


def test_is_proper_requires_total():
    with pytest.raises(GroundSetError):
        is_proper(uniform(3, 2), {0: "a"})


def test_properness_routes_agree(suite6):
    import itertools

    for m in suite6:
        if m.n == 0 or m.n > 4:
            continue
        for values in itertools.product(range(2), repeat=m.n):
            phi = dict(enumerate(values))
            assert is_proper(m, phi) == (
                find_monochromatic_circuit(m, phi) is None
            ), m.name


def test_chromatic_examples():
    res = chromatic_number(uniform(4, 2))
    assert res.value == 2
    assert is_proper(uniform(4, 2), res.coloring)
    assert chromatic_number(uniform(5, 1)).value == 5
    assert chromatic_number(uniform(3, 3)).value == 1
    assert chromatic_number(triangle()).value == 2
    assert chromatic_number(uniform(0, 0)).value == 0


def test_chromatic_rejects_loops():
    with pytest.raises(LoopError):
        chromatic_number(uniform(3, 0))


def test_chromatic_minimality(suite6):
    # no proper coloring with one color fewer may exist
    import itertools

    for m in suite6:
        if not is_loop_free(m) or not 0 < m.n <= 4:
            continue
        k = chromatic_number(m).value
        if k <= 1:
            continue
        smaller = k - 1
        found = any(
            is_proper(m, dict(enumerate(values)))
            for values in itertools.product(range(smaller), repeat=m.n)
        )
        assert not found, m.name


def test_is_list_colorable_first_solution():
    m = uniform(4, 2)
    lists = {x: {"a", "b"} for x in range(4)}
    phi = is_list_colorable(m, lists)
    assert phi == {0: "a", 1: "a", 2: "b", 3: "b"}
    assert is_proper(m, phi)


def test_is_list_colorable_forced_failure():
    m = uniform(4, 2)
    assert is_list_colorable(m, {0: {"a"}, 1: {"a"}, 2: {"a"}, 3: {"b"}}) is None


def test_is_list_colorable_singleton():
    assert is_list_colorable(uniform(1, 1), {0: {"c"}}) == {0: "c"}


def test_is_list_colorable_empty_list():
    assert is_list_colorable(uniform(2, 2), {0: set(), 1: {"a"}}) is None


def test_list_chromatic_examples():
    assert list_chromatic_number(uniform(4, 2), kmax=3).value == 2
    assert list_chromatic_number(uniform(3, 3), kmax=3).value == 1
    assert list_chromatic_number(uniform(3, 1), kmax=3).value == 3


def test_list_chromatic_kmax_exhausted():
    res = list_chromatic_number(uniform(4, 1), kmax=3)
    assert res.value is None
    assert res.lower_bound == 4
    assert set(res.bad_listings) == {1, 2, 3}


def test_list_chromatic_bad_witnesses_verified():
    m = uniform(4, 2)
    res = list_chromatic_number(m, kmax=3)
    for k, listing in res.bad_listings.items():
        assert all(len(v) == k for v in listing.values())
        assert is_list_colorable(m, {x: set(v) for x, v in listing.items()}) is None


def test_list_chromatic_rejects_loops():
    with pytest.raises(LoopError):
        list_chromatic_number(uniform(3, 0))


def test_chromatic_at_most_list_chromatic(suite6):
    for m in suite6:
        if not is_loop_free(m) or m.n > 4:
            continue
        chrom = chromatic_number(m).value
        lres = list_chromatic_number(m, kmax=4)
        assert lres.lower_bound >= chrom, m.name


def test_seymour_equality_small(suite6):
    # chromatic and list-chromatic agree wherever the exact search applies
    for m in suite6:
        if not is_loop_free(m) or m.n > 4:
            continue
        chrom = chromatic_number(m).value
        lres = list_chromatic_number(m, kmax=4)
        assert lres.value == chrom, m.name


def test_color_from_base_examples():
    m = uniform(4, 2)
    lists = {x: {"p", "q", "r"} for x in range(4)}
    phi = color_from_base(m, OrderedBase((0, 1)), lists)
    assert is_proper(m, phi)
    assert len({phi[1], phi[2], phi[3]}) == 3  # the big class is rainbow

    free = uniform(3, 3)
    phi = color_from_base(free, OrderedBase((0, 1, 2)), {x: {f"c{x}"} for x in range(3)})
    assert phi == {0: "c0", 1: "c1", 2: "c2"}

    t = triangle()
    phi = color_from_base(t, OrderedBase((0, 1)), {x: {"a", "b"} for x in range(3)})
    assert is_proper(t, phi)


def test_color_from_base_deficit_error():
    m = uniform(4, 2)
    lists = {0: {"p"}, 1: {"p", "q"}, 2: {"p", "q"}, 3: {"p", "q"}}
    with pytest.raises(ListDeficitError) as err:
        color_from_base(m, OrderedBase((0, 1)), lists)
    assert "short by 1" in str(err.value)


def test_color_from_base_all_ordered_bases(suite6):
    import random

    rng = random.Random(7)
    pool = [f"c{i}" for i in range(10)]
    for m in suite6:
        if not is_loop_free(m) or not 0 < m.n <= 5:
            continue
        for ob in ordered_bases(m):
            from matroidkit import anchor_classes

            d = anchor_classes(m, ob)
            for _ in range(5):
                lists = {}
                for b, members in d.classes.items():
                    for x in members:
                        lists[x] = frozenset(rng.sample(pool, len(members)))
                phi = color_from_base(m, ob, lists)
                assert is_proper(m, phi), m.name
                assert all(phi[x] in lists[x] for x in range(m.n))


def test_distinct_color_fallback():
    m = uniform(4, 2)
    lists = {x: {f"c{i}" for i in range(4)} for x in range(4)}
    phi = distinct_color_fallback(m, lists)
    assert len(set(phi.values())) == 4
    assert is_proper(m, phi)


def test_degree_bound_examples():
    m = uniform(4, 2)
    rep = degree_bound_check(m, {0, 1})
    assert rep.ok and rep.flat_extension == (2, 3) and rep.chromatic == 2

    rep = degree_bound_check(m, set())
    assert rep.ok and rep.flat_extension == ()

    m51 = uniform(5, 1)
    rep = degree_bound_check(m51, {0})
    assert rep.ok and len(rep.flat_extension) == 4 and rep.chromatic == 5


def test_degree_bound_all_subsets(suite6):
    from conftest import powerset

    for m in suite6:
        if not is_loop_free(m) or m.n > 5:
            continue
        for a in powerset(range(m.n)):
            assert degree_bound_check(m, a).ok, m.name
