from matroidkit import Matroid, run_lemma_battery, uniform
from matroidkit.lemmas import BATTERY


def test_battery_keys_and_order():
    results = run_lemma_battery(uniform(3, 2))
    assert [r.key for r in results] == [key for key, _ in BATTERY]
    assert [r.key for r in results] == [
        "L1", "L2a", "L2b", "L3", "L4", "L5", "L6", "L7abc", "L8", "L9",
        "L10ab", "L11", "L12", "L13", "L14", "L15", "L16", "L17", "L18",
        "L19-analog",
    ]


def test_battery_passes_on_suite(suite7):
    for m in suite7:
        for r in run_lemma_battery(m):
            assert r.ok, (m.name, r.key, r.detail)
            assert r.status != "skipped", (m.name, r.key)


def test_battery_skips_above_bound():
    big = Matroid(9, lambda a: len(a))
    results = run_lemma_battery(big)
    assert all(r.status == "skipped" for r in results)
    assert all("size 9" in r.detail for r in results)
    # an explicit override runs them
    results = run_lemma_battery(big, max_n=9)
    assert all(r.status == "pass" for r in results)


def test_battery_vacuous_notes():
    results = {r.key: r for r in run_lemma_battery(uniform(3, 0))}
    assert results["L17"].status == "pass"
    assert "loops" in results["L17"].detail
    assert results["L14"].status == "pass"  # refusal branch exercised


def test_battery_catches_broken_oracles():
    # an unvalidated oracle violating submodularity must trip some check
    table = {
        frozenset(): 0,
        frozenset({0}): 0,
        frozenset({1}): 1,
        frozenset({0, 1}): 2,
    }
    broken = Matroid(2, lambda a: table[a])
    results = run_lemma_battery(broken)
    failed = [r.key for r in results if r.status == "fail"]
    assert failed, "a non-matroid sailed through the battery"


def test_battery_catches_nonlocal_rank_jump():
    # rank jumping by 2 breaks the flatness-transfer checks
    bad = Matroid(3, lambda a: 2 * len(a))
    results = run_lemma_battery(bad)
    assert any(r.status == "fail" for r in results)
