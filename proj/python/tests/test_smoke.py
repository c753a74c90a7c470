import pytest

import jumpfree as jf


def square(e):
    return [[a, b] for a in e for b in e]


def max_function(e, fid="f"):
    return {"id": fid, "k": 2, "entries": [[x, max(x)] for x in square(e)]}


def test_order_types():
    assert tuple(jf.order_signature([5, 2, 2])) == (1, 0, 0)
    assert jf.order_equivalent([1, 3, 3], [0, 9, 9])
    assert not jf.order_equivalent([1, 2], [2, 1])
    assert [len(jf.enumerate_order_types(k)) for k in range(1, 5)] == [1, 3, 13, 75]
    with pytest.raises(ValueError):
        jf.order_equivalent([1, 2], [1, 2, 3])


def test_field_and_cubes():
    assert jf.field([[1, 2], [3, 1]]) == [1, 2, 3]
    assert jf.cubes_in(square([0, 1, 2]), 2) == [[0, 1], [0, 2], [1, 2]]
    assert jf.predecessor_set([[1, 2], [3, 1], [0, 0]], [3, 1]) == [[0, 0], [1, 2]]


def test_jump_free():
    a = {"id": "A", "k": 2, "entries": [[[1, 2], 1]]}
    b = {"id": "B", "k": 2, "entries": [[[0, 0], 0], [[1, 2], 2]]}
    w = jf.jump_free_violation(a, b)
    assert w is not None and w["x"] == [1, 2]
    assert jf.jump_free_violation(b, a) is None
    assert jf.is_jump_free_family({"k": 2, "members": [b, a]}, threads=2)["x"] == [1, 2]
    assert jf.is_reflexive(a)


def test_families_and_search():
    universe = jf.build_universe(k=2, grid=4, max_domain=8, samples=50, seed=1)
    assert universe == jf.build_universe(k=2, grid=4, max_domain=8, samples=50, seed=1)
    for kind in ("max", "min", "predmin"):
        assert jf.is_jump_free_family(jf.gen_family(kind, universe)) is None
    assert jf.is_jump_free_family(jf.gen_family("constmin", universe)) is not None
    assert jf.is_full_over(jf.gen_family("max", universe), universe) is None
    w = jf.find_witness(jf.gen_family("max", universe), 2)
    assert w is not None and w["report"]["overall"] is True


def test_regularity():
    assert jf.regressive_regularity(max_function([2, 5]), [2, 5])["overall"] is True
    bad = {"id": "g", "k": 2, "entries": [[[2, 2], 2], [[2, 5], 2], [[5, 2], 2], [[5, 5], 3]]}
    assert jf.regressive_regularity(bad, [2, 5])["overall"] is False


def test_sets():
    assert [jf.apply_gamma("zigzag", n) for n in range(6)] == [0, 1, -1, 2, -2, 3]
    fh = jf.build_fh(max_function([2, 5]), [2, 5])
    assert fh["F"] == [-1, 3, 3, 3] and fh["fh_equal"]
    assert jf.build_fh(max_function([2, 5]), [2, 5], semantics="set")["F"] == [-1, 3]


def test_subset_sum():
    for method in ("exhaustive", "dp", "mitm"):
        assert sorted(jf.solve_subset_sum([3, -1, -2], method)) == [-2, -1, 3]
        assert jf.solve_subset_sum([-1, 3, 3, 3], method) is None
        assert jf.solve_subset_sum([0, 7], method) == [0]
    with pytest.raises(jf.CapacityError):
        jf.solve_subset_sum([1] * 25, "exhaustive")


def test_experiment_and_run():
    fam = {"k": 2, "members": [max_function([2, 5], "f0")]}
    r = jf.run_experiment(fam, p=2)
    assert r["F"] == [[-1, 1], [3, 3]]
    assert r["fh_equal"] and r["agreement"]
    assert not r["solvable_F"] and not r["solvable_H"]

    code, report = jf.run({"command": "experiment", "p": 2, "data": fam})
    assert code == 0 and report["agreement"] is True
    code2, report2 = jf.run({"command": "experiment", "p": 2, "data": fam})
    report.pop("timings_ms")
    report2.pop("timings_ms")
    assert report == report2

    code, report = jf.run({"command": "solve", "values": [1, 2]})
    assert code == 0
    code, report = jf.run({"command": "check-jumpfree", "family": "constmin", "universe": {"samples": 50, "seed": 1}})
    assert code == 2 and "violation" in report
