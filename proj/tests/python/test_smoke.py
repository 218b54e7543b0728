"""Smoke tests for the Python bindings."""

import pytest

import edhr


def test_worked_example_end_to_end():
    inst = edhr.Instance(profits=[7, 9, 4, 1], weights=[2, 4, 2, 2], capacity=7)
    assert len(inst) == 4

    sorted_view = edhr.normalize_and_sort(inst)
    assert sorted_view.break_pos == 2
    assert sorted_view.residual == 1
    assert edhr.dantzig_upper_bound(inst) == 18
    assert edhr.break_solution_lower_bound(inst) == 16

    solution, stats = edhr.solve(inst, mode="dp")
    assert solution.objective == 16
    assert list(solution.assignment) == [1, 1, 0, 0]
    assert stats.nodes_expanded >= 1


def test_partitions():
    inst = edhr.Instance(profits=[7, 9, 4, 1], weights=[2, 4, 2, 2], capacity=7)
    part = edhr.edhr_partition(inst, 1)
    fixed = edhr.dhr_partition(inst)
    assert list(part.n1) == list(fixed.fixed_one) == [0]
    assert list(part.n4) == list(fixed.fixed_zero) == [3]
    assert list(part.n3) == [2]


@pytest.mark.parametrize("mode", ["plain-bb", "constrained-bb", "enumerate", "dp"])
def test_modes_agree(mode):
    inst = edhr.generate("WC", n=24, range=100, seed=11, force_break=False)
    want, _ = edhr.solve(inst, mode="dp")
    got, _ = edhr.solve(inst, mode=mode, i=2)
    assert got.objective == want.objective
    assert edhr.evaluate(inst, got.assignment).feasible


def test_generator_determinism_and_validation():
    a = edhr.generate("SC", n=30, range=1000, seed=5, force_break=True)
    b = edhr.generate("SC", n=30, range=1000, seed=5, force_break=True)
    assert a == b
    assert all(p == w + 200 for p, w in zip(a.profits, a.weights))

    with pytest.raises(ValueError):
        edhr.normalize_and_sort(edhr.Instance(profits=[1, 1], weights=[1, 1], capacity=5))


def test_adversary_threshold():
    inst = edhr.make_adversary(m=1, r=2)
    assert inst.capacity == 7
    assert 0 not in edhr.edhr_partition(inst, 2).n1
    assert 0 in edhr.edhr_partition(inst, 3).n1


def test_file_round_trip(tmp_path):
    inst = edhr.generate("UC", n=20, range=100, seed=3, force_break=False)
    native = tmp_path / "inst.kp"
    edhr.write_instance(inst, native)
    assert edhr.read_instance(native) == inst

    jooken = tmp_path / "inst.jooken"
    edhr.write_jooken(inst, jooken)
    assert edhr.read_jooken(jooken) == inst


def test_export_lp():
    inst = edhr.Instance(profits=[7, 5, 4, 1], weights=[2, 2, 2, 2], capacity=5)
    text = edhr.export_lp(inst)
    assert "2 x1 + 2 x2 + 2 x3 + 2 x4 <= 5" in text
    constrained = edhr.export_lp(inst, i=1)
    assert "x1 >= 1" in constrained


def test_node_dominance_sample():
    inst = edhr.generate("UC", n=60, range=1000, seed=9, force_break=True)
    _, plain = edhr.solve(inst, mode="plain-bb")
    _, reduced = edhr.solve(inst, mode="constrained-bb", i=2)
    assert reduced.nodes_expanded <= plain.nodes_expanded


def test_bench_rows():
    rows, errors = edhr.run_bench(["UC"], [20], [1, 2], i=2, range=100)
    assert errors == []
    assert [r.instance_name for r in rows] == ["UC-n20-s1", "UC-n20-s2", "average"]
    assert all(r.obj_base == r.obj_edhr for r in rows[:2])
    csv = edhr.emit_report(rows, "csv")
    assert csv.startswith("instance,family,n,i,")
    assert len(csv.strip().splitlines()) == 4
