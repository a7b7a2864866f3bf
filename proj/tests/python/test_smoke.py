import os
from pathlib import Path

import pytest

import ttpk

GOLDEN = Path(os.environ.get("TTPK_GOLDEN_DIR", Path(__file__).resolve().parent.parent / "golden"))


def golden_rows(name):
    lines = (GOLDEN / name).read_text().splitlines()[2:]
    return [[int(c) for c in line.split()] for line in lines if line.strip()]


def test_tables_match_golden():
    assert ttpk.normal_block(3, 2) == golden_rows("table_normal_k3_d2.txt")
    assert ttpk.left_block(3, 2) == golden_rows("table_left_k3_d2.txt")
    assert ttpk.special_ttp2(6) == golden_rows("table_ttp2_m6.txt")


def test_solvers_and_errors(tmp_path):
    inst = ttpk.random_restricted_ktc(7, 6, 3, 10)
    path = tmp_path / "i.ktc"
    ttpk.save_instance(inst, str(path))
    assert ttpk.load_instance(str(path)) == inst
    exact = ttpk.brute_force_ktc(inst)
    heur = ttpk.heuristic_ktc(inst, seed=2)
    assert ttpk.validate_ktc_solution(inst, exact) == []
    assert ttpk.solution_weight(inst, heur) >= ttpk.solution_weight(inst, exact)
    with pytest.raises(ttpk.CapacityExceeded):
        ttpk.brute_force_ktc(ttpk.random_restricted_ktc(1, 12, 3, 10))
    assert issubclass(ttpk.CapacityExceeded, ttpk.Error)


def test_schedule_and_bundle():
    rows = ttpk.assemble_schedule(3, 1, 4)
    assert len(rows) == 12 and len(rows[0]) == 22
    assert ttpk.validate_schedule(rows, 3) == []
    assert ttpk.colocated_cost(rows) == 0

    inst = ttpk.random_restricted_ktc(7, 5, 3, 10)
    sol = ttpk.brute_force_ktc(inst)
    b = ttpk.build_mini_bundle(inst, sol, 2, 6)
    assert b.packing_weight == ttpk.solution_weight(inst, sol)
    assert b.itinerary_weight(b.m) == b.packing_weight
    assert ttpk.solution_weight(inst, b.extract(b.teams - 1)) == b.packing_weight
    report = b.verify_bounds(sample=4)
    assert report["lower"][2] and report["upper"][2] and report["lred"][2]
