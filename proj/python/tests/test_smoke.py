import json
from fractions import Fraction
from pathlib import Path

import pytest

import hnslope

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def read(name):
    return (DATA / name).read_text()


def test_polygon_operations():
    assert hnslope.convex_sum([1, 0], "[1/2]") == [1, Fraction(1, 2), 0]
    assert hnslope.involution(["3", "1/2"]) == [Fraction(-1, 2), -3]
    assert hnslope.dominance("[2, 0]", "[1, 1]") == "Greater"
    assert hnslope.evaluate([1, 0], "3/2") == 1
    assert hnslope.tensor_type([1, 0], [1, 0]) == [2, 1, 1, 0]
    assert hnslope.twist_shift([1, 0], -1) == [0, -1]


def test_bad_type_raises():
    with pytest.raises(hnslope.HnslopeError) as info:
        hnslope.involution([0, 1])
    assert info.value.kind == "SchemaError"


def test_lattices():
    assert hnslope.lattice_distance(read("lattice_padic.txt")) == [1, -2]
    assert hnslope.snf_valuations(read("lattice_padic.txt")) == ["-1", "2"]
    assert hnslope.torsion_inv(read("torsion_hahn.txt")) == [Fraction(5, 2)]


def test_modules():
    phi = read("phi_diag.txt")
    assert hnslope.hodge_type(phi) == [1, 0]
    assert hnslope.fargues_type(phi) == [1, 0]
    assert hnslope.newton_type(read("crystal.txt")) == [Fraction(1, 2), Fraction(1, 2), 0]
    assert hnslope.mazur_check(read("crystal_matrix.txt")) == "Holds"
    assert hnslope.ht_fargues_bound(read("ht.txt")) == ([1, -1], False)


def test_hn():
    assert hnslope.hn_filtration(read("poset.txt")) == ([2, -1], ["0", "a", "M"], [2, -1])
    with pytest.raises(hnslope.HnslopeError) as info:
        hnslope.hn_filtration(read("tied_poset.txt"))
    assert info.value.kind == "NotAdmissible"


def test_check_and_plot():
    report = json.loads(hnslope.run_check(seed=42, cases=2))
    assert [s["suite"] for s in report["suites"]] == list(hnslope.check_suite_names())
    assert all(not s["failures"] for s in report["suites"])
    svg = hnslope.plot([("a", [1, 0]), ("b", "[1, 0]")])
    assert svg.count("<polyline") == 2
    assert "60.000,540.000 400.000,60.000 740.000,60.000" in svg
