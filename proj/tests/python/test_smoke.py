import os
from pathlib import Path

import pytest

import mcdg

DATA = Path(os.environ.get("MCDG_DATA", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return mcdg.load(str(DATA / name))


def test_parse_emit_fixed_point():
    c = load("endo-121.cat")
    assert c.objects == ["E"]
    assert c.field == "Q"
    c.validate()
    text = c.emit()
    assert mcdg.parse(text).emit() == text


def test_hom_dims():
    c = load("endo-121.cat")
    dims = c.hom_dims("E", "E")
    assert dims[0] == 6 and dims[1] == 4 and dims[2] == 1
    assert dims[-1] == 4 and dims[-2] == 1


def test_point_counts():
    c = load("endo-111.cat")
    assert c.over("F2").count_points("E") == 3
    assert c.over("F3").count_points("E") == 5
    assert c.over("F2").count_points("E", dual=True) == 8


def test_mc_and_curvature():
    c = load("endo-111.cat").over("F2")
    assert c.is_mc("E", ["0", "0"])
    assert c.is_mc("E", ["1", "0"])
    assert not c.is_mc("E", ["1", "1"])
    assert c.curvature("E", ["1", "1"]) == ["1"]


def test_ideal_texts():
    c = load("endo-121.cat")
    text = c.ideal("E")
    assert "1*x3*x1 + 1*x4*x2" in text
    direct = mcdg.direct_ideal([1, 2, 1], "Q")
    assert "1*x3*x1 + 1*x4*x2" in direct


def test_lift_certificate_deterministic():
    c = load("endo-111.cat").over("F5")
    a = c.lift_certificate("E", ring="dual", seed=11)
    b = c.lift_certificate("E", ring="dual", seed=11)
    assert a == b
    assert "square-zero lift certificate" in a
    assert "verified exactly" in a
    assert "F5[x]/(x^3)" in c.lift_certificate("E", ring="poly3", seed=7)


def test_dp_ranks():
    c = load("endo-121.cat")
    assert c.dp_ranks("E", "E", 3) == [6, 10, 15, 21]


def test_segal():
    c = load("two-object.cat").over("F2")
    assert c.segal_ok(2, 1, cap=3)
    assert c.segal_ok(3, 0, cap=3)


def test_prestack_counts():
    v = load("endo-111.cat").over("F2").prestack(1)
    assert v["counted"]
    assert len(v["points"]) == 3
    assert [lv["total"] for lv in v["interior"]] == ["3", "20"]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        mcdg.parse("")
    with pytest.raises(mcdg.Error, match="unknown object"):
        load("endo-111.cat").ideal("X")
    with pytest.raises(mcdg.Error, match="not prime"):
        load("endo-111.cat").over("F4")
