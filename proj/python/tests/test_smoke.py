import json

import pytest

import wbafrac


def test_version_and_catalog():
    assert wbafrac.__version__ == "0.1.0"
    assert "sweedler" in wbafrac.examples()
    assert "localize" in wbafrac.suite_names()


def test_scalar_arithmetic():
    z = wbafrac.Scalar.zeta(8, 1)
    assert (z * z.inverse()).is_one()
    s = wbafrac.Scalar.sqrt_two(8)
    assert s * s == wbafrac.Scalar(2)
    q = wbafrac.Scalar.zeta(12, 2)
    assert wbafrac.quantum_integer(2, q) == q + q.inverse()


def test_check_sweedler():
    report = wbafrac.check("sweedler", ["wba", "coquasi"], {"alpha": -3})
    assert report["passed"]
    assert report["params"]["alpha"] == "-3"


def test_printed_antipode_fails():
    report = wbafrac.check("sweedler", ["antipode"], {"antipode": "printed"})
    assert not report["passed"]


def test_h4_localization_is_one_dimensional():
    assert wbafrac.localize("h4", ["zerobar", "onebar"])["dimension"] == 1


def test_quantum_determinant_r3():
    terms = wbafrac.quantum_determinant(3)
    assert terms == {
        "[(0,1,0)|(0,1,0)]": "1",
        "[(0,1,0)|(1,0,1)]": "-1",
        "[(1,0,1)|(0,1,0)]": "-1",
        "[(1,0,1)|(1,0,1)]": "1",
    }


def test_emit_and_cli_agree():
    tables = wbafrac.emit("sweedler")
    code, out, _ = wbafrac.run_cli(["emit", "sweedler"])
    assert code == 0
    assert json.loads(out)["wba"] == tables


def test_errors():
    with pytest.raises(ValueError):
        wbafrac.check("nope")
    with pytest.raises(RuntimeError):
        wbafrac.localize("sweedler", ["y"])
    code, _, err = wbafrac.run_cli(["check", "nope"])
    assert code == 2 and "nope" in err
