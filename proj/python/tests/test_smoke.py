import pathlib

import pytest

import diffelim

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def load(name):
    return diffelim.System((FIXTURES / name).read_text())


def test_poly_arithmetic():
    a = diffelim.Poly("u1 + 1")
    b = diffelim.Poly("u1 - 1")
    assert str(a * b) == str(diffelim.Poly("u1^2 - 1"))
    assert diffelim.exact_divide(a * b, b) == a
    assert diffelim.exact_divide(a, b) is None
    assert diffelim.divide_polynomial(diffelim.Poly("u1"), diffelim.Poly("u1^2")) is None
    assert (a - a).is_zero()


def test_jacobi_and_window():
    sys = load("jacobi_323.sys")
    assert sys.n == 3
    assert sys.jacobi_numbers() == [3, 2, 3]
    assert sys.is_super_essential()
    p = diffelim.Pipeline(sys)
    assert p.ps()["L"] == 11
    assert len(p.ps()["window"]) == 10


def test_predator_prey_pipeline():
    p = diffelim.Pipeline(load("predator_prey.sys"), seed=7, ps_order="ascending", mode="generic")
    assert p.L == 3
    assert p.distinguished() == [1, 2, 3]
    m = p.matrix(2)
    assert m["schema"] == 1
    d = p.determinant(2)
    assert not d["determinant"]["zero"]
    assert d["vanishesAtEpsilon"]
    e = p.eliminate(2)
    assert not e["output"]["zero"]
    assert e["verified"] is True


def test_errors_map_to_python_types():
    with pytest.raises(diffelim.ParseError):
        diffelim.System("system { diffvars: u1; f1 = u1 +; }")
    with pytest.raises(ValueError):
        load("invalid_p2.sys")
    with pytest.raises(diffelim.DegenerateConfiguration):
        diffelim.Pipeline(load("degenerate.sys")).matrix(1)
    with pytest.raises(diffelim.ValidationError):
        diffelim.Pipeline(load("jacobi_323.sys"), distinguished=[99]).distinguished()
