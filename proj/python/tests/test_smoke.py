import math
from fractions import Fraction

import pytest

import qdist

ELLIPSE_POINT = {
    "kind": "point-quadric",
    "quadric": {"A": [["1/4", 0], [0, 1]], "c": -1},
    "point": [1, 1],
}


def test_polynomial():
    assert qdist.polynomial(ELLIPSE_POINT) == [13, -792, 610, -144, 9]


def test_distance():
    r = qdist.distance(ELLIPSE_POINT, exact=True)
    assert r["status"] == "ok"
    assert math.isclose(float(qdist.rational(r["d"])), 0.1289426786, rel_tol=1e-9)
    x, y = (Fraction(v) for v in r["points"][0]["x_exact"])
    assert abs(x * x / 4 + y * y - 1) < Fraction(1, 10**20)


def test_fraction_inputs():
    problem = dict(ELLIPSE_POINT, point=[Fraction(1), Fraction(1)])
    assert qdist.distance(problem, bits=64)["bits"] == 64


def test_centred_ellipses():
    r = qdist.distance({
        "kind": "centered-quadric-quadric",
        "quadrics": [{"A": [[10, -6], [-6, 8]]}, {"A": [[1, "1/2"], ["1/2", 1]]}],
    })
    assert math.isclose(float(qdist.rational(r["d"])), 0.23226206, rel_tol=1e-7)


def test_intersect():
    r = qdist.intersect({
        "kind": "quadric-quadric",
        "quadrics": [{"A": [[1, 0], [0, 1]]}, {"A": [[1, 0], [0, 1]], "B": ["-1/2", 0], "c": "-3/4"}],
    })
    assert r["intersects"] is True


def test_errors():
    with pytest.raises(ValueError):
        qdist.distance({"kind": "point-quadric"})
    with pytest.raises(qdist.DegenerateError):
        qdist.distance({"kind": "point-quadric",
                        "quadric": {"A": [[1, 0], [0, 1]], "B": [-1, 0], "c": 0}, "point": [3, 0]})


def test_run():
    status, out, err = qdist.run(["frobnicate"])
    assert status == 2
