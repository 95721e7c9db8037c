import os
from fractions import Fraction

import pytest

import torus_super as ts

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")


def test_trefoil_terms():
    p = ts.compute(2, 3)
    assert (p.n, p.m) == (2, 3)
    assert p.terms == [(0, 0, 0, 1), (0, 4, 2, 1), (2, 2, 3, 1)]
    assert p.flags.all()
    assert str(p) == "1 + q^4*t^2 + a^2*q^2*t^3"


def test_trefoil_json_matches_fixture():
    with open(os.path.join(FIXTURES, "knot_2_3.json")) as f:
        assert ts.compute(2, 3).to_json() + "\n" == f.read()


def test_specializations():
    p = ts.compute(2, 3)
    assert ts.specialize(p, "homfly") == "1 + q^4 - a^2*q^2"
    assert ts.specialize(p, "jones") == "1 + q^4 - q^6"
    assert ts.specialize(p, "alexander") == "1 - q^2 + q^4"
    with pytest.raises(ValueError):
        ts.specialize(p, "kauffman")


def test_non_coprime_raises():
    with pytest.raises(ts.NonPolynomialError):
        ts.compute(2, 4)
    with pytest.raises(ArithmeticError):
        ts.compute(3, 6)


def test_bad_arguments():
    with pytest.raises(ts.UsageError):
        ts.compute(0, 3)


def test_threads_agree():
    assert ts.compute(4, 11, threads=1).to_json() == ts.compute(4, 11, threads=4).to_json()


def test_coefficients_are_python_ints():
    for term in ts.compute(5, 6).terms:
        assert isinstance(term[3], int) and not isinstance(term[3], Fraction)
        assert term[3] > 0


def test_generating_function():
    gf = ts.generating_function(2, 1)
    assert gf["n"] == 2 and gf["r"] == 1
    assert len(gf["denominator"]) == 2
    with pytest.raises(ts.CalibrationError):
        ts.generating_function(4, 2)


def test_scan():
    rows = ts.scan(3, 7)
    assert [(r["n"], r["m"]) for r in rows][:3] == [(2, 3), (2, 4), (2, 5)]
    assert all(r["status"] in ("polynomial", "nonpolynomial") for r in rows)
    assert rows[0]["term_count"] == 3


def test_verify_fixture():
    assert ts.verify_fixture(os.path.join(FIXTURES, "knot_4_7.json")) == ""
    with pytest.raises(ts.IoError):
        ts.verify_fixture(os.path.join(FIXTURES, "missing.json"))


def test_verify_oracle():
    checks = ts.verify_oracle(2)
    assert checks and all(ok for _, ok in checks)
    with pytest.raises(ValueError):
        ts.verify_oracle(6)
