from fractions import Fraction

import pytest

import pjp


def monomials(doc):
    return {tuple(t["exp"]["num"]): Fraction(t["coeff"]) for t in doc["terms"]}


def test_steinberg_generators():
    d = pjp.steinberg("A2", [2])
    assert [g["v"] for g in d["generators"]] == ["e", "s1", "s2*s1"]
    assert monomials(d["generators"][1]["phi"]) == {(-1, 1): 1, (0, -1): 1}
    assert len(d["table"]["rows"]) == 6


def test_jacobi_a1():
    p = pjp.jacobi("A1", [1], [2], 1)
    assert monomials(p) == {(2,): 1, (-2,): 1, (0,): 1}
    assert pjp.normalize("jacobi", p) == p


def test_epoly_closed_form():
    k = Fraction(5, 3)
    e = pjp.epoly("A1", [-1], k, method="sym")
    assert monomials(e) == {(-1,): 1, (1,): k / (1 + k)}
    assert pjp.normalize("epoly", e) == e


def test_methods_agree():
    a = pjp.jacobi("A2", [2], [-1, 1], 2, method="sym")
    b = pjp.jacobi("A2", [2], [-1, 1], 2, method="gs")
    assert a == b


def test_vector_and_mvop():
    v = pjp.vec("A2", [2], [-1, 0], 1, scale=2)
    assert len(v["components"]) == 3
    assert pjp.normalize("vector", v) == v
    m = pjp.mvop("A2", [2], [0, 0], 1)
    assert len(m["mvop"]) == 3 and len(m["labels"]) == 3


def test_errors():
    with pytest.raises(pjp.PjpError, match="unsupported root system"):
        pjp.jacobi("Z9", [], [0], 1)
    with pytest.raises(pjp.PjpError, match="NotIDominant"):
        pjp.jacobi("A2", [2], [0, -1], 1)
    with pytest.raises(pjp.PjpError, match="NonIntegerMultiplicity"):
        pjp.jacobi("A2", [2], [-1, 0], "1/2", method="gs")


def test_verify_criterion():
    cases = pjp.verify(1)
    assert len(cases) == 3 and all(ok for _, ok, _ in cases)
    cases = pjp.verify(8, kset=["1"], box=1)
    assert [ok for name, ok, _ in cases if name.startswith("M2")] == [True]
    assert [ok for name, ok, _ in cases if name.startswith("M1")] == [False]
