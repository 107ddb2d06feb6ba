import pytest

import monorr

D29 = "x^29, y^29, z^29, x^28*y^8*z^8, x^8*y^28*z^8, x^8*y^8*z^28"


def test_parse_and_format():
    variables, ideal = monorr.parse("x^3, y^3, x*y, x^4")
    assert variables == ["x", "y"]
    assert len(ideal) == 3
    assert monorr.format(ideal, variables) == "<x*y, x^3, y^3>"
    assert (1, 1) in ideal
    assert (2, 0) not in ideal


def test_ideal_arithmetic():
    I = monorr.Ideal(2, [(2, 0), (0, 2), (1, 1)])
    assert I * monorr.Ideal.unit(2) == I
    assert I**2 == I * I
    assert I & I == I
    assert I <= I + monorr.Ideal(2, [(1, 0)])
    assert monorr.colon(I**2, I) == I
    assert monorr.profile(I) == [2, 2]


def test_closure_golden():
    vars_, I = monorr.parse(D29)
    closed = monorr.closure(I)
    assert monorr.format(closed, vars_) == monorr.format(I + monorr.ideal("x^26*y^26*z^26"), vars_)
    assert monorr.closure(I, threads=3) == closed
    s = monorr.stabilize(I, 0)
    assert s["q"] == 2
    assert s["new_monomials"][1] == [[27, 16, 16]]
    assert not monorr.is_ratliff_rush(I)


def test_oracle_matches_closure():
    I = monorr.ideal(D29)
    r = monorr.oracle(I, k_max=10)
    assert r["stabilized"]
    assert r["union"] == monorr.closure(I)
    assert len(r["counts"]) == 11


def test_classify_and_errors():
    bad = monorr.ideal("x^3, y^3, z^3, x*y*z")
    report = monorr.classify(bad)
    assert report["verdict"] == "bad"
    assert report["witness"]["monomial"] == [2, 2, 2]
    with pytest.raises(monorr.BadIdealError):
        monorr.closure(bad)
    with pytest.raises(monorr.NotMPrimaryError):
        monorr.classify(monorr.ideal("x^2, x*y"))
    with pytest.raises(monorr.ParseError):
        monorr.parse("x^-1")
    with pytest.raises(ValueError):
        monorr.Ideal(2, [(1, 2, 3)])


def test_box_ideal_and_freiman():
    vars_, I = monorr.parse("x^5, y^5, x*y^4, x^4*y")
    assert monorr.format(monorr.box_ideal(I, [1, 0]), vars_) == "<x^5, x^4*y, x^3*y^2, x*y^4, y^5>"
    assert not monorr.is_very_good(I)
    f = monorr.freiman(monorr.ideal("x^2, x*y, x*z, y^2, y*z, z^2"))
    assert f["verdict"] == "freiman"
    assert (f["g1"], f["g2"], f["bound"]) == (6, 15, 15)
