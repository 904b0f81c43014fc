"""Smoke test of the python bindings: types route through, exactness survives."""

from fractions import Fraction

import pytest

import qstar


def uniform(eps):
    return qstar.FunctionSpec(qstar.ColumnSchedule.uniform_thirds(),
                              qstar.EpsilonSchedule.constant(qstar.Rational(eps)))


def test_rational_quacks_like_a_number():
    r = qstar.Rational("1/3")
    assert str(r) == "1/3"
    assert r + qstar.Rational("1/6") == qstar.Rational("1/2")
    assert r.fraction() == Fraction(1, 3)
    assert float(r) == pytest.approx(1 / 3)
    assert qstar.Rational(2) * r == qstar.Rational("2/3")
    assert r < qstar.Rational("1/2")
    assert r.decimal(4) == "0.3333"
    with pytest.raises(ValueError):
        qstar.Rational("nope")


def test_sequences_and_values():
    x = qstar.DigitSeq("1", "0")
    assert str(x) == "1(0)"
    assert x.at(1) == 1
    assert x.at(5) == 0
    s = qstar.ColumnSchedule.uniform_thirds()
    assert qstar.value_of(s, x) == qstar.Rational("1/3")
    dual = qstar.dual_representation(x)
    assert dual is not None
    assert str(dual) == "0(2)"
    assert qstar.value_of(s, dual) == qstar.Rational("1/3")


def test_encode_and_eval_round_trip():
    f = uniform("1/2")
    word, exact, full = qstar.encode(f.x_schedule, qstar.Rational("1/4"), 32)
    assert exact
    assert str(full) == "(02)"
    assert qstar.eval_exact(f, full) == qstar.Rational("1/3")
    assert qstar.eval_approx(f, 0.25) == pytest.approx(1 / 3, abs=1e-12)


def test_classification_and_plateaus():
    f = uniform("1/2")
    regime = qstar.classify_regime(f.eps)
    assert regime.tag == qstar.RegimeTag.CantorSingular
    assert qstar.plateau_cylinders(f, 2) == ["1", "01", "21"]
    assert qstar.plateau_measure(f, 3) == qstar.Rational("19/27")


def test_levelset_and_fractal():
    flip = uniform(1)
    regions = qstar.preimage_regions(flip, qstar.Rational("1/2"), 6)
    assert len(regions) >= 2
    assert all(r.f_lo <= qstar.Rational("1/2") <= r.f_hi for r in regions)

    maps = qstar.ifs_maps(flip)
    assert maps[1].gy == qstar.Rational("-1/3")
    with pytest.raises(qstar.DegenerateMapError):
        qstar.ifs_maps(uniform("1/2"))
    with pytest.raises(qstar.SpecParseError):
        qstar.FunctionSpec.from_json("{}")

    sample = qstar.graph_sample(flip, 3)
    assert len(sample.points) == 28
    assert qstar.self_affine_residual(flip, sample) == qstar.Rational(0)

    dim = qstar.box_dimension(uniform(0), [27, 81])
    assert 0.9 < dim.estimate < 1.1


def test_verification_harness():
    ok, report = qstar.run_verification(uniform(1), rank=3)
    assert ok
    assert "ok" in report
