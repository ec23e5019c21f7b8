import json
import math

import pytest

import bszego


def test_gauss_rule():
    r = bszego.rule_cos_plus_cosh(1, 1, 1.0)
    assert r.nodes == [0.0]
    assert r.weights[0] == pytest.approx(math.pi / 2)
    assert r([1.0]) == pytest.approx(math.pi / 2)
    assert len(bszego.rule_cos_plus_cosh(3, 5, 2.0)) == 4


def test_signed_rule_constraint():
    r = bszego.rule_cosh_minus_cos(3, 2, 1.0)
    assert r.p_zero_at_origin
    with pytest.raises(bszego.Error):
        r([1.0])


def test_parity_error():
    with pytest.raises(bszego.Error, match="ParityError"):
        bszego.rule_cos_plus_cosh(2, 3, 1.0)


def test_weights_and_factor():
    assert bszego.rho(1, 1, 1.0, bszego.Family.CosPlusCosh, 0.3) == pytest.approx(2.0)
    h, residual = bszego.szego_factor(1, 1, 1.0, bszego.Family.CosPlusCosh)
    assert h == pytest.approx([math.sqrt(2.0)])
    assert residual < 1e-12


def test_sums_and_corollaries():
    assert bszego.sum_form(1, 1, 1.0, 0) == pytest.approx(math.pi / 2)
    assert bszego.sum_form(5, 3, 2.0, 1) == pytest.approx(bszego.sum_form_beta(5, 3, 2.0, 1), abs=1e-10)
    closed, oracle = bszego.corollary("A", 3, a=0.5)
    assert closed == pytest.approx(math.pi / 4)
    assert oracle == pytest.approx(closed, abs=1e-9)


def test_trig():
    assert bszego.s_sum(3, 3) == pytest.approx(0.375)
    lhs, rhs = bszego.theta_integral(3, 3)
    assert lhs == pytest.approx(rhs, abs=1e-9)
    lhs, rhs = bszego.pf_reciprocal_U(3, 0.4 + 0.2j)
    assert abs(lhs - rhs) < 1e-10
    lhs, rhs = bszego.ramanujan_353(4, 3)
    assert lhs == pytest.approx(math.pi / 4, abs=1e-9)


def test_pick():
    assert bszego.pick_eval(1.0, 1j, [(1.0, -1j)], 0.0) == pytest.approx(2j)
    lhs, rhs, rel = bszego.moment_match(3, 5, 0.0, 1j, [], "measure2", 6)
    assert rel < 1e-6


def test_verify_and_report():
    ids = [s[0] for s in bszego.suites()]
    assert "quad1" in ids
    grid = {"quad1": {"n": [1, 3, 5], "m": [1, 3, 5], "a": [0.5, 1.0, 2.0]}}
    records = bszego.run_verify(["quad1"], grid, jobs=2)
    assert len(records) == 27
    assert all(r.passed for r in records)
    doc = json.loads(bszego.report(records, "json"))
    assert doc["summary"] == {"failed": 0, "passed": 27, "total": 27}
    assert "27/27 passed" in bszego.report(records)
    with pytest.raises(bszego.Error, match="UnknownSuite"):
        bszego.run_verify(["nope"])


def test_dump_rule():
    doc = json.loads(bszego.dump_rule(3, 2, 1.0, "CoshMinusCosOverT"))
    assert doc["constraint"]["p_zero_at_origin"] is True
    csv = bszego.dump_rule(3, 5, 2.0, format="csv").splitlines()
    assert csv[0] == "node,weight"
    assert len(csv) == 5
