from fractions import Fraction as F

import pytest

from dioph6.errors import UnfactorableError
from dioph6.exactnum import vp
from dioph6.family import curve_E, curve_Epp, point_R
from dioph6.reduction_lab import (
    bad_primes_epp,
    classify,
    epp_invariants,
    mod3_sign_table,
    nonsingular_residues,
    p_minimal_model,
    valuation_table,
)
from dioph6.weierstrass import Curve, point

T31_POINT = point(-150072, 682327360)
T17_POINT = point(35000, 40986000)


# ---------------------------------------------------------------------------
# invariants of the two-torsion model
# ---------------------------------------------------------------------------

def test_epp_invariants_cross_oracle():
    for t, m in ((F(2), 2), (F(3), 2)):
        base = curve_E(t)
        pt = base.mul(m, point_R(t))
        delta, c4 = epp_invariants(t, pt)
        sq = curve_Epp(t, pt.x).std_quantities()
        assert (delta, c4) == (sq.delta, sq.c4)


def test_epp_invariants_t3_values():
    base = curve_E(3)
    pt = base.mul(2, point_R(3))
    assert pt.x == 168
    delta, _ = epp_invariants(3, pt)
    assert delta == 3**6 * pt.y**2 / 168**6


def test_epp_invariants_rejects():
    with pytest.raises(ValueError):
        epp_invariants(3, point(0, 1000))
    with pytest.raises(ValueError):
        epp_invariants(3, point(1, 1))  # not on the curve


# ---------------------------------------------------------------------------
# minimal models and classification
# ---------------------------------------------------------------------------

def test_p_minimal_model_already_minimal():
    curve = Curve(0, 1512, 33588)
    model, k = p_minimal_model(curve, 5)
    assert k == 0 and model == curve


def test_p_minimal_model_roundtrip():
    # one u = p step applied to the coefficients is undone with exponent -1
    curve = Curve(0, 1512, 33588)
    scaled = curve.scale(7)
    model, k = p_minimal_model(scaled, 7)
    assert k == -1
    assert model == curve
    # and an inflated model is deflated with a positive exponent
    inflated = curve.scale(F(1, 7))
    model, k = p_minimal_model(inflated, 7)
    assert k == 1
    assert model == curve


def test_p_minimal_model_rejects_two():
    with pytest.raises(ValueError):
        p_minimal_model(Curve(0, 1512, 33588), 2)
    with pytest.raises(ValueError):
        classify(Curve(0, 1512, 33588), 2)


def test_classify_t31_additive_fixture():
    assert curve_E(31).contains(T31_POINT)
    model = curve_Epp(F(31), T31_POINT.x)
    for p in (13, 31, 37):
        report = classify(model, p)
        assert report.type == "add", (p, report)
        assert report.v_delta > 0
        assert report.v_c4 is None or report.v_c4 > 0
    # supporting facts
    assert vp(T31_POINT.x, 13) == 2
    assert vp(T31_POINT.x, 37) == 1
    assert (-150072) % 31 == 30
    assert 31**2 + 1 == 2 * 13 * 37


def test_classify_t17_additive_at_3():
    assert curve_E(17).contains(T17_POINT)
    report = classify(curve_Epp(F(17), T17_POINT.x), 3)
    assert report.type == "add"
    assert vp(T17_POINT.y, 3) > 0  # the hypothesis failure that allows it


def test_classify_t3_multiples_never_additive_at_5():
    base = curve_E(3)
    seed = point_R(3)
    for m in range(2, 6):
        x = base.mul(m, seed).x
        report = classify(curve_Epp(F(3), x), 5)
        assert report.type in ("good", "mult"), (m, report)


def test_classification_invariant_under_coprime_scaling():
    model = curve_Epp(F(3), curve_E(3).mul(2, point_R(3)).x)
    for p in (3, 5, 7):
        base_report = classify(model, p)
        for u in (F(2), F(11, 2), F(1, 13)):
            scaled_report = classify(model.scale(u), p)
            assert (base_report.type, base_report.v_delta, base_report.v_c4) == (
                scaled_report.type,
                scaled_report.v_delta,
                scaled_report.v_c4,
            )


def test_report_json_shape():
    report = classify(curve_Epp(F(31), T31_POINT.x), 13)
    data = report.to_json_dict()
    assert list(data) == ["p", "type", "v_delta", "v_c4", "scaling_exponent"]
    assert data["type"] == "add"


# ---------------------------------------------------------------------------
# bad-prime scan
# ---------------------------------------------------------------------------

def test_bad_primes_t3_candidates():
    pt = curve_E(3).mul(2, point_R(3))
    report = bad_primes_epp(3, pt)
    assert report.candidates == (3, 5)  # odd primes of t(t^2+1) = 30
    assert report.additive == ()
    assert report.prop_applicable and report.prop_holds
    classified = dict(report.entries)
    assert set(classified) >= {3, 5}
    for extra in set(classified) - {3, 5}:
        assert classified[extra].v_delta > 0


def test_bad_primes_t31_fixture():
    report = bad_primes_epp(31, T31_POINT)
    assert report.candidates == (13, 31, 37)
    assert report.additive == (13, 31, 37)
    assert report.prop_applicable and report.prop_holds


def test_bad_primes_t17_exception():
    report = bad_primes_epp(17, T17_POINT)
    assert not report.prop_applicable  # v_3(y) > 0
    assert report.prop_holds is None
    assert 3 in report.additive
    assert 3 not in report.candidates


def test_bad_primes_factor_bound():
    with pytest.raises(UnfactorableError):
        bad_primes_epp(3, curve_E(3).mul(2, point_R(3)), bound=2)


def test_bad_primes_rejects_off_curve():
    with pytest.raises(ValueError):
        bad_primes_epp(31, point(-150072, 1))


# ---------------------------------------------------------------------------
# valuation tables
# ---------------------------------------------------------------------------

def test_valuation_table_t3_p5_values():
    rows = valuation_table(3, 5, m_max=4)
    by_part = {}
    for row in rows:
        by_part.setdefault(row.lemma_part, []).append(row)
    assert by_part["v(x([2]R))"][0].observed == 0  # x = 168
    assert by_part["v(x([3]R))"][0].observed == 4  # x = 220000/441
    assert all(row.passed for row in rows)


@pytest.mark.parametrize("t, p", [(3, 5), (8, 13), (4, 17)])
def test_valuation_tables_pass(t, p):
    rows = valuation_table(t, p, m_max=4)
    assert rows and all(row.passed for row in rows)


def test_valuation_table_t4_p17_fourth_multiple():
    rows = valuation_table(4, 17, m_max=1)
    parts = {row.lemma_part: row for row in rows if row.m == 4}
    assert parts["v(x([4]R))"].observed == -2
    assert parts["v(y([4]R))"].observed == -3


def test_valuation_table_preconditions():
    with pytest.raises(ValueError):
        valuation_table(7, 5, m_max=2)  # 50 = 2 * 5^2: not exact division
    with pytest.raises(ValueError):
        valuation_table(3, 7, m_max=2)  # 7 does not divide 10
    with pytest.raises(ValueError):
        valuation_table(3, 2, m_max=2)  # p = 2 out of scope
    with pytest.raises(ValueError):
        valuation_table(3, 5, m_max=100)  # beyond desk scale


def test_mod3_sign_tables():
    for t in (2, 3, 5):
        rows = mod3_sign_table(t, m_max=3)
        assert rows and all(row.passed for row in rows)


def test_mod3_sign_table_t3_witness():
    # v_3(x([3]R)) at t = 3: x = 220000/441 and 441 = 3^2 * 49
    assert vp(F(220000, 441), 3) == -2
    rows = mod3_sign_table(3, m_max=1)
    first = {row.lemma_part: row for row in rows}
    assert first["sign v3(x([m][3]R))"].observed == -1


def test_nonsingular_residues():
    assert nonsingular_residues(3, 3, m_max=6)
    assert nonsingular_residues(6, 3, m_max=6)
    assert nonsingular_residues(5, 5, m_max=6)
    with pytest.raises(ValueError):
        nonsingular_residues(3, 5, m_max=4)  # 5 does not divide 3
