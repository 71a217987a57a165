import _boreldegen as bd


def test_enumerate_counts():
    assert len(bd.enumerate_ideals("5t-2")) == 7
    assert len(bd.enumerate_ideals("6t-3")) == 31


def test_filter_partition():
    fr = bd.filter_candidates(1, 3)
    assert len(fr["passing"]) == 2
    assert len(fr["failing_c1"]) == 4
    assert len(fr["failing_c2"]) == 1


def test_groebner_and_initial():
    gb = bd.groebner_basis("x^2 - y*z; x*y - z^2", order="lex")
    assert any("x^2" in g for g in gb)
    init = bd.initial_ideal("x^2 - y*z; x*y - z^2", order="lex")
    assert "x^2" in init


def test_hilbert_and_saturation():
    assert bd.hilbert_polynomial("x^2, x*y, y^4") == "5t-2"
    assert (
        bd.saturation("x^3, x^2*y, x^2*z, x^2*w, x*y, y^4")
        == bd.saturation("x^2, x*y, y^4")
    )


def test_witness():
    res = bd.verify_witness(
        3, 1, "y^2*z + w*z*y + 2*y*z^2 - w^2*z + 4*z^3", "lex",
        "x^2, x*y^3, x*y^2*z, x*y*z^2, x*z^6, y^7",
    )
    assert res["verified"]


def test_segment():
    assert bd.is_segment("x^2, x*y, y^4", 4) is not None
    assert bd.classify_segment("x^2, x*y, y^4") == "hilbert"


def test_prediction():
    r = bd.verify_prediction("EqProq2.1", 2, 2, i=1, seed=42)
    assert r["confirmed"]
    assert "EqProq2.1" in bd.prediction_case_ids()
