import pytest

import lowdeg


def test_formulas():
    assert lowdeg.F(1, 2, 2) == 3
    assert lowdeg.delta_small(1, 3, 2, 2).value == 5
    assert lowdeg.delta_curve(4, 4, 3).g == 0
    assert lowdeg.delta_curve(4, 4, 3).d == 6
    assert all(r.passed for r in lowdeg.identity_suite(3, 5, 5))
    with pytest.raises(lowdeg.DomainError):
        lowdeg.delta_curve(4, 2, 1)


def test_minimal_degree_and_elliptic():
    for r in range(3, 6):
        v = lowdeg.rational_normal_curve(r)
        assert lowdeg.a_m(v, 2) == lowdeg.F(1, r - 1, 2)
    assert lowdeg.a_m(lowdeg.veronese_surface(), 2) == 6
    e = lowdeg.elliptic_normal_curve(4)
    assert lowdeg.a_m(e, 3) == lowdeg.G(2, 1, 4, 3)


def test_profile_and_classification():
    v = lowdeg.multisecant_projection(4, 4, 0, seed=7)
    prof = lowdeg.deficiency_profile(v)
    assert prof.nonzero() == "(2,1)"
    assert prof.reg == 4
    assert lowdeg.verify_reg_bound(prof).status == "holds"
    cls = lowdeg.classify_a2_curve(v)
    assert cls.k == 4 and cls.identity_holds


def test_points():
    g = lowdeg.PointConfig([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert g.regularity() == 2
    pts = lowdeg.sample_points(lowdeg.rational_normal_curve(3), 9, 5)
    assert len(pts.extract_three_regular()) == 7
    again = lowdeg.read_points(pts.to_text())
    assert again.hilbert(2) == pts.hilbert(2)
    with pytest.raises(lowdeg.FormatError):
        lowdeg.read_points("field 7\n2 1\n1 x 0\n")


def test_secants_over_q():
    z = lowdeg.zak_invariants(lowdeg.rational_normal_curve(3, p=None), confirm=True)
    assert (z.ell2, z.k2, z.delta(3)) == (2, 3, 1)
    assert z.zak4_ok and z.rational_confirmed
