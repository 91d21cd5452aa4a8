from fractions import Fraction

import pytest

import aslab


def test_field_info():
    info = aslab.field_info(5, 2)
    assert info["descriptor"] == "5^2"
    assert info["size"] == 25
    assert info["modulus"] == [2, 0, 1]


def test_cover_invariants():
    assert aslab.as_genus(3, 3, [2]) == 1
    assert aslab.as_prank(3, 3, [2]) == 0
    assert aslab.as_genus(3, 9, [1, 1]) == 8
    assert aslab.hodge_slopes(3, 3, [2]) == [Fraction(1, 2)] * 2
    with pytest.raises(ValueError):
        aslab.as_genus(3, 3, [3])


def test_zeta():
    z = aslab.zeta("3", "A=[(0,1),(1,1)],f=x^2", 2)
    assert z["counts"] == [4, 16]
    assert z["L_coeffs"] == [1, 0, 3]
    assert z["prank"] == 0
    with pytest.raises(aslab.BudgetExceeded):
        aslab.zeta("5", "q=25,f=x^4")


def test_ranks():
    assert aslab.genus_X([2], [1, 1]) == 1
    assert aslab.preset_rank("f_eq_g_quadratic", 9)["rank"] == 8
    assert aslab.preset_rank("cubic_fermat", 5)["rank"] == 8
    assert aslab.self_dual_orbit_count(5, 1) == 2


def test_lattices():
    g = aslab.iso_gram(5)
    assert len(g["labels"]) == 15
    assert g["entries"][0][0] == Fraction(8, 3)
    lat = aslab.iso_lattice(5)
    assert lat["rank"] == 8
    assert lat["discriminant"] == Fraction(15625, 81)
    n = aslab.noniso_lattice(5, "2")
    assert n["rank"] == 4
    assert n["discriminant"] == Fraction(68121, 1280)
    with pytest.raises(ValueError):
        aslab.iso_gram(7)


def test_oracle_small():
    closed = aslab.iso_gram(2)
    oracle = aslab.iso_gram(2, oracle=True)
    assert oracle == closed
    assert aslab.iso_point_height(2, [1, 0, 0, 0, 0, 0]) == Fraction(2, 3)
    assert aslab.index_conjecture(2)["match"]
