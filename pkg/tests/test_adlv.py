from fractions import Fraction

import pytest
from hypothesis import given

from conftest import elements
from hecke_a2.adlv import (
    D3X,
    DEFAULT_GHKR_MARGIN,
    EMPTY,
    GL3,
    PGL3,
    U3,
    AdlvError,
    PreconditionError,
    _is_min_coset_rep,
    adlv,
    adlv_record,
    basic_class,
    defect,
    ghkr_check,
    grassmannian_bound_check,
    leading_table,
    rational_points,
    sigma_class,
    sigma_classes,
)
from hecke_a2.conj import C, Mode, O2md, OLambda, classify, min_length
from hecke_a2.group import TAU, elements_up_to, fin, from_parts, length, multiply
from hecke_a2.theorems import stated_adlv, stated_points
from hecke_a2.verify import ghkr_minimal_margin, grassmannian_sweep

ONE = basic_class(PGL3, 0)
TAU_B = basic_class(PGL3, 1)


def test_sigma_class_examples():
    basics = [b for b in sigma_classes(PGL3, 0)]
    assert sorted(b.invariant.kappa for b in basics) == [0, 1, 2]
    assert all(b.basic for b in basics)
    u3 = sigma_classes(U3, 0)
    assert [str(b) for b in u3] == ["O0d"]
    assert any(b.repr == OLambda(1, 1) and b.invariant.newton == (1, 1)
               for b in sigma_classes(PGL3, 4))


def test_sigma_class_labels_are_straight():
    for g in (PGL3, U3):
        for b in sigma_classes(g, 12):
            assert min_length(b.repr) == b.invariant.pairing_2rho
    with pytest.raises(AdlvError):
        sigma_class(PGL3, "O2")
    with pytest.raises(AdlvError):
        sigma_class(PGL3, "O0d")


def test_adlv_examples():
    r = adlv(PGL3, multiply(fin("s1"), fin("s2")), ONE)
    assert r.nonempty and r.dim == 2
    assert adlv(PGL3, fin("s1"), TAU_B) == EMPTY
    r = adlv(PGL3, from_parts(1, 0, "s1"), ONE)
    assert r.nonempty and r.dim == 3


def test_adlv_record_shape():
    rec = adlv_record(PGL3, from_parts(1, 0, "s1"), ONE)
    assert rec == {"group": "pgl3", "element": "t[1,0].s1.tau^0", "b": "Id",
                   "nonempty": True, "dim": 3, "witness_class": "O2", "degree": 1}


def test_group_mismatch():
    with pytest.raises(AdlvError):
        adlv(U3, fin("s1"), ONE)


@given(elements(4))
def test_dimension_formula_is_integral_and_attained(w):
    for g in (PGL3, U3):
        for b in sigma_classes(g, 6):
            r = adlv(g, w, b)
            if r.nonempty:
                assert r.dim >= 0
                x = g.core_element(w)
                two_dim = length(x) + min_length(r.witness_class) + r.degree
                assert Fraction(two_dim, 2) - b.invariant.pairing_2rho == r.dim


def test_rational_point_examples():
    assert rational_points(PGL3, TAU, TAU_B, 5) == 3
    assert rational_points(PGL3, fin("s1"), TAU_B, 5) == 0
    w = next(a for a in elements_up_to(5, coset=1)
             if length(a) == 5 and str(classify(a, Mode.SPLIT_TAU)) == "O_tau[1]")
    assert rational_points(PGL3, w, TAU_B, 4) == 3 * 4 ** 2 * 3 == 144
    with pytest.raises(AdlvError):
        rational_points(PGL3, fin("s1"), ONE, 5)


def test_points_against_stated_formula():
    for b in (TAU_B, basic_class(PGL3, 2)):
        for w in elements_up_to(12):
            for q in (2, 3, 4, 5, 7, 9):
                assert rational_points(PGL3, w, b, q) == stated_points(w, b, q)


def test_defect_table():
    assert defect(ONE) == 0
    assert defect(TAU_B) == 2
    assert defect(sigma_class(PGL3, "O_lam[2,3]")) == 0
    # straight C_i with odd i: Newton slopes (1/2, 1/2, -1) times i, centralizer GL2(E2) x GL1
    assert defect(sigma_class(PGL3, C(1))) == 1
    assert all(defect(b) == 0 for b in sigma_classes(U3, 8))
    assert defect(sigma_class(GL3, "O_lam[1,1]")) == 0


def test_d3x_transfer():
    # X_w(1) for D3x is X_{w tau}(tau) for PGL3
    b = basic_class(D3X, 0)
    for w in elements_up_to(8):
        assert adlv(D3X, w, b) == adlv(PGL3, multiply(w, TAU), TAU_B)
    assert b.kappa == 0


def test_gl3_forwards_to_pgl3():
    for w in elements_up_to(8):
        for b in sigma_classes(PGL3, 6):
            assert adlv(GL3, w, sigma_class(GL3, b.repr)) == adlv(PGL3, w, b)


def test_basic_theorems_small():
    for g in (PGL3, U3):
        for w in elements_up_to(10):
            for b in sigma_classes(g, 0):
                s, r = stated_adlv(g, w, b), adlv(g, w, b)
                if s.nonempty is not None:
                    assert s.nonempty == r.nonempty
                if r.nonempty and s.dim is not None:
                    assert s.dim == r.dim


# --- GHKR

def test_ghkr_examples():
    w = next(a for a in elements_up_to(19, coset=0)
             if length(a) == 19 and str(classify(a, Mode.SPLIT)) == "O1")
    assert ghkr_check(PGL3, w, sigma_class(PGL3, "O_lam[2,2]"))
    w = next(a for a in elements_up_to(20)
             if length(a) == 20 and str(classify(a, Mode.TWISTED)) == "O0d")
    assert ghkr_check(U3, w, sigma_class(U3, O2md(1)))
    with pytest.raises(PreconditionError):
        ghkr_check(PGL3, fin("s1"), sigma_class(PGL3, "O_lam[1,1]"))
    with pytest.raises(PreconditionError):
        ghkr_check(PGL3, w, ONE)


def test_ghkr_margin_report():
    """Report the smallest margin that works up to length 20; it is the default."""
    m = ghkr_minimal_margin(20, groups=(PGL3, U3))
    print(f"observed minimal GHKR margin up to length 20: {m}")
    assert m == DEFAULT_GHKR_MARGIN


# --- affine Grassmannian inequality

def test_grassmannian_sweep():
    rep = grassmannian_sweep(12)
    assert rep.cases > 2000
    assert rep.failures == []


def test_grassmannian_edge_cases():
    lam = (Fraction(1), Fraction(1))
    assert grassmannian_bound_check(lam, "s121", "e", ONE)
    assert grassmannian_bound_check(lam, "s1", "e", TAU_B)  # kappa mismatch: vacuous
    lam = (Fraction(1), Fraction(2))  # pairing with alpha1 is 0
    assert not _is_min_coset_rep(lam, "s1")
    with pytest.raises(AdlvError):
        grassmannian_bound_check(lam, "e", "s1", ONE)
    with pytest.raises(AdlvError):
        grassmannian_bound_check(lam, "e", "s9", ONE)


# --- leading coefficients

def test_leading_examples():
    k0 = 3
    table = leading_table((k0, k0))
    by = table.by_class()
    n0 = table.n0
    for b, v in by.items():
        if b.kind == "OLambda" and b.params[1] == 2 * b.params[0]:
            assert v == n0 - 2 * b.params[0]
        if b.kind in ("C", "Cp"):
            assert v == n0 - b.params[0]
    assert all(v > 0 for v in table.values())


def test_leading_rejects_bad_input():
    with pytest.raises(AdlvError):
        leading_table((1, 3))
    with pytest.raises(AdlvError):
        leading_table((1, 1), U3)
