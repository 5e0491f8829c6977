from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_a2.poly import ONE, U, ZERO, ParityError, QPoly, UPoly, eval_point_count

polys = st.lists(st.integers(-5, 5), max_size=6).map(UPoly)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ZERO == f and f * ONE == f


@given(polys, polys, st.integers(-4, 4))
def test_evaluation_is_a_homomorphism(f, g, x):
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)


def test_trimming_and_degree():
    assert UPoly([1, 0, 0]) == ONE
    assert UPoly([0, 2, 0, 1]).degree == 3
    assert UPoly([0, 2, 0, 1]).leading == 1
    assert not ZERO and ZERO.leading == 0
    assert repr(UPoly([0, 2, 0, 1])) == "u^3 + 2u"


@given(st.lists(st.integers(0, 4), max_size=5), st.integers(0, 8), st.sampled_from([2, 3, 4, 5, 7, 9]))
def test_point_count_matches_direct_evaluation(raw, extra, q):
    # keep only the coefficients compatible with the parity of the length
    length = len(raw) + extra
    f = UPoly([c if (length - i) % 2 == 0 else 0 for i, c in enumerate(raw)])
    got = eval_point_count(f, length, 3)
    assert isinstance(got, QPoly)
    v2 = Fraction(q)
    # u^i q^{L/2} = (q-1)^i q^{(L-i)/2}
    direct = sum(3 * c * (v2 - 1) ** i * v2 ** ((length - i) // 2)
                 for i, c in enumerate(f.coeffs))
    assert got(q) == direct


def test_point_count_parity_error():
    with pytest.raises(ParityError):
        eval_point_count(U, 2, 3)


def test_point_count_examples():
    assert eval_point_count(ONE, 0, 3) == QPoly([3])
    assert eval_point_count(U, 1, 3) == QPoly([-3, 3])
