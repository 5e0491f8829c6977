from collections import deque

import pytest
from hypothesis import given

from conftest import elements
from hecke_a2.group import (
    GENERATORS,
    IDENTITY,
    S0,
    S1,
    S2,
    TAU,
    ElementParseError,
    alpha_to_omega,
    apply_delta,
    elements_up_to,
    fin,
    format_element,
    invert,
    length,
    multiply,
    omega_to_alpha,
    pairing_2rho,
    parse_element,
    translation,
)


def test_tau_rotates_the_diagram():
    t_inv = invert(TAU)
    assert length(TAU) == 0
    assert multiply(multiply(TAU, S0), t_inv) == S1
    assert multiply(multiply(TAU, S1), t_inv) == S2
    assert multiply(multiply(TAU, S2), t_inv) == S0
    assert multiply(TAU, multiply(TAU, TAU)) == IDENTITY


def test_pairing_examples():
    assert pairing_2rho(*alpha_to_omega(1, 1)) == 4
    assert pairing_2rho(0, 0) == 0
    assert pairing_2rho(*alpha_to_omega(1, 2)) == 6
    assert length(translation(1, 2)) == 6


def test_format_examples():
    assert parse_element("t[0,0].e.tau^0") == IDENTITY
    assert format_element(TAU) == "t[0,0].e.tau^1"
    assert format_element(multiply(S2, multiply(translation(1, 0), S1))) == "t[1,1].s21.tau^0"
    assert parse_element(" t[ 1 , -2 ] . s12 . tau^2 ") == parse_element("t[1,-2].s12.tau^2")


@pytest.mark.parametrize("text", [
    "", "t[1,2]", "t[1,2].s3.tau^0", "t[1,2].e.tau^3", "t[1.5,2].e.tau^0",
    "t[1,2].e.tau^0x", "s[1,2].e.tau^0",
])
def test_parse_errors(text):
    with pytest.raises(ElementParseError):
        parse_element(text)


def test_alpha_omega_roundtrip():
    for m in range(-3, 4):
        for n in range(-3, 4):
            assert omega_to_alpha(*alpha_to_omega(m, n)) == (m, n)


def test_kappa():
    assert translation(2, -1).kappa == 0
    assert TAU.kappa == 1


@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(elements())
def test_identity_and_inverse(a):
    assert multiply(a, IDENTITY) == a == multiply(IDENTITY, a)
    assert multiply(a, invert(a)) == IDENTITY
    assert length(invert(a)) == length(a)


@given(elements())
def test_roundtrip(a):
    assert parse_element(format_element(a)) == a


@given(elements())
def test_simple_reflections_change_length_by_one(a):
    for g in GENERATORS:
        assert abs(length(multiply(g, a)) - length(a)) == 1
        assert abs(length(multiply(a, g)) - length(a)) == 1


@given(elements(), elements())
def test_conjugation_parity_and_omega(a, x):
    conj = multiply(x, multiply(a, invert(x)))
    assert (length(conj) - length(a)) % 2 == 0
    assert length(multiply(TAU, multiply(a, invert(TAU)))) == length(a)


@given(elements(), elements())
def test_delta_is_a_length_preserving_automorphism(a, b):
    assert apply_delta(multiply(a, b)) == multiply(apply_delta(a), apply_delta(b))
    assert length(apply_delta(a)) == length(a)
    assert apply_delta(apply_delta(a)) == a


def test_delta_on_generators():
    assert apply_delta(S1) == S2 and apply_delta(S0) == S0
    assert apply_delta(fin("s12")) == fin("s21")


def test_length_is_word_length_up_to_10():
    # BFS over words in s0, s1, s2 and tau
    dist = {IDENTITY: 0, TAU: 0, multiply(TAU, TAU): 0}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        if dist[x] == 10:
            continue
        for g in GENERATORS:
            y = multiply(x, g)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    assert len(dist) == 3 * 166
    for x, d in dist.items():
        assert length(x) == d
    assert set(elements_up_to(10)) == set(dist)
