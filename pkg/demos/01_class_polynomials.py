"""Class polynomials: reduction engine, closed-form tables and the trace identity.

Run with `python3 demos/01_class_polynomials.py`.
"""

from fractions import Fraction

from hecke_a2 import Engine, Mode, classify, closed_form, format_element, length, parse_element
from hecke_a2.conj import min_length

engine = Engine()

print("Split coset: t^{a1} s1 and a few longer relatives")
for text in ("t[1,0].s1.tau^0", "t[2,0].s1.tau^0", "t[2,1].s12.tau^0", "t[3,1].s121.tau^0"):
    w = parse_element(text)
    poly = engine.class_polynomial(w, Mode.SPLIT)
    table = closed_form(w, Mode.SPLIT)
    print(f"  {text:20} l={length(w):2}  class {classify(w, Mode.SPLIT)}")
    print(f"      engine {poly}")
    print(f"      tables {'agree' if table == poly else table}")

print()
print("Twisted coset: the three tabulated O'_1 examples")
for m, n in ((2, 1), (1, -1), (-1, -1)):
    w = parse_element(f"t[{m},{n}].s121.tau^0")
    poly = engine.class_polynomial(w, Mode.TWISTED)
    print(f"  {format_element(w):22} l={length(w)}  {poly}")

print()
print("Trace identity v^l(w) = sum_O f_O(v - 1/v) v^l(O), checked at v = 3")
v = Fraction(3)
for text in ("t[2,1].s12.tau^0", "t[-1,-1].s121.tau^0"):
    w = parse_element(text)
    mode = Mode.TWISTED if "s121" in text else Mode.SPLIT
    poly = engine.class_polynomial(w, mode)
    rhs = sum(Fraction(f(v - 1 / v)) * v ** min_length(c) for c, f in poly.items())
    print(f"  {text:22} lhs {v ** length(w)}  rhs {rhs}")
