"""Affine Deligne-Lusztig varieties: dimensions, rational points and GHKR.

Run with `python3 demos/02_adlv_dimensions.py`.
"""

from hecke_a2 import PGL3, U3, Engine, adlv, basic_class, ghkr_check, parse_element, rational_points, sigma_classes
from hecke_a2.adlv import ghkr_threshold, sigma_class

engine = Engine()

w = parse_element("t[2,1].s12.tau^0")
print(f"X_w(b) for w = {w} in PGL3, every sigma class with Newton bound 3")
for b in sigma_classes(PGL3, 3):
    r = adlv(PGL3, w, b, engine)
    if r.nonempty:
        print(f"  {str(b):14} dim {r.dim}  (witness {r.witness_class}, degree {r.degree})")

print()
print("Same element for the quasi-split unitary group (twisted coset)")
for b in sigma_classes(U3, 3):
    r = adlv(U3, w, b, engine)
    if r.nonempty:
        print(f"  {str(b):14} dim {r.dim}")

print()
print("Rational points of X_w(tau) for superbasic tau")
tau = basic_class(PGL3, 1)
for text in ("t[0,0].e.tau^1", "t[1,0].s1.tau^1", "t[1,1].s12.tau^1"):
    x = parse_element(text)
    counts = [rational_points(PGL3, x, tau, q, engine) for q in (2, 3, 5)]
    print(f"  {text:20} q=2,3,5 -> {counts}")

print()
print("GHKR: dim X_w(b) against dim X_w(b_basic) once l(w) clears the threshold")
b = sigma_class(PGL3, "O_lam[1,1]")
print(f"  b = {b}, threshold {ghkr_threshold(b)}")
for text in ("t[5,5].s12.tau^0", "t[6,5].s1.tau^0", "t[6,6].s121.tau^0", "t[7,7].s12.tau^0"):
    x = parse_element(text)
    if x.length >= ghkr_threshold(b):
        r, r0 = adlv(PGL3, x, b, engine), adlv(PGL3, x, basic_class(PGL3, 0), engine)
        dims = ["empty" if d is None else d for d in (r.dim, r0.dim)]
        print(f"  {text:20} l={x.length:2} dim {dims[0]} vs basic {dims[1]}: "
              f"{'holds' if ghkr_check(PGL3, x, b, engine=engine) else 'fails'}")
