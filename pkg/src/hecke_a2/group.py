"""Extended affine Weyl group of type A2~.

Elements are t^lam w with lam in the coweight lattice P, stored in the
fundamental-coweight basis (p, q), and w in the finite Weyl group S3.
Internally a coweight is lifted to Z^3 as (p+q, q, 0), so that the
positive roots are e_i - e_j (i < j) and W acts by permuting coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

# Finite Weyl group: permutations perm with w(e_i) = e_{perm[i]}.
FIN_TAGS = ("e", "s1", "s2", "s12", "s21", "s121")
_S1 = (1, 0, 2)
_S2 = (0, 2, 1)


def _compose(a, b):
    return tuple(a[b[i]] for i in range(3))


_ID = (0, 1, 2)
_PERMS = {
    "e": _ID,
    "s1": _S1,
    "s2": _S2,
    "s12": _compose(_S1, _S2),
    "s21": _compose(_S2, _S1),
    "s121": _compose(_S1, _compose(_S2, _S1)),
}
_TAG_OF = {v: k for k, v in _PERMS.items()}
_FIN_LENGTH = {"e": 0, "s1": 1, "s2": 1, "s12": 2, "s21": 2, "s121": 3}
_POS_ROOTS = ((0, 1), (1, 2), (0, 2))  # alpha1, alpha2, theta


def fin_mul(x: str, y: str) -> str:
    return _TAG_OF[_compose(_PERMS[x], _PERMS[y])]


def fin_inv(x: str) -> str:
    perm = _PERMS[x]
    inv = [0, 0, 0]
    for i, j in enumerate(perm):
        inv[j] = i
    return _TAG_OF[tuple(inv)]


def fin_length(x: str) -> int:
    return _FIN_LENGTH[x]


def _lift(p: int, q: int) -> tuple[int, int, int]:
    return (p + q, q, 0)


def _drop(v) -> tuple[int, int]:
    return (v[0] - v[1], v[1] - v[2])


def fin_act(w: str, p: int, q: int) -> tuple[int, int]:
    """Action of a finite Weyl element on a coweight in omega-coordinates."""
    perm = _PERMS[w]
    lam = _lift(p, q)
    out = [0, 0, 0]
    for i in range(3):
        out[perm[i]] = lam[i]
    return _drop(out)


def alpha_to_omega(m: int, n: int) -> tuple[int, int]:
    """m*alpha1 + n*alpha2 in omega-coordinates."""
    return (2 * m - n, 2 * n - m)


def omega_to_alpha(p: int, q: int) -> tuple[int, int]:
    if (p - q) % 3:
        raise ValueError(f"coweight ({p},{q}) is not in the coroot lattice")
    return ((2 * p + q) // 3, (p + 2 * q) // 3)


@dataclass(frozen=True, slots=True, order=True)
class ExtAffineElt:
    """The element t^lam w, lam = p*omega1 + q*omega2."""

    p: int
    q: int
    w: str = "e"

    def __post_init__(self):
        if self.w not in _PERMS:
            raise ValueError(f"unknown finite Weyl element {self.w!r}")

    def __mul__(self, other: "ExtAffineElt") -> "ExtAffineElt":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"ExtAffineElt({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)

    @property
    def kappa(self) -> int:
        return (self.p - self.q) % 3

    @property
    def length(self) -> int:
        return length(self)

    @property
    def trans(self) -> tuple[int, int]:
        return (self.p, self.q)


IDENTITY = ExtAffineElt(0, 0, "e")


def translation(m: int, n: int) -> ExtAffineElt:
    """t^{m alpha1 + n alpha2}."""
    p, q = alpha_to_omega(m, n)
    return ExtAffineElt(p, q, "e")


def fin(tag: str) -> ExtAffineElt:
    return ExtAffineElt(0, 0, tag)


def multiply(a: ExtAffineElt, b: ExtAffineElt) -> ExtAffineElt:
    bp, bq = fin_act(a.w, b.p, b.q)
    return ExtAffineElt(a.p + bp, a.q + bq, fin_mul(a.w, b.w))


def invert(a: ExtAffineElt) -> ExtAffineElt:
    wi = fin_inv(a.w)
    p, q = fin_act(wi, -a.p, -a.q)
    return ExtAffineElt(p, q, wi)


def prod(*elts: ExtAffineElt) -> ExtAffineElt:
    out = IDENTITY
    for x in elts:
        out = multiply(out, x)
    return out


def root_offsets(a: ExtAffineElt) -> tuple[int, int, int]:
    """For each positive root alpha, the integer c with alpha in (c, c+1) on the alcove of a."""
    perm = _PERMS[a.w]
    inv = [0, 0, 0]
    for i, j in enumerate(perm):
        inv[j] = i
    lam = _lift(a.p, a.q)
    out = []
    for i, j in _POS_ROOTS:
        c = lam[i] - lam[j]
        out.append(c if inv[i] < inv[j] else c - 1)
    return tuple(out)


def length(a: ExtAffineElt) -> int:
    """Iwahori-Matsumoto length: hyperplanes between the base alcove and its image."""
    return sum(abs(c) for c in root_offsets(a))


def apply_delta(a: ExtAffineElt, twisted: bool = True) -> ExtAffineElt:
    if not twisted:
        return a
    return ExtAffineElt(a.q, a.p, _DELTA_FIN[a.w])


_DELTA_FIN = {"e": "e", "s1": "s2", "s2": "s1", "s12": "s21", "s21": "s12", "s121": "s121"}


def pairing(p: int, q: int, root: int) -> int:
    """<lam, alpha> for root index 0 (alpha1), 1 (alpha2), 2 (theta)."""
    return (p, q, p + q)[root]


def pairing_2rho(p, q):
    """<lam, 2rho> for lam in omega-coordinates (works for rationals too)."""
    return p + q + (p + q)


S1 = fin("s1")
S2 = fin("s2")
S0 = multiply(translation(1, 1), fin("s121"))
TAU = ExtAffineElt(1, 0, "s12")
TAU2 = multiply(TAU, TAU)
GENERATORS = (S0, S1, S2)
OMEGA = (IDENTITY, TAU, TAU2)


def tau_power(k: int) -> ExtAffineElt:
    return OMEGA[k % 3]


def conjugate(x: ExtAffineElt, a: ExtAffineElt, twisted: bool = False) -> ExtAffineElt:
    """x . a = x a delta(x)^-1."""
    return multiply(multiply(x, a), invert(apply_delta(x, twisted)))


def generator(i: int) -> ExtAffineElt:
    return GENERATORS[i]


def delta_index(i: int, twisted: bool) -> int:
    if not twisted:
        return i
    return (0, 2, 1)[i]


def affine_part(a: ExtAffineElt) -> tuple[ExtAffineElt, int]:
    """Split a = a0 * tau^k with a0 in W_a."""
    k = a.kappa
    return multiply(a, tau_power(-k)), k


def alpha_coords(a: ExtAffineElt) -> tuple[int, int]:
    return omega_to_alpha(a.p, a.q)


def from_parts(m: int, n: int, w: str = "e", k: int = 0) -> ExtAffineElt:
    """t^{m alpha1 + n alpha2} w tau^k."""
    return multiply(multiply(translation(m, n), fin(w)), tau_power(k))


def format_element(a: ExtAffineElt) -> str:
    a0, k = affine_part(a)
    m, n = omega_to_alpha(a0.p, a0.q)
    return f"t[{m},{n}].{a0.w}.tau^{k}"


class ElementParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_element(text: str) -> ExtAffineElt:
    """Parse ``t[m,n].w.tau^k`` (whitespace-insensitive)."""
    s = "".join(text.split())
    pos = 0

    def expect(lit: str):
        nonlocal pos
        if not s.startswith(lit, pos):
            raise ElementParseError(f"expected {lit!r} in {text!r}", pos)
        pos += len(lit)

    def integer() -> int:
        nonlocal pos
        m = re.compile(r"-?\d+").match(s, pos)
        if not m:
            raise ElementParseError(f"expected an integer in {text!r}", pos)
        pos = m.end()
        return int(m.group())

    expect("t[")
    m = integer()
    expect(",")
    n = integer()
    expect("]")
    expect(".")
    for tag in ("s121", "s12", "s21", "s1", "s2", "e"):
        if s.startswith(tag, pos):
            pos += len(tag)
            break
    else:
        raise ElementParseError(f"expected a finite Weyl element in {text!r}", pos)
    expect(".")
    expect("tau^")
    if pos >= len(s) or s[pos] not in "012":
        raise ElementParseError(f"expected 0, 1 or 2 in {text!r}", pos)
    k = int(s[pos])
    pos += 1
    if pos != len(s):
        raise ElementParseError(f"trailing characters in {text!r}", pos)
    return from_parts(m, n, tag, k)


def elements_up_to(max_len: int, coset: int | None = None) -> Iterator[ExtAffineElt]:
    """All elements of length <= max_len (optionally in one Omega-coset), by BFS."""
    seen = {IDENTITY}
    frontier = [IDENTITY]
    layers = [frontier]
    for _ in range(max_len):
        nxt = []
        for x in frontier:
            for g in GENERATORS:
                y = multiply(x, g)
                if y not in seen and length(y) == length(x) + 1:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        layers.append(nxt)
    for layer in layers:
        for x in sorted(layer):
            for t in OMEGA:
                y = multiply(x, t)
                if coset is None or y.kappa == coset:
                    yield y
