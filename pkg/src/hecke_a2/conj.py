"""Conjugacy and delta-conjugacy classes: taxonomy, classification, invariants."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .group import (
    FIN_TAGS,
    IDENTITY,
    TAU,
    ExtAffineElt,
    affine_part,
    apply_delta,
    fin_act,
    format_element,
    from_parts,
    length,
    multiply,
    omega_to_alpha,
    tau_power,
)


class Mode(enum.Enum):
    SPLIT = "split"
    SPLIT_TAU = "split_tau"
    SPLIT_TAU2 = "split_tau2"
    TWISTED = "twisted"

    @property
    def twisted(self) -> bool:
        return self is Mode.TWISTED

    @property
    def coset(self):
        return {Mode.SPLIT: 0, Mode.SPLIT_TAU: 1, Mode.SPLIT_TAU2: 2}.get(self)

    @classmethod
    def parse(cls, text: str) -> "Mode":
        key = text.strip().lower().replace("-", "_")
        for m in cls:
            if m.value == key or m.name.lower() == key:
                return m
        raise ValueError(f"unknown mode {text!r}")


class ModeMismatchError(ValueError):
    pass


def mode_for(a: ExtAffineElt, twisted: bool = False) -> Mode:
    if twisted:
        return Mode.TWISTED
    return (Mode.SPLIT, Mode.SPLIT_TAU, Mode.SPLIT_TAU2)[a.kappa]


# ---------------------------------------------------------------- class ids

_KIND_ORDER = {
    k: i
    for i, k in enumerate(
        ["Id", "O1", "O2", "OLambda", "C", "Cp",
         "OIdTau", "OLambdaTau", "OiTau",
         "OIdTau2", "OLambdaTau2", "OiTau2",
         "O0d", "O1d", "O1pd", "O2md", "O3d"]
    )
}

_TEXT = {
    "Id": "Id", "O1": "O1", "O2": "O2", "OLambda": "O_lam", "C": "C", "Cp": "Cp",
    "OIdTau": "O_idtau", "OLambdaTau": "O_lamtau", "OiTau": "O_tau",
    "OIdTau2": "O_idtau2", "OLambdaTau2": "O_lamtau2", "OiTau2": "O_tau2",
    "O0d": "O0d", "O1d": "O1d", "O1pd": "O1pd", "O3d": "O3d", "O2md": "O2md",
}
_FROM_TEXT = {v: k for k, v in _TEXT.items()}

_MODE_OF_KIND = {
    **dict.fromkeys(["Id", "O1", "O2", "OLambda", "C", "Cp"], Mode.SPLIT),
    **dict.fromkeys(["OIdTau", "OLambdaTau", "OiTau"], Mode.SPLIT_TAU),
    **dict.fromkeys(["OIdTau2", "OLambdaTau2", "OiTau2"], Mode.SPLIT_TAU2),
    **dict.fromkeys(["O0d", "O1d", "O1pd", "O3d", "O2md"], Mode.TWISTED),
}


@dataclass(frozen=True, slots=True)
class ClassId:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown class kind {self.kind!r}")

    @property
    def mode(self) -> Mode:
        return _MODE_OF_KIND[self.kind]

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.params)

    def __lt__(self, other: "ClassId"):
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        name = _TEXT[self.kind]
        if not self.params:
            return name
        return f"{name}[{','.join(str(x) for x in self.params)}]"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "ClassId":
        m = re.fullmatch(r"([A-Za-z_0-9]+?)(?:\[(-?\d+(?:,-?\d+)*)\])?", text.strip())
        if not m or m[1] not in _FROM_TEXT:
            raise ValueError(f"unknown class id {text!r}")
        params = tuple(int(x) for x in m[2].split(",")) if m[2] else ()
        return cls(_FROM_TEXT[m[1]], params)


ID = ClassId("Id")
O1 = ClassId("O1")
O2 = ClassId("O2")
O_IDTAU = ClassId("OIdTau")
O0D = ClassId("O0d")
O1D = ClassId("O1d")
O1PD = ClassId("O1pd")
O3D = ClassId("O3d")


def OLambda(m: int, n: int) -> ClassId:
    return ClassId("OLambda", (m, n))


def C(i: int) -> ClassId:
    return ClassId("C", (i,))


def Cp(i: int) -> ClassId:
    return ClassId("Cp", (i,))


def OLambdaTau(m: int, n: int) -> ClassId:
    return ClassId("OLambdaTau", (m, n))


def OiTau(i: int) -> ClassId:
    return ClassId("OiTau", (i,))


def O2md(m: int) -> ClassId:
    return ClassId("O2md", (m,))


# The tau^2-coset is the image of the tau-coset under the diagram flip.
_TO_TAU2 = {"OIdTau": "OIdTau2", "OLambdaTau": "OLambdaTau2", "OiTau": "OiTau2"}
_FROM_TAU2 = {v: k for k, v in _TO_TAU2.items()}


def mirror_class(c: ClassId) -> ClassId:
    """Image of a tau-coset class under delta (and back)."""
    if c.kind in _TO_TAU2:
        return ClassId(_TO_TAU2[c.kind], c.params)
    if c.kind in _FROM_TAU2:
        return ClassId(_FROM_TAU2[c.kind], c.params)
    raise ValueError(f"{c} is not a tau-coset class")


# ---------------------------------------------------------------- classify

def dominant(p, q):
    """Dominant W-conjugate of a coweight in omega-coordinates."""
    for w in FIN_TAGS:
        x, y = fin_act(w, p, q)
        if x >= 0 and y >= 0:
            return (x, y)
    raise AssertionError("no dominant conjugate")


def _dominant_alpha(m: int, n: int) -> tuple[int, int]:
    p, q = dominant(2 * m - n, 2 * n - m)
    return omega_to_alpha(p, q)


def _check_mode(a: ExtAffineElt, mode: Mode):
    if mode.coset is not None and a.kappa != mode.coset:
        raise ModeMismatchError(
            f"{format_element(a)} has Kottwitz value {a.kappa}, mode {mode.value} needs {mode.coset}"
        )


def _classify_wa(m: int, n: int, w: str) -> ClassId:
    if w == "e":
        return ID if (m, n) == (0, 0) else OLambda(*_dominant_alpha(m, n))
    if w in ("s12", "s21"):
        return O2
    # d > 0: C_d, d < 0: C'_{-d}
    d = {"s1": n, "s2": -m, "s121": m - n}[w]
    if d == 0:
        return O1
    return C(d) if d > 0 else Cp(-d)


def _classify_tau(m: int, n: int, w: str) -> ClassId:
    """Class of t^{m a1 + n a2} w tau."""
    if w in ("e", "s12"):
        return O_IDTAU
    if w == "s121":
        return OiTau(n)
    if w == "s2":
        return OiTau(m - n + 1)
    if w == "s1":
        return OiTau(1 - m)
    # t^mu s21 tau = t^{mu - omega2}
    p, q = 2 * m - n, 2 * n - m - 1
    dp, dq = dominant(p, q)
    return OLambdaTau(*omega_to_alpha(dp, dq + 1))


def _classify_twisted(m: int, n: int, w: str) -> ClassId:
    if w == "e":
        return O0D if m + n == 0 else O2md(abs(m + n))
    if w in ("s1", "s2"):
        return O1D
    if w == "s121":
        return O1PD if (m % 2 or n % 2) else O3D
    if w == "s12":
        m, n = n, m
    k, r = divmod(n, 2)
    d = m - k
    if r == 0:
        return O0D if d == 0 else O2md(2 * abs(d))
    return O2md(1 - 2 * d if d <= 0 else 2 * d - 1)


def classify(a: ExtAffineElt, mode: Mode) -> ClassId:
    _check_mode(a, mode)
    if mode is Mode.TWISTED:
        j = (0, 1, 2)[a.kappa]
        t = tau_power(j)
        a = multiply(multiply(t, a), t)  # delta-conjugation by tau^j
        assert a.kappa == 0
        return _classify_twisted(*omega_to_alpha(a.p, a.q), a.w)
    if mode is Mode.SPLIT:
        return _classify_wa(*omega_to_alpha(a.p, a.q), a.w)
    if mode is Mode.SPLIT_TAU2:
        return mirror_class(classify(apply_delta(a), Mode.SPLIT_TAU))
    a0, _ = affine_part(a)
    return _classify_tau(*omega_to_alpha(a0.p, a0.q), a0.w)


# ---------------------------------------------------------------- invariants

@dataclass(frozen=True, slots=True)
class InvariantF:
    newton: tuple[Fraction, Fraction]  # dominant, alpha-coordinates
    kappa: int | None  # None is the trivial group (twisted case)

    @property
    def pairing_2rho(self) -> Fraction:
        m, n = self.newton
        return 2 * (m + n)

    @property
    def basic(self) -> bool:
        return self.newton == (0, 0)

    def __str__(self):
        m, n = self.newton
        k = "trivial" if self.kappa is None else self.kappa
        return f"nu=({m},{n}), kappa={k}"


def newton_point(a: ExtAffineElt, mode: Mode) -> tuple[Fraction, Fraction]:
    twisted = mode.twisted
    x = IDENTITY
    for n in range(1, 13):
        x = multiply(x, a if n % 2 or not twisted else apply_delta(a, True))
        if x.w == "e" and (n % 2 == 0 or not twisted):
            p, q = dominant(Fraction(x.p, n), Fraction(x.q, n))
            return ((2 * p + q) / 3, (p + 2 * q) / 3)
    raise AssertionError(f"no period found for {format_element(a)}")


def kottwitz(a: ExtAffineElt, mode: Mode) -> int | None:
    return None if mode.twisted else a.kappa


def invariant(a: ExtAffineElt, mode: Mode) -> InvariantF:
    return InvariantF(newton_point(a, mode), kottwitz(a, mode))


def invariant_of_class(c: ClassId) -> InvariantF:
    return invariant(representative(c), c.mode)


# ---------------------------------------------------------------- representatives

def _bfs_min_rep(c: ClassId) -> ExtAffineElt:
    from .group import elements_up_to

    target = min_length(c)
    best = None
    for x in elements_up_to(target, coset=c.mode.coset if c.mode.coset is not None else 0):
        if length(x) == target and classify(x, c.mode) == c:
            if best is None or element_key(x) < element_key(best):
                best = x
    if best is None:
        raise AssertionError(f"no element of length {target} in {c}")
    return best


def element_key(a: ExtAffineElt):
    """Lexicographic order on the canonical text form t[m,n].w.tau^k."""
    a0, k = affine_part(a)
    m, n = omega_to_alpha(a0.p, a0.q)
    return (k, m, n, FIN_TAGS.index(a0.w))


@lru_cache(maxsize=None)
def representative(c: ClassId) -> ExtAffineElt:
    """The fixed minimal-length element w_O."""
    k, ps = c.kind, c.params
    if k in ("Id", "O0d"):
        return IDENTITY
    if k in ("O1", "O1d"):
        return from_parts(0, 0, "s1")
    if k == "O2":
        return from_parts(0, 0, "s12")
    if k == "OLambda":
        return from_parts(ps[0], ps[1])
    if k == "C":
        i = ps[0]
        return from_parts(i // 2 + 1, i, "s1")
    if k == "Cp":
        i = ps[0]
        return from_parts(i, i // 2 + 1, "s2")
    if k == "OIdTau":
        return TAU
    if k == "OiTau":
        i = ps[0]
        return from_parts(i // 2 + 1, i, "s121", 1)
    if k == "OLambdaTau":
        return from_parts(ps[0], ps[1], "s21", 1)
    if k in _FROM_TAU2:
        return apply_delta(representative(mirror_class(c)))
    return _bfs_min_rep(c)


def min_length(c: ClassId) -> int:
    k, ps = c.kind, c.params
    if k in ("Id", "O0d", "OIdTau", "OIdTau2"):
        return 0
    if k in ("O1", "O1d", "O1pd"):
        return 1
    if k == "O2":
        return 2
    if k == "O3d":
        return 3
    if k == "O2md":
        return 2 * ps[0]
    if k in ("C", "Cp"):
        i = ps[0]
        return 3 * i if i % 2 else 3 * i + 1
    if k == "OLambda":
        return 2 * (ps[0] + ps[1])
    if k in _FROM_TAU2:
        return min_length(mirror_class(c))
    return length(representative(c))


# ---------------------------------------------------------------- enumeration

def _candidates(mode: Mode, bound: int):
    if mode is Mode.SPLIT:
        yield from (ID, O1, O2)
        for m in range(0, bound + 1):
            for n in range(0, bound + 1):
                if (m or n) and 2 * m >= n and 2 * n >= m and 2 * (m + n) <= bound:
                    yield OLambda(m, n)
        for i in range(1, bound // 3 + 1):
            yield C(i)
            yield Cp(i)
    elif mode in (Mode.SPLIT_TAU, Mode.SPLIT_TAU2):
        out = [O_IDTAU]
        for i in range(-bound - 2, bound + 3):
            out.append(OiTau(i))
        for m in range(1, bound + 2):
            for n in range(1, bound + 2):
                if 2 * m >= n and 2 * n >= m and m != 2 * n:
                    out.append(OLambdaTau(m, n))
        if mode is Mode.SPLIT_TAU2:
            out = [mirror_class(c) for c in out]
        yield from out
    else:
        yield from (O0D, O1D, O1PD, O3D)
        for m in range(1, bound // 2 + 1):
            yield O2md(m)


def enumerate_classes(mode: Mode, max_min_length: int) -> list[ClassId]:
    found = {c for c in _candidates(mode, max_min_length) if min_length(c) <= max_min_length}
    return sorted(found, key=lambda c: (min_length(c), c.sort_key()))
