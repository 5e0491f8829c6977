"""Integer polynomials in u = v - 1/v, and point-count polynomials in q."""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

NEG_INFINITY = float("-inf")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class _IntPoly:
    __slots__ = ("coeffs",)
    var = "x"

    def __init__(self, coeffs: Sequence[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1):
        return cls([0] * degree + [coeff])

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)([other])
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self)([other])
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return type(self)((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return type(self)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return type(self)(out)

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(reversed(terms))


class UPoly(_IntPoly):
    """Polynomial in u = v - v^-1; index i holds the coefficient of u^i."""

    __slots__ = ()
    var = "u"


class QPoly(_IntPoly):
    """Polynomial in q."""

    __slots__ = ()
    var = "q"


U = UPoly([0, 1])
ONE = UPoly([1])
ZERO = UPoly()


def upoly_add(f: UPoly, g: UPoly) -> UPoly:
    return f + g


def upoly_mul(f: UPoly, g: UPoly) -> UPoly:
    return f * g


def upoly_degree(f: UPoly):
    return f.degree


class ParityError(ValueError):
    pass


def eval_point_count(f: UPoly, length: int, n: int) -> QPoly:
    """n q^{length/2} f(sqrt q - 1/sqrt q) as an exact polynomial in q.

    u^i q^{L/2} = (q - 1)^i q^{(L - i)/2}, so every term needs i = L mod 2.
    """
    out = QPoly()
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if (length - i) % 2 or i > length:
            raise ParityError(f"u^{i} cannot be paired with length {length}")
        shift = (length - i) // 2
        binom = [comb(i, j) * (-1) ** (i - j) for j in range(i + 1)]  # (q-1)^i
        out = out + QPoly([0] * shift + binom) * (c * n)
    return out
