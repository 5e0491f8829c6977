"""Affine Deligne-Lusztig varieties through class polynomials.

Everything here is read off class polynomials with the Dimension=Degree
rule: X_w(b) is nonempty iff f_{w,O} != 0 for some class O with the same
Newton and Kottwitz data as b, and then

    dim X_w(b) = max_O (l(w) + l(O) + deg f_{w,O}) / 2 - <nu_b, 2 rho>.

GL3 and the division algebra group are forwarded to PGL3; U3 uses the
twisted cocenter.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby

from .conj import (
    ClassId,
    InvariantF,
    Mode,
    enumerate_classes,
    invariant_of_class,
    min_length,
    mode_for,
)
from .engine import Engine, class_polynomial
from .group import (
    FIN_TAGS,
    TAU,
    ExtAffineElt,
    alpha_to_omega,
    fin,
    fin_length,
    fin_mul,
    format_element,
    length,
    multiply,
)
from .poly import eval_point_count


class AdlvError(ValueError):
    pass


class Group(enum.Enum):
    PGL3 = "pgl3"
    GL3 = "gl3"
    U3 = "u3"
    D3X = "d3x"

    @classmethod
    def parse(cls, text: str) -> "Group":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise AdlvError(f"unknown group {text!r}") from None


_F_RANK = {Group.PGL3: 2, Group.GL3: 2, Group.U3: 1, Group.D3X: 0}


@dataclass(frozen=True)
class GroupContext:
    group: Group

    @property
    def twisted(self) -> bool:
        return self.group is Group.U3

    @property
    def f_rank(self) -> int:
        return _F_RANK[self.group]

    def core_mode(self, w: ExtAffineElt) -> Mode:
        return mode_for(self.core_element(w), self.twisted)

    def core_element(self, w: ExtAffineElt) -> ExtAffineElt:
        # X_w(1) for D3^x is X_{w tau}(tau) for PGL3
        return multiply(w, TAU) if self.group is Group.D3X else w

    def __str__(self):
        return self.group.value


PGL3 = GroupContext(Group.PGL3)
GL3 = GroupContext(Group.GL3)
U3 = GroupContext(Group.U3)
D3X = GroupContext(Group.D3X)


def group_context(g: Group | str | GroupContext) -> GroupContext:
    if isinstance(g, GroupContext):
        return g
    return GroupContext(g if isinstance(g, Group) else Group.parse(g))


# ------------------------------------------------------------- sigma classes

def _slope_defect(inv: InvariantF) -> int:
    """3 minus the sum of multiplicity/denominator over the GL3 slopes."""
    m, n = inv.newton
    shift = Fraction(inv.kappa or 0, 3)
    slopes = sorted(x + shift for x in (m, n - m, -n))
    total = sum(Fraction(len(list(grp)), s.denominator) for s, grp in groupby(slopes))
    assert total.denominator == 1
    return 3 - int(total)


@dataclass(frozen=True)
class SigmaClass:
    """A sigma-conjugacy class, labelled by its straight class.

    For D3X the label is the PGL3 class of b*tau.
    """

    group: GroupContext
    repr: ClassId
    invariant: InvariantF = field(compare=False)
    defect: int = field(compare=False)

    @property
    def basic(self) -> bool:
        return self.invariant.basic

    @property
    def kappa(self) -> int | None:
        k = self.invariant.kappa
        if k is not None and self.group.group is Group.D3X:
            return (k - 1) % 3
        return k

    def __str__(self):
        return str(self.repr)


def is_straight(c: ClassId) -> bool:
    return min_length(c) == invariant_of_class(c).pairing_2rho


def defect(b: SigmaClass) -> int:
    return b.defect


def _defect_of(group: GroupContext, inv: InvariantF) -> int:
    if group.twisted:
        # basic: J_b = U3; otherwise J_b is the Levi Res GL1 x U1, F-rank 1
        return 0
    return _slope_defect(inv)


def sigma_class(group, c: ClassId | str) -> SigmaClass:
    group = group_context(group)
    if isinstance(c, str):
        c = ClassId.parse(c)
    if c.mode.twisted != group.twisted:
        raise AdlvError(f"{c} is not a class for {group}")
    if not is_straight(c):
        raise AdlvError(f"{c} is not a straight class")
    inv = invariant_of_class(c)
    return SigmaClass(group, c, inv, _defect_of(group, inv))


def _modes(group: GroupContext):
    if group.twisted:
        return (Mode.TWISTED,)
    return (Mode.SPLIT, Mode.SPLIT_TAU, Mode.SPLIT_TAU2)


def sigma_classes(group, newton_bound: int) -> list[SigmaClass]:
    """All straight classes with <nu, 2 rho> <= newton_bound."""
    group = group_context(group)
    if newton_bound < 0:
        raise AdlvError("newton_bound must be non-negative")
    out = []
    for mode in _modes(group):
        for c in enumerate_classes(mode, newton_bound):
            if is_straight(c):
                out.append(sigma_class(group, c))
    out.sort(key=lambda b: (b.invariant.kappa or 0, b.invariant.pairing_2rho, b.repr.sort_key()))
    return out


def basic_class(group, kappa: int | None = 0) -> SigmaClass:
    group = group_context(group)
    if group.twisted:
        return sigma_class(group, "O0d")
    if group.group is Group.D3X:
        kappa = (kappa + 1) % 3
    return sigma_class(group, ("Id", "O_idtau", "O_idtau2")[kappa % 3])


# ------------------------------------------------------------- dimensions

@dataclass(frozen=True)
class DimResult:
    nonempty: bool
    dim: int | None = None
    witness_class: ClassId | None = None
    degree: int | None = None

    def to_json(self) -> dict:
        return {
            "nonempty": self.nonempty,
            "dim": self.dim,
            "witness_class": None if self.witness_class is None else str(self.witness_class),
            "degree": self.degree,
        }


EMPTY = DimResult(False)


def _check_pair(group: GroupContext, b: SigmaClass):
    if b.group.group != group.group:
        raise AdlvError(f"class {b} belongs to {b.group}, not {group}")


def _core_poly(group: GroupContext, w: ExtAffineElt, engine: Engine | None):
    x = group.core_element(w)
    mode = mode_for(x, group.twisted)
    return x, class_polynomial(x, mode, engine)


def dimension_from_poly(ell: int, poly: Mapping[ClassId, object], b: SigmaClass) -> DimResult:
    best = None
    for c in sorted(poly):
        f = poly[c]
        if not f or invariant_of_class(c) != b.invariant:
            continue
        d2 = ell + min_length(c) + f.degree
        if best is None or d2 > best[0]:
            best = (d2, c, f.degree)
    if best is None:
        return EMPTY
    dim = Fraction(best[0], 2) - b.invariant.pairing_2rho
    if dim.denominator != 1 or dim < 0:
        raise AssertionError(f"non-integral or negative dimension {dim}")
    return DimResult(True, int(dim), best[1], best[2])


def adlv(group, w: ExtAffineElt, b: SigmaClass, engine: Engine | None = None) -> DimResult:
    group = group_context(group)
    _check_pair(group, b)
    x = group.core_element(w)
    if not group.twisted and x.kappa != b.invariant.kappa:
        return EMPTY
    _, poly = _core_poly(group, w, engine)
    return dimension_from_poly(length(x), poly, b)


def adlv_record(group, w: ExtAffineElt, b: SigmaClass, engine: Engine | None = None) -> dict:
    group = group_context(group)
    r = adlv(group, w, b, engine)
    return {"group": str(group), "element": format_element(w), "b": str(b), **r.to_json()}


# ------------------------------------------------------------- rational points

def is_superbasic(b: SigmaClass) -> bool:
    return (not b.group.twisted) and b.basic and b.invariant.kappa in (1, 2)


def rational_points(group, w: ExtAffineElt, b: SigmaClass, q: int,
                    engine: Engine | None = None) -> int:
    """Number of F_q points, n q^{l(w)/2} f_{w,O_b} at v = sqrt q, with n = 3."""
    group = group_context(group)
    _check_pair(group, b)
    if not is_superbasic(b):
        raise AdlvError(f"{b} is not superbasic")
    if q < 2:
        raise AdlvError("q must be at least 2")
    x = group.core_element(w)
    if x.kappa != b.invariant.kappa:
        return 0
    _, poly = _core_poly(group, w, engine)
    f = poly.get(b.repr)
    if not f:
        return 0
    return eval_point_count(f, length(x), 3)(q)


# ------------------------------------------------------------- GHKR

DEFAULT_GHKR_MARGIN = 10


class PreconditionError(AdlvError):
    pass


def ghkr_threshold(b: SigmaClass, margin: int = DEFAULT_GHKR_MARGIN) -> Fraction:
    return b.invariant.pairing_2rho + margin


def ghkr_check(group, w: ExtAffineElt, b: SigmaClass, margin: int = DEFAULT_GHKR_MARGIN,
               engine: Engine | None = None) -> bool:
    """Compare X_w(b) with X_w(b') for the basic b' of the same Kottwitz value."""
    group = group_context(group)
    _check_pair(group, b)
    if b.basic:
        raise PreconditionError(f"{b} is basic")
    if length(w) < ghkr_threshold(b, margin):
        raise PreconditionError(
            f"length {length(w)} is below the threshold {ghkr_threshold(b, margin)}")
    b0 = basic_class(group, b.kappa)
    r, r0 = adlv(group, w, b, engine), adlv(group, w, b0, engine)
    if r.nonempty != r0.nonempty:
        return False
    if not r.nonempty:
        return True
    expect = r0.dim - b.invariant.pairing_2rho / 2 + Fraction(b0.defect - b.defect, 2)
    return r.dim == expect


# ------------------------------------------------------------- leading coefficients

W0 = "s121"


def _coweight(lam) -> tuple[int, int]:
    p, q = alpha_to_omega(Fraction(lam[0]), Fraction(lam[1]))
    if p.denominator != 1 or q.denominator != 1:
        raise AdlvError(f"{lam} is not a coweight")
    return int(p), int(q)


def _translation(lam) -> ExtAffineElt:
    p, q = _coweight(lam)
    return ExtAffineElt(p, q, "e")


def _check_dominant(lam):
    p, q = _coweight(lam)
    if p < 0 or q < 0:
        raise AdlvError(f"{lam} is not dominant")


class LeadingTable(Mapping):
    """Leading coefficient of f_{w0 t^lam, O_b} per sigma class b, plus N0."""

    def __init__(self, entries: dict[SigmaClass, int], n0: int, witnesses: dict):
        self._entries = entries
        self.n0 = n0
        self.witnesses = witnesses

    def __getitem__(self, b):
        return self._entries[b]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def by_class(self) -> dict[ClassId, int]:
        return {b.repr: v for b, v in self._entries.items()}


def leading_table(lam, group=PGL3, engine: Engine | None = None) -> LeadingTable:
    group = group_context(group)
    if group.group is not Group.PGL3:
        raise AdlvError("leading_table is defined for PGL3")
    _check_dominant(lam)
    w = multiply(fin(W0), _translation(lam))
    _, poly = _core_poly(group, w, engine)
    n0 = poly.get(ClassId.parse("O2")).leading if ClassId.parse("O2") in poly else 0
    ell = length(w)
    entries, witnesses = {}, {}
    for b in sigma_classes(group, ell):
        if b.invariant.kappa != w.kappa:
            continue
        r = dimension_from_poly(ell, poly, b)
        if r.nonempty:
            entries[b] = poly[r.witness_class].leading
            witnesses[b] = r.witness_class
    return LeadingTable(entries, n0, witnesses)


# ------------------------------------------------------------- affine Grassmannian

def _is_min_coset_rep(lam, y: str) -> bool:
    p, q = _coweight(lam)
    for s, pairing in (("s1", p), ("s2", q)):
        if pairing == 0 and fin_length(fin_mul(s, y)) < fin_length(y):
            return False
    return True


def grassmannian_bound_check(lam, x: str, y: str, b: SigmaClass,
                             engine: Engine | None = None) -> bool:
    """dim X_{x t^lam y}(b) <= dim X_{w0 t^lam}(b) - l(w0) + l(x)."""
    _check_dominant(lam)
    if x not in FIN_TAGS or y not in FIN_TAGS:
        raise AdlvError(f"unknown finite Weyl element {x!r} or {y!r}")
    if not _is_min_coset_rep(lam, y):
        raise AdlvError(f"{y} is not a minimal coset representative for {lam}")
    group = b.group
    t = _translation(lam)
    lhs = adlv(group, multiply(multiply(fin(x), t), fin(y)), b, engine)
    if not lhs.nonempty:
        return True
    rhs = adlv(group, multiply(fin(W0), t), b, engine)
    if not rhs.nonempty:
        return False
    return lhs.dim <= rhs.dim - fin_length(W0) + fin_length(x)
