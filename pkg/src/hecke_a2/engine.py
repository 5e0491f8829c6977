"""Class polynomials by reduction along cyclic shifts.

T_w is reduced in the (delta-twisted) cocenter: inside the cyclic-shift
orbit of w (equal-length moves s_i w s_delta(i) and Omega-twists) either a
strict length drop exists, giving

    f_w = u * f_{s_i w1} + f_{s_i w1 s_delta(i)},

or w has minimal length in its class and f_w is the indicator of that class.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .conj import ClassId, Mode, _check_mode, classify, element_key, min_length
from .group import (
    GENERATORS,
    OMEGA,
    ExtAffineElt,
    apply_delta,
    delta_index,
    format_element,
    length,
    multiply,
    parse_element,
)
from .poly import ONE, U, UPoly


def _as_upoly(f) -> UPoly:
    if isinstance(f, UPoly):
        return f
    return UPoly([f]) if isinstance(f, int) else UPoly(f)


class ClassPolynomial(Mapping):
    """Finite map ClassId -> nonzero UPoly."""

    __slots__ = ("_entries", "mode")

    def __init__(self, entries: Mapping[ClassId, UPoly] | Iterable = (), mode: Mode | None = None):
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries = {c: _as_upoly(f) for c, f in items}
        self._entries = {c: f for c, f in self._entries.items() if f}
        self.mode = mode

    def __getitem__(self, c: ClassId) -> UPoly:
        return self._entries[c]

    def get(self, c, default=None):
        return self._entries.get(c, UPoly() if default is None else default)

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, ClassPolynomial):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == ClassPolynomial(other)._entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: "ClassPolynomial") -> "ClassPolynomial":
        out = dict(self._entries)
        for c, f in other._entries.items():
            out[c] = out.get(c, UPoly()) + f
        return ClassPolynomial(out, self.mode or other.mode)

    def scale(self, g: UPoly) -> "ClassPolynomial":
        return ClassPolynomial({c: f * g for c, f in self._entries.items()}, self.mode)

    def to_json(self) -> dict[str, list[int]]:
        return {str(c): f.to_json() for c, f in sorted(self._entries.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, list[int]], mode: Mode | None = None):
        return cls({ClassId.parse(k): UPoly(v) for k, v in data.items()}, mode)

    def __repr__(self):
        body = ", ".join(f"{c}: {f!r}" for c, f in sorted(self._entries.items()))
        return "{" + body + "}"


@dataclass(frozen=True)
class Reduction:
    witness: ExtAffineElt
    gen: int
    path: tuple[tuple[str, int], ...]  # ("s", i) or ("tau", 1)


MINIMAL = None


class RecursionTripwire(RuntimeError):
    pass


def _moves(x: ExtAffineElt, twisted: bool):
    """Neighbours of x: conjugations by s0, s1, s2 (length-preserving only) and tau."""
    lx = length(x)
    for i, g in enumerate(GENERATORS):
        y = multiply(multiply(g, x), GENERATORS[delta_index(i, twisted)])
        if length(y) == lx:
            yield ("s", i), y
    t = OMEGA[1]
    ti = OMEGA[2]
    y = multiply(multiply(t, x), apply_delta(ti, twisted))
    yield ("tau", 1), y


def _drops(x: ExtAffineElt, twisted: bool):
    lx = length(x)
    for i, g in enumerate(GENERATORS):
        if length(multiply(multiply(g, x), GENERATORS[delta_index(i, twisted)])) < lx:
            yield i


def cyclic_orbit(a: ExtAffineElt, mode: Mode) -> dict[ExtAffineElt, tuple]:
    """Equal-length orbit of a, mapping each node to its move path from a."""
    twisted = mode.twisted
    paths = {a: ()}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for move, y in sorted(_moves(x, twisted), key=lambda mv: element_key(mv[1])):
            if y not in paths:
                paths[y] = paths[x] + (move,)
                queue.append(y)
    return paths


def omega_canonical(a: ExtAffineElt, mode: Mode) -> ExtAffineElt:
    """Least element (in text order) of the Omega-twist orbit of a."""
    out = a
    for t in OMEGA[1:]:
        y = multiply(multiply(t, a), apply_delta(OMEGA[(-OMEGA.index(t)) % 3], mode.twisted))
        if element_key(y) < element_key(out):
            out = y
    return out


def find_reduction(a: ExtAffineElt, mode: Mode, rng: random.Random | None = None):
    """MINIMAL, or a Reduction with a strict length drop at the witness."""
    twisted = mode.twisted
    paths = cyclic_orbit(a, mode)
    if rng is None:
        for x in paths:  # insertion order is the BFS order
            for i in _drops(x, twisted):
                return Reduction(x, i, paths[x])
        return MINIMAL
    options = [(x, i) for x in paths for i in _drops(x, twisted)]
    if not options:
        return MINIMAL
    x, i = rng.choice(options)
    return Reduction(x, i, paths[x])


class Engine:
    """Memoized class-polynomial computation.

    The memo is keyed by element and mode; every member of a cyclic-shift
    orbit shares one entry since their class polynomials coincide.
    """

    def __init__(self, seed: int | None = None):
        self.memo: dict[tuple[ExtAffineElt, Mode], ClassPolynomial] = {}
        self.rng = random.Random(seed) if seed is not None else None

    def class_polynomial(self, a: ExtAffineElt, mode: Mode) -> ClassPolynomial:
        _check_mode(a, mode)
        return self._compute(a, mode, length(a) + 1)

    def _compute(self, a: ExtAffineElt, mode: Mode, budget: int) -> ClassPolynomial:
        hit = self.memo.get((a, mode))
        if hit is not None:
            return hit
        if budget < 0:
            raise RecursionTripwire(f"reduction of {format_element(a)} did not terminate")
        twisted = mode.twisted
        paths = cyclic_orbit(a, mode)
        for x in paths:
            hit = self.memo.get((x, mode))
            if hit is not None:
                break
        else:
            red = self._reduce(paths, twisted)
            if red is MINIMAL:
                hit = ClassPolynomial({classify(a, mode): ONE}, mode)
            else:
                x, i = red
                s = GENERATORS[i]
                y = multiply(s, x)
                z = multiply(y, GENERATORS[delta_index(i, twisted)])
                hit = self._compute(y, mode, budget - 1).scale(U) + self._compute(z, mode, budget - 1)
        for x in paths:
            self.memo[(x, mode)] = hit
        return hit

    def _reduce(self, paths, twisted):
        if self.rng is None:
            for x in paths:
                for i in _drops(x, twisted):
                    return (x, i)
            return MINIMAL
        options = [(x, i) for x in paths for i in _drops(x, twisted)]
        return self.rng.choice(options) if options else MINIMAL

    def is_minimal_in_class(self, a: ExtAffineElt, mode: Mode) -> bool:
        return find_reduction(a, mode) is MINIMAL

    # -- persistence ---------------------------------------------------------

    def save(self, path: str) -> int:
        seen = {}
        for (x, mode), poly in self.memo.items():
            key = f"{format_element(omega_canonical(x, mode))}|{mode.value}"
            seen[key] = poly
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(CACHE_HEADER) + "\n")
            for key in sorted(seen):
                fh.write(json.dumps({"key": key, "poly": seen[key].to_json()}) + "\n")
        return len(seen)

    def load(self, path: str) -> int:
        count = 0
        with open(path, encoding="utf-8") as fh:
            header = json.loads(fh.readline() or "null")
            if not isinstance(header, dict) or header.get("format") != CACHE_HEADER["format"]:
                raise CacheFormatError(f"{path}: not a memo cache")
            if header.get("version") != CACHE_HEADER["version"]:
                raise CacheFormatError(
                    f"{path}: cache version {header.get('version')} != {CACHE_HEADER['version']}"
                )
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                text, mode_text = rec["key"].rsplit("|", 1)
                mode = Mode.parse(mode_text)
                x = parse_element(text)
                poly = ClassPolynomial.from_json(rec["poly"], mode)
                for t in OMEGA:
                    y = multiply(multiply(t, x), apply_delta(OMEGA[(-OMEGA.index(t)) % 3], mode.twisted))
                    self.memo[(y, mode)] = poly
                count += 1
        return count


CACHE_HEADER = {"format": "hecke-memo", "version": 1}


class CacheFormatError(ValueError):
    pass


DEFAULT_ENGINE = Engine()


def class_polynomial(a: ExtAffineElt, mode: Mode, engine: Engine | None = None) -> ClassPolynomial:
    return (engine or DEFAULT_ENGINE).class_polynomial(a, mode)


def is_minimal_in_class(a: ExtAffineElt, mode: Mode) -> bool:
    return find_reduction(a, mode) is MINIMAL


def check_invariants(a: ExtAffineElt, mode: Mode, poly: ClassPolynomial) -> list[str]:
    """Violations of the structural class-polynomial invariants (empty if fine)."""
    problems = []
    la = length(a)
    own = classify(a, mode)
    for c, f in poly.items():
        if any(x < 0 for x in f.coeffs):
            problems.append(f"negative coefficient on {c}")
        if f[0] != (1 if c == own else 0):
            problems.append(f"u=0 value {f[0]} on {c}")
        gap = la - min_length(c)
        if f.degree > gap:
            problems.append(f"degree {f.degree} on {c} exceeds {gap}")
        if any(x and (gap - i) % 2 for i, x in enumerate(f.coeffs)):
            problems.append(f"parity on {c}")
    if own not in poly:
        problems.append(f"own class {own} missing")
    return problems
