"""Projective points in canonical form and exhaustive enumeration over F_p."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import DegeneratePointError, FeasibilityError, ParseError
from .field import FieldScalar, FieldSpec, parse_scalar

DEFAULT_GUARD = 10**7


class ProjPoint:
    """A point of P^N, stored with its first nonzero coordinate equal to 1.

    The constructor normalizes, so two representatives of the same class
    compare (and hash) equal.
    """

    __slots__ = ("spec", "coords")

    def __init__(self, coords: Sequence[FieldScalar]):
        coords = tuple(coords)
        if not coords:
            raise DegeneratePointError("empty coordinate vector")
        spec = coords[0].spec
        lead = None
        for c in coords:
            if c.spec != spec:
                raise ValueError("coordinates from different fields")
            if lead is None and not c.is_zero():
                lead = c
        if lead is None:
            raise DegeneratePointError("the zero vector is not a projective point")
        if lead.value != 1:
            inv = lead.inverse()
            coords = tuple(c * inv for c in coords)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def _canonical(cls, spec, coords):
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "coords", coords)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @property
    def dim(self) -> int:
        """Ambient dimension N of P^N."""
        return len(self.coords) - 1

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_text(self) -> str:
        return "[" + ":".join(c.to_text() for c in self.coords) + "]"

    __str__ = to_text

    def __repr__(self):
        return f"ProjPoint({self.to_text()})"


def normalize(v: Sequence[FieldScalar]) -> ProjPoint:
    """Class of the nonzero vector ``v``, scaled so its first nonzero entry is 1."""
    return ProjPoint(v)


def point(spec: FieldSpec, *values) -> ProjPoint:
    return ProjPoint([FieldScalar(spec, v) for v in values])


def parse_point(text: str, spec: FieldSpec) -> ProjPoint:
    """Parse ``"[a:b:...:c]"`` (brackets optional, ``,`` also accepted)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    sep = ":" if ":" in s else ","
    parts = [part for part in s.split(sep)]
    if not parts or any(not part.strip() for part in parts):
        raise ParseError(f"bad point {text!r}")
    return ProjPoint([parse_scalar(part, spec) for part in parts])


def projective_count(N: int, p: int) -> int:
    return (p ** (N + 1) - 1) // (p - 1)


def enumerate_projective(N: int, p: int, guard: int = DEFAULT_GUARD) -> Iterator[ProjPoint]:
    """Stream every point of P^N(F_p) once, in lexicographic order of coordinates.

    Raises :class:`FeasibilityError` immediately (not on first ``next``)
    when the point count exceeds ``guard``.
    """
    spec = FieldSpec.prime(p)
    count = projective_count(N, p)
    if count > guard:
        raise FeasibilityError(f"|P^{N}(F_{p})| = {count} points", count, guard)
    return _enumerate(spec, N)


def _enumerate(spec: FieldSpec, N: int) -> Iterator[ProjPoint]:
    elems = spec.elements()
    zero, one = elems[0], elems[1]
    # more leading zeros sort first
    for lead in range(N, -1, -1):
        prefix = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=N - lead):
            yield ProjPoint._canonical(spec, prefix + tail)
