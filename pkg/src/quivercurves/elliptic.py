"""Short Weierstrass cubics y^2 = x^3 + a x + b and their group law, also
carried over to points of the quiver Grassmannian of the curve.

Homogenized, the curve is ``y^2 z - x^3 - a x z^2 - b z^3``. Its linear
form on P^9 is supported on the Veronese indices 0, 5, 7, 9. The identity
is the point at infinity ``[0:1:0]``, whose Grassmannian image has line2 ``e_6``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import (
    InvariantViolation,
    OffCurveError,
    SingularCurveError,
    UnsupportedCharacteristicError,
)
from .field import FieldScalar, FieldSpec
from .poly import HomogeneousPoly
from .projective import ProjPoint
from .quiver import GrassPoint, QuiverRep, build_representation, curve_point_to_grass, grass_to_curve_point

# Veronese indices of x^3, xz^2, y^2z, z^3 for d = 3
IDX_X3, IDX_XZ2, IDX_Y2Z, IDX_Z3 = 0, 5, 7, 9


def _check_characteristic(spec: FieldSpec):
    if spec.characteristic in (2, 3):
        raise UnsupportedCharacteristicError(
            f"short Weierstrass form needs characteristic other than 2 and 3, got {spec}"
        )


def discriminant(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    """``4a^3 + 27b^2``."""
    return a**3 * 4 + b**2 * 27


def discriminant_ok(a: FieldScalar, b: FieldScalar) -> bool:
    _check_characteristic(a.spec)
    if a.spec != b.spec:
        raise ValueError("a and b must share a field")
    return not discriminant(a, b).is_zero()


def weierstrass_poly(a: FieldScalar, b: FieldScalar) -> HomogeneousPoly:
    """Homogeneous cubic ``y^2 z - x^3 - a x z^2 - b z^3`` (no smoothness check)."""
    spec = a.spec
    return HomogeneousPoly(spec, 3, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -a, (0, 0, 3): -b})


@dataclass(frozen=True)
class WeierstrassCurve:
    spec: FieldSpec
    a: FieldScalar
    b: FieldScalar

    def __post_init__(self):
        _check_characteristic(self.spec)
        object.__setattr__(self, "a", FieldScalar(self.spec, self.a))
        object.__setattr__(self, "b", FieldScalar(self.spec, self.b))
        if not discriminant_ok(self.a, self.b):
            raise SingularCurveError(f"4a^3 + 27b^2 = 0 for a={self.a}, b={self.b} over {self.spec}")

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        return y * y == x * x * x + self.a * x + self.b

    def to_poly(self) -> HomogeneousPoly:
        return weierstrass_poly(self.a, self.b)


def to_poly(curve: WeierstrassCurve) -> HomogeneousPoly:
    return curve.to_poly()


@dataclass(frozen=True)
class ECPoint:
    """Affine point ``(x, y)``, or the point at infinity when both are ``None``."""

    x: Optional[FieldScalar] = None
    y: Optional[FieldScalar] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_text(self) -> str:
        return "O" if self.is_infinity else f"({self.x.to_text()}, {self.y.to_text()})"

    __str__ = to_text


INFINITY = ECPoint()


def ec_point(curve: WeierstrassCurve, x, y) -> ECPoint:
    P = ECPoint(FieldScalar(curve.spec, x), FieldScalar(curve.spec, y))
    if not curve.contains(P):
        raise OffCurveError(f"{P} is not on y^2 = x^3 + {curve.a}x + {curve.b}")
    return P


def _on_curve(curve, *points):
    for P in points:
        if not curve.contains(P):
            raise OffCurveError(f"{P} is not on y^2 = x^3 + {curve.a}x + {curve.b}")


def ec_neg(curve: WeierstrassCurve, P: ECPoint) -> ECPoint:
    _on_curve(curve, P)
    return P if P.is_infinity else ECPoint(P.x, -P.y)


def ec_add(curve: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent sum with identity at infinity."""
    _on_curve(curve, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if (P.y + Q.y).is_zero():
            return INFINITY
        lam = (P.x * P.x * 3 + curve.a) / (P.y * 2)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return ECPoint(x3, y3)


def ec_mul(curve: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return ec_mul(curve, -n, ec_neg(curve, P))
    result, addend = INFINITY, P
    while n:
        if n & 1:
            result = ec_add(curve, result, addend)
        addend = ec_add(curve, addend, addend)
        n >>= 1
    return result


def ec_points(curve: WeierstrassCurve) -> list:
    """``O`` followed by every affine F_p-point, sorted by ``(x, y)`` residues."""
    spec = curve.spec
    if not spec.is_prime:
        raise ValueError("point enumeration needs a prime field")
    squares = {}
    for y in spec.elements():
        squares.setdefault(y * y, []).append(y)
    out = [INFINITY]
    for x in spec.elements():
        rhs = x * x * x + curve.a * x + curve.b
        for y in squares.get(rhs, []):
            out.append(ECPoint(x, y))
    return out


def group_order(curve: WeierstrassCurve) -> int:
    """``1 + #{(x, y) : y^2 = x^3 + ax + b}`` by scanning all of F_p^2."""
    spec = curve.spec
    if not spec.is_prime:
        raise ValueError("group order needs a prime field")
    elems = spec.elements()
    count = sum(1 for x in elems for y in elems if y * y == x * x * x + curve.a * x + curve.b)
    return count + 1


def hasse_ok(order: int, p: int) -> bool:
    # |order - p - 1| <= 2 sqrt(p), squared to stay in integers
    t = order - p - 1
    return t * t <= 4 * p


# transport to the Grassmannian


@lru_cache(maxsize=64)
def curve_from_rep(rep: QuiverRep) -> WeierstrassCurve:
    """Recover ``(a, b)`` from a representation built on a Weierstrass cubic."""
    if rep.d != 3:
        raise InvariantViolation("not-weierstrass", "group law needs a degree-3 representation")
    f = rep.f
    support = {i for i, c in enumerate(f) if not c.is_zero()}
    if not support <= {IDX_X3, IDX_XZ2, IDX_Y2Z, IDX_Z3} or IDX_Y2Z not in support:
        raise InvariantViolation("not-weierstrass", "linear form is not of Weierstrass shape")
    scale = f[IDX_Y2Z].inverse()
    if f[IDX_X3] * scale != -1:
        raise InvariantViolation("not-weierstrass", "x^3 and y^2 z coefficients must be opposite")
    return WeierstrassCurve(rep.spec, -f[IDX_XZ2] * scale, -f[IDX_Z3] * scale)


def weierstrass_rep(curve: WeierstrassCurve) -> QuiverRep:
    return build_representation(curve.to_poly())


def ec_to_proj(P: ECPoint, spec: FieldSpec) -> ProjPoint:
    if P.is_infinity:
        return ProjPoint([spec.zero(), spec.one(), spec.zero()])
    return ProjPoint([P.x, P.y, spec.one()])


def proj_to_ec(pt: ProjPoint) -> ECPoint:
    """Dehomogenize by z; ``z = 0`` on a Weierstrass cubic forces ``[0:1:0]``."""
    x, y, z = pt.coords
    if z.is_zero():
        if not x.is_zero():
            raise OffCurveError(f"{pt} is at infinity but is not [0:1:0]")
        return INFINITY
    inv = z.inverse()
    return ECPoint(x * inv, y * inv)


def ec_to_grass(rep: QuiverRep, P: ECPoint) -> GrassPoint:
    return curve_point_to_grass(rep, ec_to_proj(P, rep.spec))


def grass_to_ec(rep: QuiverRep, u: GrassPoint) -> ECPoint:
    P = proj_to_ec(grass_to_curve_point(rep, u))
    _on_curve(curve_from_rep(rep), P)
    return P


def gr_identity(rep: QuiverRep) -> GrassPoint:
    curve_from_rep(rep)
    return ec_to_grass(rep, INFINITY)


def gr_neg(rep: QuiverRep, u: GrassPoint) -> GrassPoint:
    curve = curve_from_rep(rep)
    return ec_to_grass(rep, ec_neg(curve, grass_to_ec(rep, u)))


def gr_add(rep: QuiverRep, u: GrassPoint, v: GrassPoint) -> GrassPoint:
    """Sum of two Grassmannian points through ``nu_3^{-1}``, the chord-tangent law, and ``nu_3``."""
    curve = curve_from_rep(rep)
    return ec_to_grass(rep, ec_add(curve, grass_to_ec(rep, u), grass_to_ec(rep, v)))


def grass_group_elements(rep: QuiverRep) -> list:
    """Grassmannian points in the order of :func:`ec_points`."""
    return [ec_to_grass(rep, P) for P in ec_points(curve_from_rep(rep))]


def gr_table(rep: QuiverRep) -> list:
    elems = grass_group_elements(rep)
    return [[gr_add(rep, u, v) for v in elems] for u in elems]
