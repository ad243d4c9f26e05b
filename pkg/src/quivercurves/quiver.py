"""The three-vertex quiver, the representation V_d^f of a plane curve, and its
Grassmannian of (0, 1, 1)-dimensional subrepresentations.

Arrows: ``f: 2 -> 1`` and ``phi_i: 2 -> 3`` for ``i = 0, 1, 2``. The vertex
spaces have dimensions ``(1, M, M')`` with ``M = C(d+2, 2)`` and
``M' = C(d+1, 2)``. ``f`` is the curve equation read as a linear form on
Veronese coordinates and ``phi_i`` selects column ``i`` of A_d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import (
    DimensionMismatchError,
    InvariantViolation,
    NotAMorphismError,
    QuiverCurveError,
    UndefinedAtPointError,
)
from .field import FieldScalar, FieldSpec, parse_scalar
from .poly import HomogeneousPoly, eval_poly, parse_poly, substitute
from .projective import DEFAULT_GUARD, ProjPoint, enumerate_projective
from .veronese import (
    a_matrix_indices,
    dot,
    first_nonzero_minor,
    inverse_veronese,
    linearize,
    veronese_map,
)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class QuiverShape:
    vertices: tuple
    arrows: tuple

    def s(self, name: str) -> int:
        return self._arrow(name).source

    def t(self, name: str) -> int:
        return self._arrow(name).target

    def _arrow(self, name):
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def is_acyclic(self) -> bool:
        succ = {v: {a.target for a in self.arrows if a.source == v} for v in self.vertices}
        state = {}

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1 or (w not in state and not visit(w)):
                    return False
            state[v] = 2
            return True

        return all(v in state or visit(v) for v in self.vertices)


QUIVER = QuiverShape(
    vertices=(1, 2, 3),
    arrows=(Arrow("f", 2, 1), Arrow("phi0", 2, 3), Arrow("phi1", 2, 3), Arrow("phi2", 2, 3)),
)


def dimension_vector(d: int) -> tuple:
    return (1, comb(d + 2, 2), comb(d + 1, 2))


@dataclass(frozen=True)
class SelectionMatrix:
    """A ``rows x cols`` 0/1 matrix with one 1 per row, stored as ``(row, col)`` pairs."""

    rows: int
    cols: int
    ones: tuple

    @property
    def selected(self) -> tuple:
        return tuple(c for _, c in self.ones)

    def apply(self, y: Sequence[FieldScalar]) -> tuple:
        if len(y) != self.cols:
            raise DimensionMismatchError(f"selection matrix has {self.cols} columns, vector has {len(y)}")
        return tuple(y[c] for c in self.selected)

    def dense(self) -> list:
        mat = [[0] * self.cols for _ in range(self.rows)]
        for r, c in self.ones:
            mat[r][c] = 1
        return mat


@dataclass(frozen=True)
class QuiverRep:
    spec: FieldSpec
    d: int
    dim_vector: tuple
    f: tuple
    phi: tuple
    source_poly: HomogeneousPoly

    def __post_init__(self):
        check_rep(self)

    @property
    def M(self) -> int:
        return self.dim_vector[1]

    @property
    def f_support(self) -> tuple:
        """``(index, raw value)`` for the nonzero entries of ``f``."""
        try:
            return self.__dict__["_f_support"]
        except KeyError:
            sup = tuple((i, c.value) for i, c in enumerate(self.f) if not c.is_zero())
            object.__setattr__(self, "_f_support", sup)
            return sup

    @property
    def M_prime(self) -> int:
        return self.dim_vector[2]


def check_rep(rep: QuiverRep) -> None:
    """Raise :class:`InvariantViolation` unless ``rep`` is a well-formed V_d^f."""
    d = rep.d
    if not isinstance(d, int) or d < 1:
        raise InvariantViolation("bad-degree", f"degree must be a positive integer, got {d!r}")
    want = dimension_vector(d)
    if tuple(rep.dim_vector) != want:
        raise InvariantViolation(
            "dimension-vector", f"degree {d} requires {list(want)}, got {list(rep.dim_vector)}"
        )
    M, Mp = want[1], want[2]
    if len(rep.f) != M:
        raise InvariantViolation("f-length", f"f must have {M} entries, got {len(rep.f)}")
    if any(c.spec != rep.spec for c in rep.f):
        raise InvariantViolation("f-field", "f entries must lie in the representation's field")
    if len(rep.phi) != 3:
        raise InvariantViolation("phi-count", f"need 3 phi maps, got {len(rep.phi)}")
    idx = a_matrix_indices(d)
    for i, ph in enumerate(rep.phi):
        if ph.rows != Mp or ph.cols != M:
            raise InvariantViolation(
                "phi-shape", f"phi{i} must be {Mp}x{M}, got {ph.rows}x{ph.cols}"
            )
        rows_seen = [r for r, _ in ph.ones]
        if len(set(rows_seen)) != len(rows_seen):
            raise InvariantViolation("phi-row-multiple-ones", f"phi{i} has a row with more than one 1")
        if sorted(rows_seen) != list(range(Mp)):
            raise InvariantViolation("phi-row-missing-one", f"phi{i} must have exactly one 1 per row")
        if rows_seen != sorted(rows_seen):
            raise InvariantViolation("phi-ones-unsorted", f"phi{i} ones must be sorted by row")
        for r, c in ph.ones:
            if c != idx.table[r][i]:
                raise InvariantViolation(
                    "phi-selection", f"phi{i} row {r} must select column {idx.table[r][i]}, got {c}"
                )
    P = rep.source_poly
    if P.spec != rep.spec or P.degree != d:
        raise InvariantViolation("source-poly", "source polynomial must match field and degree")
    if P.is_zero():
        raise InvariantViolation("source-poly", "source polynomial is zero")
    if tuple(rep.f) != linearize(P):
        raise InvariantViolation("f-mismatch", "f must equal the linearized source polynomial")


def build_representation(P: HomogeneousPoly) -> QuiverRep:
    """V_d^f for the plane curve ``P = 0``: ``f = linearize(P)``, ``phi_i`` = column ``i`` of A_d."""
    d = P.degree
    idx = a_matrix_indices(d)
    dims = dimension_vector(d)
    phi = tuple(
        SelectionMatrix(dims[2], dims[1], tuple((r, row[i]) for r, row in enumerate(idx.table)))
        for i in range(3)
    )
    return QuiverRep(P.spec, d, dims, linearize(P), phi, P)


@dataclass(frozen=True)
class GrassPoint:
    """Subrepresentation ``(0, span(line2), span(line3))`` of dimension vector (0, 1, 1)."""

    line2: ProjPoint
    line3: ProjPoint

    def to_text(self) -> str:
        return f"{self.line2.to_text()} -> {self.line3.to_text()}"

    __str__ = to_text


@dataclass(frozen=True)
class MembershipResult:
    point: Optional[GrassPoint]
    reason: str = ""

    def __bool__(self):
        return self.point is not None


def check_membership(rep: QuiverRep, y: ProjPoint) -> MembershipResult:
    """Decide whether ``span(y)`` extends to a point of Gr_(0,1,1), with the failed condition."""
    if len(y) != rep.M:
        raise DimensionMismatchError(f"representation needs a point of P^{rep.M - 1}, got P^{y.dim}")
    if y.spec != rep.spec:
        raise DimensionMismatchError("point and representation use different fields")
    ys = y.coords
    raw = sum(c * ys[i].value for i, c in rep.f_support)
    if (raw % rep.spec.p if rep.spec.is_prime else raw) != 0:
        fy = FieldScalar(rep.spec, raw)
        return MembershipResult(None, f"f-condition: f.y = {fy.to_text()} != 0")
    cols = [ph.apply(y.coords) for ph in rep.phi]
    mat = tuple(zip(*cols))
    bad = first_nonzero_minor(mat)
    if bad is not None:
        r1, r2, c1, c2, val = bad
        return MembershipResult(
            None, f"minor: rows ({r1},{r2}) cols ({c1},{c2}) = {val.to_text()} != 0"
        )
    for col in cols:
        if any(not c.is_zero() for c in col):
            return MembershipResult(GrassPoint(y, ProjPoint(col)))
    # unreachable for projective y: every coordinate is selected by some phi
    return MembershipResult(None, "all phi images vanish")


def membership(rep: QuiverRep, y: ProjPoint) -> Optional[GrassPoint]:
    return check_membership(rep, y).point


def _in_span(v: Sequence[FieldScalar], w: Sequence[FieldScalar]) -> bool:
    return all((v[a] * w[b] - v[b] * w[a]).is_zero() for a in range(len(v)) for b in range(a + 1, len(v)))


def validate_subrep(rep: QuiverRep, candidate: GrassPoint) -> bool:
    """Re-check every arrow: ``f(y) in 0`` and ``phi_i(y) in span(line3)``, some ``phi_i(y) != 0``."""
    y, w = candidate.line2, candidate.line3
    if len(y) != rep.M or len(w) != rep.M_prime:
        return False
    if y.spec != rep.spec or w.spec != rep.spec:
        return False
    if not dot(rep.f, y.coords).is_zero():
        return False
    images = [ph.apply(y.coords) for ph in rep.phi]
    if all(all(c.is_zero() for c in img) for img in images):
        return False
    return all(_in_span(img, w.coords) for img in images)


def enumerate_grassmannian(rep: QuiverRep, guard: int = DEFAULT_GUARD) -> list:
    """All F_p-points of Gr_(0,1,1)(V), by filtering P^(M-1)(F_p) through :func:`membership`."""
    if not rep.spec.is_prime:
        raise ValueError("Grassmannian enumeration needs a prime field")
    out = []
    for y in enumerate_projective(rep.M - 1, rep.spec.p, guard=guard):
        u = membership(rep, y)
        if u is not None:
            out.append(u)
    return out


def curve_point_to_grass(rep: QuiverRep, pt: ProjPoint) -> GrassPoint:
    """``nu_d(pt)`` as a Grassmannian point; raises if ``pt`` is off the curve."""
    res = check_membership(rep, veronese_map(pt, rep.d))
    if res.point is None:
        raise NotAMorphismError(f"{pt} is not on the curve: {res.reason}")
    return res.point


def grass_to_curve_point(rep: QuiverRep, u: GrassPoint) -> ProjPoint:
    return inverse_veronese(u.line2, rep.d)


def transport_morphism(psi: Sequence[HomogeneousPoly], rep_src: QuiverRep, rep_dst: QuiverRep, u: GrassPoint) -> GrassPoint:
    """Apply ``nu_d' . psi . nu_d^{-1}`` to a Grassmannian point of ``rep_src``."""
    psi = tuple(psi)
    if len(psi) != 3 or len({q.degree for q in psi}) != 1:
        raise ValueError("psi must be three polynomials of a common degree")
    if any(q.spec != rep_src.spec for q in psi) or rep_dst.spec != rep_src.spec:
        raise ValueError("psi, source and target must share a field")
    pt = inverse_veronese(u.line2, rep_src.d)
    image = [eval_poly(q, pt.coords) for q in psi]
    if all(c.is_zero() for c in image):
        raise UndefinedAtPointError(f"every component of psi vanishes at {pt}")
    res = check_membership(rep_dst, veronese_map(ProjPoint(image), rep_dst.d))
    if res.point is None:
        raise NotAMorphismError(f"image of {pt} is not on the target curve: {res.reason}")
    return res.point


def compose_morphisms(psi: Sequence[HomogeneousPoly], phi: Sequence[HomogeneousPoly]) -> tuple:
    """Components of ``psi . phi`` (first ``phi``, then ``psi``)."""
    return tuple(substitute(q, phi) for q in psi)


# JSON


def rep_to_dict(rep: QuiverRep) -> dict:
    field = {"kind": "prime", "p": rep.spec.p} if rep.spec.is_prime else {"kind": "rational"}
    return {
        "degree": rep.d,
        "field": field,
        "dimension_vector": list(rep.dim_vector),
        "f": [c.to_text() for c in rep.f],
        "phi": [
            {"rows": ph.rows, "cols": ph.cols, "ones": [[r, c] for r, c in ph.ones]} for ph in rep.phi
        ],
        "source_poly": rep.source_poly.to_text(),
    }


def serialize_rep(rep: QuiverRep) -> str:
    return json.dumps(rep_to_dict(rep), indent=2)


def _require(doc, key, kind):
    if key not in doc:
        raise InvariantViolation("missing-field", f"missing {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InvariantViolation("field-type", f"{key!r} has the wrong type")
    return value


def _field_from_doc(doc) -> FieldSpec:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InvariantViolation("field-type", "'field' must be an object with a 'kind'")
    if doc["kind"] == "rational":
        return FieldSpec.rational()
    if doc["kind"] == "prime":
        try:
            return FieldSpec.prime(doc.get("p"))
        except ValueError as exc:
            raise InvariantViolation("field-modulus", str(exc)) from None
    raise InvariantViolation("field-kind", f"unknown field kind {doc['kind']!r}")


def rep_from_dict(doc: dict) -> QuiverRep:
    if not isinstance(doc, dict):
        raise InvariantViolation("malformed-json", "top level must be an object")
    d = _require(doc, "degree", int)
    spec = _field_from_doc(_require(doc, "field", dict))
    dims = tuple(_require(doc, "dimension_vector", list))
    f_text = _require(doc, "f", list)
    poly_text = _require(doc, "source_poly", str)
    try:
        f = tuple(parse_scalar(str(s), spec) for s in f_text)
        P = parse_poly(poly_text, spec)
    except (QuiverCurveError, ZeroDivisionError) as exc:
        raise InvariantViolation("bad-text", str(exc)) from None
    phi = []
    for entry in _require(doc, "phi", list):
        if not isinstance(entry, dict):
            raise InvariantViolation("field-type", "phi entries must be objects")
        ones = _require(entry, "ones", list)
        if not all(isinstance(o, list) and len(o) == 2 and all(isinstance(v, int) for v in o) for o in ones):
            raise InvariantViolation("field-type", "phi ones must be [row, col] integer pairs")
        phi.append(
            SelectionMatrix(_require(entry, "rows", int), _require(entry, "cols", int), tuple(tuple(o) for o in ones))
        )
    return QuiverRep(spec, d, dims, f, tuple(phi), P)


def deserialize_rep(text: str) -> QuiverRep:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvariantViolation("malformed-json", str(exc)) from None
    return rep_from_dict(doc)
