"""Homogeneous polynomials in x, y, z over a :class:`FieldSpec`.

Monomials are exponent triples ``(m0, m1, m2)``; the term order used for
printing and division is the descending-lex order fixed in
:mod:`quivercurves.veronese`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Mapping, Optional, Sequence

from .errors import (
    EmptyPolynomialError,
    FeasibilityError,
    FieldMismatchError,
    HomogeneityError,
    ParseError,
)
from .field import FieldScalar, FieldSpec
from .projective import ProjPoint, enumerate_projective, projective_count
from .veronese import exponent_tuples

VARIABLES = ("x", "y", "z")
UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def add_exponents(m, n):
    return (m[0] + n[0], m[1] + n[1], m[2] + n[2])


class HomogeneousPoly:
    """Immutable homogeneous polynomial; ``coeffs`` maps exponents to nonzero scalars.

    The empty map is the zero polynomial. It is allowed as a value (e.g. the
    result of differentiation) but rejected wherever a curve is needed.
    """

    __slots__ = ("spec", "degree", "_coeffs")

    def __init__(self, spec: FieldSpec, degree: int, coeffs: Mapping[tuple, object] = ()):
        if degree < 0:
            raise ValueError("degree must be a natural number")
        clean = {}
        for m, c in dict(coeffs).items():
            m = tuple(int(e) for e in m)
            if len(m) != 3 or min(m) < 0:
                raise ValueError(f"bad exponent tuple {m}")
            if sum(m) != degree:
                raise HomogeneityError(f"monomial {m} has degree {sum(m)}, expected {degree}")
            c = FieldScalar(spec, c)
            if not c.is_zero():
                clean[m] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousPoly is immutable")

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, m) -> FieldScalar:
        return self._coeffs.get(tuple(m), self.spec.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def terms(self):
        """``(exponent, coefficient)`` pairs in descending-lex order."""
        return sorted(self._coeffs.items(), reverse=True)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (self.spec, self.degree, self._coeffs) == (other.spec, other.degree, other._coeffs)

    def __hash__(self):
        return hash((self.spec, self.degree, frozenset(self._coeffs.items())))

    # arithmetic

    def _check(self, other):
        if other.spec != self.spec:
            raise FieldMismatchError(f"{self.spec} vs {other.spec}")

    def __add__(self, other: HomogeneousPoly) -> HomogeneousPoly:
        self._check(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise HomogeneityError("cannot add polynomials of different degrees")
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out[m] + c if m in out else c
        return HomogeneousPoly(self.spec, self.degree, out)

    def __neg__(self):
        return HomogeneousPoly(self.spec, self.degree, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogeneousPoly):
            self._check(other)
            out = {}
            for m, a in self._coeffs.items():
                for n, b in other._coeffs.items():
                    k = add_exponents(m, n)
                    out[k] = out[k] + a * b if k in out else a * b
            return HomogeneousPoly(self.spec, self.degree + other.degree, out)
        c = FieldScalar(self.spec, other)
        return HomogeneousPoly(self.spec, self.degree, {m: a * c for m, a in self._coeffs.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HomogeneousPoly:
        result = constant(self.spec, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # evaluation and calculus

    def __call__(self, pt) -> FieldScalar:
        return eval_poly(self, pt)

    def partial(self, i: int) -> HomogeneousPoly:
        return partial_derivative(self, i)

    def to_text(self) -> str:
        return poly_to_text(self)

    __str__ = to_text

    def __repr__(self):
        return f"HomogeneousPoly({self.spec}, {self.to_text()!r})"


# constructors


def constant(spec: FieldSpec, c) -> HomogeneousPoly:
    return HomogeneousPoly(spec, 0, {(0, 0, 0): c})


def monomial(spec: FieldSpec, m, c=1) -> HomogeneousPoly:
    return HomogeneousPoly(spec, sum(m), {tuple(m): c})


def variable(spec: FieldSpec, i: int) -> HomogeneousPoly:
    return monomial(spec, UNIT[i])


def variables(spec: FieldSpec):
    return tuple(variable(spec, i) for i in range(3))


def zero_poly(spec: FieldSpec, degree: int) -> HomogeneousPoly:
    return HomogeneousPoly(spec, degree, {})


# evaluation


def _coords(pt, spec):
    xs = tuple(pt.coords) if isinstance(pt, ProjPoint) else tuple(pt)
    if len(xs) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(xs)}")
    return tuple(FieldScalar(spec, v) for v in xs)


def eval_poly(P: HomogeneousPoly, pt) -> FieldScalar:
    """Value of ``P`` at a coordinate triple (or a :class:`ProjPoint` representative)."""
    xs = _coords(pt, P.spec)
    total = P.spec.zero()
    for (a, b, c), coeff in P._coeffs.items():
        total = total + coeff * xs[0] ** a * xs[1] ** b * xs[2] ** c
    return total


def partial_derivative(P: HomogeneousPoly, i: int) -> HomogeneousPoly:
    """Formal derivative in variable ``i``; degree ``d - 1`` (zero allowed)."""
    if i not in (0, 1, 2):
        raise ValueError("variable index must be 0, 1 or 2")
    if P.degree == 0:
        return zero_poly(P.spec, 0)
    out = {}
    for m, c in P._coeffs.items():
        if m[i]:
            n = list(m)
            n[i] -= 1
            out[tuple(n)] = c * m[i]
    return HomogeneousPoly(P.spec, P.degree - 1, out)


def gradient(P: HomogeneousPoly):
    return tuple(partial_derivative(P, i) for i in range(3))


def substitute(P: HomogeneousPoly, qs: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    """``P(q0, q1, q2)`` for homogeneous ``qs`` of a common degree ``e``."""
    qs = tuple(qs)
    degs = {q.degree for q in qs}
    if len(qs) != 3 or len(degs) != 1:
        raise HomogeneityError("substitution needs three polynomials of a common degree")
    e = degs.pop()
    result = zero_poly(P.spec, P.degree * e)
    powers = [{} for _ in range(3)]

    def pw(i, k):
        if k not in powers[i]:
            powers[i][k] = qs[i] ** k
        return powers[i][k]

    for m, c in P._coeffs.items():
        term = pw(0, m[0]) * pw(1, m[1]) * pw(2, m[2]) * c
        result = result + term
    return result


# printing and parsing


def _monomial_text(m) -> str:
    parts = []
    for var, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def poly_to_text(P: HomogeneousPoly) -> str:
    """Render in the grammar accepted by :func:`parse_poly`, descending-lex terms."""
    if P.is_zero():
        return "0"
    pieces = []
    for m, c in P.terms():
        v = c.value
        negative = P.spec.kind == "rational" and v < 0
        mag = -v if negative else v
        if isinstance(mag, Fraction) and mag.denominator != 1:
            num = f"{mag.numerator}/{mag.denominator}"
        else:
            num = str(int(mag))
        mono = _monomial_text(m)
        if not mono:
            body = num
        elif num == "1":
            body = mono
        else:
            body = f"{num}*{mono}"
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|(\^|\*|\+|-|/))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("nat", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "number" if kind == "nat" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def poly(self):
        terms = [self.term(sign=1)]
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            terms.append(self.term(sign=1 if op == "+" else -1))
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return terms

    def term(self, sign):
        start = self.peek()[2]
        while self.peek()[0] == "-":
            self.take()
            sign = -sign
        coeff = Fraction(sign)
        exps = [0, 0, 0]
        if self.peek()[0] == "nat":
            coeff *= int(self.take()[1])
            if self.peek()[0] == "/":
                tok = self.take()
                den = int(self.take("nat")[1])
                if den == 0:
                    raise ParseError("zero denominator", tok[2])
                coeff /= den
            if self.peek()[0] != "*":
                return coeff, tuple(exps), start
            self.take("*")
        self.factor(exps)
        while self.peek()[0] == "*":
            self.take()
            self.factor(exps)
        return coeff, tuple(exps), start

    def factor(self, exps):
        tok = self.take("var")
        e = 1
        if self.peek()[0] == "^":
            self.take()
            e = int(self.take("nat")[1])
        exps[VARIABLES.index(tok[1])] += e


def parse_poly(text: str, spec: FieldSpec) -> HomogeneousPoly:
    """Parse polynomial text into a homogeneous polynomial over ``spec``.

    >>> parse_poly("x*y - z^2", FieldSpec.rational()).degree
    2
    """
    terms = _Parser(text).poly()
    degree = sum(terms[0][1])
    for coeff, m, pos in terms:
        if sum(m) != degree:
            raise HomogeneityError(
                f"term at position {pos} has degree {sum(m)}, first term has degree {degree}"
            )
    coeffs = {}
    for coeff, m, pos in terms:
        try:
            c = FieldScalar(spec, coeff)
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), pos) from None
        coeffs[m] = coeffs[m] + c if m in coeffs else c
    P = HomogeneousPoly(spec, degree, coeffs)
    if P.is_zero():
        raise EmptyPolynomialError(f"{text!r} is the zero polynomial over {spec}")
    return P


# diagnostics over F_p


def exact_divide(P: HomogeneousPoly, g: HomogeneousPoly) -> Optional[HomogeneousPoly]:
    """Return ``h`` with ``g*h == P`` if ``g`` divides ``P`` exactly, else ``None``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.degree > P.degree:
        return None
    lead_m, lead_c = g.terms()[0]
    inv = lead_c.inverse()
    rem = dict(P._coeffs)
    quot = {}
    while rem:
        m = max(rem)
        q = tuple(a - b for a, b in zip(m, lead_m))
        if min(q) < 0:
            return None
        c = rem[m] * inv
        quot[q] = c
        for n, b in g._coeffs.items():
            k = add_exponents(q, n)
            v = rem.get(k, P.spec.zero()) - c * b
            if v.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = v
    return HomogeneousPoly(P.spec, P.degree - g.degree, quot)


def forms_of_degree(spec: FieldSpec, k: int, guard: int):
    """Nonzero degree-``k`` forms over ``spec`` up to scalars."""
    basis = exponent_tuples(k)
    for pt in enumerate_projective(len(basis) - 1, spec.p, guard=guard):
        yield HomogeneousPoly(spec, k, dict(zip(basis, pt.coords)))


def reducibility_witness(P: HomogeneousPoly, max_p_guard: int = 10**6):
    """Search for ``(g, h)`` with ``g*h == P`` and ``1 <= deg g <= d//2`` over F_p.

    Every projective class of candidate ``g`` is tried by exact division.
    ``None`` only means no factorization over F_p itself; factors over
    extension fields are not detected.
    """
    spec = P.spec
    if not spec.is_prime:
        raise ValueError("reducibility search needs a prime field")
    if P.is_zero():
        raise EmptyPolynomialError("zero polynomial")
    degrees = range(1, P.degree // 2 + 1)
    work = sum(projective_count(comb(k + 2, 2) - 1, spec.p) for k in degrees)
    if work > max_p_guard:
        raise FeasibilityError("factor search over candidate divisors", work, max_p_guard)
    for k in degrees:
        for g in forms_of_degree(spec, k, guard=max_p_guard):
            h = exact_divide(P, g)
            if h is not None:
                return g, h
    return None


def singular_points(P: HomogeneousPoly, guard: int = 10**7) -> list:
    """F_p-rational points where ``P`` and its three partials all vanish."""
    spec = P.spec
    if not spec.is_prime:
        raise ValueError("singular point search needs a prime field")
    grads = gradient(P)
    out = []
    for pt in enumerate_projective(2, spec.p, guard=guard):
        if eval_poly(P, pt).is_zero() and all(eval_poly(g, pt).is_zero() for g in grads):
            out.append(pt)
    return out


def curve_points(P: HomogeneousPoly, guard: int = 10**7) -> list:
    """All points of ``{P = 0}`` in P^2(F_p), in enumeration order."""
    if not P.spec.is_prime:
        raise ValueError("point enumeration needs a prime field")
    return [pt for pt in enumerate_projective(2, P.spec.p, guard=guard) if eval_poly(P, pt).is_zero()]

