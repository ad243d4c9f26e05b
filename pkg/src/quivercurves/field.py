"""Exact scalars over prime fields F_p and over the rationals.

Prime-field values are stored as the canonical residue in ``[0, p)``;
rational values as :class:`fractions.Fraction`, which keeps numerator and
denominator coprime with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import FieldDivisionError, FieldMismatchError, ParseError

PRIME_LIMIT = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient domain: ``kind`` is ``"prime"`` (with ``p``) or ``"rational"``."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or self.p >= PRIME_LIMIT or not is_prime(self.p):
                raise ValueError(f"p must be a prime below 2^31, got {self.p!r}")
        elif self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    def __call__(self, value) -> FieldScalar:
        return FieldScalar(self, value)

    def zero(self) -> FieldScalar:
        return FieldScalar(self, 0)

    def one(self) -> FieldScalar:
        return FieldScalar(self, 1)

    def elements(self):
        """All elements of a prime field in residue order."""
        if not self.is_prime:
            raise ValueError("the rationals cannot be enumerated")
        return [FieldScalar._raw(self, v) for v in range(self.p)]

    def to_text(self) -> str:
        return f"p:{self.p}" if self.is_prime else "q"

    def __str__(self):
        return f"F_{self.p}" if self.is_prime else "Q"


def parse_field(text: str) -> FieldSpec:
    """Parse the CLI field syntax ``p:<prime>`` or ``q``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rational"):
        return FieldSpec.rational()
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise ParseError(f"bad prime in field spec {text!r}") from None
        try:
            return FieldSpec.prime(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"field spec must be 'p:<prime>' or 'q', got {text!r}")


class FieldScalar:
    """Immutable exact scalar tagged with its field."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: Union[int, Fraction, FieldScalar]):
        if isinstance(value, FieldScalar):
            if value.spec != spec:
                raise FieldMismatchError(f"cannot coerce {value.spec} scalar into {spec}")
            value = value.value
        if spec.kind == "prime":
            if isinstance(value, Fraction):
                if value.denominator % spec.p == 0:
                    raise FieldDivisionError(f"denominator {value.denominator} vanishes in {spec}")
                value = value.numerator * pow(value.denominator, -1, spec.p)
            elif not isinstance(value, int):
                raise TypeError(f"cannot build a field scalar from {type(value).__name__}")
            value = value % spec.p
        else:
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"cannot build a field scalar from {type(value).__name__}")
            value = Fraction(value)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    @classmethod
    def _raw(cls, spec, value):
        # value already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "value", value)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _coerce(self, other) -> FieldScalar:
        if isinstance(other, FieldScalar):
            if other.spec != self.spec:
                raise FieldMismatchError(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldScalar(self.spec, other)
        return NotImplemented

    def _wrap(self, value) -> FieldScalar:
        if self.spec.kind == "prime":
            return FieldScalar._raw(self.spec, value % self.spec.p)
        return FieldScalar._raw(self.spec, value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> FieldScalar:
        if self.is_zero():
            raise FieldDivisionError(f"inverse of zero in {self.spec}")
        if self.spec.kind == "prime":
            _, s, _ = egcd(self.value, self.spec.p)
            return self._wrap(s)
        return FieldScalar._raw(self.spec, 1 / self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> FieldScalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = 1 if self.spec.kind == "prime" else Fraction(1)
        base = self.value
        while n:
            if n & 1:
                result = result * base
            base = base * base
            if self.spec.kind == "prime":
                result %= self.spec.p
                base %= self.spec.p
            n >>= 1
        return self._wrap(result)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == FieldScalar(self.spec, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def to_text(self) -> str:
        v = self.value
        if self.spec.kind == "rational" and v.denominator != 1:
            return f"{v.numerator}/{v.denominator}"
        return str(int(v))

    __str__ = to_text

    def __repr__(self):
        return f"FieldScalar({self.spec}, {self.to_text()})"


def parse_scalar(text: str, spec: FieldSpec) -> FieldScalar:
    """Parse ``"n"``, ``"-n"`` or ``"n/d"`` into ``spec``."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            n, d = int(num), int(den)
            if d == 0:
                raise FieldDivisionError(f"zero denominator in {text!r}")
            return FieldScalar(spec, Fraction(n, d))
        return FieldScalar(spec, int(s))
    except ValueError:
        raise ParseError(f"bad scalar {text!r}") from None


def fs_add(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a + b


def fs_sub(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a - b


def fs_mul(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a * b


def fs_neg(a: FieldScalar) -> FieldScalar:
    return -a


def fs_inv(a: FieldScalar) -> FieldScalar:
    return a.inverse()


def fs_pow(a: FieldScalar, n: int) -> FieldScalar:
    """Square-and-multiply power; ``a**0 == 1`` even for ``a == 0``."""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    return a**n
