"""Exact scalar fields: the rationals and prime fields GF(p).

Every scalar is a :class:`FieldValue` bound to the field that created it.
Values are immutable and always stored canonically, so ``==`` on values is
plain comparison of their canonical representations.

>>> half = QQ.parse("1/2")
>>> half + QQ(1) / 3
5/6
>>> F5 = GF(5)
>>> F5(2).inv()
3
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import BadField, DivisionByZero, MixedFields, ParseError

__all__ = ["Field", "RationalField", "PrimeField", "FieldValue", "QQ", "GF", "field_from_descriptor"]

_LITERAL = re.compile(r"^\s*([-−]?)(\d+)(?:\s*/\s*(\d+))?\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these bases are deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A scalar field. Subclasses fix the representation of raw values."""

    characteristic: int

    def __call__(self, value) -> FieldValue:
        if isinstance(value, FieldValue):
            if value.field != self:
                raise MixedFields(f"cannot move {value!r} from {value.field} into {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldValue(self, self._normalize(value))

    @property
    def zero(self) -> FieldValue:
        return self(0)

    @property
    def one(self) -> FieldValue:
        return self(1)

    def parse(self, text: str) -> FieldValue:
        """Parse a literal of the form ``[-]digits[/digits]``."""
        m = _LITERAL.match(text)
        if m is None:
            raise ParseError(f"not a scalar literal: {text!r}")
        sign, num, den = m.groups()
        n = int(num)
        d = int(den) if den is not None else 1
        if d == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        if sign:
            n = -n
        return self._from_ratio(n, d)

    def _from_ratio(self, n: int, d: int) -> FieldValue:
        raise NotImplementedError

    def _normalize(self, value):
        raise NotImplementedError

    # raw-value hooks used by FieldValue; ``a`` and ``b`` are canonical
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def format(self, raw) -> str:
        return str(raw)


class RationalField(Field):
    characteristic = 0
    descriptor = "rational"

    def _normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {type(value).__name__} to a rational")
        return Fraction(value)

    def _from_ratio(self, n, d):
        return FieldValue(self, Fraction(n, d))

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return self.descriptor

    def __reduce__(self):
        return (RationalField, ())


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise BadField(f"{p!r} is not a prime")
        self.p = p
        self.characteristic = p
        self.descriptor = f"gf {p}"

    def _normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot convert {type(value).__name__} into GF({self.p})")
        return value % self.p

    def _from_ratio(self, n, d):
        d %= self.p
        if d == 0:
            raise DivisionByZero(f"denominator vanishes in GF({self.p})")
        return FieldValue(self, n * pow(d, -1, self.p) % self.p)

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __str__(self):
        return self.descriptor

    def __reduce__(self):
        return (GF, (self.p,))


class FieldValue:
    """An immutable exact scalar. Plain ``int`` operands are coerced."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldValue):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields(f"{self.field} and {other.field} do not combine")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field._normalize(other)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldValue(self.field, self.field._add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldValue(self.field, self.field._sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldValue(self.field, self.field._sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldValue(self.field, self.field._mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * FieldValue(self.field, b).inv()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldValue(self.field, b) * self.inv()

    def __neg__(self):
        return FieldValue(self.field, self.field._neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        result = self.field.one
        for _ in range(abs(k)):
            result = result * base
        return result

    def inv(self) -> FieldValue:
        if not self.value:
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        return FieldValue(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldValue):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field._normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return str(self)


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(text: str) -> Field:
    """Resolve ``"rational"`` or ``"gf <p>"`` to a field."""
    words = text.split()
    if words == ["rational"]:
        return QQ
    if len(words) == 2 and words[0] == "gf" and words[1].isdigit():
        return GF(int(words[1]))
    raise BadField(f"unknown field descriptor {text!r}")
