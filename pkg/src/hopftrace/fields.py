"""Exact base fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime field
scalars are :class:`FpElement` instances carrying their modulus, so generic
code can use ``+ - * /`` and compare against Python ints for both fields.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """Residue class modulo a prime, stored canonically in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> FpElement:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) * self.inverse()

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} mod {self.p}"


@dataclass(frozen=True)
class Field:
    """Descriptor of an exact field; ``characteristic`` is 0 (Q) or a prime."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (is_prime(p) and p <= MAX_CHARACTERISTIC):
            raise ValueError(f"characteristic must be 0 or a prime <= 2^31, got {p}")

    @property
    def kind(self) -> str:
        return "Q" if self.characteristic == 0 else "Fp"

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce an int, Fraction, residue or scalar string into this field."""
        p = self.characteristic
        if isinstance(x, str):
            return self.parse(x)
        if p == 0:
            if isinstance(x, FpElement):
                raise TypeError("cannot coerce a residue into Q")
            return Fraction(x)
        if isinstance(x, FpElement):
            if x.p != p:
                raise ValueError(f"cannot coerce GF({x.p}) element into GF({p})")
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return FpElement(x, p)
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"{x} is not defined mod {p}")
        return FpElement(x.numerator * pow(x.denominator, -1, p), p)

    def parse(self, s: str):
        s = s.strip().replace("−", "-")
        if " mod " in s:
            value, modulus = s.split(" mod ")
            if int(modulus) != self.characteristic:
                raise ValueError(f"scalar {s!r} does not live in {self}")
            return self(int(value))
        return self(Fraction(s))

    def format(self, x) -> str:
        x = self(x)
        if self.characteristic == 0:
            return str(x)
        return f"{x.v} mod {self.characteristic}"

    def to_int_or_fraction(self, x):
        """Canonical Python number: ``Fraction`` for Q, residue ``int`` for GF(p)."""
        x = self(x)
        return x if self.characteristic == 0 else x.v

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


@functools.lru_cache(maxsize=None)
def GF(p: int) -> Field:
    if p == 0 or not is_prime(p):
        raise ValueError(f"GF(p) needs a prime p, got {p}")
    return Field(p)
