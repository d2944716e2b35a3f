"""Exact base fields: the rationals and prime fields F_p.

Scalars are plain Python values, not wrapper objects: ``fractions.Fraction``
over Q (always in lowest terms, positive denominator) and ``int`` residues
in [0, p) over F_p.  Field objects supply the arithmetic and the canonical
string syntax ("-3/2" or "4" over Q, a decimal residue over F_p).  Floating
point never appears.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .errors import NonprimeQError, ParseError

Scalar = Union[Fraction, int]

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def is_prime(p: int) -> bool:
    """Deterministic trial division; primes here are desk scale."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Interface shared by RationalField and PrimeField."""

    kind: str = "?"
    characteristic: int = 0

    def zero(self) -> Scalar:
        raise NotImplementedError

    def one(self) -> Scalar:
        raise NotImplementedError

    def of(self, x) -> Scalar:
        """Coerce a Python int (or an exact scalar of this field) to a scalar."""
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, a: Scalar) -> str:
        return str(a)

    # Field identity is structural so cached and ad-hoc instances agree.
    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.kind, self.characteristic) == (
            other.kind,
            other.characteristic,
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.characteristic))


class RationalField(Field):
    """The field Q."""

    kind = "Q"
    characteristic = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, x) -> Fraction:
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def parse(self, text: str) -> Fraction:
        s = text.strip()
        if not _RAT_RE.match(s):
            raise ParseError(f"bad rational scalar {text!r}", scalar=text)
        if "/" in s:
            num, den = s.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}", scalar=text)
            return Fraction(int(num), int(den))
        return Fraction(int(s))

    def __repr__(self) -> str:
        return "QQ"


class PrimeField(Field):
    """The prime field F_p; scalars are int residues in [0, p)."""

    kind = "Fp"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonprimeQError(f"{p} is not prime", q=p)
        self.characteristic = p

    @property
    def p(self) -> int:
        return self.characteristic

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.characteristic

    def of(self, x) -> int:
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return x % self.characteristic
        raise TypeError(f"cannot coerce {type(x).__name__} to F_{self.characteristic}")

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return (a * b) % self.characteristic

    def neg(self, a):
        return (-a) % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.characteristic}")
        return pow(a, -1, self.characteristic)

    def parse(self, text: str) -> int:
        s = text.strip()
        if "/" in s:
            raise ParseError(
                f"fractions are not F_{self.characteristic} scalars: {text!r}",
                scalar=text,
            )
        if not _INT_RE.match(s):
            raise ParseError(f"bad residue {text!r}", scalar=text)
        return int(s) % self.characteristic

    def elements(self) -> Iterator[int]:
        return iter(range(self.characteristic))

    def __repr__(self) -> str:
        return f"GF({self.characteristic})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Parse a field tag: "Q" or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        body = name[3:]
        if not body.isdigit():
            raise ParseError(f"bad field tag {name!r}", field=name)
        return GF(int(body))
    raise ParseError(f"unknown field tag {name!r}", field=name)


def field_name(field: Field) -> str:
    if field.characteristic == 0:
        return "Q"
    return f"Fp:{field.characteristic}"
