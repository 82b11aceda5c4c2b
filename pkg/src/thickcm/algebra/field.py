"""Coefficient fields: the rationals and prime fields F_p."""
from fractions import Fraction

MAX_PRIME = 2**31 - 1


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Exact coefficient field.

    ``p == 0`` means the rationals (coefficients are ``Fraction``); otherwise
    coefficients are Python ints kept in ``[0, p)``.
    """

    __slots__ = ("p",)

    def __init__(self, p=0):
        if p:
            if not is_prime(p) or p > MAX_PRIME:
                raise ValueError(f"characteristic must be a prime <= 2^31-1, got {p}")
        self.p = p

    @classmethod
    def parse(cls, name):
        """``'Q'`` or ``'Fp<prime>'`` / ``'F<prime>'``."""
        name = name.strip()
        if name in ("Q", "QQ"):
            return cls(0)
        digits = name[2:] if name.startswith("Fp") else name[1:]
        if name.startswith("F") and digits.isdigit():
            return cls(int(digits))
        raise ValueError(f"unknown field {name!r}")

    def __call__(self, value):
        """Coerce an int or Fraction into this field."""
        p = self.p
        if p:
            if isinstance(value, Fraction):
                num = value.numerator % p
                den = value.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                return num * pow(den, p - 2, p) % p
            return int(value) % p
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, self.p - 2, self.p)
        return 1 / Fraction(a)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def symmetric(self, a):
        """Representative in ``(-p/2, p/2]`` for printing."""
        if self.p and a > self.p // 2:
            return a - self.p
        return a

    @property
    def name(self):
        return f"F{self.p}" if self.p else "Q"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.name})"


DEFAULT_FIELD = Field(32003)
