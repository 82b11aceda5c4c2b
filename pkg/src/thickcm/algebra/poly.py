"""Multivariate polynomials with exact coefficients.

Internally a polynomial (or a vector in a free module) is a ``dict`` taking
encoded monomials to nonzero coefficients; see :mod:`.monomial`.  The
:class:`Polynomial` class is the immutable user-facing wrapper.
"""
from fractions import Fraction

from . import monomial as mono
from .field import DEFAULT_FIELD, Field

NEG_INF = float("-inf")


class PolynomialRing:
    """``k[x_1, ..., x_n]`` with degree-reverse-lexicographic order."""

    def __init__(self, variables, field=DEFAULT_FIELD):
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.field = field if isinstance(field, Field) else Field.parse(field)
        self.nvars = len(self.variables)

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing)
                and self.variables == other.variables and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolynomialRing({list(self.variables)}, {self.field.name})"

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def gen(self, i):
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {mono.encode(exps): self.field.one()})

    def var(self, name):
        return self.gen(self.variables.index(name))

    def const(self, c):
        c = self.field(c)
        return Polynomial(self, {mono.one(self.nvars): c} if c else {})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        return Polynomial(self, {mono.encode(exps): c} if c else {})

    def __call__(self, value):
        """Coerce ints, Fractions or dict-polys into this ring."""
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial from a different ring")
            return value
        if isinstance(value, dict):
            return Polynomial(self, value)
        return self.const(value)

    def extend(self, name):
        """Ring with one extra variable appended (order: the new one is last)."""
        return PolynomialRing(self.variables + (name,), self.field)


# -- raw dict arithmetic (shared by polynomials and module vectors) --------

def add_into(f, g, p, scale=1, shift=None):
    """``f += scale * shift * g`` in place; ``shift`` is a ring monomial."""
    get = f.get
    if shift is None:
        for m, c in g.items():
            v = get(m, 0) + scale * c
            if p:
                v %= p
            if v:
                f[m] = v
            else:
                f.pop(m, None)
    else:
        for m, c in g.items():
            m = tuple(map(int.__add__, m, shift))
            v = get(m, 0) + scale * c
            if p:
                v %= p
            if v:
                f[m] = v
            else:
                f.pop(m, None)
    return f


def mul_dicts(f, g, p):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono.mul(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def scale_dict(f, c, p):
    if not c:
        return {}
    if p:
        return {m: v * c % p for m, v in f.items()}
    return {m: v * c for m, v in f.items()}


def is_homogeneous_dict(f, shifts=None):
    degs = {m[1] + (shifts[-m[0]] if shifts else 0) for m in f}
    return len(degs) <= 1


def dict_degree(f, shifts=None):
    """Graded degree of a homogeneous dict (``None`` for zero)."""
    for m in f:
        return m[1] + (shifts[-m[0]] if shifts else 0)
    return None


def format_dict(f, ring):
    """Human readable form of a ring element dict, terms in descending order."""
    if not f:
        return "0"
    names = ring.variables
    field = ring.field
    pieces = []
    for m in sorted(f, reverse=True):
        c = field.symmetric(f[m])
        exps = mono.exponents(m)
        mon = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        neg = c < 0
        c = -c if neg else c
        if not mon:
            body = str(c)
        elif c == 1:
            body = mon
        else:
            body = f"{c}*{mon}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


class Polynomial:
    """Immutable polynomial over a :class:`PolynomialRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, add_into(dict(self.terms), other.terms, self.ring.field.p))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, scale_dict(self.terms, -1 % p if p else -1, p))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, add_into(dict(self.terms), other.terms,
                                              self.ring.field.p, scale=-1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, mul_dicts(self.terms, other.terms, self.ring.field.p))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(m[1] for m in self.terms)

    def is_homogeneous(self):
        return is_homogeneous_dict(self.terms)

    def is_constant(self):
        return all(m[1] == 0 for m in self.terms)

    def leading_monomial(self):
        return mono.exponents(max(self.terms)) if self.terms else None

    def leading_coefficient(self):
        return self.terms[max(self.terms)] if self.terms else self.ring.field.zero()

    def items(self):
        """(exponent tuple, coefficient) pairs, descending in the ring order."""
        return [(mono.exponents(m), self.terms[m]) for m in sorted(self.terms, reverse=True)]

    def constant_term(self):
        return self.terms.get(mono.one(self.ring.nvars), 0)

    def homogeneous_components(self):
        comps = {}
        for m, c in self.terms.items():
            comps.setdefault(m[1], {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(comps.items())}

    def derivative(self, i):
        p = self.ring.field.p
        out = {}
        for m, c in self.terms.items():
            exps = list(mono.exponents(m))
            e = exps[i]
            if not e:
                continue
            v = c * e
            if p:
                v %= p
            if v:
                exps[i] -= 1
                out[mono.encode(exps)] = v
        return Polynomial(self.ring, out)

    def monic(self):
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient())
        return Polynomial(self.ring, scale_dict(self.terms, inv, self.ring.field.p))

    def __str__(self):
        return format_dict(self.terms, self.ring)

    def __repr__(self):
        return f"Polynomial({self})"
