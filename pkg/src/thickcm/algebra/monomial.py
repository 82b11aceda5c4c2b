"""Monomials of free modules over a polynomial ring.

A monomial ``x^e * gen_pos`` is stored as the tuple
``(-pos, deg(e), -e[n-1], ..., -e[0])``.  Plain tuple comparison on this
encoding is the position-over-term extension (position 0 largest) of
degree-reverse-lexicographic order, and monomial multiplication is
componentwise addition.  Ring monomials have ``pos == 0``.
"""
from operator import add, sub


def encode(exps, pos=0):
    return (-pos, sum(exps)) + tuple(-e for e in reversed(exps))


def exponents(m):
    return tuple(-e for e in reversed(m[2:]))


def position(m):
    return -m[0]


def degree(m):
    return m[1]


def one(nvars):
    return (0,) * (nvars + 2)


def mul(m, t):
    return tuple(map(add, m, t))


def quo(m, t):
    """``m / t`` as a ring monomial; assumes ``divides(t, m)``."""
    return tuple(map(sub, m, t))


def divides(t, m):
    if t[0] != m[0] or t[1] > m[1]:
        return False
    for a, b in zip(t[2:], m[2:]):
        if a < b:
            return False
    return True


def lcm(a, b):
    body = tuple(map(min, a[2:], b[2:]))
    return (a[0], -sum(body)) + body


def coprime(a, b):
    for u, v in zip(a[2:], b[2:]):
        if u and v:
            return False
    return True


def with_position(m, pos):
    return (-pos,) + m[1:]


def is_constant(m):
    return m[1] == 0
