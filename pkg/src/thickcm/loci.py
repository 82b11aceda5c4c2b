"""Closed and specialization-closed subsets of the homogeneous spectrum.

Closed sets are carried by defining ideals (lifted to the ambient ring);
containment and equality are decided by radical membership only.
"""
from dataclasses import dataclass
from itertools import combinations

from .algebra import NEG_INF, Ideal, krull_dimension, radical_contains
from .algebra.poly import format_dict


class ClosedSet:
    """``v(J)``: homogeneous primes of ``R`` containing ``J``."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.ideal = ring.lift(gens)
        self._dim = None

    @classmethod
    def empty(cls, ring):
        return cls(ring, [ring.ambient.one()])

    @classmethod
    def whole(cls, ring):
        return cls(ring, [])

    def is_empty(self):
        return self.ideal.is_unit()

    def __le__(self, other):
        """``self subset other`` iff every generator of other's ideal is in the radical of ours."""
        if self.is_empty():
            return True
        return all(radical_contains(self.ideal, g) for g in other.ideal.gens)

    def __eq__(self, other):
        if not isinstance(other, ClosedSet):
            return NotImplemented
        return self <= other and other <= self

    __hash__ = None

    def contains_prime(self, prime):
        """Whether the prime ``prime`` (an ideal of ``S`` containing ``I``) is in the set."""
        return all(radical_contains(prime, g) for g in self.ideal.gens)

    @property
    def dimension(self):
        if self._dim is None:
            self._dim = krull_dimension(self.ideal)
        return self._dim

    def generators(self):
        """Sorted reduced Groebner basis strings, modulo the ring relations."""
        out = []
        for g in self.ideal.gb_dicts():
            red = self.ring.reduce(g)
            if red:
                out.append(format_dict(g, self.ring.ambient))
        return sorted(out) if out else (["0"] if not self.is_empty() else ["1"])

    def __repr__(self):
        if self.is_empty():
            return "v(1)"
        return "v(" + ", ".join(self.generators()) + ")"


class SpecClosedSet:
    """Finite union of closed sets, normalized to drop redundant components."""

    def __init__(self, ring, components=()):
        self.ring = ring
        comps = [c for c in components if not c.is_empty()]
        kept = []
        for i, c in enumerate(comps):
            redundant = False
            for j, d in enumerate(comps):
                if i == j:
                    continue
                if c <= d and (not d <= c or j < i):
                    redundant = True
                    break
            if not redundant:
                kept.append(c)
        self.components = kept

    @classmethod
    def empty(cls, ring):
        return cls(ring, [])

    @classmethod
    def of(cls, ring, ideals):
        return cls(ring, [ClosedSet(ring, g) for g in ideals])

    def is_empty(self):
        return not self.components

    def union(self, other):
        return SpecClosedSet(self.ring, self.components + other.components)

    __or__ = union

    def __le__(self, other):
        """A component ``v(J)`` lies in ``v(K_1) u ... u v(K_r)`` iff ``K_1...K_r`` is in ``sqrt J``."""
        for c in self.components:
            if any(c <= d for d in other.components):
                continue
            if not other.components:
                return False
            prod = other.components[0].ideal
            for d in other.components[1:]:
                prod = prod * d.ideal
            if not all(radical_contains(c.ideal, g) for g in prod.gens):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, SpecClosedSet):
            return NotImplemented
        return self <= other and other <= self

    __hash__ = None

    @property
    def dimension(self):
        if not self.components:
            return NEG_INF
        return max(c.dimension for c in self.components)

    def points(self, poset):
        """Names of the poset primes lying in this set."""
        return [name for name, P in poset.primes.items()
                if any(c.contains_prime(P) for c in self.components)]

    def describe(self):
        return [c.generators() for c in self.components]

    def __repr__(self):
        if not self.components:
            return "{}"
        return " u ".join(repr(c) for c in self.components)


class PrimePoset:
    """User-declared homogeneous primes with their inclusion order.

    Primality is asserted by the user; properness and containments are checked.
    """

    def __init__(self, ring, primes):
        self.ring = ring
        self.primes = {}
        for name, gens in (primes.items() if isinstance(primes, dict) else primes):
            P = ring.lift(gens)
            if P.is_unit():
                raise ValueError(f"declared prime {name} is the unit ideal")
            self.primes[name] = P
        self.names = list(self.primes)
        self.below = {a: {b for b in self.names if b != a and self.primes[b] <= self.primes[a]}
                      for a in self.names}

    def leq(self, a, b):
        """``a <= b`` in the specialization order (``P_a subset P_b``)."""
        return a == b or a in self.below[b]

    def upward_closed(self, subset):
        return all(b in subset for a in subset for b in self.names if self.leq(a, b))

    def closed_set(self, subset):
        """The specialization-closed set generated by the named primes."""
        minimal = [a for a in subset if not any(b != a and self.leq(b, a) for b in subset)]
        return SpecClosedSet(self.ring, [ClosedSet(self.ring, self.primes[a].gens) for a in minimal])

    def __repr__(self):
        return f"PrimePoset({self.names})"


# -- loci of modules and rings --------------------------------------------------------

def nonfree_locus(M):
    """``V(M) = Supp Ext^1(M, Omega M)``."""
    cached = getattr(M, "_nonfree_locus", None)
    if cached is not None:
        return cached
    from .homology import ext, syzygy
    ring = M.ring
    E = ext(M, syzygy(M, 1), 1)
    if E.is_zero():
        V = ClosedSet.empty(ring)
    else:
        V = ClosedSet(ring, E.annihilator().gens)
    V.witness = E
    M._nonfree_locus = V
    return V


def nonfree_locus_cyclic(ring, gens):
    """``V(R/I) = v(I + (0 : I))``."""
    I = ring.lift(gens)
    if I.is_unit():
        return ClosedSet.empty(ring)
    zero_colon = ring.ideal_quotient([], gens)
    return ClosedSet(ring, list(I.gens) + list(zero_colon.gens))


def jacobian_ideal(R):
    """Ideal of ``c x c`` minors of the Jacobian, ``c`` the height of ``I``."""
    c = R.nvars - R.dimension
    J = R.jacobian
    if c <= 0 or not J:
        return []
    minors = []
    for rows in combinations(range(len(J)), c):
        for cols in combinations(range(R.nvars), c):
            minors.append(_det([[J[r][k] for k in cols] for r in rows]))
    return [m for m in minors if m]


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def singular_locus(R):
    """``v(I + J_c)`` by the Jacobian criterion."""
    if R.is_regular:
        return ClosedSet.empty(R)
    return ClosedSet(R, jacobian_ideal(R))


def punctured_free(M):
    """Whether ``M`` is free on the punctured spectrum (``V(M)`` inside ``{m}``)."""
    V = nonfree_locus(M)
    return all(radical_contains(V.ideal, x) for x in M.ring.gens())


def nonfield_locus(R):
    """Primes where ``R_p`` is not a field: the support of the irrelevant ideal."""
    from .modules import ModulePresentation, annihilator
    if R.nvars == 0:
        return ClosedSet.empty(R)
    m = ModulePresentation.from_ideal(R, R.gens())
    return ClosedSet(R, annihilator(m).gens)


def irrelevant_point(R):
    """``{m}`` as a closed set."""
    return ClosedSet(R, R.gens())
