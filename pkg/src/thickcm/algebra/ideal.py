"""Ideals and submodules of free modules over a polynomial ring."""
from itertools import combinations

from . import monomial as mono
from .groebner import GroebnerEngine, groebner
from .poly import NEG_INF, Polynomial, PolynomialRing


# -- vector plumbing ---------------------------------------------------------

def place(f, pos):
    """Move a ring-element dict to component ``pos``."""
    if not pos:
        return dict(f)
    k = -pos
    return {(k,) + m[1:]: c for m, c in f.items()}


def vector(polys, offset=0):
    """Combine ring-element dicts into one vector, component i -> offset+i."""
    out = {}
    for i, f in enumerate(polys):
        if f:
            out.update(place(f, offset + i))
    return out


def components(v, n, offset=0):
    """Split a vector into ``n`` ring-element dicts (components offset..)."""
    out = [dict() for _ in range(n)]
    for m, c in v.items():
        out[-m[0] - offset][(0,) + m[1:]] = c
    return out


def shift_positions(v, delta):
    return {(m[0] + delta,) + m[1:]: c for m, c in v.items()}


def spread(ideal_gb, positions):
    """``I e_i`` for each position: already a Groebner basis."""
    return [place(g, i) for i in positions for g in ideal_gb]


def kernel(columns, n, p, ideal_gb=(), background=(), col_degrees=None, row_shifts=None):
    """Relations among ``columns`` (vectors in ``S^n``) modulo I and ``background``.

    Returns a Groebner basis (as vectors in ``S^m``, reduced modulo ``I``) of
    ``{c : sum_j c_j columns[j] in span(background) + I S^n}``.  Computed by
    elimination: Groebner basis of ``(columns[j], e_j)`` in ``S^(n+m)`` under a
    position-over-term order with the original components on top.
    """
    m = len(columns)
    if m == 0:
        return []
    shifts = None
    if row_shifts is not None and col_degrees is not None:
        shifts = list(row_shifts) + list(col_degrees)
    eng = GroebnerEngine(p, shifts)
    eng.preload(spread(ideal_gb, range(n + m)))
    preloaded = len(eng.polys)
    gens = []
    for j, col in enumerate(columns):
        v = dict(col)
        v[mono.with_position(mono.one(_nvars(columns, ideal_gb, background)), n + j)] = 1
        gens.append(v)
    gens.extend(dict(b) for b in background if b)
    gens.sort(key=lambda v: eng._sugar(max(v)))
    for v in gens:
        eng.add(v)
    eng.complete()
    eng.reduced_basis()
    out = []
    for i in sorted(eng.basis_indices(), key=lambda i: eng.leads[i]):
        if i < preloaded or -eng.leads[i][0] < n:
            continue
        out.append(shift_positions(eng.polys[i], n))
    return out


def _nvars(columns, ideal_gb, background):
    for group in (columns, ideal_gb, background):
        for v in group:
            for m in v:
                return len(m) - 2
    raise ValueError("cannot infer variable count from empty data")


def minimal_subset(vecs, p, ideal_gb=(), background=(), shifts=None, positions=None):
    """Indices of a minimal generating subset (degree order) modulo ``background``.

    For homogeneous data this is a minimal homogeneous generating set of the
    image, by graded Nakayama.  ``positions`` lists the components on which
    the ideal background ``I e_i`` is needed.
    """
    eng = GroebnerEngine(p, shifts)
    if positions is None:
        positions = sorted({-m[0] for v in vecs for m in v} | {-m[0] for v in background for m in v})
    eng.preload(spread(ideal_gb, positions))
    for b in sorted((b for b in background if b), key=lambda v: eng._sugar(max(v))):
        eng.add(b)
    order = sorted((i for i, v in enumerate(vecs) if v), key=lambda i: eng._sugar(max(vecs[i])))
    keep = []
    for i in order:
        eng.complete(max_degree=eng._sugar(max(vecs[i])))
        if eng.add(vecs[i]):
            keep.append(i)
    return sorted(keep)


# -- ideals ------------------------------------------------------------------

class Ideal:
    """Ideal of a polynomial ring; the reduced Groebner basis is cached."""

    def __init__(self, ring, gens=()):
        self.ring = ring
        self.gens = tuple(g for g in (ring(g) for g in gens) if g)
        self._gb = None

    @property
    def p(self):
        return self.ring.field.p

    def gb_dicts(self):
        if self._gb is None:
            self._gb = groebner([g.terms for g in self.gens], self.p, rank_one=True)
        return self._gb

    def groebner_basis(self):
        return [Polynomial(self.ring, dict(g)) for g in self.gb_dicts()]

    def normal_form(self, f):
        f = self.ring(f)
        eng = GroebnerEngine(self.p, rank_one=True)
        eng.preload(self.gb_dicts())
        return Polynomial(self.ring, eng.reduce(f.terms))

    def contains(self, f):
        return self.normal_form(f).is_zero()

    __contains__ = contains

    def is_unit(self):
        return any(mono.is_constant(max(g)) for g in self.gb_dicts())

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other):
        return Ideal(self.ring, self.gens + tuple(other.gens))

    def __mul__(self, other):
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def __le__(self, other):
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb_dicts() == other.gb_dicts()

    def __hash__(self):
        return hash(tuple(tuple(sorted(g.items())) for g in self.gb_dicts()))

    def quotient(self, other):
        return ideal_quotient(self, other)

    def intersect(self, other):
        return intersection(self, other)

    def dimension(self):
        return krull_dimension(self)

    def minimal_generators(self):
        """A minimal generating subset of a homogeneous ideal."""
        keep = minimal_subset([g.terms for g in self.gens], self.p)
        return [self.gens[i] for i in keep]

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


class FreeSubmodule:
    """Submodule of ``S^rank`` generated by vectors of polynomials."""

    def __init__(self, ring, rank, gens=()):
        self.ring = ring
        self.rank = rank
        rows = []
        for g in gens:
            g = [ring(c) for c in g]
            if len(g) != rank:
                raise ValueError(f"vector of length {len(g)} in a rank {rank} module")
            rows.append(tuple(g))
        self.gens = tuple(rows)
        self._gb = None

    @property
    def p(self):
        return self.ring.field.p

    def _vec(self, g):
        return vector([c.terms for c in g])

    def gb_dicts(self):
        if self._gb is None:
            self._gb = groebner([self._vec(g) for g in self.gens], self.p)
        return self._gb

    def _unvec(self, v):
        return tuple(Polynomial(self.ring, c) for c in components(v, self.rank))

    def groebner_basis(self):
        return [self._unvec(v) for v in self.gb_dicts()]

    def normal_form(self, g):
        eng = GroebnerEngine(self.p)
        eng.preload(self.gb_dicts())
        return self._unvec(eng.reduce(self._vec([self.ring(c) for c in g])))

    def contains(self, g):
        return all(c.is_zero() for c in self.normal_form(g))

    def syzygies(self):
        return syzygies(self)


# -- operations ---------------------------------------------------------------

def groebner_basis(gens):
    """Reduced Groebner basis of an :class:`Ideal` or :class:`FreeSubmodule`."""
    return gens.groebner_basis()


def normal_form(f, basis):
    """Remainder of ``f`` on division by ``basis`` (an Ideal/FreeSubmodule)."""
    return basis.normal_form(f)


def syzygies(gens):
    """Full relation module among the given generators (an Ideal or FreeSubmodule)."""
    ring = gens.ring
    if isinstance(gens, Ideal):
        cols = [g.terms for g in gens.gens]
        n = 1
    else:
        cols = [gens._vec(g) for g in gens.gens]
        n = gens.rank
    m = len(cols)
    if not any(cols):
        return FreeSubmodule(ring, m, [[ring.one() if i == j else ring.zero() for i in range(m)]
                                       for j in range(m) if not cols[j]])
    ker = kernel(cols, n, gens.p)
    return FreeSubmodule(ring, m, [tuple(Polynomial(ring, c) for c in components(v, m))
                                   for v in ker])


def ideal_quotient(I, J):
    """``(I : J) = {r : r J subset I}``."""
    ring = I.ring
    if not J.gens:
        return Ideal(ring, [ring.one()])
    s = len(J.gens)
    col = vector([g.terms for g in J.gens])
    ker = kernel([col], s, I.p, ideal_gb=I.gb_dicts())
    # the kernel is computed modulo I, so I itself has to be added back
    return Ideal(ring, [Polynomial(ring, dict(v)) for v in ker] + list(I.gens))


def intersection(I, J):
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    one = {mono.one(ring.nvars): ring.field.one()}
    col = vector([one, one])
    bg = [place(g, 1) for g in J.gb_dicts()]
    eng_bg = list(I.gb_dicts())
    ker = kernel([col], 2, I.p, background=eng_bg + bg)
    return Ideal(ring, [Polynomial(ring, dict(v)) for v in ker])


def _embed(f, nvars_new):
    out = {}
    for m, c in f.items():
        exps = mono.exponents(m) + (0,) * (nvars_new - (len(m) - 2))
        out[mono.encode(exps)] = c
    return out


def radical_contains(I, f):
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick)."""
    ring = I.ring
    f = ring(f)
    if f.is_zero():
        return True
    big = ring.extend("_t%d" % ring.nvars)
    t = big.gen(ring.nvars)
    gens = [Polynomial(big, _embed(g.terms, big.nvars)) for g in I.gens]
    gens.append(big.one() - t * Polynomial(big, _embed(f.terms, big.nvars)))
    return Ideal(big, gens).is_unit()


def krull_dimension(I):
    """Dimension of ``S/I`` from the leading-term ideal; ``-inf`` for the unit ideal."""
    if I.is_unit():
        return NEG_INF
    n = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(mono.exponents(max(g))) if e)
                for g in I.gb_dicts()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0
