"""Graded module presentations, minimalization and minimal free resolutions."""
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .algebra import Ideal, Polynomial, intersection
from .algebra import monomial as mono
from .algebra.groebner import GroebnerEngine
from .algebra.ideal import components, kernel, minimal_subset, place, spread, vector
from .algebra.poly import add_into, dict_degree, format_dict, is_homogeneous_dict
from .rings import InhomogeneousError, QuotientRing


def vec_degree(v, shifts):
    return dict_degree(v, shifts)


def mul_vec(v, f, p):
    """Ring element dict ``f`` times vector ``v`` (no reduction)."""
    out = {}
    for t, c in f.items():
        add_into(out, v, p, scale=c, shift=t)
    return out


def infer_degrees(rows, ring):
    """Generator/relation degrees making a matrix of polynomials homogeneous.

    ``rows[i][j]`` is the coefficient of generator ``i`` in relation ``j``.
    Unconstrained components get degree 0.
    """
    n = len(rows)
    m = len(rows[0]) if rows else 0
    rdeg = [None] * n
    cdeg = [None] * m
    entries = {}
    for i, row in enumerate(rows):
        if len(row) != m:
            raise ValueError("ragged presentation matrix")
        for j, f in enumerate(row):
            f = ring.element(f)
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise InhomogeneousError("matrix entry", f)
            entries[(i, j)] = f.degree
    by_row = {}
    by_col = {}
    for (i, j), t in entries.items():
        by_row.setdefault(i, []).append((j, t))
        by_col.setdefault(j, []).append((i, t))
    for start in range(n):
        if rdeg[start] is not None:
            continue
        rdeg[start] = 0
        stack = [("r", start)]
        while stack:
            kind, idx = stack.pop()
            if kind == "r":
                for j, t in by_row.get(idx, ()):
                    want = rdeg[idx] + t
                    if cdeg[j] is None:
                        cdeg[j] = want
                        stack.append(("c", j))
                    elif cdeg[j] != want:
                        raise InhomogeneousError("presentation matrix", rows[idx][j])
            else:
                for i, t in by_col.get(idx, ()):
                    want = cdeg[idx] - t
                    if rdeg[i] is None:
                        rdeg[i] = want
                        stack.append(("r", i))
                    elif rdeg[i] != want:
                        raise InhomogeneousError("presentation matrix", rows[i][idx])
    # zero columns: degree of the (unique) row degree 0 convention
    cdeg = [0 if c is None else c for c in cdeg]
    return rdeg, cdeg


class ModulePresentation:
    """``coker(R^m -> R^n)`` for a homogeneous matrix over a :class:`QuotientRing`.

    ``columns[j]`` is the j-th relation as a vector dict in ``S^n`` (reduced
    modulo ``I``), ``degrees`` the generator degrees and ``col_degrees`` the
    relation degrees.
    """

    def __init__(self, ring, degrees, columns=(), col_degrees=None, minimal=False, label=None):
        self.ring = ring
        self.degrees = tuple(degrees)
        cols = [ring.reduce_vector(c) for c in columns]
        if col_degrees is None:
            col_degrees = []
            for c in cols:
                d = vec_degree(c, self.degrees)
                if d is None:
                    raise ValueError("degree of a zero relation must be given")
                col_degrees.append(d)
        self.col_degrees = tuple(col_degrees)
        for c, d in zip(cols, self.col_degrees):
            if c and (not is_homogeneous_dict(c, self.degrees) or vec_degree(c, self.degrees) != d):
                raise InhomogeneousError("relation", self._format_vec(c))
        self.columns = tuple(cols)
        self.minimal = minimal
        self.label = label
        self._resolution = None
        self._minimal_form = self if minimal else None

    # -- constructors ---------------------------------------------------------
    @classmethod
    def free(cls, ring, rank, degrees=None):
        degrees = [0] * rank if degrees is None else degrees
        return cls(ring, degrees, (), (), minimal=True, label=f"R^{rank}" if rank != 1 else "R")

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), (), (), minimal=True, label="0")

    @classmethod
    def from_rows(cls, ring, rows, degrees=None):
        """Cokernel of a matrix given as rows of polynomials (rows = generators)."""
        rows = [[ring.element(f) for f in row] for row in rows]
        rdeg, cdeg = infer_degrees(rows, ring)
        if degrees is not None:
            shift = degrees[0] - rdeg[0] if rows else 0
            rdeg = list(degrees)
            cdeg = [c + shift for c in cdeg]
        m = len(rows[0]) if rows else 0
        cols = [vector([rows[i][j].terms for i in range(len(rows))]) for j in range(m)]
        return cls(ring, rdeg, cols, cdeg)

    @classmethod
    def cyclic(cls, ring, gens, label=None):
        """``R/J`` for ``J`` generated by ``gens``."""
        gens = [ring.element(g) for g in gens]
        for g in gens:
            if not g.is_homogeneous():
                raise InhomogeneousError("generator", g)
        cols = [g.terms for g in gens if g]
        return cls(ring, (0,), cols, [g.degree for g in gens if g], label=label)

    @classmethod
    def residue_field(cls, ring):
        return cls.cyclic(ring, ring.gens(), label="k")

    @classmethod
    def from_ideal(cls, ring, gens, label=None):
        """The ideal generated by ``gens`` regarded as an ``R``-module."""
        gens = [ring.element(g) for g in gens]
        for g in gens:
            if not g.is_homogeneous():
                raise InhomogeneousError("generator", g)
        gens = [g for g in gens if g]
        degs = [g.degree for g in gens]
        if not gens:
            return cls.zero(ring)
        ker = kernel([g.terms for g in gens], 1, ring.p, ideal_gb=ring.gb(),
                     col_degrees=degs, row_shifts=[0])
        return cls(ring, degs, ker, label=label)

    @classmethod
    def direct_sum(cls, mods, label=None):
        mods = list(mods)
        ring = mods[0].ring
        degrees, cols, cdeg = [], [], []
        offset = 0
        for M in mods:
            degrees.extend(M.degrees)
            for c in M.columns:
                cols.append({(m[0] - offset,) + m[1:]: v for m, v in c.items()})
            cdeg.extend(M.col_degrees)
            offset += M.rank
        return cls(ring, degrees, cols, cdeg, minimal=all(M.minimal for M in mods), label=label)

    def __add__(self, other):
        return ModulePresentation.direct_sum([self, other])

    def twist(self, a):
        """``M(a)``: all degrees lowered by ``a``."""
        return ModulePresentation(self.ring, [d - a for d in self.degrees], self.columns,
                                  [d - a for d in self.col_degrees], self.minimal, self.label)

    # -- inspection -------------------------------------------------------------
    @property
    def rank(self):
        """Number of generators of the presentation (not the module rank)."""
        return len(self.degrees)

    @property
    def p(self):
        return self.ring.p

    def entry(self, i, j):
        return Polynomial(self.ring.ambient, components(self.columns[j], self.rank)[i])

    def rows(self):
        comps = [components(c, self.rank) for c in self.columns]
        return [[Polynomial(self.ring.ambient, comps[j][i]) for j in range(len(comps))]
                for i in range(self.rank)]

    def _format_vec(self, v):
        comps = components(v, max([-m[0] for m in v] + [len(self.degrees) - 1]) + 1)
        return "(" + ", ".join(format_dict(c, self.ring.ambient) for c in comps) + ")"

    def is_zero(self):
        return self.minimalize().rank == 0

    def is_free(self):
        return not self.minimalize().columns

    def __repr__(self):
        name = self.label or "M"
        return f"<{name}: {self.rank} generators, {len(self.columns)} relations>"

    def matrix_strings(self):
        return [[str(f) for f in row] for row in self.rows()]

    # -- minimalization -----------------------------------------------------------
    def minimalize(self):
        if self._minimal_form is None:
            self._minimal_form = minimalize(self)
        return self._minimal_form

    def resolution(self, n):
        return resolve(self, n)

    def betti(self, n):
        return resolve(self, n).betti


def minimalize(M):
    """Isomorphic presentation with entries in the irrelevant ideal and minimal relations."""
    if M.minimal:
        return M
    ring = M.ring
    p = ring.p
    n = M.rank
    nv = ring.nvars
    degrees = list(M.degrees)
    cols = [dict(c) for c in M.columns if c]
    cdeg = [d for c, d in zip(M.columns, M.col_degrees) if c]
    while True:
        pivot = None
        for j, c in enumerate(cols):
            for m, v in c.items():
                if m[1] == 0:
                    pivot = (j, -m[0], v)
                    break
            if pivot:
                break
        if pivot is None:
            break
        j, i, cval = pivot
        pc = cols[j]
        inv = ring.field.inv(cval)
        key_i = -i
        new_cols, new_deg = [], []
        for l, c in enumerate(cols):
            if l == j:
                continue
            a = {(0,) + m[1:]: v for m, v in c.items() if m[0] == key_i}
            if a:
                c = add_into(dict(c), mul_vec(pc, a, p), p, scale=-inv % p if p else -inv)
                c = ring.reduce_vector(c)
            # drop component i, renumber higher positions
            c = {((m[0] + 1) if -m[0] > i else m[0],) + m[1:]: v for m, v in c.items()
                 if m[0] != key_i}
            if c:
                new_cols.append(c)
                new_deg.append(cdeg[l])
        cols, cdeg = new_cols, new_deg
        del degrees[i]
    shifts = degrees
    keep = minimal_subset(cols, p, ideal_gb=ring.gb(), shifts=shifts, positions=range(len(degrees)))
    cols = [cols[j] for j in keep]
    cdeg = [cdeg[j] for j in keep]
    return ModulePresentation(ring, degrees, cols, cdeg, minimal=True, label=M.label)


@dataclass
class BettiTable:
    """Betti numbers ``beta_0..beta_n`` with their graded refinement."""

    graded: list  # list of Counter: degree -> multiplicity

    @property
    def ranks(self):
        return [sum(c.values()) for c in self.graded]

    def __getitem__(self, i):
        return self.ranks[i]

    def __len__(self):
        return len(self.graded)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return [dict(c) for c in self.graded] == [dict(c) for c in other.graded]
        return list(self.ranks) == list(other)

    def truncate(self, n):
        return BettiTable(self.graded[: n + 1])

    def shifted(self, a):
        """Graded Betti table of ``M(-a)``."""
        return BettiTable([Counter({d + a: v for d, v in c.items()}) for c in self.graded])

    def __add__(self, other):
        n = max(len(self), len(other))
        out = []
        for i in range(n):
            c = Counter()
            if i < len(self):
                c.update(self.graded[i])
            if i < len(other):
                c.update(other.graded[i])
            out.append(c)
        return BettiTable(out)

    def strip_free(self, free_degrees):
        """Remove a free summand with generators in ``free_degrees`` (from beta_0)."""
        g = [Counter(c) for c in self.graded]
        g[0].subtract(Counter(free_degrees))
        g[0] = +g[0]
        return BettiTable(g)

    def as_dict(self):
        return {
            "total": self.ranks,
            "graded": [{str(d): v for d, v in sorted(c.items())} for c in self.graded],
        }

    def __repr__(self):
        return f"BettiTable({self.ranks})"


@dataclass
class FreeResolution:
    """Minimal graded free resolution truncated at ``length``.

    ``differentials[i]`` is the list of column vectors of ``d_{i+1}``;
    ``degrees[i]`` the generator degrees of ``F_i``.
    """

    ring: QuotientRing
    degrees: list
    differentials: list
    complete: bool = False  # True when F_{len(degrees)} = 0 is known
    minimal: bool = True

    @property
    def length(self):
        return len(self.degrees) - 1

    def rank(self, i):
        if i < len(self.degrees):
            return len(self.degrees[i])
        if self.complete:
            return 0
        raise IndexError(f"resolution not computed to index {i}")

    def free_degrees(self, i):
        if i < len(self.degrees):
            return self.degrees[i]
        if self.complete:
            return ()
        raise IndexError(f"resolution not computed to index {i}")

    def differential(self, i):
        """Columns of ``d_i : F_i -> F_{i-1}`` (``i >= 1``)."""
        if i - 1 < len(self.differentials):
            return self.differentials[i - 1]
        if self.complete:
            return []
        raise IndexError(f"resolution not computed to index {i}")

    @property
    def betti(self):
        return BettiTable([Counter(d) for d in self.degrees])

    def matrix(self, i):
        """``d_i`` as rows of polynomials."""
        cols = self.differential(i)
        n = self.rank(i - 1)
        comps = [components(c, n) for c in cols]
        return [[Polynomial(self.ring.ambient, comps[j][r]) for j in range(len(cols))]
                for r in range(n)]


def next_syzygy(ring, columns, n, col_degrees, row_degrees):
    """Minimal generators of ``ker(R^m -> R^n)`` with their degrees."""
    if not columns:
        return [], []
    ker = kernel(columns, n, ring.p, ideal_gb=ring.gb(), col_degrees=col_degrees,
                 row_shifts=row_degrees)
    m = len(columns)
    keep = minimal_subset(ker, ring.p, ideal_gb=ring.gb(), shifts=list(col_degrees),
                          positions=range(m))
    vecs = [ker[i] for i in keep]
    return vecs, [vec_degree(v, col_degrees) for v in vecs]


def resolve(M, n):
    """Minimal free resolution of ``M`` through homological degree ``n``."""
    if n < 0:
        raise ValueError("resolution length must be non-negative")
    res = M._resolution
    if res is None:
        P = minimalize(M)
        res = FreeResolution(M.ring, [list(P.degrees)], [], complete=P.rank == 0)
        if P.rank:
            res.degrees.append(list(P.col_degrees))
            res.differentials.append(list(P.columns))
            if not P.columns:
                res.complete = True
        M._resolution = res
    ring = M.ring
    while not res.complete and res.length < n:
        i = res.length  # highest computed F_i; compute d_{i+1}
        cols = res.differentials[i - 1]
        vecs, degs = next_syzygy(ring, cols, len(res.degrees[i - 1]), res.degrees[i],
                                 res.degrees[i - 1])
        if not vecs:
            res.complete = True
            break
        res.degrees.append(degs)
        res.differentials.append(vecs)
    return _truncated(res, n)


def _truncated(res, n):
    if res.length <= n:
        return res
    return FreeResolution(res.ring, res.degrees[: n + 1], res.differentials[:n], False)


def betti_numbers(M, n):
    r = resolve(M, n)
    ranks = []
    for i in range(n + 1):
        ranks.append(r.rank(i) if (i <= r.length or r.complete) else None)
    return ranks


def as_ambient_module(M):
    """``M`` regarded as a module over the polynomial ring ``S``."""
    ring = M.ring
    S = ring.polynomial_ring()
    cols = list(M.columns) + spread(ring.gb(), range(M.rank))
    cdeg = list(M.col_degrees) + [dict_degree(g) + d for d in M.degrees for g in ring.gb()]
    return ModulePresentation(S, M.degrees, cols, cdeg, label=M.label)


def projective_dimension_over_ambient(M):
    A = as_ambient_module(M)
    res = resolve(A, A.ring.nvars + 1)
    if not res.complete:
        raise RuntimeError("resolution over the polynomial ring did not terminate")
    return max(i for i, d in enumerate(res.degrees) if d)


def depth(M):
    """Depth via Auslander-Buchsbaum over the ambient polynomial ring."""
    if M.minimalize().rank == 0:
        raise ValueError("depth undefined for zero module")
    return M.ring.nvars - projective_dimension_over_ambient(M)


def is_cohen_macaulay(M):
    """Maximal Cohen-Macaulay (depth = dim R); the zero module counts as CM."""
    if M.minimalize().rank == 0:
        return True
    return depth(M) == M.ring.dimension


# -- annihilators, lengths, subquotients ---------------------------------------

def annihilator(M):
    """``Ann_R M`` lifted to an ideal of ``S`` (contains ``I``)."""
    ring = M.ring
    P = minimalize(M)
    S = ring.ambient
    if P.rank == 0:
        return Ideal(S, [S.one()])
    if not P.columns:
        return Ideal(S, list(ring.ideal.gens))
    one = {mono.one(ring.nvars): ring.field.one()}
    result = None
    for i in range(P.rank):
        ker = kernel([place(one, i)], P.rank, ring.p, ideal_gb=ring.gb(), background=P.columns)
        J = Ideal(S, [Polynomial(S, dict(v)) for v in ker] + list(ring.ideal.gens))
        result = J if result is None else intersection(result, J)
        if not result.gens or result == Ideal(S, list(ring.ideal.gens)):
            break
    return result


def standard_monomial_count(leads, nvars):
    """Number of monomials outside a monomial ideal, or ``None`` if infinite."""
    exps = [mono.exponents(m) for m in leads]
    bounds = []
    for v in range(nvars):
        pure = [e[v] for e in exps if e[v] and sum(e) == e[v]]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for e in product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(le, e)) for le in exps):
            count += 1
    return count


def length(M):
    """``dim_k M`` when finite, else ``None``."""
    ring = M.ring
    P = minimalize(M)
    if P.rank == 0:
        return 0
    eng = GroebnerEngine(ring.p, list(P.degrees))
    eng.preload(spread(ring.gb(), range(P.rank)))
    for c in sorted(P.columns, key=lambda v: eng._sugar(max(v))):
        eng.add(c)
    eng.complete()
    total = 0
    for pos in range(P.rank):
        leads = [eng.leads[i] for i in eng.by_pos.get(-pos, [])]
        cnt = standard_monomial_count(leads, ring.nvars)
        if cnt is None:
            return None
        total += cnt
    return total


def subquotient(ring, degrees, kernel_cols, target_degrees, kernel_bg, image_cols, relations):
    """Presentation of ``ker(beta) / im(alpha)`` inside ``R^n / relations``.

    ``kernel_cols[j]`` is ``beta(e_j)`` in a target ``R^t`` (generator degrees
    ``target_degrees``) whose relations are ``kernel_bg``; ``image_cols`` are
    the columns of ``alpha``.  Returns the minimalized module and the lifts of
    its generators.
    """
    p = ring.p
    n = len(degrees)
    if n == 0:
        return ModulePresentation.zero(ring), []
    if not target_degrees or not any(kernel_cols):
        one = {mono.one(ring.nvars): ring.field.one()}
        kvecs = [place(one, j) for j in range(n)]
    else:
        kvecs = kernel(kernel_cols, len(target_degrees), p, ideal_gb=ring.gb(),
                       background=kernel_bg, col_degrees=degrees, row_shifts=target_degrees)
    background = [c for c in list(image_cols) + list(relations) if c]
    keep = minimal_subset(kvecs, p, ideal_gb=ring.gb(), background=background,
                          shifts=list(degrees), positions=range(n))
    kvecs = [kvecs[i] for i in keep]
    if not kvecs:
        return ModulePresentation.zero(ring), []
    kdeg = [vec_degree(v, degrees) for v in kvecs]
    rels = kernel(kvecs, n, p, ideal_gb=ring.gb(), background=background,
                  col_degrees=kdeg, row_shifts=degrees)
    H = ModulePresentation(ring, kdeg, rels)
    return minimalize(H), kvecs


def betti_period(ranks, max_period=2):
    """Smallest ``(start, period)`` with ``ranks[i + period] == ranks[i]`` for all ``i >= start``.

    Only the observed window is checked; ``None`` when no period up to ``max_period``
    fits with at least one full repetition.
    """
    ranks = list(ranks)
    best = None
    for period in range(1, max_period + 1):
        for start in range(len(ranks) - 2 * period + 1):
            if all(ranks[i + period] == ranks[i] for i in range(start, len(ranks) - period)):
                if best is None or start < best[0]:
                    best = (start, period)
                break
    return best
