"""Syzygies, transposes, Hom/Ext/Tor, stable Hom and suspension."""
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import Ideal, Polynomial, krull_dimension
from .algebra import monomial as mono
from .algebra.ideal import components, kernel, place, vector
from .algebra.linalg import rank as k_rank, row_reduce
from .algebra.poly import add_into
from .modules import (ModulePresentation, annihilator, depth, length, minimalize, mul_vec,
                      resolve, subquotient, vec_degree)


class InfiniteLengthError(ValueError):
    """A homology module expected to have finite length does not."""

    def __init__(self, message, module):
        super().__init__(message)
        self.module = module


@dataclass
class HomologyModule:
    """A homology module together with where it came from."""

    module: ModulePresentation
    kind: str  # "Ext", "Tor" or "Hom"
    index: int
    args: tuple = ()
    generators: list = field(default_factory=list, repr=False)

    def length(self):
        if not hasattr(self, "_length"):
            self._length = length(self.module)
        return self._length

    def is_zero(self):
        return self.module.rank == 0

    def annihilator(self):
        return annihilator(self.module)

    def is_finite_length(self):
        if self.is_zero():
            return True
        return krull_dimension(self.annihilator()) <= 0

    def describe(self):
        names = ", ".join(self.args)
        return f"{self.kind}_{self.index}({names})" if self.kind != "Hom" else f"Hom({names})"


def _label(M):
    return M.label or "M"


def syzygy(M, n):
    """``Omega^n M``: the image of ``d_n`` in the minimal resolution, presented by ``d_{n+1}``."""
    if n < 0:
        raise ValueError("syzygy index must be non-negative")
    if n == 0:
        return minimalize(M)
    res = resolve(M, n + 1)
    degs = res.free_degrees(n)
    if not degs:
        return ModulePresentation.zero(M.ring)
    cols = res.differential(n + 1) if (n + 1 <= res.length or res.complete) else []
    cdeg = res.free_degrees(n + 1)
    label = f"Omega^{n}({_label(M)})" if n != 1 else f"Omega({_label(M)})"
    return ModulePresentation(M.ring, degs, cols, cdeg, minimal=True, label=label)


def transpose(M):
    """Auslander transpose: cokernel of the dual of a minimal presentation."""
    P = minimalize(M)
    ring = M.ring
    if not P.columns:
        return ModulePresentation.zero(ring)
    n = P.rank
    comps = [components(c, n) for c in P.columns]
    rows = [vector([comps[j][i] for j in range(len(comps))]) for i in range(n)]
    out = ModulePresentation(ring, [-d for d in P.col_degrees], rows, [-d for d in P.degrees],
                             label=f"tr({_label(M)})")
    return minimalize(out)


# -- Hom / Ext / Tor complexes -------------------------------------------------------

def _componentwise(cols, n):
    return [components(c, n) for c in cols]


def _hom_terms(res, N, i):
    """Generator degrees and relations of ``Hom(F_i, N) = N^{r_i}``."""
    nN = N.rank
    a = res.free_degrees(i)
    degs = [dl - ak for ak in a for dl in N.degrees]
    rels = []
    for k, ak in enumerate(a):
        for c in N.columns:
            rels.append({(m[0] - k * nN,) + m[1:]: v for m, v in c.items()})
    return degs, rels


def _hom_map(res, N, i):
    """Columns of ``Hom(d_i, N): Hom(F_{i-1}, N) -> Hom(F_i, N)``."""
    nN = N.rank
    r_prev = res.rank(i - 1)
    cols = _componentwise(res.differential(i), r_prev)
    out = []
    for k in range(r_prev):
        for l in range(nN):
            v = {}
            for kp, comp in enumerate(cols):
                f = comp[k]
                if f:
                    v.update(place(f, kp * nN + l))
            out.append(v)
    return out


def _tensor_terms(res, N, i):
    nN = N.rank
    a = res.free_degrees(i)
    degs = [ak + dl for ak in a for dl in N.degrees]
    rels = []
    for k in range(len(a)):
        for c in N.columns:
            rels.append({(m[0] - k * nN,) + m[1:]: v for m, v in c.items()})
    return degs, rels


def _tensor_map(res, N, i):
    """Columns of ``d_i (x) N: F_i (x) N -> F_{i-1} (x) N``."""
    nN = N.rank
    r_prev = res.rank(i - 1)
    cols = _componentwise(res.differential(i), r_prev)
    out = []
    for comp in cols:
        for l in range(nN):
            v = {}
            for k, f in enumerate(comp):
                if f:
                    v.update(place(f, k * nN + l))
            out.append(v)
    return out


def ext(M, N, i):
    """``Ext^i_R(M, N)`` as the cohomology of ``Hom(F, N)``."""
    if i < 0:
        raise ValueError("Ext index must be non-negative")
    ring = M.ring
    Nm = minimalize(N)
    res = resolve(M, i + 1)
    args = (_label(M), _label(N))
    if res.rank(i) == 0 or Nm.rank == 0:
        return HomologyModule(ModulePresentation.zero(ring), "Ext" if i else "Hom", i, args)
    degs, rels = _hom_terms(res, Nm, i)
    tdegs, trels = _hom_terms(res, Nm, i + 1)
    beta = _hom_map(res, Nm, i + 1) if tdegs else []
    alpha = _hom_map(res, Nm, i) if i > 0 else []
    H, gens = subquotient(ring, degs, beta, tdegs, trels, alpha, rels)
    H.label = f"Ext^{i}({args[0]}, {args[1]})"
    return HomologyModule(H, "Ext" if i else "Hom", i, args, gens)


def hom(M, N):
    return ext(M, N, 0)


def tor(M, N, i):
    """``Tor_i^R(M, N)`` as the homology of ``F (x) N``."""
    if i < 0:
        raise ValueError("Tor index must be non-negative")
    ring = M.ring
    Nm = minimalize(N)
    res = resolve(M, i + 1)
    args = (_label(M), _label(N))
    if res.rank(i) == 0 or Nm.rank == 0:
        return HomologyModule(ModulePresentation.zero(ring), "Tor", i, args)
    degs, rels = _tensor_terms(res, Nm, i)
    alpha = _tensor_map(res, Nm, i + 1) if res.rank(i + 1) else []
    if i > 0:
        tdegs, trels = _tensor_terms(res, Nm, i - 1)
        beta = _tensor_map(res, Nm, i)
    else:
        tdegs, trels, beta = [], [], []
    H, gens = subquotient(ring, degs, beta, tdegs, trels, alpha, rels)
    H.label = f"Tor_{i}({args[0]}, {args[1]})"
    return HomologyModule(H, "Tor", i, args, gens)


# -- duals, free summands, stable Hom -----------------------------------------------

def dual(M):
    """``M^* = Hom(M, R)`` as a presented module."""
    R1 = ModulePresentation.free(M.ring, 1)
    H = hom(M, R1).module
    H.label = f"({_label(M)})^*"
    return H


def free_rank(M):
    """Generator degrees of a maximal free direct summand of ``M`` (as a Counter).

    A free summand ``R(-a)`` of ``M`` is a surjection ``M -> R(-a)``; their
    number is the rank of the evaluation pairing between ``M/mM`` and
    ``M^*/mM^*``, computed degree by degree.
    """
    P = minimalize(M)
    ring = M.ring
    if P.rank == 0:
        return Counter()
    H = hom(P, ModulePresentation.free(ring, 1))
    if H.is_zero():
        return Counter()
    zero = mono.one(ring.nvars)
    out = Counter()
    for a in sorted(set(P.degrees)):
        rows = [k for k, d in enumerate(P.degrees) if d == a]
        mat = []
        for g in H.generators:
            comps = components(g, P.rank)
            mat.append([comps[k].get(zero, 0) for k in rows])
        r = k_rank(mat, ring.field)
        if r:
            out[a] = r
    return out


def stable_betti(M, n):
    """Graded Betti table of ``M`` through index ``n`` with free summands removed."""
    b = resolve(M, n).betti
    b = _pad(b, n)
    return b.strip_free(list(free_rank(M).elements()))


def _pad(b, n):
    from .modules import BettiTable
    g = [Counter(c) for c in b.graded[: n + 1]]
    while len(g) < n + 1:
        g.append(Counter())
    return BettiTable(g)


def stable_hom_dim(M, N):
    """``dim_k`` of the stable Hom, computed as ``Tor_1(tr M, N)``."""
    T = tor(transpose(M), N, 1)
    L = T.length()
    if L is None:
        raise InfiniteLengthError("infinite-length stable hom module", T.module)
    return L


def stable_hom_direct(M, N):
    """Stable Hom as ``Hom(M, N)`` modulo maps through the projective cover of ``N``.

    Independent of transposes: used to cross-check :func:`stable_hom_dim`.
    Returns the presented quotient module.
    """
    ring = M.ring
    Nm = minimalize(N)
    res = resolve(M, 1)
    if res.rank(0) == 0 or Nm.rank == 0:
        return ModulePresentation.zero(ring)
    G = ModulePresentation.free(ring, Nm.rank, list(Nm.degrees))
    degs, rels = _hom_terms(res, Nm, 0)
    tdegs, trels = _hom_terms(res, Nm, 1)
    beta = _hom_map(res, Nm, 1) if tdegs else []
    gdegs, grels = _hom_terms(res, G, 0)
    gtd, gtr = _hom_terms(res, G, 1)
    gbeta = _hom_map(res, G, 1) if gtd else []
    _, through_free = subquotient(ring, gdegs, gbeta, gtd, gtr, [], grels)
    H, _ = subquotient(ring, degs, beta, tdegs, trels, through_free, rels)
    return H


def suspension(M):
    """``Sigma M = (Omega(M^*))^*`` for a Cohen-Macaulay module over a Gorenstein ring."""
    from .modules import is_cohen_macaulay
    ring = M.ring
    if not ring.is_gorenstein:
        raise ValueError("suspension requires a Gorenstein ring")
    if not is_cohen_macaulay(M):
        raise ValueError("suspension requires a Cohen-Macaulay module")
    out = dual(syzygy(dual(M), 1))
    out = minimalize(out)
    out.label = f"Sigma({_label(M)})"
    return out


def pd_finite(M):
    """Over a hypersurface: ``pd M < inf`` iff ``Omega^d M`` is free."""
    ring = M.ring
    if not ring.is_hypersurface:
        raise ValueError("pd_finite decision requires a hypersurface")
    return syzygy(M, ring.dimension).is_free()


def tilde_member(cat, M):
    """Whether ``Omega^(d - depth M) M`` lies in the category."""
    from .classification import member
    Mm = minimalize(M)
    if Mm.rank == 0:
        return True
    n = M.ring.dimension - depth(Mm)
    return member(cat, syzygy(Mm, n)).verdict


# -- regular elements and the splitting of Omega(M/xM) -------------------------------

def multiplication_kernel(M, f):
    """``ker(M --f--> M)`` as a presented module."""
    P = minimalize(M)
    ring = M.ring
    f = ring.element(f)
    if P.rank == 0:
        return ModulePresentation.zero(ring)
    one = {mono.one(ring.nvars): ring.field.one()}
    cols = [mul_vec(place(one, j), f.terms, ring.p) for j in range(P.rank)]
    e = f.degree if f else 0
    H, _ = subquotient(ring, list(P.degrees), cols, [d + e for d in P.degrees],
                       list(P.columns), [], list(P.columns))
    return H


def is_regular_on(M, f):
    return multiplication_kernel(M, f).rank == 0


def quotient_by_element(M, f):
    """``M / fM``."""
    P = minimalize(M)
    ring = M.ring
    f = ring.element(f)
    one = {mono.one(ring.nvars): ring.field.one()}
    cols = list(P.columns) + [mul_vec(place(one, j), f.terms, ring.p) for j in range(P.rank)]
    cdeg = list(P.col_degrees) + [d + f.degree for d in P.degrees]
    return ModulePresentation(ring, P.degrees, cols, cdeg, label=f"{_label(M)}/({f})")


def homogeneous_part(ring, ideal, degree):
    """A k-basis of the degree-``degree`` part of ``ideal`` modulo ``I``."""
    S = ring.ambient
    from .algebra.ideal import Ideal as _Ideal
    monos_by_deg = {}

    def monomials(d):
        if d not in monos_by_deg:
            out = []
            for combo in combinations_with_replacement(range(ring.nvars), d):
                exps = [0] * ring.nvars
                for v in combo:
                    exps[v] += 1
                out.append(tuple(exps))
            monos_by_deg[d] = out
        return monos_by_deg[d]

    spans = []
    for g in ideal.gens:
        g = ring.element(g)
        if g.is_zero() or g.degree > degree:
            continue
        for e in monomials(degree - g.degree):
            h = ring.element(g * S.monomial(e))
            if h:
                spans.append(h)
    if not spans:
        return []
    basis_monos = sorted({m for h in spans for m in h.terms}, reverse=True)
    idx = {m: i for i, m in enumerate(basis_monos)}
    rows = []
    for h in spans:
        row = [0] * len(basis_monos)
        for m, c in h.terms.items():
            row[idx[m]] = c
        rows.append(row)
    red, _ = row_reduce(rows, ring.field)
    return [Polynomial(S, {basis_monos[i]: c for i, c in enumerate(r) if c}) for r in red]


def combinations_with_replacement(pool, r):
    from itertools import combinations_with_replacement as cwr
    return cwr(pool, r)


def admissible_element(M, seed=0, max_degree=6, random_tries=8):
    """A homogeneous ``R``- and ``M``-regular element of ``Ann Ext^1(M, Omega M)``.

    Searches the annihilator degree by degree: k-basis elements first, then
    seeded random combinations.  Returns ``(element, annihilator)`` or
    ``(None, annihilator)``.
    """
    ring = M.ring
    J = ext(M, syzygy(M, 1), 1).annihilator()
    rng = random.Random(seed)
    for d in range(1, max_degree + 1):
        basis = homogeneous_part(ring, J, d)
        cands = list(basis)
        for _ in range(random_tries if len(basis) > 1 else 0):
            coeffs = [ring.field(rng.randrange(1, max(ring.p, 7))) for _ in basis]
            f = sum((c * b for c, b in zip(coeffs, basis)), ring.ambient.zero())
            if f:
                cands.append(f)
        for f in cands:
            if ring.is_zerodivisor(f):
                continue
            if is_regular_on(M, f):
                return f, J
    return None, J


def splitting_betti(M, x, n):
    """Graded Betti tables of ``Omega(M/xM)`` and ``Omega M (+) M(-deg x)`` through ``n``."""
    left = _pad(resolve(syzygy(quotient_by_element(M, x), 1), n).betti, n)
    right = _pad(resolve(syzygy(M, 1), n).betti, n) + _pad(resolve(M, n).betti, n).shifted(x.degree)
    return left, _pad(right, n)
