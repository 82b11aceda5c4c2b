"""Classification of resolving/thick subcategories as decision procedures.

Over a hypersurface (or a Gorenstein ring assumed to be a hypersurface on
the punctured spectrum, for categories containing ``Omega^d k``), membership
in the resolving/thick closure of Cohen-Macaulay modules is decided by
comparing nonfree loci.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .loci import (ClosedSet, SpecClosedSet, nonfree_locus, singular_locus)
from .modules import ModulePresentation, is_cohen_macaulay, minimalize


class Kind(Enum):
    EMPTY = "empty"
    ZERO = "zero"
    ADD = "add"
    EXT = "ext"
    RES = "res"
    THICK_CM = "thick_cm"
    THICK_STABLE = "thick_stable"


class UnsupportedRing(ValueError):
    pass


@dataclass
class SubcategorySpec:
    """Closure of a list of generators of the given kind.

    ``EMPTY`` and ``ZERO`` are explicit: the empty subcategory has no objects
    while the zero subcategory (stably: the free modules) corresponds to the
    empty support.
    """

    kind: Kind
    generators: list
    ring: object
    contains_omega_dk: bool = False
    name: str = ""

    def __post_init__(self):
        if isinstance(self.kind, str):
            self.kind = Kind(self.kind)
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generators must live over the category's ring")

    @classmethod
    def res(cls, ring, generators=(), **kw):
        return cls(Kind.RES, list(generators), ring, **kw)

    @classmethod
    def thick_cm(cls, ring, generators=(), **kw):
        return cls(Kind.THICK_CM, list(generators), ring, **kw)

    @classmethod
    def thick_stable(cls, ring, generators=(), **kw):
        return cls(Kind.THICK_STABLE, list(generators), ring, **kw)

    @classmethod
    def add(cls, ring, generators=(), **kw):
        return cls(Kind.ADD, list(generators), ring, **kw)

    @classmethod
    def ext(cls, ring, generators=(), **kw):
        return cls(Kind.EXT, list(generators), ring, **kw)

    @classmethod
    def empty(cls, ring):
        return cls(Kind.EMPTY, [], ring)

    @classmethod
    def zero(cls, ring):
        return cls(Kind.ZERO, [], ring)


def omega_dk(ring):
    from .homology import syzygy
    return syzygy(ModulePresentation.residue_field(ring), ring.dimension)


def support_of(cat):
    """Union of the nonfree loci of the generators (the support of every closure kind)."""
    ring = cat.ring
    if cat.kind in (Kind.EMPTY, Kind.ZERO):
        return SpecClosedSet.empty(ring)
    comps = [nonfree_locus(g) for g in cat.generators]
    if cat.contains_omega_dk:
        comps.append(nonfree_locus(omega_dk(ring)))
    return SpecClosedSet(ring, comps)


@dataclass
class MembershipCertificate:
    verdict: bool
    reason: str
    module_support: object
    category_support: object
    cohen_macaulay: bool
    theorem: str
    annihilators: list = field(default_factory=list)
    mode: str = ""

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "module_support": _describe(self.module_support),
            "category_support": _describe(self.category_support),
            "cohen_macaulay": self.cohen_macaulay,
            "theorem": self.theorem,
            "mode": self.mode,
            "annihilators": self.annihilators,
        }


def _describe(V):
    if isinstance(V, ClosedSet):
        return [] if V.is_empty() else [V.generators()]
    return V.describe()


def _mode(cat):
    ring = cat.ring
    if ring.is_hypersurface:
        return "hypersurface"
    if ring.is_gorenstein and ring.locally_hypersurface and cat.contains_omega_dk:
        return "locally-hypersurface"
    raise UnsupportedRing("unsupported ring for classification oracle")


THEOREM = {
    "hypersurface": "resolving/thick subcategories of CM(R) <-> specialization-closed subsets of Sing R",
    "locally-hypersurface": "subcategories containing Omega^d k <-> nonempty specialization-closed subsets of Sing R",
    "artinian-ext": "extension-closed subcategories over an artinian hypersurface: empty, zero, add R, mod R",
}


def member(cat, M):
    """Decide ``M`` in the closure described by ``cat`` and certify the decision."""
    ring = cat.ring
    V = nonfree_locus(M)
    anns = [V.generators()] if not V.is_empty() else []
    if cat.kind is Kind.EMPTY:
        return MembershipCertificate(False, "the empty subcategory has no objects", V,
                                     SpecClosedSet.empty(ring), is_cohen_macaulay(M), "definition",
                                     anns, "empty")
    if cat.kind in (Kind.ADD, Kind.EXT):
        return _member_additive(cat, M, V, anns)
    mode = _mode(cat)
    for g in cat.generators:
        if not is_cohen_macaulay(g):
            raise ValueError(f"generator {g.label or g} is not Cohen-Macaulay")
    support = support_of(cat)
    cm = is_cohen_macaulay(M)
    for comp in support.components:
        anns.append(comp.generators())
    if not cm:
        return MembershipCertificate(False, "not Cohen-Macaulay", V, support, False,
                                     THEOREM[mode], anns, mode)
    inside = SpecClosedSet(ring, [V]) <= support
    reason = "support contained in category support" if inside else "support not contained"
    return MembershipCertificate(inside, reason, V, support, True, THEOREM[mode], anns, mode)


def _member_additive(cat, M, V, anns):
    ring = cat.ring
    support = support_of(cat)
    cm = is_cohen_macaulay(M)
    if support.is_empty():
        # add/ext of free modules is add R
        ok = V.is_empty()
        return MembershipCertificate(ok, "free" if ok else "not free", V, support, cm,
                                     "extensions of free modules split", anns, "free")
    if ring.is_hypersurface and ring.dimension == 0 and cat.kind is Kind.EXT:
        return MembershipCertificate(True, "ext-closure of a nonfree module is mod R", V, support,
                                     cm, THEOREM["artinian-ext"], anns, "artinian")
    raise UnsupportedRing(f"membership in {cat.kind.value}-closures of nonfree modules is not decided")


def inverse_image(phi, M):
    """``M`` in ``V_CM^{-1}(phi)``: Cohen-Macaulay with nonfree locus inside ``phi``."""
    if isinstance(phi, ClosedSet):
        phi = SpecClosedSet(phi.ring, [phi])
    if not is_cohen_macaulay(M):
        return False
    return SpecClosedSet(phi.ring, [nonfree_locus(M)]) <= phi


@dataclass
class RoundTripReport:
    primes: list
    generators: list
    generator_checks: list
    support: object
    support_matches: bool

    @property
    def passed(self):
        return all(self.generator_checks) and self.support_matches


def round_trip_check(phi, poset):
    """Build ``Omega^d(R/p)`` for the poset primes in ``phi`` and recover ``phi`` as a support."""
    from .homology import syzygy
    ring = poset.ring
    if isinstance(phi, ClosedSet):
        phi = SpecClosedSet(ring, [phi])
    sing = SpecClosedSet(ring, [singular_locus(ring)])
    names = phi.points(poset)
    if not phi <= sing:
        raise ValueError("Phi must be contained in the singular locus")
    d = ring.dimension
    gens = []
    for name in names:
        quotient = ModulePresentation.cyclic(ring, poset.primes[name].gens, label=f"R/{name}")
        g = syzygy(quotient, d)
        g.label = f"Omega^{d}(R/{name})"
        gens.append(g)
    checks = [inverse_image(phi, g) for g in gens]
    support = support_of(SubcategorySpec.res(ring, gens))
    return RoundTripReport(names, gens, checks, support, support == phi)


@dataclass
class Enumeration:
    sets: list  # (tuple of prime names, SpecClosedSet)

    @property
    def count(self):
        return len(self.sets)

    @property
    def nonempty_count(self):
        return sum(1 for names, _ in self.sets if names)


def enumerate_spec_closed(poset, within=None):
    """All upward-closed subsets of the poset primes lying in ``within``."""
    ring = poset.ring
    if within is None:
        names = list(poset.names)
    else:
        if isinstance(within, ClosedSet):
            within = SpecClosedSet(ring, [within])
        names = within.points(poset)
    found = []
    for r in range(len(names) + 1):
        for subset in combinations(names, r):
            sub = set(subset)
            if all(b in sub for a in sub for b in names if poset.leq(a, b)):
                found.append((tuple(subset), poset.closed_set(subset)))
    return Enumeration(found)


# -- rigidity ----------------------------------------------------------------------

@dataclass
class RigidityVerdict:
    tor_lengths: dict
    tor_eventually_vanishing: bool
    pd_M_finite: bool
    pd_N_finite: bool
    tor_consistent: bool
    ext_lengths: dict
    ext_eventually_vanishing: bool
    id_N_finite: bool
    ext_consistent: bool
    note: str = ""

    @property
    def verdict(self):
        return "eventually vanishing" if self.tor_eventually_vanishing else "not eventually vanishing"

    def as_dict(self):
        return {
            "tor_lengths": {str(k): v for k, v in self.tor_lengths.items()},
            "tor_verdict": self.verdict,
            "pd_M_finite": self.pd_M_finite,
            "pd_N_finite": self.pd_N_finite,
            "tor_consistent": self.tor_consistent,
            "ext_lengths": {str(k): v for k, v in self.ext_lengths.items()},
            "ext_verdict": "eventually vanishing" if self.ext_eventually_vanishing
            else "not eventually vanishing",
            "id_N_finite": self.id_N_finite,
            "ext_consistent": self.ext_consistent,
            "note": self.note,
        }


def _size(H):
    """k-dimension of a homology module; ``-1`` marks a nonzero infinite-length module."""
    if H.is_zero():
        return 0
    L = H.length()
    return -1 if L is None else L


def rigidity(M, N):
    """Vanishing of Tor/Ext at indices ``d+1, d+2`` versus finiteness of projective dimension."""
    from .homology import ext, pd_finite, tor
    ring = M.ring
    if not ring.is_hypersurface:
        raise ValueError("rigidity oracle requires a hypersurface")
    d = ring.dimension
    tor_lengths = {i: _size(tor(M, N, i)) for i in range(0, d + 3)}
    ext_lengths = {i: _size(ext(M, N, i)) for i in range(0, d + 3)}
    tor_ev = tor_lengths[d + 1] == 0 and tor_lengths[d + 2] == 0
    ext_ev = ext_lengths[d + 1] == 0 and ext_lengths[d + 2] == 0
    pdM, pdN = pd_finite(M), pd_finite(N)
    # hypersurfaces are Gorenstein: id N < inf iff pd N < inf
    idN = pdN
    return RigidityVerdict(
        tor_lengths, tor_ev, pdM, pdN, tor_ev == (pdM or pdN),
        ext_lengths, ext_ev, idN, ext_ev == (pdM or idN),
        note="injective dimension decided through id N < inf iff pd N < inf (Gorenstein)",
    )
