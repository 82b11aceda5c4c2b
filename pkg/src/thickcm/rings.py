"""Standard-graded quotient rings ``R = S/I``.

The irrelevant ideal of ``R`` plays the role of the maximal ideal of a local
ring, and only homogeneous data is admitted.
"""
from dataclasses import dataclass
from functools import cached_property

from .algebra import Ideal, Polynomial, PolynomialRing, krull_dimension
from .algebra import monomial as mono
from .algebra.groebner import GroebnerEngine
from .algebra.ideal import kernel, place, vector
from .algebra.poly import add_into, format_dict


class InhomogeneousError(ValueError):
    """Raised when non-homogeneous data is given where grading is required."""

    def __init__(self, what, offending=None):
        msg = f"inhomogeneous {what}"
        if offending is not None:
            msg += f": {offending}"
        super().__init__(msg)
        self.offending = offending


@dataclass(frozen=True)
class RingFlags:
    dimension: int
    regular: bool
    hypersurface: bool
    complete_intersection: bool
    cohen_macaulay: bool
    gorenstein: bool


class QuotientRing:
    """``S/I`` for a homogeneous ideal ``I`` inside the square of the irrelevant ideal.

    ``locally_hypersurface`` records a *user assertion* that every localization
    at a non-maximal prime is a hypersurface; it is never verified.
    """

    def __init__(self, ambient, relations=(), locally_hypersurface=False):
        if not isinstance(ambient, PolynomialRing):
            raise TypeError("ambient must be a PolynomialRing")
        self.ambient = ambient
        self.ideal = Ideal(ambient, relations)
        for g in self.ideal.gens:
            if not g.is_homogeneous():
                raise InhomogeneousError("relation", g)
        if self.ideal.is_unit():
            raise ValueError("defining ideal must be proper")
        self.minimal_relations = self.ideal.minimal_generators() if self.ideal.gens else []
        for g in self.minimal_relations:
            if g.degree < 2:
                raise ValueError(
                    f"defining ideal must lie in the square of the irrelevant ideal; "
                    f"eliminate the variable of the linear relation {g}")
        self.locally_hypersurface = locally_hypersurface

    # -- basic data -----------------------------------------------------------
    @property
    def field(self):
        return self.ambient.field

    @property
    def p(self):
        return self.ambient.field.p

    @property
    def nvars(self):
        return self.ambient.nvars

    @property
    def variables(self):
        return self.ambient.variables

    def gb(self):
        return self.ideal.gb_dicts()

    def gens(self):
        return self.ambient.gens()

    def __repr__(self):
        rels = ", ".join(str(g) for g in self.minimal_relations)
        return f"QuotientRing({self.field.name}[{', '.join(self.variables)}]/({rels}))"

    def fingerprint(self):
        return {
            "field": self.field.name,
            "variables": list(self.variables),
            "ideal": sorted(format_dict(g, self.ambient) for g in self.gb()),
        }

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and self.ambient == other.ambient
                and self.gb() == other.gb())

    def __hash__(self):
        return hash((self.ambient, len(self.gb())))

    @cached_property
    def _reducer(self):
        eng = GroebnerEngine(self.p, rank_one=True)
        eng.preload(self.gb())
        return eng

    def reduce(self, f):
        """Normal form of a ring-element dict modulo ``I``."""
        if not self.ideal.gens:
            return dict(f)
        return self._reducer.reduce(f)

    def reduce_vector(self, v):
        if not self.ideal.gens or not v:
            return dict(v)
        by_pos = {}
        for m, c in v.items():
            by_pos.setdefault(m[0], {})[(0,) + m[1:]] = c
        out = {}
        for k, f in by_pos.items():
            out.update(place(self.reduce(f), -k))
        return out

    def element(self, f):
        """Reduced polynomial representing ``f`` in ``R``."""
        f = self.ambient(f)
        return Polynomial(self.ambient, self.reduce(f.terms))

    def lift(self, gens):
        """Ideal of ``S`` lifting the ideal of ``R`` generated by ``gens``."""
        return Ideal(self.ambient, [self.ambient(g) for g in gens] + list(self.ideal.gens))

    def maximal_ideal(self):
        return self.lift(self.gens())

    def polynomial_ring(self):
        """The ambient ring ``S`` as a quotient ring with zero ideal."""
        return QuotientRing(self.ambient)

    def ideal_quotient(self, I_gens, J_gens):
        """``(I :_R J)``, lifted to ``S``."""
        from .algebra import ideal_quotient
        return ideal_quotient(self.lift(I_gens), self.lift(J_gens))

    def is_zerodivisor(self, f):
        """Whether ``f`` kills a nonzero element of ``R``."""
        f = self.ambient(f)
        col = self.reduce(f.terms)
        if not col:
            return True
        ker = kernel([col], 1, self.p, ideal_gb=self.gb())
        return bool(ker)

    # -- invariants -----------------------------------------------------------
    @cached_property
    def dimension(self):
        return krull_dimension(self.ideal)

    @cached_property
    def flags(self):
        return classify_ring(self)

    @property
    def is_regular(self):
        return not self.minimal_relations

    @property
    def is_hypersurface(self):
        return len(self.minimal_relations) == 1

    @property
    def is_cohen_macaulay(self):
        return self.flags.cohen_macaulay

    @property
    def is_gorenstein(self):
        return self.flags.gorenstein

    @cached_property
    def jacobian(self):
        """Jacobian matrix (rows: minimal relations, columns: variables)."""
        return [[g.derivative(i) for i in range(self.nvars)] for g in self.minimal_relations]


def classify_ring(R):
    """Ring-class flags of ``R``.

    CM means depth ``R`` = dim ``R``; Gorenstein means CM with
    ``dim_k Ext^d(k, R) = 1``.
    """
    from .homology import ext
    from .modules import ModulePresentation, depth

    d = R.dimension
    regular = not R.minimal_relations
    hyper = len(R.minimal_relations) == 1
    ci = len(R.minimal_relations) == R.nvars - d
    free = ModulePresentation.free(R, 1)
    cm = depth(free) == d
    gor = False
    if cm:
        if regular:
            gor = True
        else:
            k = ModulePresentation.residue_field(R)
            gor = ext(k, free, d).length() == 1
    return RingFlags(d, regular, hyper, ci, cm, gor)
