import pytest

from thickcm.algebra import NEG_INF, PolynomialRing
from thickcm.homology import syzygy
from thickcm.loci import (ClosedSet, PrimePoset, SpecClosedSet, nonfield_locus, nonfree_locus,
                          nonfree_locus_cyclic, punctured_free, singular_locus)
from thickcm.modules import ModulePresentation
from thickcm.rings import QuotientRing

from conftest import F5, corpus_modules


def v(R, *gens):
    return ClosedSet(R, list(gens))


def test_nonfree_loci_examples(x2):
    R, x, y = x2
    assert nonfree_locus(ModulePresentation.cyclic(R, [x])) == v(R, x)
    assert nonfree_locus(ModulePresentation.from_ideal(R, [x, y])) == v(R, x, y)
    assert nonfree_locus(ModulePresentation.free(R, 2)).is_empty()


def test_cyclic_fast_path(x2):
    R, x, y = x2
    assert nonfree_locus_cyclic(R, [x]) == v(R, x)
    assert nonfree_locus_cyclic(R, [y]) == v(R, y)
    assert nonfree_locus_cyclic(R, [y]) == nonfree_locus(ModulePresentation.cyclic(R, [y]))
    assert nonfree_locus_cyclic(R, [R.ambient.one()]).is_empty()


def test_singular_loci(x2, x2yz):
    R, x, y = x2
    assert singular_locus(R) == v(R, x)
    R2, a, b, c = x2yz
    sing = singular_locus(R2)
    P = PrimePoset(R2, {"p": [a, b], "q": [a, c], "m": [a, b, c]})
    assert SpecClosedSet(R2, [sing]).points(P) == ["p", "q", "m"]
    S = PolynomialRing("x y", F5)
    assert singular_locus(QuotientRing(S, [])).is_empty()


def test_spec_closed_ops(x2):
    R, x, y = x2
    A = SpecClosedSet(R, [v(R, x)])
    assert A | A == A
    assert v(R, x, y) <= v(R, x)
    assert not v(R, x) <= v(R, x, y)
    assert v(R, x, y).dimension == 0
    assert SpecClosedSet.empty(R).dimension == NEG_INF
    assert (A | SpecClosedSet(R, [v(R, x, y)])) == A
    assert len((A | SpecClosedSet(R, [v(R, x, y)])).components) == 1


def test_union_needs_product_radical(x2yz):
    R, a, b, c = x2yz
    pq = SpecClosedSet(R, [v(R, a, b), v(R, a, c)])
    # v(x, y*z) = v(x) here equals v(p) u v(q) but is in neither component alone
    assert SpecClosedSet(R, [v(R, a, b * c)]) <= pq
    assert not SpecClosedSet(R, [v(R, a)]) <= SpecClosedSet(R, [v(R, a, b)])


def test_punctured_free(x2):
    R, x, y = x2
    assert punctured_free(ModulePresentation.from_ideal(R, [x, y]))
    assert not punctured_free(ModulePresentation.cyclic(R, [x]))
    assert punctured_free(ModulePresentation.free(R, 1))


def test_nonfield_locus(x2, dual_numbers):
    R, x, y = x2
    P = PrimePoset(R, {"p": [x], "m": [x, y]})
    assert SpecClosedSet(R, [nonfield_locus(R)]).points(P) == ["p", "m"]
    R1, t = dual_numbers
    assert nonfield_locus(R1) == ClosedSet(R1, [t])


def test_poset_order(x2yz):
    R, a, b, c = x2yz
    P = PrimePoset(R, {"p": [a, b], "q": [a, c], "m": [a, b, c]})
    assert P.leq("p", "m") and P.leq("q", "m") and not P.leq("p", "q")
    assert P.upward_closed({"p", "m"}) and not P.upward_closed({"p"})
    with pytest.raises(ValueError):
        PrimePoset(R, {"u": [R.ambient.one()]})


# -- support algebra suite -----------------------------------------------------------

@pytest.mark.parametrize("ring", ["x2", "xy"])
def test_support_algebra(ring, request):
    R = request.getfixturevalue(ring)[0]
    mods = corpus_modules(R)
    names = list(mods)
    for a in names:
        Va = nonfree_locus(mods[a])
        # emptiness iff freeness
        assert Va.is_empty() == mods[a].minimalize().is_free(), a
        # syzygy monotonicity
        assert nonfree_locus(syzygy(mods[a], 1)) <= Va, a
        for b in names:
            Vb = nonfree_locus(mods[b])
            lhs = SpecClosedSet(R, [nonfree_locus(mods[a] + mods[b])])
            assert lhs == SpecClosedSet(R, [Va, Vb]), (a, b)


@pytest.mark.parametrize("ring", ["x2", "xy"])
def test_cyclic_agreement_all(ring, request):
    R, x, y = request.getfixturevalue(ring)
    for gens in ([x], [y], [x, y], [x, y**2], [x + y], [x**2, y**3], [y**2]):
        assert nonfree_locus_cyclic(R, gens) == nonfree_locus(ModulePresentation.cyclic(R, gens)), gens


def test_two_values_over_x2(x2):
    R, x, y = x2
    allowed = [SpecClosedSet.empty(R), SpecClosedSet(R, [v(R, x, y)]), SpecClosedSet(R, [v(R, x)])]
    for M in corpus_modules(R).values():
        V = SpecClosedSet(R, [nonfree_locus(M)])
        assert any(V == A for A in allowed)


def test_sing_realization(x2, x2yz):
    for R, primes in ((x2[0], {"p": ["x"], "m": ["x", "y"]}),
                      (x2yz[0], {"p": ["x", "y"], "q": ["x", "z"], "m": ["x", "y", "z"]})):
        S = R.ambient
        comps = []
        for gens in primes.values():
            M = ModulePresentation.cyclic(R, [S.var(g) for g in gens])
            comps.append(nonfree_locus(syzygy(M, R.dimension)))
        assert SpecClosedSet(R, comps) == SpecClosedSet(R, [singular_locus(R)])
