from itertools import combinations, combinations_with_replacement

import pytest

from thickcm.artinian import ArtinianModule, artinian_closure, artinian_ring
from thickcm.classification import (Kind, SubcategorySpec, UnsupportedRing, enumerate_spec_closed,
                                    inverse_image, member, rigidity, round_trip_check, support_of)
from thickcm.homology import pd_finite, syzygy
from thickcm.loci import ClosedSet, PrimePoset, SpecClosedSet, singular_locus
from thickcm.modules import ModulePresentation

from conftest import corpus_modules


def example_modules(R, x, y):
    return {
        "R": ModulePresentation.free(R, 1),
        "(x)": ModulePresentation.from_ideal(R, [x]),
        "(x,y)": ModulePresentation.from_ideal(R, [x, y]),
        "(x,y^2)": ModulePresentation.from_ideal(R, [x, y**2]),
        "(x,y^3)": ModulePresentation.from_ideal(R, [x, y**3]),
    }


def test_support_of(x2):
    R, x, y = x2
    P = PrimePoset(R, {"p": [x], "m": [x, y]})
    mods = example_modules(R, x, y)
    assert support_of(SubcategorySpec.res(R, [mods["(x,y)"]])).points(P) == ["m"]
    assert support_of(SubcategorySpec.res(R, [ModulePresentation.cyclic(R, [x])])).points(P) == ["p", "m"]
    assert support_of(SubcategorySpec.add(R, [mods["R"]])).is_empty()


def test_member_examples(x2):
    R, x, y = x2
    mods = example_modules(R, x, y)
    cat = SubcategorySpec.res(R, [mods["(x,y)"]])
    c = member(cat, mods["(x,y^2)"])
    assert c.verdict and c.cohen_macaulay and c.annihilators
    assert not member(cat, ModulePresentation.cyclic(R, [x])).verdict
    for M in mods.values():
        assert member(SubcategorySpec.res(R, [M]), M).verdict


def test_member_not_cm(x2):
    R, x, y = x2
    cat = SubcategorySpec.res(R, [ModulePresentation.cyclic(R, [x])])
    c = member(cat, ModulePresentation.residue_field(R))
    assert not c.verdict and c.reason == "not Cohen-Macaulay"


def test_member_unsupported(x2yz):
    R, a, b, c = x2yz
    M = syzygy(ModulePresentation.cyclic(R, [a, b]), 1)
    with pytest.raises(UnsupportedRing, match="unsupported ring for classification oracle"):
        member(SubcategorySpec.res(R, [M]), M)
    # with Omega^d k the locally-hypersurface mode applies
    assert member(SubcategorySpec.res(R, [M], contains_omega_dk=True), M).verdict


def test_certificate_invariant(x2):
    R, x, y = x2
    mods = example_modules(R, x, y)
    for g in mods.values():
        cat = SubcategorySpec.thick_cm(R, [g])
        for M in list(mods.values()) + [ModulePresentation.residue_field(R)]:
            c = member(cat, M)
            if c.verdict:
                assert c.cohen_macaulay
                assert SpecClosedSet(R, [c.module_support]) <= c.category_support


def test_membership_table(x2):
    R, x, y = x2
    mods = example_modules(R, x, y)
    phis = {"empty": SpecClosedSet.empty(R), "m": SpecClosedSet(R, [ClosedSet(R, [x, y])]),
            "sing": SpecClosedSet(R, [ClosedSet(R, [x])])}
    expected = {
        "empty": {"R"},
        "m": {"R", "(x,y)", "(x,y^2)", "(x,y^3)"},
        "sing": set(mods),
    }
    for key, phi in phis.items():
        got = {name for name, M in mods.items() if inverse_image(phi, M)}
        assert got == expected[key], key
    assert not inverse_image(phis["empty"], ModulePresentation.residue_field(R))


def test_inverse_image_monotone(x2):
    R, x, y = x2
    chain = [SpecClosedSet.empty(R), SpecClosedSet(R, [ClosedSet(R, [x, y])]),
             SpecClosedSet(R, [ClosedSet(R, [x])])]
    for M in corpus_modules(R).values():
        hits = [inverse_image(phi, M) for phi in chain]
        assert hits == sorted(hits)


def test_enumeration_x2(x2):
    R, x, y = x2
    P = PrimePoset(R, {"p": [x], "m": [x, y]})
    E = enumerate_spec_closed(P, singular_locus(R))
    assert [names for names, _ in E.sets] == [(), ("m",), ("p", "m")]
    assert E.count == 3 and E.nonempty_count == 2


def test_enumeration_and_round_trip_x2yz(x2yz):
    R, a, b, c = x2yz
    P = PrimePoset(R, {"p": [a, b], "q": [a, c], "m": [a, b, c]})
    E = enumerate_spec_closed(P, singular_locus(R))
    assert E.nonempty_count == 4
    for names, phi in E.sets:
        rep = round_trip_check(phi, P)
        assert rep.passed and rep.primes == list(names)


def test_round_trip_rejects_regular_points():
    from thickcm.algebra import PolynomialRing
    from thickcm.rings import QuotientRing
    from conftest import F5
    S = PolynomialRing("x y", F5)
    x, y = S.gens()
    R = QuotientRing(S, [x * y])
    P = PrimePoset(R, {"p": [x], "m": [x, y]})
    with pytest.raises(ValueError, match="contained in the singular locus"):
        round_trip_check(SpecClosedSet(R, [ClosedSet(R, [x])]), P)
    assert round_trip_check(SpecClosedSet.empty(R), P).passed


def test_round_trip_x2(x2):
    R, x, y = x2
    P = PrimePoset(R, {"p": [x], "m": [x, y]})
    rep = round_trip_check(SpecClosedSet(R, [ClosedSet(R, [x, y])]), P)
    assert rep.passed and len(rep.generators) == 1
    assert rep.generators[0].rank == 2


def test_isolated_singularity(xy):
    R, x, y = xy
    P = PrimePoset(R, {"m": [x, y]})
    E = enumerate_spec_closed(P, singular_locus(R))
    assert E.count == 2


def test_invariance_under_free_and_syzygies(x2):
    R, x, y = x2
    mods = corpus_modules(R)
    F = ModulePresentation.free(R, 1)
    for g in ("(x,y)", "R/x", "(x,y^2)"):
        X = mods[g]
        base = SubcategorySpec.res(R, [X])
        plus_free = SubcategorySpec.res(R, [X + F])
        with_syz = SubcategorySpec.res(R, [X, syzygy(X, 1)])
        for M in mods.values():
            v = member(base, M).verdict
            assert member(plus_free, M).verdict == v
            assert member(with_syz, M).verdict == v


def test_empty_zero_and_additive(x2, dual_numbers):
    R, x, y = x2
    F = ModulePresentation.free(R, 1)
    assert not member(SubcategorySpec.empty(R), F).verdict
    assert member(SubcategorySpec.zero(R), F).verdict
    assert not member(SubcategorySpec.zero(R), ModulePresentation.from_ideal(R, [x, y])).verdict
    A, t = dual_numbers
    k = ModulePresentation.residue_field(A)
    assert member(SubcategorySpec.ext(A, [k]), ModulePresentation.free(A, 1)).verdict
    assert not member(SubcategorySpec.ext(A, [ModulePresentation.free(A, 1)]), k).verdict
    assert Kind("thick_stable") is Kind.THICK_STABLE


def artinian_modules(n, max_parts=3):
    for r in range(1, max_parts + 1):
        for parts in combinations_with_replacement(range(1, n + 1), r):
            yield ArtinianModule(n, parts)


@pytest.mark.parametrize("n", [3, 4])
def test_oracle_matches_closure(n):
    R = artinian_ring(n)
    cache = {}
    for M in artinian_modules(n):
        cache[M.parts] = M.to_presentation(R)
    nonfree = range(1, n)
    for r in range(n):
        for seed in combinations(nonfree, r):
            closure = artinian_closure(n, set(seed), "res")
            gens = [ArtinianModule(n, (i,)).to_presentation(R) for i in seed]
            cat = SubcategorySpec.res(R, gens)
            for parts, P in cache.items():
                assert member(cat, P).verdict == set(parts).issubset(closure), (seed, parts)


def test_rigidity_examples(xy, x2, x2yz):
    R, x, y = xy
    A, B = ModulePresentation.cyclic(R, [x]), ModulePresentation.cyclic(R, [y])
    v = rigidity(A, B)
    assert v.tor_lengths[1] == 0 and v.tor_lengths[2] == 1
    assert v.verdict == "not eventually vanishing" and not v.pd_M_finite and not v.pd_N_finite
    assert v.tor_consistent and v.ext_consistent
    R2, x, y = x2
    N = ModulePresentation.residue_field(R2)
    v = rigidity(ModulePresentation.cyclic(R2, [y]), N)
    assert v.verdict == "eventually vanishing" and v.pd_M_finite
    assert rigidity(ModulePresentation.free(R2, 1), N).verdict == "eventually vanishing"
    with pytest.raises(ValueError, match="rigidity oracle requires a hypersurface"):
        rigidity(ModulePresentation.free(x2yz[0], 1), ModulePresentation.free(x2yz[0], 1))


@pytest.mark.parametrize("ring", ["x2", "xy"])
def test_rigidity_matches_pd(ring, request):
    R = request.getfixturevalue(ring)[0]
    mods = corpus_modules(R)
    for a, M in mods.items():
        for b, N in mods.items():
            v = rigidity(M, N)
            assert (v.verdict == "eventually vanishing") == (pd_finite(M) or pd_finite(N)), (a, b)
