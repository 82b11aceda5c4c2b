from itertools import combinations, product

from hypothesis import given, settings, strategies as st

from thickcm.algebra import (NEG_INF, Field, FreeSubmodule, Ideal, PolynomialRing, groebner_basis,
                             ideal_quotient, intersection, krull_dimension, normal_form,
                             radical_contains, syzygies)
from thickcm.algebra.groebner import check_buchberger

Q = Field(0)
F5 = Field(5)


def test_monomial_ideal_is_own_basis():
    S = PolynomialRing("x y", F5)
    x, y = S.gens()
    assert set(groebner_basis(Ideal(S, [x**2, x * y]))) == {x**2, x * y}


def test_hand_computed_basis():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    I = Ideal(S, [x**2 - y, x * y - 1])
    G = groebner_basis(I)
    # by hand: S(x^2-y, xy-1) = -y^2 + x  ->  y^2 - x, and everything else reduces to 0
    assert set(G) == {x**2 - y, x * y - 1, y**2 - x}
    assert check_buchberger(I.gb_dicts(), 0)


def test_empty_basis():
    S = PolynomialRing("x y", Q)
    assert groebner_basis(Ideal(S, [])) == []


def test_normal_forms():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    assert normal_form(x**3, Ideal(S, [x**2])).is_zero()
    assert normal_form(x + y, Ideal(S, [x**2])) == x + y
    assert normal_form(x**2 * y + y, Ideal(S, [x**2 - y])) == y**2 + y


def test_syzygies_examples():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    Z = syzygies(Ideal(S, [x, y]))
    assert len(Z.gens) == 1
    a, b = Z.gens[0]
    assert a * x + b * y == S.zero() and {a, b} in ({y, -x}, {-y, x})
    assert syzygies(Ideal(S, [x**2])).gens == ()
    T = PolynomialRing("x", Q)
    (t,) = T.gens()
    assert syzygies(FreeSubmodule(T, 2, [[t, 0], [0, t]])).gens == ()


def test_koszul_completeness():
    # syzygies of (x, y, z) are generated by the three Koszul relations
    S = PolynomialRing("x y z", Q)
    x, y, z = S.gens()
    Z = syzygies(Ideal(S, [x, y, z]))
    koszul = FreeSubmodule(S, 3, [[y, -x, 0], [z, 0, -x], [0, z, -y]])
    for v in Z.gens:
        assert koszul.contains(v)
    for v in koszul.gens:
        assert Z.contains(v)


def test_quotients():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    assert ideal_quotient(Ideal(S, [x**2]), Ideal(S, [x])) == Ideal(S, [x])
    I = Ideal(S, [x**2, x * y])
    assert ideal_quotient(I, Ideal(S, [S.one()])) == I
    # (0 : x) in Q[x,y]/(x^2) via the ambient ring
    assert ideal_quotient(Ideal(S, [x**2]), Ideal(S, [x])) == Ideal(S, [x])
    assert intersection(Ideal(S, [x]), Ideal(S, [y])) == Ideal(S, [x * y])


def test_radical_membership():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    assert radical_contains(Ideal(S, [x**2]), x)
    assert not radical_contains(Ideal(S, [x**2]), y)
    # x^3 = x(x^2 + y^2) - y(xy)
    assert radical_contains(Ideal(S, [x**2 + y**2, x * y]), x)


def test_krull_dimension_examples():
    S = PolynomialRing("x y", Q)
    x, y = S.gens()
    assert krull_dimension(Ideal(S, [x])) == 1
    T = PolynomialRing("x y z", Q)
    a, b, c = T.gens()
    assert krull_dimension(Ideal(T, [a**2, b * c])) == 1
    assert krull_dimension(Ideal(S, [S.one()])) == NEG_INF


# -- properties ------------------------------------------------------------------------

def poly_strategy(nvars, max_terms=3, max_exp=2):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * nvars), st.integers(1, 4))
    return st.lists(term, min_size=1, max_size=max_terms)


def to_poly(S, terms):
    f = S.zero()
    for exps, c in terms:
        f = f + S.monomial(exps, c)
    return f


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_strategy(3), min_size=1, max_size=3))
def test_buchberger_fixpoint_and_span(specs):
    S = PolynomialRing("x y z", F5)
    gens = [to_poly(S, s) for s in specs]
    I = Ideal(S, gens)
    assert check_buchberger(I.gb_dicts(), 5)
    for g in gens:
        assert I.contains(g)
    # idempotent: the basis of the basis is the basis
    assert groebner_basis(Ideal(S, groebner_basis(I))) == groebner_basis(I)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_strategy(2), min_size=1, max_size=3), poly_strategy(2), poly_strategy(2))
def test_normal_form_linear_and_idempotent(specs, fa, fb):
    S = PolynomialRing("x y", F5)
    I = Ideal(S, [to_poly(S, s) for s in specs])
    f, g = to_poly(S, fa), to_poly(S, fb)
    nf = I.normal_form
    assert nf(f + 3 * g) == nf(f) + 3 * nf(g)
    assert nf(nf(f)) == nf(f)
    assert I.contains(f - nf(f))
    leads = [h.leading_monomial() for h in groebner_basis(I)]
    for m, _ in nf(f).items():
        assert not any(all(a <= b for a, b in zip(l, m)) for l in leads)


@settings(max_examples=30, deadline=None)
@given(st.lists(poly_strategy(2), min_size=1, max_size=3))
def test_syzygies_sound(specs):
    S = PolynomialRing("x y", F5)
    gens = [to_poly(S, s) for s in specs]
    for v in syzygies(Ideal(S, gens)).gens:
        total = S.zero()
        for c, g in zip(v, gens):
            total = total + c * g
        assert total.is_zero()


monomial_ideal = st.lists(st.tuples(*[st.integers(0, 3)] * 4), min_size=1, max_size=4)


def brute_dim(gens, n):
    # largest coordinate subspace (set of free variables) avoiding every generator
    best = NEG_INF
    for r in range(n + 1):
        for free in combinations(range(n), r):
            if all(any(e[i] > 0 for i in range(n) if i not in free) for e in gens):
                best = max(best, r)
    return best


@settings(max_examples=60, deadline=None)
@given(monomial_ideal)
def test_krull_dim_monomial_brute_force(exps):
    S = PolynomialRing("a b c d", F5)
    gens = [S.monomial(e) for e in exps]
    assert krull_dimension(Ideal(S, gens)) == brute_dim(exps, 4)


@settings(max_examples=50, deadline=None)
@given(monomial_ideal, st.tuples(*[st.integers(0, 2)] * 4))
def test_radical_vs_powers_monomial(exps, fexp):
    S = PolynomialRing("a b c d", F5)
    I = Ideal(S, [S.monomial(e) for e in exps])
    f = S.monomial(fexp)
    by_power = any(I.contains(f**N) for N in range(1, 5))
    assert radical_contains(I, f) == by_power


def test_unit_contents():
    S = PolynomialRing("x y", F5)
    x, _ = S.gens()
    assert Ideal(S, [x + 1, x]).is_unit()
    for a, b in product(range(3), repeat=2):
        assert Ideal(S, [S.monomial((a, b)) + 0]).contains(S.monomial((a + 1, b)))


# -- independent oracle: sympy's reduced Groebner bases ------------------------------

sympy = __import__("pytest").importorskip("sympy")


def to_sympy(f, syms):
    expr = 0
    for exps, c in f.items():
        term = sympy.Integer(int(c)) if not hasattr(c, "numerator") else sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.expand(expr)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_strategy(3), min_size=1, max_size=3), st.sampled_from([0, 5, 7]))
def test_reduced_basis_matches_sympy(specs, p):
    S = PolynomialRing("x y z", Field(p))
    syms = sympy.symbols("x y z")
    gens = [to_poly(S, s) for s in specs]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    ours = groebner_basis(Ideal(S, gens))
    opts = {"modulus": p} if p else {}
    ref = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order="grevlex", **opts)
    ours_poly = sorted(str(sympy.Poly(to_sympy(g, syms), *syms, **opts).monic().as_expr()) for g in ours)
    ref_poly = sorted(str(sympy.Poly(g, *syms, **opts).monic().as_expr()) for g in ref.exprs)
    assert ours_poly == ref_poly
