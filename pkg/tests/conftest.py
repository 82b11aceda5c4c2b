import pytest

from thickcm.algebra import Field, PolynomialRing
from thickcm.modules import ModulePresentation
from thickcm.rings import QuotientRing

F5 = Field(5)


@pytest.fixture(scope="session")
def x2():
    """F5[x,y]/(x^2) with a few named modules."""
    S = PolynomialRing("x y", F5)
    x, y = S.gens()
    R = QuotientRing(S, [x**2])
    return R, x, y


@pytest.fixture(scope="session")
def x2yz():
    S = PolynomialRing("x y z", F5)
    x, y, z = S.gens()
    R = QuotientRing(S, [x**2, y * z], locally_hypersurface=True)
    return R, x, y, z


@pytest.fixture(scope="session")
def xy():
    S = PolynomialRing("x y", F5)
    x, y = S.gens()
    return QuotientRing(S, [x * y]), x, y


@pytest.fixture(scope="session")
def dual_numbers():
    S = PolynomialRing("x", F5)
    (x,) = S.gens()
    return QuotientRing(S, [x**2]), x


def corpus_modules(R):
    """Small graded modules used for property checks over a two-variable ring."""
    x, y = R.ambient.gens()
    return {
        "R": ModulePresentation.free(R, 1),
        "k": ModulePresentation.residue_field(R),
        "R/x": ModulePresentation.cyclic(R, [x]),
        "R/y": ModulePresentation.cyclic(R, [y]),
        "(x,y)": ModulePresentation.from_ideal(R, [x, y]),
        "(x,y^2)": ModulePresentation.from_ideal(R, [x, y**2]),
        "R/(x,y^2)": ModulePresentation.cyclic(R, [x, y**2]),
    }


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
