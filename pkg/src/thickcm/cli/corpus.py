"""Fixture scripts replaying the worked examples, with expected certificate values."""
from dataclasses import dataclass, field

X2 = """\
# k[x,y]/(x^2): CM(R) = add{R, (x), (x,y^n)}
ring R = poly(F5, [x, y]) / (x^2);
module F = free(1);
module X = ideal(x);
module M1 = ideal(x, y);
module M2 = ideal(x, y^2);
module M3 = ideal(x, y^3);
module K = residue();
poset P = primes(p = (x), m = (x, y));
category C0 = res(F);
category Cm = res(M1);
category Cpm = res(X);
sing;
enumerate P;
member Cm M2;
member Cm X;
member Cpm M3;
member C0 M1;
inverse () F;
inverse (x, y) M3;
inverse (x, y) X;
inverse (x) X;
inverse () K;
roundtrip (x, y) P;
roundtrip (x) P;
betti K 8;
splitcheck M1 4;
splitcheck M2 4;
classify;
"""

X2YZ = """\
# k[x,y,z]/(x^2, yz): four nonempty spec-closed subsets of Sing R
ring R = poly(F5, [x, y, z]) / (x^2, y*z) locally_hypersurface;
poset P = primes(p = (x, y), q = (x, z), m = (x, y, z));
module Mp = quotient(x, y);
module K = residue();
sing;
enumerate P;
roundtrip (x, y; x, z) P;
roundtrip (x, y) P;
roundtrip (x, z) P;
roundtrip (x, y, z) P;
classify;
"""

ARTINIAN = """\
# k[x]/(x^n): empty, zero, add R, mod R
ar 3 1;
ar 4 2;
ar 2 1;
closure 3 {1} ext;
closure 4 {4} ext;
closure 3 {2} res;
closure 4 {} ext;
"""

XY = """\
# rigidity over k[x,y]/(xy)
ring R = poly(F5, [x, y]) / (x*y);
module A = quotient(x);
module B = quotient(y);
module L = quotient(x + y);
tor A B 1;
tor A B 2;
rigidity A B;
rigidity L A;
rigidity L L;
poset P = primes(m = (x, y));
sing;
enumerate P;
"""

STABLE = """\
# stable Hom over k[x]/(x^2)
ring R = poly(F5, [x]) / (x^2);
module K = residue();
ext K K 1;
stablehom K K;
transpose K;
suspension K;
"""


@dataclass
class Fixture:
    name: str
    script: str
    checks: list  # (command index, dotted key path, expected)


@dataclass
class FixtureResult:
    name: str
    passed: bool
    failures: list = field(default_factory=list)


def _get(cert, path):
    cur = cert
    for key in path.split("."):
        if cur is None:
            return None
        cur = cur[int(key)] if isinstance(cur, list) else cur.get(key)
    return cur


FIXTURES = [
    Fixture("x2-example", X2, [
        (0, "result.components", [["x"]]),
        (1, "result.count", 3),
        (1, "result.sets.1.points", ["m"]),
        (2, "result.verdict", True),
        (2, "result.category_points", ["m"]),
        (3, "result.verdict", False),
        (3, "result.module_points", ["p", "m"]),
        (4, "result.verdict", True),
        (5, "result.verdict", False),
        (6, "result.verdict", True),
        (7, "result.verdict", True),
        (8, "result.verdict", False),
        (9, "result.verdict", True),
        (10, "result.verdict", False),
        (11, "result.passed", True),
        (12, "result.passed", True),
        (13, "result.ranks", [1, 2, 2, 2, 2, 2, 2, 2, 2]),
        (14, "result.equal", True),
        (15, "result.equal", True),
        (16, "result.hypersurface", True),
    ]),
    Fixture("x2-yz-example", X2YZ, [
        (0, "result.points", ["p", "q", "m"]),
        (1, "result.nonempty_count", 4),
        (2, "result.passed", True),
        (3, "result.passed", True),
        (4, "result.passed", True),
        (5, "result.passed", True),
        (6, "result.gorenstein", True),
        (6, "result.hypersurface", False),
    ]),
    Fixture("artinian", ARTINIAN, [
        (0, "result.middle_parts", [2]),
        (0, "result.exact", True),
        (1, "result.middle_parts", [1, 3]),
        (1, "result.exact", True),
        (2, "result.exact", True),
        (3, "result.parts", [1, 2, 3]),
        (4, "result.parts", [4]),
        (5, "result.parts", [1, 2, 3]),
        (6, "result.parts", []),
    ]),
    Fixture("xy-rigidity", XY, [
        (0, "result.length", 0),
        (1, "result.length", 1),
        (2, "result.tor_verdict", "not eventually vanishing"),
        (2, "result.pd_M_finite", False),
        (2, "result.pd_N_finite", False),
        (3, "result.tor_verdict", "eventually vanishing"),
        (3, "result.pd_M_finite", True),
        (4, "result.tor_consistent", True),
        (5, "result.points", ["m"]),
        (6, "result.count", 2),
    ]),
    Fixture("stable-hom", STABLE, [
        (0, "result.length", 1),
        (1, "result.dim", 1),
        (1, "result.agree", True),
        (2, "result.module.rank", 1),
        (3, "result.module.rank", 1),
    ]),
]


def run_fixture(fx, runner=None):
    from .runner import Runner
    runner = runner or Runner()
    certs = runner.run_text(fx.script)
    failures = []
    for cert in certs:
        if cert["error"]:
            failures.append(cert["error"])
    for idx, path, expected in fx.checks:
        got = _get(certs[idx], path) if idx < len(certs) else None
        if got != expected:
            failures.append(f"{certs[idx]['command'] if idx < len(certs) else idx}: "
                            f"{path} = {got!r}, expected {expected!r}")
    return FixtureResult(fx.name, not failures, failures)


def run_corpus(name_filter=None):
    return [run_fixture(fx) for fx in FIXTURES if not name_filter or name_filter in fx.name]
