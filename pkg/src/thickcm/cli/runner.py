"""Command execution and JSON certificates."""
import json

from .. import __version__
from ..algebra import NEG_INF
from ..algebra.poly import format_dict
from ..artinian import ArtinianModule, ar_sequence, artinian_closure
from ..classification import (enumerate_spec_closed, inverse_image, member, rigidity,
                              round_trip_check)
from ..homology import (admissible_element, ext, hom, pd_finite, splitting_betti,
                        stable_hom_dim, stable_hom_direct, suspension, syzygy, tor, transpose)
from ..loci import ClosedSet, SpecClosedSet, nonfree_locus, singular_locus
from ..modules import betti_period, depth, minimalize, resolve
from ..rings import classify_ring
from .parser import ScriptError, parse
from .session import Session
from .syntax import Command

SCHEMA = 1


def module_summary(M):
    P = minimalize(M)
    return {"rank": P.rank, "degrees": list(P.degrees), "relations": P.matrix_strings()}


def ideal_strings(ideal):
    return sorted(format_dict(g, ideal.ring) for g in ideal.gb_dicts())


def homology_summary(H):
    L = H.length()
    return {
        "module": H.describe(),
        "length": L,
        "zero": H.is_zero(),
        "annihilator": ideal_strings(H.annihilator()),
        "presentation": module_summary(H.module),
    }


def closed_summary(V, poset=None):
    if isinstance(V, ClosedSet):
        V = SpecClosedSet(V.ring, [] if V.is_empty() else [V])
    out = {"components": V.describe(), "empty": V.is_empty()}
    if poset is not None:
        out["points"] = V.points(poset)
    return out


class Runner:
    def __init__(self, field=None, seed=0):
        self.field = field
        self.seed = seed
        self.session = None

    def run_text(self, text):
        script = parse(text, self.field)
        return self.run(script)

    def run(self, script):
        self.session = Session(self.field)
        certs = []
        for stmt in script.statements:
            if not isinstance(stmt, Command):
                self.session.check(stmt)
                continue
            self.session.check(stmt)
            certs.append(self.execute(stmt))
        return certs

    def base(self, cmd):
        R = self.session.ring
        return {
            "schema": SCHEMA,
            "version": __version__,
            "command": cmd.format(),
            "line": cmd.pos[0] if cmd.pos else None,
            "ring": R.fingerprint() if R is not None else None,
        }

    def execute(self, cmd):
        cert = self.base(cmd)
        try:
            inputs, result = getattr(self, "do_" + cmd.name)(*cmd.args)
            cert["inputs"] = inputs
            cert["result"] = result
            cert["error"] = None
        except (ValueError, ArithmeticError, ScriptError) as err:
            cert["inputs"] = {}
            cert["result"] = None
            pos = f"line {cmd.pos[0]}, col {cmd.pos[1]}: " if cmd.pos else ""
            cert["error"] = f"{pos}{cmd.name}: {err}"
        return cert

    # -- lookup helpers ---------------------------------------------------------------
    def mod(self, name):
        return self.session.modules[name]

    def mod_input(self, *names):
        return {n: module_summary(self.mod(n)) for n in names}

    def last_poset(self):
        return next(reversed(self.session.posets.values()), None)

    def spec_set(self, s):
        R = self.session.ring
        return SpecClosedSet(R, [ClosedSet(R, g) for g in self.session.ideal_set(s)])

    # -- commands ------------------------------------------------------------------------
    def do_resolve(self, M, n):
        r = resolve(self.mod(M), n)
        diffs = [[[str(f) for f in row] for row in r.matrix(i)]
                 for i in range(1, min(n, r.length) + 1)]
        return self.mod_input(M), {"betti": r.betti.as_dict(), "complete": r.complete,
                                   "length": r.length, "differentials": diffs}

    def do_betti(self, M, n=8):
        r = resolve(self.mod(M), n)
        ranks = [r.rank(i) for i in range(n + 1)]
        period = betti_period(ranks)
        return self.mod_input(M), {"betti": r.betti.as_dict(), "ranks": ranks,
                                   "period": list(period) if period else None}

    def do_syzygy(self, M, n):
        return self.mod_input(M), {"module": module_summary(syzygy(self.mod(M), n))}

    def do_transpose(self, M):
        return self.mod_input(M), {"module": module_summary(transpose(self.mod(M)))}

    def do_suspension(self, M):
        return self.mod_input(M), {"module": module_summary(suspension(self.mod(M)))}

    def do_ext(self, M, N, i):
        return self.mod_input(M, N), homology_summary(ext(self.mod(M), self.mod(N), i))

    def do_tor(self, M, N, i):
        return self.mod_input(M, N), homology_summary(tor(self.mod(M), self.mod(N), i))

    def do_hom(self, M, N):
        return self.mod_input(M, N), homology_summary(hom(self.mod(M), self.mod(N)))

    def do_stablehom(self, M, N):
        a, b = self.mod(M), self.mod(N)
        d = stable_hom_dim(a, b)
        from ..modules import length
        direct = length(stable_hom_direct(a, b))
        return self.mod_input(M, N), {"dim": d, "direct_dim": direct, "agree": d == direct}

    def do_pdfinite(self, M):
        return self.mod_input(M), {"pd_finite": pd_finite(self.mod(M))}

    def do_depth(self, M):
        return self.mod_input(M), {"depth": depth(self.mod(M)), "dimension": self.session.ring.dimension}

    def do_locus(self, M):
        V = nonfree_locus(self.mod(M))
        dim = V.dimension
        return self.mod_input(M), {**closed_summary(V, self.last_poset()),
                                   "dimension": None if dim == NEG_INF else dim}

    def do_sing(self):
        V = singular_locus(self.session.ring)
        return {}, closed_summary(V, self.last_poset())

    def do_classify(self):
        f = classify_ring(self.session.ring)
        return {}, {k: getattr(f, k) for k in
                    ("dimension", "regular", "hypersurface", "complete_intersection",
                     "cohen_macaulay", "gorenstein")}

    def do_member(self, C, M):
        cat = self.session.categories[C]
        cert = member(cat, self.mod(M))
        out = cert.as_dict()
        P = self.last_poset()
        if P is not None:
            mv = cert.module_support
            out["module_points"] = closed_summary(mv, P)["points"]
            out["category_points"] = cert.category_support.points(P)
        return {"category": C, "kind": cat.kind.value, "generators": [g.label for g in cat.generators],
                "module": M}, out

    def do_inverse(self, S, M):
        phi = self.spec_set(S)
        return {"phi": phi.describe(), "module": M}, {"verdict": inverse_image(phi, self.mod(M))}

    def do_roundtrip(self, S, P):
        phi = self.spec_set(S)
        rep = round_trip_check(phi, self.session.posets[P])
        return {"phi": phi.describe(), "poset": P}, {
            "primes": rep.primes,
            "generators": [g.label for g in rep.generators],
            "generator_checks": rep.generator_checks,
            "support": rep.support.describe(),
            "support_matches": rep.support_matches,
            "passed": rep.passed,
        }

    def do_enumerate(self, P):
        poset = self.session.posets[P]
        sing = singular_locus(self.session.ring)
        E = enumerate_spec_closed(poset, sing)
        return {"poset": P, "within": "singular locus"}, {
            "sets": [{"points": list(names), "components": V.describe()} for names, V in E.sets],
            "count": E.count,
            "nonempty_count": E.nonempty_count,
        }

    def do_ar(self, n, i):
        s = ar_sequence(n, i)
        return {"n": n, "i": i}, {
            "middle_parts": list(s.middle_parts), "outer_dim": s.outer_dim,
            "middle_dims": list(s.middle_dims), "exact": s.exact, "r_linear": s.r_linear,
            "f": s.f, "g": s.g,
        }

    def do_closure(self, n, parts, kind):
        seed = frozenset(parts.values)
        for v in seed:
            if not 1 <= v <= n:
                raise ValueError(f"part {v} outside [1, {n}]")
        closed = artinian_closure(n, seed, kind)
        return {"n": n, "seed": sorted(seed), "kind": kind}, {
            "parts": sorted(closed),
            "reading": "empty" if not closed else "add R" if closed == {n} else
            "mod R" if closed == set(range(1, n + 1)) else "other",
        }

    def do_rigidity(self, M, N):
        return self.mod_input(M, N), rigidity(self.mod(M), self.mod(N)).as_dict()

    def do_splitcheck(self, M, n=4):
        A = self.mod(M)
        x, J = admissible_element(A, seed=self.seed)
        ann = ideal_strings(J)
        if x is None:
            return self.mod_input(M), {"element": None, "annihilator": ann, "equal": None}
        left, right = splitting_betti(A, x, n)
        return self.mod_input(M), {
            "element": str(x), "annihilator": ann, "seed": self.seed,
            "left": left.as_dict(), "right": right.as_dict(), "equal": left == right,
        }

    def do_corpus(self, name=None):
        from .corpus import run_corpus
        results = run_corpus(name)
        return {"filter": name}, {
            "fixtures": [{"name": r.name, "passed": r.passed, "failures": r.failures} for r in results],
            "passed": sum(r.passed for r in results),
            "total": len(results),
        }


def summary_line(cert):
    if cert["error"]:
        return f"ERROR {cert['error']}"
    res = cert["result"]
    keys = ("verdict", "passed", "dim", "ranks", "parts", "components", "length", "depth",
            "pd_finite", "tor_verdict", "count", "equal", "exact")
    shown = {k: res[k] for k in keys if k in res}
    if not shown:
        shown = {k: v for k, v in list(res.items())[:3]}
    return f"{cert['command']}  ->  " + ", ".join(f"{k}={v}" for k, v in shown.items())


def dump(certs):
    return json.dumps(certs, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
