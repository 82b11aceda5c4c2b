"""Elaboration of parsed declarations into rings, modules, categories and posets."""

from ..algebra import Field, PolynomialRing
from ..classification import Kind, SubcategorySpec
from ..loci import PrimePoset
from ..modules import ModulePresentation
from ..rings import InhomogeneousError, QuotientRing
from .parser import COMMANDS, ScriptError
from .syntax import Bin, CategoryDecl, Command, ModuleDecl, Neg, Num, PosetDecl, Pow, RingDecl, Var


class Session:
    def __init__(self, field=None):
        self.field_override = field
        self.ring = None
        self.ring_name = None
        self.modules = {}
        self.categories = {}
        self.posets = {}

    # -- expressions -------------------------------------------------------------------
    def evaluate(self, e, S=None):
        S = S or self.ring.ambient
        if isinstance(e, Num):
            return S.const(e.value)
        if isinstance(e, Var):
            if e.name not in S.variables:
                raise ScriptError(f"undeclared name {e.name!r}", e.pos)
            return S.var(e.name)
        if isinstance(e, Neg):
            return -self.evaluate(e.arg, S)
        if isinstance(e, Pow):
            return self.evaluate(e.base, S) ** e.exp
        if isinstance(e, Bin):
            a, b = self.evaluate(e.left, S), self.evaluate(e.right, S)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            if not b.is_constant() or b.is_zero():
                raise ScriptError("division only by nonzero constants", e.pos)
            c = b.constant_term()
            inv = S.field.inv(c)
            return a * S.const(inv)
        raise TypeError(e)

    def polys(self, exprs):
        return [self.evaluate(e) for e in exprs]

    # -- declarations ----------------------------------------------------------------
    def need_ring(self, stmt):
        if self.ring is None:
            raise ScriptError("no ring declared", stmt.pos, stmt)

    def lookup(self, table, name, what, pos):
        if name not in table:
            raise ScriptError(f"undeclared {what} {name!r}", pos)
        return table[name]

    def fresh(self, name, stmt):
        if name in self.modules or name in self.categories or name in self.posets or name == self.ring_name:
            raise ScriptError(f"name {name!r} already declared", stmt.pos, stmt)

    def check(self, stmt):
        try:
            self._check(stmt)
        except ScriptError as err:
            if err.statement is None:
                err.statement = stmt
            if err.pos is None:
                err.pos = stmt.pos
                err.args = (f"line {stmt.pos[0]}, col {stmt.pos[1]}: {err.message}",)
            raise
        except (ValueError, ZeroDivisionError) as err:
            label = getattr(stmt, "name", "")
            raise ScriptError(f"{type(stmt).__name__.replace('Decl', '').lower()} {label}: {err}",
                              stmt.pos, stmt) from err

    def _check(self, stmt):
        if isinstance(stmt, RingDecl):
            if self.ring is not None:
                raise ScriptError("only one ring per script", stmt.pos, stmt)
            try:
                field = self.field_override or Field.parse(stmt.field)
            except ValueError as err:
                raise ScriptError(str(err), stmt.pos, stmt)
            if len(set(stmt.variables)) != len(stmt.variables) or not stmt.variables:
                raise ScriptError("variables must be distinct and nonempty", stmt.pos, stmt)
            S = PolynomialRing(stmt.variables, field)
            rels = [self.evaluate(e, S) for e in stmt.relations]
            self.ring = QuotientRing(S, rels, locally_hypersurface=stmt.locally_hypersurface)
            self.ring_name = stmt.name
        elif isinstance(stmt, ModuleDecl):
            self.need_ring(stmt)
            self.fresh(stmt.name, stmt)
            self.modules[stmt.name] = self.build_module(stmt)
        elif isinstance(stmt, CategoryDecl):
            self.need_ring(stmt)
            self.fresh(stmt.name, stmt)
            gens = [self.lookup(self.modules, n, "module", stmt.pos) for n in stmt.modules]
            kind = Kind(stmt.kind)
            if kind in (Kind.EMPTY, Kind.ZERO) and gens:
                raise ScriptError(f"{stmt.kind} takes no generators", stmt.pos, stmt)
            self.categories[stmt.name] = SubcategorySpec(kind, gens, self.ring,
                                                         contains_omega_dk=stmt.omega_k,
                                                         name=stmt.name)
        elif isinstance(stmt, PosetDecl):
            self.need_ring(stmt)
            self.fresh(stmt.name, stmt)
            primes = {}
            for pname, gens in stmt.primes:
                if pname in primes:
                    raise ScriptError(f"prime {pname!r} declared twice", stmt.pos, stmt)
                polys = self.polys(gens)
                for f in polys:
                    if not f.is_homogeneous():
                        raise InhomogeneousError("generator", f)
                primes[pname] = polys
            self.posets[stmt.name] = PrimePoset(self.ring, primes)
        elif isinstance(stmt, Command):
            self.check_command(stmt)

    def build_module(self, d):
        R = self.ring
        if d.kind == "ideal":
            return ModulePresentation.from_ideal(R, self.polys(d.args), label=d.name)
        if d.kind == "quotient":
            return ModulePresentation.cyclic(R, self.polys(d.args), label=d.name)
        if d.kind == "coker":
            rows = [self.polys(row) for row in d.args]
            M = ModulePresentation.from_rows(R, rows)
            M.label = d.name
            return M
        if d.kind == "residue":
            M = ModulePresentation.residue_field(R)
            M.label = d.name
            return M
        if d.kind == "free":
            M = ModulePresentation.free(R, d.args[0])
            M.label = d.name
            return M
        mods = [self.lookup(self.modules, n, "module", d.pos) for n in d.args]
        return ModulePresentation.direct_sum(mods, label=d.name)

    def check_command(self, cmd):
        sig = COMMANDS[cmd.name].replace("?", "")
        if cmd.name not in ("ar", "closure", "corpus"):
            self.need_ring(cmd)
        for code, a in zip(sig, cmd.args):
            if code in "MN":
                self.lookup(self.modules, a, "module", cmd.pos)
            elif code == "C":
                self.lookup(self.categories, a, "category", cmd.pos)
            elif code == "P":
                self.lookup(self.posets, a, "poset", cmd.pos)
            elif code == "S":
                for gens in a.ideals:
                    for f in self.polys(gens):
                        if not f.is_homogeneous():
                            raise InhomogeneousError("generator", f)

    def ideal_set(self, s):
        return [self.polys(g) for g in s.ideals]



