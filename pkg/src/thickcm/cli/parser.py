"""Tokenizer and recursive-descent parser for session scripts."""
import re

from .syntax import (Bin, CategoryDecl, Command, IdealSet, ModuleDecl, Neg, Num, Parts,
                     PosetDecl, Pow, RingDecl, SessionScript, Var)


class ScriptError(Exception):
    def __init__(self, message, pos=None, statement=None):
        self.message = message
        self.pos = pos
        self.statement = statement
        where = f"line {pos[0]}, col {pos[1]}: " if pos else ""
        super().__init__(where + message)


TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[()\[\]{},;=/+\-*^])
""", re.VERBOSE)


def tokenize(text):
    out = []
    line, col, i = 1, 1, 0
    while i < len(text):
        m = TOKEN.match(text, i)
        if not m:
            raise ScriptError(f"unexpected character {text[i]!r}", (line, col))
        kind = m.lastgroup
        val = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                out.append((kind, val, (line, col)))
            col += len(val)
        i = m.end()
    out.append(("eof", "", (line, col)))
    return out


MODULE_KINDS = ("ideal", "quotient", "coker", "residue", "free", "sum")
CATEGORY_KINDS = ("res", "thick_cm", "thick_stable", "add", "ext", "zero", "empty")

# M module, N any module, C category, P poset, i int, i? optional int,
# S ideal set, B parts, W closure word, w? optional word
COMMANDS = {
    "resolve": "Mi", "betti": "Mi?", "syzygy": "Mi", "transpose": "M", "ext": "MMi",
    "tor": "MMi", "hom": "MM", "stablehom": "MM", "suspension": "M", "pdfinite": "M",
    "depth": "M", "locus": "M", "sing": "", "classify": "", "member": "CM",
    "inverse": "SM", "roundtrip": "SP", "enumerate": "P", "ar": "ii", "closure": "iBW",
    "rigidity": "MM", "splitcheck": "Mi?", "corpus": "w?",
}


class Parser:
    def __init__(self, text, session=None):
        self.toks = tokenize(text)
        self.i = 0
        self.session = session

    # -- token helpers -------------------------------------------------------------
    @property
    def tok(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, val):
        return self.tok[1] == val and self.tok[0] in ("punct", "ident")

    def expect(self, val):
        if not self.at(val):
            self.error(f"expected {val!r}")
        return self.advance()

    def ident(self, what="name"):
        if self.tok[0] != "ident":
            self.error(f"expected {what}")
        return self.advance()

    def number(self):
        if self.tok[0] != "num":
            self.error("expected integer")
        return int(self.advance()[1])

    def error(self, msg):
        kind, val, pos = self.tok
        found = "end of input" if kind == "eof" else repr(val)
        raise ScriptError(f"{msg}, found {found}", pos)

    # -- expressions -----------------------------------------------------------------
    def expr(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            op, pos = self.advance()[1], self.tok[2]
            left = Bin(op, left, self.term(), pos)
        return left

    def term(self):
        left = self.unary()
        while self.at("*") or self.at("/"):
            op, pos = self.advance()[1], self.tok[2]
            left = Bin(op, left, self.unary(), pos)
        return left

    def unary(self):
        if self.at("-"):
            pos = self.advance()[2]
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            pos = self.advance()[2]
            return Pow(base, self.number(), pos)
        return base

    def atom(self):
        kind, val, pos = self.tok
        if kind == "num":
            self.advance()
            return Num(int(val), pos)
        if kind == "ident":
            self.advance()
            return Var(val, pos)
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        self.error("expected expression")

    def expr_list(self, close):
        out = []
        if self.at(close):
            return out
        out.append(self.expr())
        while self.at(","):
            self.advance()
            out.append(self.expr())
        return out

    def name_list(self, close):
        out = []
        if self.at(close):
            return out
        out.append(self.ident()[1])
        while self.at(","):
            self.advance()
            out.append(self.ident()[1])
        return out

    # -- statements ----------------------------------------------------------------
    def script(self):
        s = SessionScript()
        while self.tok[0] != "eof":
            stmt = self.statement()
            if self.session is not None:
                self.session.check(stmt)
            s.statements.append(stmt)
        return s

    def statement(self):
        kind, val, pos = self.tok
        if kind != "ident":
            self.error("expected declaration or command")
        handler = {"ring": self.ring_decl, "module": self.module_decl,
                   "category": self.category_decl, "poset": self.poset_decl}.get(val)
        if handler:
            self.advance()
            stmt = handler(pos)
        elif val in COMMANDS:
            self.advance()
            stmt = self.command(val, pos)
        else:
            raise ScriptError(f"unknown command {val!r}", pos)
        self.expect(";")
        return stmt

    def ring_decl(self, pos):
        name = self.ident("ring name")[1]
        self.expect("=")
        self.expect("poly")
        self.expect("(")
        fld = self.ident("field")[1]
        self.expect(",")
        self.expect("[")
        variables = self.name_list("]")
        self.expect("]")
        self.expect(")")
        rels = []
        if self.at("/"):
            self.advance()
            self.expect("(")
            rels = self.expr_list(")")
            self.expect(")")
        flag = False
        if self.at("locally_hypersurface"):
            self.advance()
            flag = True
        return RingDecl(name, fld, variables, rels, flag, pos)

    def module_decl(self, pos):
        name = self.ident("module name")[1]
        self.expect("=")
        kpos = self.tok[2]
        kind = self.ident("module constructor")[1]
        if kind not in MODULE_KINDS:
            raise ScriptError(f"unknown module constructor {kind!r}", kpos)
        self.expect("(")
        if kind in ("ideal", "quotient"):
            args = self.expr_list(")")
        elif kind == "coker":
            self.expect("[")
            args = []
            while True:
                self.expect("[")
                args.append(self.expr_list("]"))
                self.expect("]")
                if not self.at(","):
                    break
                self.advance()
            self.expect("]")
        elif kind == "free":
            args = [self.number()]
        elif kind == "sum":
            args = self.name_list(")")
        else:
            args = []
        self.expect(")")
        return ModuleDecl(name, kind, args, pos)

    def category_decl(self, pos):
        name = self.ident("category name")[1]
        self.expect("=")
        kpos = self.tok[2]
        kind = self.ident("closure kind")[1]
        if kind not in CATEGORY_KINDS:
            raise ScriptError(f"unknown closure kind {kind!r}", kpos)
        self.expect("(")
        names = self.name_list(")")
        self.expect(")")
        omega = "omega_k" in names
        return CategoryDecl(name, kind, [n for n in names if n != "omega_k"], omega, pos)

    def poset_decl(self, pos):
        name = self.ident("poset name")[1]
        self.expect("=")
        self.expect("primes")
        self.expect("(")
        primes = []
        while not self.at(")"):
            if self.tok[0] == "ident":
                pname = self.advance()[1]
                self.expect("=")
            else:
                pname = f"p{len(primes) + 1}"
            self.expect("(")
            primes.append((pname, self.expr_list(")")))
            self.expect(")")
            if not self.at(","):
                break
            self.advance()
        self.expect(")")
        return PosetDecl(name, primes, pos)

    def ideal_set(self):
        self.expect("(")
        ideals = []
        if not self.at(")"):
            while True:
                ideals.append(self.expr_list(";") if not self.at(")") else [])
                if not self.at(";"):
                    break
                self.advance()
        self.expect(")")
        return IdealSet(ideals)

    def parts(self):
        self.expect("{")
        vals = []
        while not self.at("}"):
            vals.append(self.number())
            if not self.at(","):
                break
            self.advance()
        self.expect("}")
        return Parts(vals)

    def command(self, name, pos):
        args = []
        sig = COMMANDS[name]
        k = 0
        while k < len(sig):
            code = sig[k]
            optional = k + 1 < len(sig) and sig[k + 1] == "?"
            k += 2 if optional else 1
            if optional and self.at(";"):
                continue
            if code in "MNCP":
                args.append(self.ident("name")[1])
            elif code == "i":
                args.append(self.number())
            elif code == "S":
                args.append(self.ideal_set())
            elif code == "B":
                args.append(self.parts())
            elif code == "W":
                wpos = self.tok[2]
                w = self.ident("closure kind")[1]
                if w not in ("res", "ext"):
                    raise ScriptError(f"closure kind must be res or ext, not {w!r}", wpos)
                args.append(w)
            elif code == "w":
                args.append(self.ident("filter")[1])
        return Command(name, args, pos)


def parse(text, field=None, check=True):
    """Parse (and by default type-check) a script.

    ``field`` overrides the declared coefficient field.
    """
    session = None
    if check:
        from .session import Session
        session = Session(field)
    return Parser(text, session).script()
