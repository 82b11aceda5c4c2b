"""Syntax tree of session scripts and a pretty-printer inverse to the parser."""
from dataclasses import dataclass, field


def _pos():
    return field(default=None, compare=False, repr=False)


# -- polynomial expressions ---------------------------------------------------------

@dataclass
class Num:
    value: int
    pos: tuple = _pos()


@dataclass
class Var:
    name: str
    pos: tuple = _pos()


@dataclass
class Neg:
    arg: object
    pos: tuple = _pos()


@dataclass
class Bin:
    op: str  # one of + - * /
    left: object
    right: object
    pos: tuple = _pos()


@dataclass
class Pow:
    base: object
    exp: int
    pos: tuple = _pos()


def format_expr(e):
    # every compound child is parenthesized, so printing never depends on precedence
    def child(c):
        s = format_expr(c)
        return s if isinstance(c, (Num, Var)) else f"({s})"

    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return f"-{child(e.arg)}"
    if isinstance(e, Pow):
        return f"{child(e.base)}^{e.exp}"
    if isinstance(e, Bin):
        return f"{child(e.left)} {e.op} {child(e.right)}"
    raise TypeError(e)


def _exprs(es):
    return ", ".join(format_expr(e) for e in es)


# -- declarations and commands ---------------------------------------------------------

@dataclass
class RingDecl:
    name: str
    field: str
    variables: list
    relations: list
    locally_hypersurface: bool = False
    pos: tuple = _pos()

    def format(self):
        s = f"ring {self.name} = poly({self.field}, [{', '.join(self.variables)}])"
        if self.relations:
            s += f" / ({_exprs(self.relations)})"
        if self.locally_hypersurface:
            s += " locally_hypersurface"
        return s + ";"


@dataclass
class ModuleDecl:
    name: str
    kind: str  # ideal, quotient, coker, residue, free, sum
    args: list
    pos: tuple = _pos()

    def format(self):
        if self.kind in ("ideal", "quotient"):
            body = _exprs(self.args)
        elif self.kind == "coker":
            body = "[" + ", ".join(f"[{_exprs(row)}]" for row in self.args) + "]"
        elif self.kind == "free":
            body = str(self.args[0])
        elif self.kind == "sum":
            body = ", ".join(self.args)
        else:
            body = ""
        return f"module {self.name} = {self.kind}({body});"


@dataclass
class CategoryDecl:
    name: str
    kind: str
    modules: list
    omega_k: bool = False
    pos: tuple = _pos()

    def format(self):
        items = list(self.modules) + (["omega_k"] if self.omega_k else [])
        return f"category {self.name} = {self.kind}({', '.join(items)});"


@dataclass
class PosetDecl:
    name: str
    primes: list  # (name, [expr])
    pos: tuple = _pos()

    def format(self):
        body = ", ".join(f"{n} = ({_exprs(g)})" for n, g in self.primes)
        return f"poset {self.name} = primes({body});"


@dataclass
class IdealSet:
    """``(I1; I2; ...)``: a union of closed sets, each given by generators."""

    ideals: list  # list of list of expr

    def format(self):
        return "(" + "; ".join(_exprs(g) for g in self.ideals) + ")"


@dataclass
class Parts:
    values: list

    def format(self):
        return "{" + ", ".join(str(v) for v in self.values) + "}"


@dataclass
class Command:
    name: str
    args: list  # str names/words, ints, IdealSet, Parts
    pos: tuple = _pos()

    def format(self):
        out = [self.name]
        for a in self.args:
            out.append(a.format() if hasattr(a, "format") else str(a))
        return " ".join(out) + ";"


@dataclass
class SessionScript:
    statements: list = field(default_factory=list)

    def format(self):
        return "\n".join(s.format() for s in self.statements) + ("\n" if self.statements else "")

    @property
    def commands(self):
        return [s for s in self.statements if isinstance(s, Command)]
