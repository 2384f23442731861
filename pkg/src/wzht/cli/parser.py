"""Expression syntax for rational functions and terms.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' exponent)?
    exponent := integer | '(' '-' integer ')'
    atom   := integer | var | Name '(' args ')' | '(' expr ')'
    var    := 't' digits | 'k' digits | 'z'

Term constructors: Exp(g), Pow(g, gamma), Geo(h1, ..., hn),
RisingStar(alpha, L), RisingStarInv(beta, L) with L an integer linear form
in k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InputError


class ExprSyntaxError(InputError):
    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class ArityError(InputError):
    pass


CONSTRUCTORS = {
    "Exp": (1, 1),
    "Pow": (2, 2),
    "Geo": (1, None),
    "RisingStar": (2, 2),
    "RisingStarInv": (2, 2),
}


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    kind: str  # "t", "k" or "z"
    index: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class PowNode:
    base: object
    exp: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# -- tokenizer ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(src: str):
    out = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        ws = m.group(0)[: len(m.group(0)) - len(m.group(0).lstrip())]
        for i, ch in enumerate(ws):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        start = pos + len(ws)
        pos = m.end()
        if start == pos:
            break
        col = start - line_start + 1
        if m.group(1):
            out.append(("int", m.group(1), line, col))
        elif m.group(2):
            out.append(("name", m.group(2), line, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
            out.append((ch, ch, line, col))
    out.append(("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {what}", tok[2], tok[3])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2], tok[3])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            node = PowNode(node, self.exponent())
        return node

    def exponent(self):
        tok = self.peek()
        if tok[0] == "int":
            return int(self.take()[1])
        if tok[0] == "(":
            self.take()
            self.take("-")
            e = -int(self.take("int")[1])
            self.take(")")
            return e
        raise ExprSyntaxError(
            "exponent must be an integer; write negative exponents as ^(-n)", tok[2], tok[3]
        )

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(int(tok[1]))
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok[0] == "name":
            self.take()
            name = tok[1]
            m = re.fullmatch(r"([tk])(\d+)", name)
            if m:
                idx = int(m.group(2))
                if idx < 1:
                    raise ExprSyntaxError(f"variable index must be positive in {name}", tok[2], tok[3])
                return Var(m.group(1), idx)
            if name == "z":
                return Var("z", 0)
            if name in CONSTRUCTORS:
                self.take("(")
                args = [self.expr()]
                while self.peek()[0] == ",":
                    self.take()
                    args.append(self.expr())
                self.take(")")
                lo, hi = CONSTRUCTORS[name]
                if len(args) < lo or (hi is not None and len(args) > hi):
                    raise ArityError(f"{name} takes {lo if lo == hi else f'at least {lo}'} arguments, got {len(args)}")
                return Call(name, tuple(args))
            raise ExprSyntaxError(f"unknown name {name!r}", tok[2], tok[3])
        what = "end of input" if tok[0] == "eof" else repr(tok[1])
        raise ExprSyntaxError(f"unexpected {what}", tok[2], tok[3])


def parse(src: str):
    return _Parser(src).parse()


# -- canonical printer ----------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return "z" if node.kind == "z" else f"{node.kind}{node.index}"
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(to_text(a) for a in node.args) + ")"
    if isinstance(node, PowNode):
        base = to_text(node.base)
        if not isinstance(node.base, (Num, Var, Call)):
            base = f"({base})"
        e = str(node.exp) if node.exp >= 0 else f"(-{-node.exp})"
        return f"{base}^{e}"
    if isinstance(node, Neg):
        inner = to_text(node.arg)
        if isinstance(node.arg, BinOp):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = to_text(node.left)
        if isinstance(node.left, BinOp) and _PREC[node.left.op] < p:
            left = f"({left})"
        right = to_text(node.right)
        if isinstance(node.right, BinOp) and _PREC[node.right.op] <= p:
            right = f"({right})"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


def max_indices(node) -> tuple[int, int]:
    """Largest t- and k-index used in the expression."""
    if isinstance(node, Var):
        return (node.index, 0) if node.kind == "t" else (0, node.index) if node.kind == "k" else (0, 0)
    kids = ()
    if isinstance(node, (Neg,)):
        kids = (node.arg,)
    elif isinstance(node, BinOp):
        kids = (node.left, node.right)
    elif isinstance(node, PowNode):
        kids = (node.base,)
    elif isinstance(node, Call):
        kids = node.args
    m = n = 0
    for kid in kids:
        a, b = max_indices(kid)
        m, n = max(m, a), max(n, b)
    return m, n
