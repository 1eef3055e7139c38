"""Recursive-descent parser for grid-node expressions.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``/``/``; binary operators are left-associative)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INT)?
    atom   := INT | "q" | "(" expr ")"

A rational literal such as ``3/2`` is just integer division.
"""

import re
from dataclasses import dataclass

from qgoncarov.errors import ParseError
from qgoncarov.qfield import Q, as_qrat

__all__ = ["NodeExpr", "Num", "Sym", "BinOp", "Neg", "Pow", "parse_expr", "parse_node_expr", "parse_list"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\*\*|[-+*/^()]))")


class NodeExpr:
    def evaluate(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Num(NodeExpr):
    value: int

    def evaluate(self):
        return as_qrat(self.value)


@dataclass(frozen=True)
class Sym(NodeExpr):
    def evaluate(self):
        return Q


@dataclass(frozen=True)
class Neg(NodeExpr):
    arg: NodeExpr

    def evaluate(self):
        return -self.arg.evaluate()


@dataclass(frozen=True)
class Pow(NodeExpr):
    base: NodeExpr
    exp: int

    def evaluate(self):
        return self.base.evaluate() ** self.exp


@dataclass(frozen=True)
class BinOp(NodeExpr):
    op: str
    left: NodeExpr
    right: NodeExpr
    offset: int = 0

    def evaluate(self):
        a = self.left.evaluate()
        b = self.right.evaluate()
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        if b.is_zero():
            raise ParseError("division by zero", self.offset)
        return a / b


def _tokenize(s):
    toks = []
    pos = 0
    n = len(s)
    while pos < n:
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("q", None, start))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, s):
        self.toks = _tokenize(s)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def at_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            _, op, off = self.take()
            node = BinOp(op, node, self.term(), off)
        return node

    def term(self):
        node = self.unary()
        while self.at_op("*", "/"):
            _, op, off = self.take()
            node = BinOp(op, node, self.unary(), off)
        return node

    def unary(self):
        if self.at_op("-"):
            self.take()
            return Neg(self.unary())
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.take()
            kind, val, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", off)
            return Pow(base, val)
        return base

    def atom(self):
        kind, val, off = self.take()
        if kind == "int":
            return Num(val)
        if kind == "q":
            return Sym()
        if kind == "op" and val == "(":
            node = self.expr()
            kind, val, off2 = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", off2)
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", off)
        raise ParseError(f"unexpected token {val!r}", off)


def parse_expr(s):
    """Parse ``s`` into a NodeExpr tree."""
    if not s.strip():
        raise ParseError("empty expression", 0)
    p = _Parser(s)
    node = p.expr()
    kind, val, off = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", off)
    return node


def parse_node_expr(s):
    """Parse and evaluate a node expression to an exact element of Q(q)."""
    return parse_expr(s).evaluate()


def parse_list(s):
    """Split a comma-separated list of node expressions (commas inside parentheses are kept)."""
    items, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    items.append("".join(cur))
    if len(items) == 1 and not items[0].strip():
        return []
    return [parse_node_expr(x) for x in items]

