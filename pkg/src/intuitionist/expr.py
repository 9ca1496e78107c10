"""Surface syntax for pseudo-continuum points.

Grammar (whitespace is insignificant)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*            # left-associative, non-commutative
    unary  := "-" unary | atom
    atom   := rational | unit | "(" expr ")"
    rational := digits ["/" digits]
    unit   := "e[" int ("," int)* "]"       # int may carry a leading "-"

The printed form of a point (``c*e[...] + ...``) parses back to the same point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .pseudocontinuum import PseudoContinuum, PseudoPoint

__all__ = ["ExprSyntaxError", "Literal", "Unit", "Neg", "BinOp", "parse_expr", "evaluate", "eval_text"]


class ExprSyntaxError(ValueError):
    def __init__(self, pos: int, message: str):
        self.pos = pos
        super().__init__(f"at position {pos}: {message}")


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Unit:
    index: tuple[int, ...]


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Literal, Unit, Neg, BinOp]

_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+(?:/\d+)?)
  | (?P<unit>e\[\s*-?\d+(?:\s*,\s*-?\d+)*\s*\])
  | (?P<op>[-+*()])
    """,
    re.VERBOSE,
)


def _lex(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if m is None:
            raise ExprSyntaxError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, value):
        kind, text, pos = self.take()
        if kind != "op" or text != value:
            raise ExprSyntaxError(pos, f"expected {value!r}")

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Node:
        kind, text, pos = self.take()
        if kind == "rat":
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ExprSyntaxError(pos, "zero denominator")
            return Literal(Fraction(int(num), int(den) if den else 1))
        if kind == "unit":
            inner = text[text.index("[") + 1 : -1]
            return Unit(tuple(int(part) for part in inner.split(",")))
        if (kind, text) == ("op", "("):
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "end":
            raise ExprSyntaxError(pos, "unexpected end of input")
        raise ExprSyntaxError(pos, f"unexpected {text!r}")


def parse_expr(text: str) -> Node:
    parser = _Parser(text)
    node = parser.expr()
    kind, tok, pos = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(pos, f"unexpected {tok!r}")
    return node


def evaluate(node: Node, space: PseudoContinuum) -> PseudoPoint:
    if isinstance(node, Literal):
        return space.embed(node.value)
    if isinstance(node, Unit):
        return space.unit(node.index)
    if isinstance(node, Neg):
        return -evaluate(node.arg, space)
    left, right = evaluate(node.left, space), evaluate(node.right, space)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def eval_text(text: str, space: PseudoContinuum) -> PseudoPoint:
    return evaluate(parse_expr(text), space)
