"""Parser and evaluator for interval expressions.

Grammar (``*`` binds tighter than ``+``/``-``, both left associative)::

    expr    := term (("+" | "-" | "∖") term)*
    term    := unary (("*" | "•") unary)*
    unary   := "-" unary | NUMBER atom | atom
    atom    := "[" num "," num "]" | "dual" "[" num "," num "]"
             | "(" num "," num ")" | "(" expr ")" | NUMBER

``*`` is the product through A4, ``-`` is subtraction in the completed group,
unary minus is the group inverse and a number written directly before an atom
is the scalar action (``2 [1,3]`` is ``(2,6)``; ``-2 [1,3]`` is ``dual[2,6]``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import GElement, Interval, g_add, g_from_negative, g_from_proper, g_neg, g_scale, g_sub
from .embed import bullet
from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)|(?P<dual>dual)|(?P<op>[\[\](),+\-*•∖]))"
)


@dataclass(frozen=True)
class Token:
    kind: str   # "num", "dual", an operator character, or "end"
    text: str
    pos: int


def tokenize(s: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            bad = pos + len(s[pos:]) - len(s[pos:].lstrip())
            raise ParseError(f"unexpected character {s[bad]!r}", bad)
        kind = m.lastgroup
        text = m.group(kind)
        start = m.start(kind)
        tokens.append(Token(text if kind == "op" else kind, text, start))
        pos = m.end()
    tokens.append(Token("end", "", len(s)))
    return tokens


class _Parser:
    def __init__(self, s: str):
        self.tokens = tokenize(s)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self, kind: str) -> Token:
        t = self.tok
        if t.kind != kind:
            what = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {kind!r}, found {what}", t.pos)
        self.i += 1
        return t

    def signed_number(self) -> float:
        sign = 1.0
        while self.tok.kind in ("+", "-"):
            if self.take(self.tok.kind).text == "-":
                sign = -sign
        return sign * float(self.take("num").text)

    def bracket(self) -> Interval:
        self.take("[")
        lo = self.signed_number()
        self.take(",")
        hi = self.signed_number()
        self.take("]")
        return Interval(lo, hi)

    def _raw_pair_ahead(self) -> bool:
        k = 1
        while self.peek(k).kind in ("+", "-"):
            k += 1
        return self.peek(k).kind == "num" and self.peek(k + 1).kind == ","

    def atom(self) -> GElement:
        t = self.tok
        if t.kind == "[":
            return g_from_proper(self.bracket())
        if t.kind == "dual":
            self.take("dual")
            return g_from_negative(self.bracket())
        if t.kind == "(":
            if self._raw_pair_ahead():
                self.take("(")
                p = self.signed_number()
                self.take(",")
                q = self.signed_number()
                self.take(")")
                return GElement(p, q)
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if t.kind == "num":
            return GElement.point(float(self.take("num").text))
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected an operand, found {what}", t.pos)

    def unary(self) -> GElement:
        if self.tok.kind == "-":
            self.take("-")
            return g_neg(self.unary())
        if self.tok.kind == "num" and self.peek().kind in ("[", "dual", "("):
            alpha = float(self.take("num").text)
            return g_scale(alpha, self.atom())
        return self.atom()

    def term(self) -> GElement:
        value = self.unary()
        while self.tok.kind in ("*", "•"):
            self.i += 1
            value = bullet(value, self.unary())
        return value

    def expr(self) -> GElement:
        value = self.term()
        while self.tok.kind in ("+", "-", "∖"):
            op = self.tok.kind
            self.i += 1
            rhs = self.term()
            value = g_add(value, rhs) if op == "+" else g_sub(value, rhs)
        return value

    def finish(self, value: GElement) -> GElement:
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value


def eval_expr(s: str) -> GElement:
    p = _Parser(s)
    return p.finish(p.expr())


def parse_gelement(s: str) -> GElement:
    """A single literal: ``[a,b]``, ``dual[a,b]``, ``(p,q)`` or a signed number."""
    p = _Parser(s)
    if p.tok.kind in ("+", "-"):
        return p.finish(GElement.point(p.signed_number()))
    if p.tok.kind == "(" and not p._raw_pair_ahead():
        raise ParseError("expected a literal, found a parenthesized expression", p.tok.pos)
    return p.finish(p.atom())
