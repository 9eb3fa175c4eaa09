"""Concrete syntax for types: recursive-descent parser and printer.

Grammar (ASCII; the unicode operators are accepted as input aliases):

    type    := union
    union   := prod ('|' prod)*
    prod    := primary ('*' primary)*
    primary := NAME | '(' type ')'

'|' and '*' are left-associative and '*' binds tighter, so A*B*C parses as
(A*B)*C and A|B*C as A|(B*C).  NAME is [A-Za-z][A-Za-z0-9_]*.  Printing uses
minimal parentheses and round-trips through the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Name, NominalHierarchy, Pair, TagsubError, TypeExpr, Union, UnknownName


class ParseError(TagsubError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # name, star, bar, lparen, rparen, end
    text: str
    pos: int


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_PUNCT = {"*": "star", "×": "star", "|": "bar", "∪": "bar", "(": "lparen", ")": "rparen"}


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            tokens.append(_Token(_PUNCT[c], c, i))
            i += 1
            continue
        m = _NAME_RE.match(src, i)
        if m is None:
            raise ParseError(f"unexpected character {c!r}", i)
        tokens.append(_Token("name", m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], hierarchy: NominalHierarchy):
        self.tokens = tokens
        self.pos = 0
        self.hierarchy = hierarchy

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def union(self) -> TypeExpr:
        t = self.prod()
        while self.peek().kind == "bar":
            self.take()
            t = Union(t, self.prod())
        return t

    def prod(self) -> TypeExpr:
        t = self.primary()
        while self.peek().kind == "star":
            self.take()
            t = Pair(t, self.primary())
        return t

    def primary(self) -> TypeExpr:
        tok = self.take()
        if tok.kind == "name":
            try:
                return Name(self.hierarchy.lookup(tok.text))
            except UnknownName:
                raise UnknownName(
                    f"unknown name {tok.text!r} at position {tok.pos}", tok.pos
                ) from None
        if tok.kind == "lparen":
            t = self.union()
            closing = self.take()
            if closing.kind != "rparen":
                raise ParseError("expected ')'", closing.pos)
            return t
        raise ParseError(f"expected a name or '(', got {tok.text!r}", tok.pos)


def parse_type(src: str, h: NominalHierarchy) -> TypeExpr:
    """Parse a type expression, resolving every name against h."""
    parser = _Parser(_tokenize(src), h)
    t = parser.union()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected {trailing.text!r}", trailing.pos)
    return t


def print_type(t: TypeExpr) -> str:
    """Minimal-parenthesis rendering; inverse of parse_type."""
    return str(t)
