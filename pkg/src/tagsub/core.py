"""Type language and nominal hierarchy.

The type language has three constructors: declared nominal names, covariant
pairs, and untagged unions.  A hierarchy is a validated forest of name
declarations in which concrete names are leaves; declaration order is
significant because it fixes the canonical order used by normalization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable


class TagsubError(Exception):
    """Base class for all errors raised by this library."""


class HierarchyError(TagsubError):
    pass


class DuplicateName(HierarchyError):
    pass


class MultipleParents(HierarchyError):
    pass


class UnknownParent(HierarchyError):
    pass


class ConcreteParent(HierarchyError):
    pass


class CycleDetected(HierarchyError):
    pass


class HierarchySyntaxError(HierarchyError):
    pass


class UnknownName(TagsubError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class NominalName:
    """A declared name; ``abstract`` names cannot be instantiated."""

    text: str
    abstract: bool

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Name:
    name: NominalName

    def __str__(self) -> str:
        return _render(self, 0, False)


@dataclass(frozen=True)
class Pair:
    left: "TypeExpr"
    right: "TypeExpr"

    def __str__(self) -> str:
        return _render(self, 0, False)


@dataclass(frozen=True)
class Union:
    left: "TypeExpr"
    right: "TypeExpr"

    def __str__(self) -> str:
        return _render(self, 0, False)


TypeExpr = Name | Pair | Union


def _render(t: TypeExpr, parent_prec: int, is_right: bool) -> str:
    # '*' binds tighter than '|'; both left-associative, so a right child at
    # the same precedence level needs parentheses to round-trip.
    if isinstance(t, Name):
        return t.name.text
    prec, op = (1, "*") if isinstance(t, Pair) else (0, "|")
    body = _render(t.left, prec, False) + op + _render(t.right, prec, True)
    if prec < parent_prec or (prec == parent_prec and is_right):
        return "(" + body + ")"
    return body


@dataclass(frozen=True)
class Decl:
    """One hierarchy declaration: a named node with an optional parent."""

    name: str
    abstract: bool
    parent: str | None = None


class NominalHierarchy:
    """Validated forest of nominal declarations.

    Use :func:`validate_hierarchy` (or the constructor, which validates) to
    build one.  Instances are immutable once constructed and safe to share.
    """

    def __init__(self, decls: Iterable[Decl]):
        decls = tuple(decls)
        seen: dict[str, Decl] = {}
        for d in decls:
            if not d.name:
                raise DuplicateName("empty name in declaration")
            if d.name in seen:
                prev = seen[d.name]
                if prev.parent != d.parent:
                    raise MultipleParents(
                        f"{d.name} declared with parents {prev.parent!r} and {d.parent!r}"
                    )
                raise DuplicateName(f"{d.name} declared more than once")
            seen[d.name] = d
        for d in decls:
            if d.parent is None:
                continue
            parent = seen.get(d.parent)
            if parent is None:
                raise UnknownParent(f"{d.name} extends undeclared name {d.parent}")
            if not parent.abstract:
                raise ConcreteParent(
                    f"{d.name} extends concrete name {d.parent}; concrete names are leaves"
                )
        for d in decls:
            trail = {d.name}
            cur = d.parent
            while cur is not None:
                if cur in trail:
                    raise CycleDetected(f"cycle through {cur}")
                trail.add(cur)
                cur = seen[cur].parent

        self.decls = decls
        self._names = {d.name: NominalName(d.name, d.abstract) for d in decls}
        self._parent = {
            d.name: self._names[d.parent] if d.parent else None for d in decls
        }
        self.names = tuple(self._names[d.name] for d in decls)
        self.concrete_names = tuple(n for n in self.names if not n.abstract)
        # Descendant tables in declaration order (reflexive for the own kind).
        self._concrete_desc: dict[str, tuple[NominalName, ...]] = {}
        self._abstract_desc: dict[str, tuple[NominalName, ...]] = {}
        for n in self.names:
            self._concrete_desc[n.text] = tuple(
                c for c in self.names if not c.abstract and self._reaches(c, n)
            )
            self._abstract_desc[n.text] = tuple(
                a for a in self.names if a.abstract and self._reaches(a, n)
            )

    def _reaches(self, below: NominalName, above: NominalName) -> bool:
        cur: NominalName | None = below
        while cur is not None:
            if cur == above:
                return True
            cur = self._parent[cur.text]
        return False

    def lookup(self, name: str | NominalName) -> NominalName:
        text = name.text if isinstance(name, NominalName) else name
        found = self._names.get(text)
        if found is None or (isinstance(name, NominalName) and found != name):
            raise UnknownName(f"name {text!r} is not declared in this hierarchy")
        return found

    def parent(self, name: str | NominalName) -> NominalName | None:
        return self._parent[self.lookup(name).text]

    def __contains__(self, name: str | NominalName) -> bool:
        try:
            self.lookup(name)
        except UnknownName:
            return False
        return True


def validate_hierarchy(decls: Iterable[Decl]) -> NominalHierarchy:
    """Check a declaration list and return the resulting hierarchy.

    Raises DuplicateName, MultipleParents, UnknownParent, ConcreteParent or
    CycleDetected on invalid input.
    """
    return NominalHierarchy(decls)


def nominal_subtype(
    h: NominalHierarchy, n1: str | NominalName, n2: str | NominalName
) -> bool:
    """True iff n1 reaches n2 by zero or more parent edges (reflexive)."""
    return h._reaches(h.lookup(n1), h.lookup(n2))


def concrete_descendants(
    h: NominalHierarchy, n: str | NominalName
) -> tuple[NominalName, ...]:
    """Concrete names at or below n, in hierarchy declaration order."""
    return h._concrete_desc[h.lookup(n).text]


def abstract_descendants(
    h: NominalHierarchy, n: str | NominalName
) -> tuple[NominalName, ...]:
    """Abstract names at or below n (including n itself when abstract)."""
    return h._abstract_desc[h.lookup(n).text]


def is_value_type(t: TypeExpr) -> bool:
    """True iff t is a concrete name or a pair of value types."""
    if isinstance(t, Name):
        return not t.name.abstract
    if isinstance(t, Pair):
        return is_value_type(t.left) and is_value_type(t.right)
    return False


def validate_type(h: NominalHierarchy, t: TypeExpr) -> None:
    """Raise UnknownName unless every name in t is declared in h."""
    if isinstance(t, Name):
        h.lookup(t.name)
    else:
        validate_type(h, t.left)
        validate_type(h, t.right)


# File format: one declaration per line, '#' comments, e.g.
#   abstract Num
#   concrete Int <: Real
_DECL_RE = re.compile(
    r"^(abstract|concrete)\s+([A-Za-z][A-Za-z0-9_]*)"
    r"(?:\s*<:\s*([A-Za-z][A-Za-z0-9_]*))?$"
)


def parse_hierarchy(text: str) -> NominalHierarchy:
    decls = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DECL_RE.match(line)
        if m is None:
            raise HierarchySyntaxError(f"line {lineno}: cannot parse {line!r}")
        kind, name, parent = m.groups()
        decls.append(Decl(name, kind == "abstract", parent))
    return validate_hierarchy(decls)


def load_hierarchy(path: str | Path) -> NominalHierarchy:
    return parse_hierarchy(Path(path).read_text(encoding="utf-8"))


#: Small numeric tower used throughout the docs and as the CLI default.
DEFAULT_HIERARCHY = validate_hierarchy(
    [
        Decl("Num", abstract=True),
        Decl("Real", abstract=True, parent="Num"),
        Decl("Int", abstract=False, parent="Real"),
        Decl("Flt", abstract=False, parent="Real"),
        Decl("Cmplx", abstract=False, parent="Num"),
        Decl("Str", abstract=False),
    ]
)
