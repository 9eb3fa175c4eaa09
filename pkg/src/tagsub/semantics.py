"""Tag interpretation of types and the set-based subtyping oracles.

A type denotes a finite set of run-time tags.  Two interpretations exist:
the plain one, where an abstract name denotes its concrete descendants, and
the atomic one, which additionally seeds every abstract name with a sentinel
standing for a not-yet-declared future subtype.  Subtyping is set inclusion
of interpretations; the matching relation gives an equivalent, syntactic
account of tag membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    Name,
    NominalHierarchy,
    NominalName,
    Pair,
    TagsubError,
    TypeExpr,
    Union,
    abstract_descendants,
    concrete_descendants,
    is_value_type,
    nominal_subtype,
)


class NotAValueType(TagsubError):
    pass


class Mode(Enum):
    SEMANTIC = "semantic"
    ATOMIC = "atomic"


@dataclass(frozen=True)
class Concrete:
    name: NominalName

    def __str__(self) -> str:
        return _render_tag(self, False)


@dataclass(frozen=True)
class PairTag:
    left: "Tag"
    right: "Tag"

    def __str__(self) -> str:
        return _render_tag(self, False)


@dataclass(frozen=True)
class Sentinel:
    """Placeholder tag for a future concrete subtype of an abstract name."""

    owner: NominalName

    def __str__(self) -> str:
        return _render_tag(self, False)


Tag = Concrete | PairTag | Sentinel


def _render_tag(t: Tag, is_right: bool) -> str:
    if isinstance(t, Concrete):
        return t.name.text
    if isinstance(t, Sentinel):
        return f"E({t.owner.text})"
    body = _render_tag(t.left, False) + "*" + _render_tag(t.right, True)
    return f"({body})" if is_right else body


def tag_key(t: Tag):
    """Total order on tags: concrete < pair < sentinel, then lexicographic."""
    if isinstance(t, Concrete):
        return (0, t.name.text)
    if isinstance(t, PairTag):
        return (1, tag_key(t.left), tag_key(t.right))
    return (2, t.owner.text)


def format_tag_set(tags: frozenset[Tag] | set[Tag]) -> str:
    return "{" + ", ".join(str(t) for t in sorted(tags, key=tag_key)) + "}"


def tag_to_type(t: Tag) -> TypeExpr:
    """The value type a (sentinel-free) tag corresponds to."""
    if isinstance(t, Concrete):
        return Name(t.name)
    if isinstance(t, PairTag):
        return Pair(tag_to_type(t.left), tag_to_type(t.right))
    raise NotAValueType(f"sentinel tag {t} has no syntactic counterpart")


def type_to_tag(v: TypeExpr) -> Tag:
    if isinstance(v, Name) and not v.name.abstract:
        return Concrete(v.name)
    if isinstance(v, Pair):
        return PairTag(type_to_tag(v.left), type_to_tag(v.right))
    raise NotAValueType(f"not a value type: {v}")


def interp(h: NominalHierarchy, t: TypeExpr, mode: Mode = Mode.SEMANTIC) -> frozenset[Tag]:
    """The set of tags inhabiting t under the given interpretation."""
    if isinstance(t, Name):
        n = h.lookup(t.name)
        if not n.abstract:
            return frozenset((Concrete(n),))
        tags: list[Tag] = [Concrete(c) for c in concrete_descendants(h, n)]
        if mode is Mode.ATOMIC:
            tags.extend(Sentinel(a) for a in abstract_descendants(h, n))
        return frozenset(tags)
    if isinstance(t, Pair):
        return frozenset(
            PairTag(l, r)
            for l in interp(h, t.left, mode)
            for r in interp(h, t.right, mode)
        )
    return interp(h, t.left, mode) | interp(h, t.right, mode)


def matches(h: NominalHierarchy, v: TypeExpr, t: TypeExpr) -> bool:
    """True iff the value type v matches t (tag membership, syntactically).

    Concrete names match themselves and their transitive abstract ancestors,
    pairs match componentwise, unions match through either arm.
    """
    if not is_value_type(v):
        raise NotAValueType(f"not a value type: {v}")
    return _matches(h, v, t)


def _matches(h: NominalHierarchy, v: TypeExpr, t: TypeExpr) -> bool:
    if isinstance(t, Union):
        return _matches(h, v, t.left) or _matches(h, v, t.right)
    if isinstance(t, Name):
        return isinstance(v, Name) and nominal_subtype(h, v.name, t.name)
    return (
        isinstance(v, Pair)
        and _matches(h, v.left, t.left)
        and _matches(h, v.right, t.right)
    )


def semantic_sub(
    h: NominalHierarchy, t1: TypeExpr, t2: TypeExpr, mode: Mode = Mode.SEMANTIC
) -> bool:
    """Reference oracle: inclusion of tag interpretations."""
    return interp(h, t1, mode) <= interp(h, t2, mode)


def matching_sub(h: NominalHierarchy, t1: TypeExpr, t2: TypeExpr) -> bool:
    """Oracle via the matching relation; defined for the plain mode only.

    Quantifying over all value types reduces to the members of t1's
    interpretation, because matching t1 coincides with membership in it.
    """
    return all(
        _matches(h, tag_to_type(v), t2) for v in interp(h, t1, Mode.SEMANTIC)
    )
