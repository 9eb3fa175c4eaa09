"""Disjunctive normal form of types and its abstract-preserving variant.

``nf`` rewrites a type into a union of value types: abstract names become
unions of their concrete descendants and pairs distribute over unions.
``nf_atomic`` distributes pairs the same way but keeps abstract names fixed.
No flattening, reordering or deduplication happens beyond these clauses.
"""

from __future__ import annotations

from .core import (
    Name,
    NominalHierarchy,
    NominalName,
    Pair,
    TagsubError,
    TypeExpr,
    Union,
    concrete_descendants,
    is_value_type,
)
from .semantics import Mode


class EmptyAbstract(TagsubError):
    """An abstract name with no concrete descendants has no normal form."""


def descendant_union(h: NominalHierarchy, n: str | NominalName) -> TypeExpr:
    """Left-nested union of n's concrete descendants in declaration order."""
    cs = concrete_descendants(h, n)
    if not cs:
        raise EmptyAbstract(f"abstract name {h.lookup(n)} has no concrete descendants")
    out: TypeExpr = Name(cs[0])
    for c in cs[1:]:
        out = Union(out, Name(c))
    return out


def un_prs(t1: TypeExpr, t2: TypeExpr) -> TypeExpr:
    # Left-union clause takes precedence over the right-union clause.
    if isinstance(t1, Union):
        return Union(un_prs(t1.left, t2), un_prs(t1.right, t2))
    if isinstance(t2, Union):
        return Union(un_prs(t1, t2.left), un_prs(t1, t2.right))
    return Pair(t1, t2)


def nf(h: NominalHierarchy, t: TypeExpr) -> TypeExpr:
    if isinstance(t, Name):
        if not h.lookup(t.name).abstract:
            return t
        return descendant_union(h, t.name)
    if isinstance(t, Pair):
        return un_prs(nf(h, t.left), nf(h, t.right))
    return Union(nf(h, t.left), nf(h, t.right))


def in_nf(t: TypeExpr) -> bool:
    if isinstance(t, Union):
        return in_nf(t.left) and in_nf(t.right)
    return is_value_type(t)


def nf_atomic(h: NominalHierarchy, t: TypeExpr) -> TypeExpr:
    if isinstance(t, Name):
        h.lookup(t.name)
        return t
    if isinstance(t, Pair):
        return un_prs(nf_atomic(h, t.left), nf_atomic(h, t.right))
    return Union(nf_atomic(h, t.left), nf_atomic(h, t.right))


def _atom_tree(t: TypeExpr) -> bool:
    # Nominal atoms closed under pairing; unions disqualify.
    if isinstance(t, Name):
        return True
    if isinstance(t, Pair):
        return _atom_tree(t.left) and _atom_tree(t.right)
    return False


def in_nf_atomic(t: TypeExpr) -> bool:
    if isinstance(t, Union):
        return in_nf_atomic(t.left) and in_nf_atomic(t.right)
    return _atom_tree(t)


def nf_for_mode(h: NominalHierarchy, t: TypeExpr, mode: Mode) -> TypeExpr:
    return nf(h, t) if mode is Mode.SEMANTIC else nf_atomic(h, t)
