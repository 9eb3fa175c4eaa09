"""Declarative subtyping as explicit, independently checkable proof trees.

The declarative system has general reflexivity and transitivity, nominal
axioms, an axiom equating an abstract name with the union of its concrete
descendants, union introduction and elimination, and the two rules that
distribute pairs over unions.  :func:`synthesize` compiles a reductive trace
into a declarative derivation; :func:`derive_sub_nf` and
:func:`derive_nf_sub` construct the two halves of the proof that a type is
equivalent to its normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Name,
    NominalHierarchy,
    Pair,
    TagsubError,
    TypeExpr,
    Union,
    UnknownName,
    nominal_subtype,
)
from .normalize import EmptyAbstract, descendant_union, nf_for_mode, un_prs
from .semantics import Mode
from .subtyping import (
    SR_BASE_REFL,
    SR_NF,
    SR_NOM,
    SR_PAIR,
    SR_UNION_L,
    SR_UNION_R1,
    SR_UNION_R2,
    ReductiveTrace,
    check_reductive_trace,
)

SD_REFL = "SD-Refl"
SD_TRANS = "SD-Trans"
SD_NOM = "SD-Nom"
SD_ABS_UNION = "SD-AbsUnion"
SD_PAIR = "SD-Pair"
SD_UNION_L = "SD-UnionL"
SD_UNION_R1 = "SD-UnionR1"
SD_UNION_R2 = "SD-UnionR2"
SD_DISTR1 = "SD-Distr1"
SD_DISTR2 = "SD-Distr2"


class InvalidTrace(TagsubError):
    pass


@dataclass(frozen=True)
class Derivation:
    rule: str
    lhs: TypeExpr
    rhs: TypeExpr
    premises: tuple["Derivation", ...] = ()
    witness: TypeExpr | None = None  # the intermediate type of SD-Trans

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)


def _refl(t: TypeExpr) -> Derivation:
    return Derivation(SD_REFL, t, t)


def check_declarative(
    h: NominalHierarchy, d: Derivation, mode: Mode = Mode.SEMANTIC
) -> bool:
    """True iff every node instantiates its rule schema under the mode.

    The atomic mode rejects SD-AbsUnion nodes; everything else is shared.
    Malformed trees yield False rather than raising.
    """
    lhs, rhs, prem = d.lhs, d.rhs, d.premises
    if d.rule == SD_TRANS:
        return (
            d.witness is not None
            and len(prem) == 2
            and prem[0].lhs == lhs
            and prem[0].rhs == d.witness
            and prem[1].lhs == d.witness
            and prem[1].rhs == rhs
            and check_declarative(h, prem[0], mode)
            and check_declarative(h, prem[1], mode)
        )
    if d.witness is not None:
        return False
    if d.rule == SD_REFL:
        return not prem and lhs == rhs
    if d.rule == SD_NOM:
        if prem or not (isinstance(lhs, Name) and isinstance(rhs, Name)):
            return False
        if lhs.name == rhs.name:
            return False
        try:
            return nominal_subtype(h, lhs.name, rhs.name)
        except UnknownName:
            return False
    if d.rule == SD_ABS_UNION:
        if mode is Mode.ATOMIC or prem:
            return False
        if not (isinstance(lhs, Name) and lhs.name.abstract):
            return False
        try:
            return rhs == descendant_union(h, lhs.name)
        except (EmptyAbstract, UnknownName):
            return False
    if d.rule == SD_PAIR:
        return (
            isinstance(lhs, Pair)
            and isinstance(rhs, Pair)
            and len(prem) == 2
            and prem[0].lhs == lhs.left
            and prem[0].rhs == rhs.left
            and prem[1].lhs == lhs.right
            and prem[1].rhs == rhs.right
            and check_declarative(h, prem[0], mode)
            and check_declarative(h, prem[1], mode)
        )
    if d.rule == SD_UNION_L:
        return (
            isinstance(lhs, Union)
            and len(prem) == 2
            and prem[0].lhs == lhs.left
            and prem[0].rhs == rhs
            and prem[1].lhs == lhs.right
            and prem[1].rhs == rhs
            and check_declarative(h, prem[0], mode)
            and check_declarative(h, prem[1], mode)
        )
    if d.rule == SD_UNION_R1:
        return not prem and isinstance(rhs, Union) and lhs == rhs.left
    if d.rule == SD_UNION_R2:
        return not prem and isinstance(rhs, Union) and lhs == rhs.right
    if d.rule == SD_DISTR1:
        return (
            not prem
            and isinstance(lhs, Pair)
            and isinstance(lhs.left, Union)
            and rhs
            == Union(Pair(lhs.left.left, lhs.right), Pair(lhs.left.right, lhs.right))
        )
    if d.rule == SD_DISTR2:
        return (
            not prem
            and isinstance(lhs, Pair)
            and isinstance(lhs.right, Union)
            and rhs
            == Union(Pair(lhs.left, lhs.right.left), Pair(lhs.left, lhs.right.right))
        )
    return False


def synthesize(
    h: NominalHierarchy, trace: ReductiveTrace, mode: Mode = Mode.SEMANTIC
) -> Derivation:
    """Compile a valid reductive trace into a declarative derivation.

    Most reductive rules have a direct counterpart; the right-union rules
    need one extra transitivity step through the chosen arm, and a
    normalization step becomes transitivity through the normal form, whose
    left half is supplied by :func:`derive_sub_nf`.
    """
    if not check_reductive_trace(h, trace, mode):
        raise InvalidTrace("trace does not satisfy the reductive rule schemas")
    return _synth(h, trace, mode)


def _synth(h, tr: ReductiveTrace, mode: Mode) -> Derivation:
    if tr.rule == SR_BASE_REFL:
        return _refl(tr.lhs)
    if tr.rule == SR_NOM:
        if tr.lhs == tr.rhs:
            return _refl(tr.lhs)
        return Derivation(SD_NOM, tr.lhs, tr.rhs)
    if tr.rule == SR_PAIR:
        return Derivation(
            SD_PAIR,
            tr.lhs,
            tr.rhs,
            (_synth(h, tr.premises[0], mode), _synth(h, tr.premises[1], mode)),
        )
    if tr.rule == SR_UNION_L:
        return Derivation(
            SD_UNION_L,
            tr.lhs,
            tr.rhs,
            (_synth(h, tr.premises[0], mode), _synth(h, tr.premises[1], mode)),
        )
    if tr.rule == SR_UNION_R1:
        return _inj_left(_synth(h, tr.premises[0], mode), tr.rhs)
    if tr.rule == SR_UNION_R2:
        return _inj_right(_synth(h, tr.premises[0], mode), tr.rhs)
    if tr.rule == SR_NF:
        normed = nf_for_mode(h, tr.lhs, mode)
        left = derive_sub_nf(h, tr.lhs, mode)
        right = _synth(h, tr.premises[0], mode)
        return Derivation(SD_TRANS, tr.lhs, tr.rhs, (left, right), witness=normed)
    raise InvalidTrace(f"unknown rule {tr.rule!r}")


def _inj_left(d: Derivation, target: TypeExpr) -> Derivation:
    """Lift d: a <: target.left to a <: target, target being a union."""
    axiom = Derivation(SD_UNION_R1, target.left, target)
    if d.lhs == target.left:
        return axiom
    return Derivation(SD_TRANS, d.lhs, target, (d, axiom), witness=target.left)


def _inj_right(d: Derivation, target: TypeExpr) -> Derivation:
    axiom = Derivation(SD_UNION_R2, target.right, target)
    if d.lhs == target.right:
        return axiom
    return Derivation(SD_TRANS, d.lhs, target, (d, axiom), witness=target.right)


def derive_sub_nf(
    h: NominalHierarchy, t: TypeExpr, mode: Mode = Mode.SEMANTIC
) -> Derivation:
    """A checkable derivation of t <: NF(t) (mode-appropriate normal form)."""
    normed = nf_for_mode(h, t, mode)
    if normed == t:
        return _refl(t)
    if isinstance(t, Name):
        # Abstract name in the plain mode; its normal form is the canonical
        # union of concrete descendants.
        return Derivation(SD_ABS_UNION, t, normed)
    if isinstance(t, Union):
        target = normed
        d1 = _inj_left(derive_sub_nf(h, t.left, mode), target)
        d2 = _inj_right(derive_sub_nf(h, t.right, mode), target)
        return Derivation(SD_UNION_L, t, target, (d1, d2))
    # Pair: go componentwise to the pair of normal forms, then distribute.
    ln = nf_for_mode(h, t.left, mode)
    rn = nf_for_mode(h, t.right, mode)
    mid = Pair(ln, rn)
    componentwise = Derivation(
        SD_PAIR,
        t,
        mid,
        (derive_sub_nf(h, t.left, mode), derive_sub_nf(h, t.right, mode)),
    )
    if mid == normed:
        return componentwise
    distributed = _pair_below_unprs(ln, rn)
    return Derivation(SD_TRANS, t, normed, (componentwise, distributed), witness=mid)


def _pair_below_unprs(x: TypeExpr, y: TypeExpr) -> Derivation:
    """Derivation of (x, y) as a pair <: un_prs(x, y), for normalized x, y."""
    lhs = Pair(x, y)
    if isinstance(x, Union):
        step = Union(Pair(x.left, y), Pair(x.right, y))
        target = un_prs(x, y)
        distr = Derivation(SD_DISTR1, lhs, step)
        rest = Derivation(
            SD_UNION_L,
            step,
            target,
            (
                _inj_left(_pair_below_unprs(x.left, y), target),
                _inj_right(_pair_below_unprs(x.right, y), target),
            ),
        )
        return Derivation(SD_TRANS, lhs, target, (distr, rest), witness=step)
    if isinstance(y, Union):
        step = Union(Pair(x, y.left), Pair(x, y.right))
        target = un_prs(x, y)
        distr = Derivation(SD_DISTR2, lhs, step)
        rest = Derivation(
            SD_UNION_L,
            step,
            target,
            (
                _inj_left(_pair_below_unprs(x, y.left), target),
                _inj_right(_pair_below_unprs(x, y.right), target),
            ),
        )
        return Derivation(SD_TRANS, lhs, target, (distr, rest), witness=step)
    return _refl(lhs)


def derive_nf_sub(
    h: NominalHierarchy, t: TypeExpr, mode: Mode = Mode.SEMANTIC
) -> Derivation:
    """A checkable derivation of NF(t) <: t (mode-appropriate normal form)."""
    normed = nf_for_mode(h, t, mode)
    if normed == t:
        return _refl(t)
    if isinstance(t, Name):
        return _union_below_name(normed, t)
    if isinstance(t, Union):
        d1 = _inj_left(derive_nf_sub(h, t.left, mode), t)
        d2 = _inj_right(derive_nf_sub(h, t.right, mode), t)
        return Derivation(SD_UNION_L, normed, t, (d1, d2))
    # Pair: collapse the distributed union back, then go componentwise.
    ln = nf_for_mode(h, t.left, mode)
    rn = nf_for_mode(h, t.right, mode)
    mid = Pair(ln, rn)
    componentwise = Derivation(
        SD_PAIR,
        mid,
        t,
        (derive_nf_sub(h, t.left, mode), derive_nf_sub(h, t.right, mode)),
    )
    if normed == mid:
        return componentwise
    collapsed = _unprs_below_pair(ln, rn)
    return Derivation(SD_TRANS, normed, t, (collapsed, componentwise), witness=mid)


def _union_below_name(u: TypeExpr, t: Name) -> Derivation:
    # u is a left-nested union of concrete names strictly below t.
    if isinstance(u, Union):
        return Derivation(
            SD_UNION_L,
            u,
            t,
            (_union_below_name(u.left, t), _union_below_name(u.right, t)),
        )
    return Derivation(SD_NOM, u, t)


def _unprs_below_pair(x: TypeExpr, y: TypeExpr) -> Derivation:
    """Derivation of un_prs(x, y) <: (x, y) as a pair, for normalized x, y."""
    target = Pair(x, y)
    if isinstance(x, Union):
        lhs = un_prs(x, y)

        def arm(xi: TypeExpr, inj: str) -> Derivation:
            # un_prs(xi, y) <: (xi, y) <: (x, y)
            widen = Derivation(
                SD_PAIR,
                Pair(xi, y),
                target,
                (Derivation(inj, xi, x), _refl(y)),
            )
            sub = _unprs_below_pair(xi, y)
            if sub.lhs == Pair(xi, y) and sub.rule == SD_REFL:
                return widen
            return Derivation(
                SD_TRANS, sub.lhs, target, (sub, widen), witness=Pair(xi, y)
            )

        return Derivation(
            SD_UNION_L, lhs, target, (arm(x.left, SD_UNION_R1), arm(x.right, SD_UNION_R2))
        )
    if isinstance(y, Union):
        lhs = un_prs(x, y)

        def arm(yi: TypeExpr, inj: str) -> Derivation:
            widen = Derivation(
                SD_PAIR,
                Pair(x, yi),
                target,
                (_refl(x), Derivation(inj, yi, y)),
            )
            sub = _unprs_below_pair(x, yi)
            if sub.lhs == Pair(x, yi) and sub.rule == SD_REFL:
                return widen
            return Derivation(
                SD_TRANS, sub.lhs, target, (sub, widen), witness=Pair(x, yi)
            )

        return Derivation(
            SD_UNION_L, lhs, target, (arm(y.left, SD_UNION_R1), arm(y.right, SD_UNION_R2))
        )
    return _refl(target)


def format_derivation(d: Derivation) -> str:
    """Trace-style rendering with ``witness:`` lines on SD-Trans nodes."""
    return "\n".join(_deriv_lines(d, 0))


def _deriv_lines(d: Derivation, depth: int) -> list[str]:
    lines = [f"{'  ' * depth}{d.rule}: {d.lhs} <: {d.rhs}"]
    if d.witness is not None:
        lines.append(f"{'  ' * (depth + 1)}witness: {d.witness}")
    for p in d.premises:
        lines.extend(_deriv_lines(p, depth + 1))
    return lines
