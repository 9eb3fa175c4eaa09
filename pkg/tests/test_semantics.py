import pytest
from hypothesis import given

from conftest import EXTENDED, TOWER, T, type_exprs, value_type_exprs
from tagsub.core import Decl, Name, validate_hierarchy
from tagsub.gen import types_up_to, value_types_up_to
from tagsub.semantics import (
    Concrete,
    Mode,
    NotAValueType,
    PairTag,
    Sentinel,
    format_tag_set,
    interp,
    matches,
    matching_sub,
    semantic_sub,
    type_to_tag,
)


def tags(*texts):
    """Shorthand: build a tag set from type syntax over the built-in hierarchy."""
    return frozenset(type_to_tag(T(t)) for t in texts)


class TestInterp:
    def test_concrete_name(self):
        assert interp(TOWER, T("Int")) == tags("Int")

    def test_abstract_names(self):
        assert interp(TOWER, T("Real")) == tags("Int", "Flt")
        assert interp(TOWER, T("Num")) == tags("Int", "Flt", "Cmplx")

    def test_pair_distributes(self):
        assert interp(TOWER, T("Str*(Int|Flt)")) == tags("Str*Int", "Str*Flt")

    def test_union(self):
        assert interp(TOWER, T("Int|Str")) == tags("Int", "Str")

    def test_atomic_real(self):
        real = TOWER.lookup("Real")
        assert interp(TOWER, T("Real"), Mode.ATOMIC) == tags("Int", "Flt") | {
            Sentinel(real)
        }

    def test_atomic_num(self):
        num, real = TOWER.lookup("Num"), TOWER.lookup("Real")
        assert interp(TOWER, T("Num"), Mode.ATOMIC) == tags("Int", "Flt", "Cmplx") | {
            Sentinel(real),
            Sentinel(num),
        }

    def test_atomic_pairs_carry_sentinels(self):
        got = interp(TOWER, T("Real*Int"), Mode.ATOMIC)
        assert PairTag(Sentinel(TOWER.lookup("Real")), Concrete(TOWER.lookup("Int"))) in got
        assert len(got) == 3

    def test_sentinel_free_input_gives_sentinel_free_interp(self):
        for src in ["Int", "Str*Int", "Int|Flt", "(Int|Str)*(Flt|Cmplx)"]:
            assert not any(
                isinstance(t, Sentinel) or _has_sentinel(t)
                for t in interp(TOWER, T(src), Mode.ATOMIC)
            )

    def test_empty_abstract_has_empty_interpretation(self):
        h = validate_hierarchy([Decl("Void", True), Decl("Int", False)])
        assert interp(h, Name(h.lookup("Void"))) == frozenset()

    def test_printing_is_canonically_ordered(self):
        assert format_tag_set(interp(TOWER, T("Num"))) == "{Cmplx, Flt, Int}"
        assert (
            format_tag_set(interp(TOWER, T("Num"), Mode.ATOMIC))
            == "{Cmplx, Flt, Int, E(Num), E(Real)}"
        )
        assert format_tag_set(interp(TOWER, T("Str*(Int|Flt)"))) == "{Str*Flt, Str*Int}"
        assert format_tag_set(frozenset()) == "{}"


def _has_sentinel(tag):
    if isinstance(tag, Sentinel):
        return True
    if isinstance(tag, PairTag):
        return _has_sentinel(tag.left) or _has_sentinel(tag.right)
    return False


class TestMatches:
    @pytest.mark.parametrize(
        "v,t,expected",
        [
            ("Int", "Real", True),
            ("Str*Int", "Str*(Int|Flt)", True),
            ("Int", "Int", True),
            ("Flt", "Int", False),
            ("Cmplx", "Real", False),
            ("Int*Int", "Num*Num", True),
            ("Str", "Int|Str", True),
            ("Str*Flt", "Str*Int|Str*Str", False),
        ],
    )
    def test_examples(self, v, t, expected):
        assert matches(TOWER, T(v), T(t)) is expected

    def test_rejects_non_value_types(self):
        with pytest.raises(NotAValueType):
            matches(TOWER, T("Real"), T("Num"))
        with pytest.raises(NotAValueType):
            matches(TOWER, T("Int|Int"), T("Num"))

    def test_matching_coincides_with_membership(self):
        vs = value_types_up_to(TOWER, 3)
        ts = types_up_to(TOWER, 2)
        for t in ts:
            members = interp(TOWER, t)
            for v in vs:
                assert matches(TOWER, v, t) == (type_to_tag(v) in members)

    @given(value_type_exprs(), type_exprs())
    def test_matching_coincides_with_membership_random(self, v, t):
        assert matches(TOWER, v, t) == (type_to_tag(v) in interp(TOWER, t))


class TestOracles:
    def test_real_equals_int_or_flt_semantically(self):
        assert semantic_sub(TOWER, T("Real"), T("Int|Flt"))
        assert semantic_sub(TOWER, T("Int|Flt"), T("Real"))

    def test_real_below_union_fails_atomically(self):
        assert not semantic_sub(TOWER, T("Real"), T("Int|Flt"), Mode.ATOMIC)
        assert semantic_sub(TOWER, T("Int|Flt"), T("Real"), Mode.ATOMIC)

    @given(type_exprs())
    def test_reflexive(self, t):
        assert semantic_sub(TOWER, t, t)
        assert semantic_sub(TOWER, t, t, Mode.ATOMIC)

    def test_matching_sub_examples(self):
        assert matching_sub(TOWER, T("Num"), T("Real|Cmplx"))
        assert not matching_sub(TOWER, T("Real"), T("Int"))
        assert matching_sub(TOWER, T("Int"), T("Int"))

    @given(type_exprs(max_leaves=5), type_exprs(max_leaves=5))
    def test_matching_sub_agrees_with_inclusion(self, t1, t2):
        assert matching_sub(TOWER, t1, t2) == semantic_sub(TOWER, t1, t2)

    def test_empty_abstract_is_bottom_like(self):
        h = validate_hierarchy(
            [Decl("Void", True), Decl("Int", False), Decl("Str", False)]
        )
        void = Name(h.lookup("Void"))
        for other in types_up_to(h, 2):
            assert semantic_sub(h, void, other)

    def test_semantic_interp_monotone_under_extension(self):
        for t in types_up_to(TOWER, 2):
            base = interp(TOWER, t)
            wider = interp(EXTENDED, t)
            assert base <= wider
