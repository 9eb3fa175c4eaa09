import pytest
from hypothesis import given, settings

from conftest import TOWER, T, type_exprs
from tagsub.derivation import (
    SD_ABS_UNION,
    SD_DISTR2,
    SD_NOM,
    SD_PAIR,
    SD_REFL,
    SD_TRANS,
    SD_UNION_L,
    SD_UNION_R1,
    Derivation,
    InvalidTrace,
    check_declarative,
    derive_nf_sub,
    derive_sub_nf,
    format_derivation,
    synthesize,
)
from tagsub.normalize import nf, nf_atomic
from tagsub.semantics import Mode, semantic_sub
from tagsub.subtyping import SR_BASE_REFL, ReductiveTrace, Strategy, reductive_sub


def _rules(d):
    out = [d.rule]
    for p in d.premises:
        out.extend(_rules(p))
    return out


class TestChecker:
    def test_union_of_pairs_below_pair_of_union(self):
        # (Str*Int)|(Str*Flt) <: Str*(Int|Flt) via union-left over two pair rules.
        rhs = T("Str*(Int|Flt)")
        left_arm = Derivation(
            SD_PAIR,
            T("Str*Int"),
            rhs,
            (
                Derivation(SD_REFL, T("Str"), T("Str")),
                Derivation(SD_UNION_R1, T("Int"), T("Int|Flt")),
            ),
        )
        right_arm = Derivation(
            SD_PAIR,
            T("Str*Flt"),
            rhs,
            (
                Derivation(SD_REFL, T("Str"), T("Str")),
                Derivation("SD-UnionR2", T("Flt"), T("Int|Flt")),
            ),
        )
        d = Derivation(SD_UNION_L, T("(Str*Int)|(Str*Flt)"), rhs, (left_arm, right_arm))
        assert check_declarative(TOWER, d)
        assert semantic_sub(TOWER, d.lhs, d.rhs)

    def test_single_refl_node(self):
        assert check_declarative(TOWER, Derivation(SD_REFL, T("Num"), T("Num")))

    def test_rejects_distribution_claim_without_distr_rule(self):
        # The converse direction cannot be claimed by a union-right axiom:
        # the left-hand side is not syntactically an arm of the union.
        bad = Derivation(SD_UNION_R1, T("Str*(Int|Flt)"), T("(Str*Int)|(Str*Flt)"))
        assert not check_declarative(TOWER, bad)
        # Nor does a pair rule apply: the right-hand side is not a pair.
        bad2 = Derivation(
            SD_PAIR,
            T("Str*(Int|Flt)"),
            T("(Str*Int)|(Str*Flt)"),
            (
                Derivation(SD_REFL, T("Str"), T("Str")),
                Derivation(SD_REFL, T("Int|Flt"), T("Int|Flt")),
            ),
        )
        assert not check_declarative(TOWER, bad2)

    def test_accepts_distr2_axiom(self):
        d = Derivation(SD_DISTR2, T("Str*(Int|Flt)"), T("(Str*Int)|(Str*Flt)"))
        assert check_declarative(TOWER, d)
        assert semantic_sub(TOWER, d.lhs, d.rhs)

    def test_abs_union_requires_canonical_shape(self):
        assert check_declarative(
            TOWER, Derivation(SD_ABS_UNION, T("Real"), T("Int|Flt"))
        )
        assert check_declarative(
            TOWER, Derivation(SD_ABS_UNION, T("Num"), T("(Int|Flt)|Cmplx"))
        )
        assert not check_declarative(
            TOWER, Derivation(SD_ABS_UNION, T("Real"), T("Flt|Int"))
        )
        assert not check_declarative(
            TOWER, Derivation(SD_ABS_UNION, T("Num"), T("Int|(Flt|Cmplx)"))
        )

    def test_atomic_mode_rejects_abs_union(self):
        d = Derivation(SD_ABS_UNION, T("Real"), T("Int|Flt"))
        assert check_declarative(TOWER, d, Mode.SEMANTIC)
        assert not check_declarative(TOWER, d, Mode.ATOMIC)

    def test_nom_is_strict(self):
        assert check_declarative(TOWER, Derivation(SD_NOM, T("Real"), T("Num")))
        assert not check_declarative(TOWER, Derivation(SD_NOM, T("Int"), T("Int")))
        assert not check_declarative(TOWER, Derivation(SD_NOM, T("Num"), T("Real")))

    def test_trans_needs_matching_witness(self):
        good = Derivation(
            SD_TRANS,
            T("Int"),
            T("Str|Real"),
            (
                Derivation(SD_NOM, T("Int"), T("Real")),
                Derivation("SD-UnionR2", T("Real"), T("Str|Real")),
            ),
            witness=T("Real"),
        )
        assert check_declarative(TOWER, good)
        bad = Derivation(
            SD_TRANS, T("Int"), T("Str|Real"), good.premises, witness=T("Num")
        )
        assert not check_declarative(TOWER, bad)

    def test_witness_only_on_trans(self):
        d = Derivation(SD_REFL, T("Int"), T("Int"), witness=T("Int"))
        assert not check_declarative(TOWER, d)


class TestSynthesize:
    def test_shortest_golden_trace(self):
        _, trace = reductive_sub(
            TOWER, T("Str*(Int|Flt)"), T("Str*Real"), strategy=Strategy.SHORT_PATH_FIRST
        )
        d = synthesize(TOWER, trace)
        assert check_declarative(TOWER, d)
        assert d.lhs == T("Str*(Int|Flt)") and d.rhs == T("Str*Real")
        rules = _rules(d)
        assert SD_PAIR in rules and SD_UNION_L in rules and SD_NOM in rules

    def test_normalization_golden_trace(self):
        _, trace = reductive_sub(TOWER, T("Str*(Int|Flt)"), T("Str*Real"))
        d = synthesize(TOWER, trace)
        assert check_declarative(TOWER, d)

    def test_nf_root_becomes_trans_with_nf_witness(self):
        _, trace = reductive_sub(TOWER, T("Num"), T("Real|Cmplx"))
        d = synthesize(TOWER, trace)
        assert d.rule == SD_TRANS
        assert d.witness == T("(Int|Flt)|Cmplx")
        assert check_declarative(TOWER, d)

    def test_base_refl_becomes_refl(self):
        trace = ReductiveTrace(SR_BASE_REFL, T("Str"), T("Str"))
        d = synthesize(TOWER, trace)
        assert d == Derivation(SD_REFL, T("Str"), T("Str"))

    def test_invalid_trace_rejected(self):
        with pytest.raises(InvalidTrace):
            synthesize(TOWER, ReductiveTrace(SR_BASE_REFL, T("Int"), T("Flt")))

    def test_atomic_traces_synthesize(self):
        verdict, trace = reductive_sub(TOWER, T("Real*Int"), T("Num*Real"), Mode.ATOMIC)
        assert verdict
        d = synthesize(TOWER, trace, Mode.ATOMIC)
        assert check_declarative(TOWER, d, Mode.ATOMIC)

    def test_atomic_reflexive_abstract_nominal_step_becomes_refl(self):
        # The nominal rule covers Real <: Real atomically; its declarative
        # counterpart must be reflexivity, not a strict nominal axiom.
        verdict, trace = reductive_sub(TOWER, T("Real"), T("Real"), Mode.ATOMIC)
        assert verdict
        d = synthesize(TOWER, trace, Mode.ATOMIC)
        assert check_declarative(TOWER, d, Mode.ATOMIC)
        assert SD_NOM not in _rules(d)

    @settings(max_examples=200)
    @given(type_exprs(max_leaves=5), type_exprs(max_leaves=5))
    def test_round_trip_on_random_pairs(self, t1, t2):
        for mode in Mode:
            for strategy in [Strategy.NORMALIZE_FIRST, Strategy.SHORT_PATH_FIRST]:
                verdict, trace = reductive_sub(TOWER, t1, t2, mode, strategy)
                if verdict:
                    d = synthesize(TOWER, trace, mode)
                    assert check_declarative(TOWER, d, mode)
                    assert d.lhs == t1 and d.rhs == t2

    @settings(max_examples=200)
    @given(type_exprs(max_leaves=5), type_exprs(max_leaves=5))
    def test_accepted_derivations_are_semantically_sound(self, t1, t2):
        verdict, trace = reductive_sub(TOWER, t1, t2)
        if verdict:
            d = synthesize(TOWER, trace)
            assert check_declarative(TOWER, d)
            assert semantic_sub(TOWER, t1, t2)


class TestNfEquivalenceDerivations:
    def test_abstract_name_up(self):
        d = derive_sub_nf(TOWER, T("Real"))
        assert d == Derivation(SD_ABS_UNION, T("Real"), T("Int|Flt"))

    def test_concrete_name_up(self):
        assert derive_sub_nf(TOWER, T("Int")) == Derivation(SD_REFL, T("Int"), T("Int"))

    def test_pair_up_goes_through_distr2(self):
        d = derive_sub_nf(TOWER, T("Str*(Int|Flt)"))
        assert check_declarative(TOWER, d)
        assert d.rhs == T("(Str*Int)|(Str*Flt)")
        assert SD_DISTR2 in _rules(d) and SD_TRANS in _rules(d)

    def test_abstract_name_down(self):
        d = derive_nf_sub(TOWER, T("Real"))
        assert check_declarative(TOWER, d)
        assert d.rule == SD_UNION_L
        assert _rules(d) == [SD_UNION_L, SD_NOM, SD_NOM]
        assert d.lhs == T("Int|Flt") and d.rhs == T("Real")

    def test_num_down(self):
        d = derive_nf_sub(TOWER, T("Num"))
        assert check_declarative(TOWER, d)
        assert d.lhs == T("(Int|Flt)|Cmplx") and d.rhs == T("Num")
        assert set(_rules(d)) == {SD_UNION_L, SD_NOM}

    def test_concrete_name_down(self):
        assert derive_nf_sub(TOWER, T("Int")) == Derivation(SD_REFL, T("Int"), T("Int"))

    @given(type_exprs())
    def test_both_directions_check_in_both_modes(self, t):
        for mode in Mode:
            up = derive_sub_nf(TOWER, t, mode)
            down = derive_nf_sub(TOWER, t, mode)
            normed = nf(TOWER, t) if mode is Mode.SEMANTIC else nf_atomic(TOWER, t)
            assert up.lhs == t and up.rhs == normed
            assert down.lhs == normed and down.rhs == t
            assert check_declarative(TOWER, up, mode)
            assert check_declarative(TOWER, down, mode)


class TestSerialization:
    def test_witness_lines(self):
        _, trace = reductive_sub(TOWER, T("Real"), T("Int|Flt"))
        text = format_derivation(synthesize(TOWER, trace))
        lines = text.splitlines()
        assert lines[0] == "SD-Trans: Real <: Int|Flt"
        assert lines[1] == "  witness: Int|Flt"
        assert any(line.strip().startswith("SD-AbsUnion") for line in lines)
