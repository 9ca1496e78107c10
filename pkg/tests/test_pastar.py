import re

import pytest

from intuitionist import pastar
from intuitionist.pastar import (
    MP,
    OMEGA,
    Eq,
    Forall,
    Gen,
    Imp,
    LogicAxiom,
    Lt,
    Not,
    Num,
    NumeralFact,
    OmegaGt,
    PAAxiom,
    Plus,
    ProofError,
    ProofSyntaxError,
    Succ,
    Var,
    check,
    collect_omega_instances,
    eliminate_omega,
    parse_formula,
    parse_proof,
    proof_from_lines,
)

from conftest import FIXTURES

GOOD = ["omega_5_9", "omega_zero", "identity_5", "omega_free", "omega_arith"]
BAD = {
    "bad_forward": "forward-reference",
    "bad_binding": "binding-mismatch",
    "bad_omega": "schema-mismatch",
    "bad_numfact": "false-numeral-fact",
}


def load(name):
    return parse_proof((FIXTURES / f"{name}.proof").read_text(encoding="utf-8"))


def omega_tokens(text):
    return re.findall(r"(?<![\w])w(?![\w])", text)


class TestSyntax:
    @pytest.mark.parametrize(
        "text",
        ["(= 0 0)", "(< (num 5) w)", "(forall x (imp (= x 0) (not (< x 0))))", "(= (* (s y) (num 3)) (+ y w))"],
    )
    def test_formula_round_trip(self, text):
        assert str(parse_formula(text)) == text

    def test_successor_folds_into_numerals(self):
        assert parse_formula("(= (s (s 0)) (num 2))") == Eq(Num(2), Num(2))
        assert parse_formula("(= (s w) 0)") == Eq(Succ(OMEGA), Num(0))

    @pytest.mark.parametrize("text", ["(= 0)", "(< 0 0 0)", "(forall w (= 0 0))", "(= x", "(and (= 0 0))", "(= (num -1) 0)"])
    def test_bad_formulas(self, text):
        with pytest.raises(ValueError):
            parse_formula(text)

    def test_proof_round_trip(self):
        for name in GOOD:
            proof = load(name)
            assert parse_proof(pastar.format_proof(proof)) == proof

    def test_broken_file(self):
        with pytest.raises(ProofSyntaxError) as info:
            load("broken")
        assert info.value.lineno == 1

    @pytest.mark.parametrize(
        "line",
        ["1 | (= 0 0)", "x | (= 0 0) | NUMFACT", "1 | (= 0 0) | MP 1", "1 | (= 0 0) | FOO", "1 | (= 0 0) | LOGIC K A"],
    )
    def test_bad_lines(self, line):
        with pytest.raises(ProofSyntaxError):
            parse_proof(line)


class TestCheck:
    @pytest.mark.parametrize("name", GOOD)
    def test_good_fixtures(self, name):
        check(load(name))

    @pytest.mark.parametrize("name,kind", sorted(BAD.items()))
    def test_negative_fixtures(self, name, kind):
        with pytest.raises(ProofError) as info:
            check(load(name))
        assert info.value.kind == kind

    def test_forward_reference_message(self):
        with pytest.raises(ProofError, match="forward reference"):
            check(load("bad_forward"))

    def test_omega_mismatch_message(self):
        with pytest.raises(ProofError, match="schema instance mismatch"):
            check(load("bad_omega"))

    def test_mp_mismatch(self):
        p = proof_from_lines(
            [
                (Lt(Num(1), OMEGA), OmegaGt(1)),
                (Imp(Lt(Num(2), OMEGA), Lt(Num(2), OMEGA)), LogicAxiom("ID", (("A", Lt(Num(2), OMEGA)),))),
                (Lt(Num(2), OMEGA), MP(1, 2)),
            ]
        )
        with pytest.raises(ProofError) as info:
            check(p)
        assert info.value.kind == "mp-mismatch" and info.value.index == 3

    def test_missing_line(self):
        p = proof_from_lines([(Lt(Num(1), OMEGA), MP(7, 8))])
        with pytest.raises(ProofError) as info:
            check(p)
        assert info.value.kind == "unknown-line"

    def test_unknown_scheme(self):
        with pytest.raises(ProofError) as info:
            check(parse_proof("1 | (= 0 0) | PA MAGIC t=0"))
        assert info.value.kind == "unknown-scheme"

    def test_not_an_instance(self):
        with pytest.raises(ProofError) as info:
            check(parse_proof("1 | (= (+ 0 0) (num 1)) | PA ADD_ZERO t=0"))
        assert info.value.kind == "not-an-instance"

    def test_instantiation_capture_rejected(self):
        # (forall x (forall y (< x y))) -> (forall y (< y y)) would capture
        text = "1 | (imp (forall x (forall y (< x y))) (forall y (< y y))) | LOGIC INST A=(forall y (< x y)) x=x t=y"
        with pytest.raises(ProofError) as info:
            check(parse_proof(text))
        assert info.value.kind == "side-condition"

    def test_qimp_side_condition(self):
        ok = "1 | (imp (forall x (imp (= 0 0) (= x x))) (imp (= 0 0) (forall x (= x x)))) | LOGIC QIMP A=(= 0 0) B=(= x x) x=x"
        check(parse_proof(ok))
        bad = "1 | (imp (forall x (imp (= x 0) (= x x))) (imp (= x 0) (forall x (= x x)))) | LOGIC QIMP A=(= x 0) B=(= x x) x=x"
        with pytest.raises(ProofError):
            check(parse_proof(bad))

    def test_induction_and_generalization(self):
        # forall x: 0 + x = x, via induction on x
        A = parse_formula("(= (+ 0 x) x)")
        step = parse_formula("(imp (= (+ 0 x) x) (= (+ 0 (s x)) (s x)))")
        ind = PAAxiom("IND", (("A", A), ("x", "x")))
        expected = Imp(
            parse_formula("(= (+ 0 0) 0)"),
            Imp(Forall("x", step), Forall("x", A)),
        )
        p = proof_from_lines([(expected, ind)])
        check(p)

    def test_false_and_open_numfacts(self):
        for text in ["1 | (= (num 2) (num 3)) | NUMFACT", "1 | (< x (num 3)) | NUMFACT", "1 | (< 0 w) | NUMFACT"]:
            with pytest.raises(ProofError) as info:
                check(parse_proof(text))
            assert info.value.kind == "false-numeral-fact"
        check(parse_proof("1 | (not (= (* (num 2) (num 3)) (+ (num 2) (num 3)))) | NUMFACT"))

    def test_gen_mismatch(self):
        p = proof_from_lines(
            [
                (Eq(Plus(Var("x"), Num(0)), Var("x")), PAAxiom("ADD_ZERO", (("t", Var("x")),))),
                (Forall("y", Eq(Var("x"), Var("x"))), Gen(1, "y")),
            ]
        )
        with pytest.raises(ProofError) as info:
            check(p)
        assert info.value.kind == "gen-mismatch"


class TestOmegaElimination:
    def test_instances(self):
        assert collect_omega_instances(load("omega_5_9")) == {5, 9}
        assert collect_omega_instances(load("omega_free")) == frozenset()
        dup = parse_proof("1 | (< (num 5) w) | OMEGA 5\n2 | (< (num 5) w) | OMEGA 5\n")
        assert collect_omega_instances(dup) == {5}

    def test_unchecked_input_rejected(self):
        with pytest.raises(ProofError):
            collect_omega_instances(load("bad_omega"))
        with pytest.raises(ProofError):
            eliminate_omega(load("bad_numfact"))

    def test_5_9(self):
        proof = load("omega_5_9")
        assert pastar.omega_report(proof).m == 10
        out = eliminate_omega(proof)
        check(out)
        assert not pastar.contains_omega(out)
        assert not omega_tokens(pastar.format_proof(out))
        facts = [line for line in out.lines if isinstance(line.just, NumeralFact)]
        assert [str(line.formula) for line in facts] == ["(< (num 5) (num 10))", "(< (num 9) (num 10))"]
        assert out.conclusion == proof.conclusion  # conclusion is w-free

    def test_zero_instance(self):
        out = eliminate_omega(load("omega_zero"))
        assert out.conclusion == Lt(Num(0), Num(1))
        assert isinstance(out.lines[0].just, NumeralFact)

    def test_omega_free_unchanged(self):
        proof = load("omega_free")
        assert eliminate_omega(proof) == proof

    def test_conclusion_is_substituted(self):
        for name in GOOD:
            proof = load(name)
            m = pastar.omega_report(proof).m
            out = eliminate_omega(proof)
            assert out.conclusion == pastar.replace_omega(proof.conclusion, Num(m))

    def test_numeral_facts_true_by_evaluation(self):
        for name in GOOD:
            out = eliminate_omega(load(name))
            for line in out.lines:
                if isinstance(line.just, NumeralFact):
                    f = line.formula
                    assert pastar.evaluate_term(f.left) < pastar.evaluate_term(f.right)

    def test_arith_bindings_substituted(self):
        out = eliminate_omega(load("omega_arith"))
        assert str(out.lines[1]) == "2 | (< (num 3) (num 4)) | PA LT_SUCC t=(num 3)"
