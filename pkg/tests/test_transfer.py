import pytest

from arabic_transfer.errors import ParseError, TransferError, UnknownWordError
from arabic_transfer.features import Pronoun
from arabic_transfer.tagged import parse_tagged, split_sentences
from arabic_transfer.transfer_morph import detect_tense, english_number, transfer_clause
from arabic_transfer.transfer_syntax import (ClausePlan, attach_proclitic, nominal_particles,
                                             order_noun_phrase, plan_clause, render,
                                             reverse_adjectives, verbal_particles)


def clause(text, lex, **kw):
    return transfer_clause(parse_tagged(text), lex, **kw)


def by_role(c, role):
    return [s for s in c.slots if s.role == role]


# tagged input

def test_parse_tagged():
    toks = parse_tagged("I_PRP wrote_VBD")
    assert [(t.surface, t.tag) for t in toks] == [("I", "PRP"), ("wrote", "VBD")]
    assert len(parse_tagged("the_DT big_JJ car_NN")) == 3


@pytest.mark.parametrize("bad", ["hello", "boy_XYZ"])
def test_parse_errors(bad):
    with pytest.raises(ParseError, match="token 0"):
        parse_tagged(bad)


def test_split_sentences():
    toks = parse_tagged("I_PRP write_VBP ._. he_PRP writes_VBZ")
    assert len(split_sentences(toks)) == 2


@pytest.mark.parametrize("text,expected", [
    ("he_PRP does_VBZ not_RB write_VB", ("present", "negative", "declarative")),
    ("Will_MD the_DT boy_NN write_VB the_DT lesson_NN ?_.", ("future", "affirmative", "interrogative")),
    ("he_PRP writes_VBZ", ("present", "affirmative", "declarative")),
    ("he_PRP wrote_VBD", ("past", "affirmative", "declarative")),
    ("I_PRP will_MD write_VB", ("future", "affirmative", "declarative")),
    ("he_PRP did_VBD not_RB write_VB", ("past", "negative", "declarative")),
])
def test_detect_tense(text, expected):
    assert detect_tense(parse_tagged(text)) == expected


def test_english_number():
    assert english_number("one thousand four hundred thirty five".split()) == 1435
    assert english_number(["two"]) == 2


# morphological transfer

def test_verbal_clause_bundles(lex):
    c = clause("the_DT boy_NN writes_VBZ the_DT lesson_NN", lex)
    [verb] = by_role(c, "verb")
    [subj] = by_role(c, "subject")
    [obj] = by_role(c, "object")
    assert verb.entry.arabic_root == "كتب"
    assert (verb.bundle.person, verb.bundle.gender, verb.bundle.number) == (3, "M", "S")
    assert verb.bundle.tense == "present"
    assert (subj.entry.arabic_lemma, subj.bundle.definiteness, subj.bundle.case) == \
        ("ولد", "definite", "nominative")
    assert (obj.entry.arabic_lemma, obj.bundle.definiteness, obj.bundle.case) == \
        ("درس", "definite", "accusative")


def test_feminine_subject_agreement(lex):
    c = clause("the_DT girl_NN wrote_VBD the_DT lesson_NN", lex)
    [verb] = by_role(c, "verb")
    assert verb.bundle.gender == "F" and verb.bundle.tense == "past"


def test_possessive(lex):
    c = clause("his_PRP$ book_NN", lex)
    [head] = by_role(c, "head")
    assert head.entry.arabic_lemma == "كتاب"
    assert head.bundle.possessor == Pronoun(3, "M", "S")


def test_saxon_genitive_becomes_annexation(lex):
    c = clause("student_NN 's_POS book_NN", lex)
    head, annexed = c.slots
    assert head.entry.arabic_lemma == "كتاب" and head.bundle.definiteness == "by-annexation"
    assert annexed.entry.arabic_lemma == "تلميذ" and annexed.bundle.definiteness == "definite"


def test_passive(lex):
    c = clause("the_DT teachers_NNS were_VBD honored_VBN", lex)
    assert c.rule == "passive-agentless" and c.passive


def test_dual_cues(lex):
    for text in ("the_DT two_CD teachers_NNS write_VBP", "both_DT teachers_NNS write_VBP"):
        c = clause(text, lex)
        [subj] = by_role(c, "subject")
        assert subj.bundle.number == "B", text


def test_pronoun_absorption(lex):
    c = clause("he_PRP writes_VBZ it_PRP", lex)
    assert [s.role for s in c.slots] == ["verb"]
    assert c.slots[0].bundle.object_enclitic == Pronoun(3, "M", "S")


def test_case_discipline(lex):
    c = clause("the_DT teachers_NNS explain_VBP the_DT lessons_NNS", lex)
    subjects = [s for s in c.slots if s.role == "subject"]
    assert len(subjects) == 1 and subjects[0].bundle.case == "nominative"
    assert all(s.bundle.case != "nominative" for s in c.slots if s.role == "object")


def test_adjective_agreement(lex):
    c = clause("the_DT big_JJ teachers_NNS", lex)
    [head] = by_role(c, "head")
    [adj] = by_role(c, "adjective")
    for trait in ("gender", "number", "definiteness", "case"):
        assert getattr(adj.bundle, trait) == getattr(head.bundle, trait), trait


def test_unknown_word(lex):
    with pytest.raises(UnknownWordError, match="zzzz"):
        clause("the_DT zzzz_NN writes_VBZ", lex)
    c = clause("the_DT zzzz_NN writes_VBZ", lex, strict=False)
    assert c.warnings


def test_no_rule(lex):
    with pytest.raises(TransferError, match="no rule for structure"):
        clause("quickly_RB quickly_RB", lex)


# syntactic transfer

def test_particle_matrix():
    assert nominal_particles("present", "affirmative", "declarative", "M") == []
    assert nominal_particles("past", "affirmative", "declarative", "F") == ["كانت"]
    assert nominal_particles("future", "affirmative", "declarative", "M") == ["سيصبح"]
    assert nominal_particles("present", "negative", "declarative", "F") == ["ليست"]
    assert nominal_particles("past", "negative", "declarative", "M") == ["لم", "يكن"]
    assert nominal_particles("future", "negative", "interrogative", "M") == ["هل", "لن", "يصبح"]
    assert verbal_particles("past", "negative", "interrogative") == ["هل", "لم"]


def test_reverse_adjectives_involution():
    xs = ["beautiful", "big"]
    assert reverse_adjectives(xs) == ["big", "beautiful"]
    assert reverse_adjectives(reverse_adjectives(xs)) == xs


def test_order_noun_phrase(lex):
    c = clause("a_DT beautiful_JJ big_JJ car_NN", lex)
    ordered = order_noun_phrase(c.slots)
    assert [s.role for s in ordered] == ["head", "adjective", "adjective"]
    assert [s.entry.english_lemma for s in ordered[1:]] == ["big", "beautiful"]


def test_verb_first(lex):
    c = clause("the_DT boy_NN will_MD write_VB the_DT lesson_NN", lex)
    plan = plan_clause(c.slots, c.tense, c.polarity, c.mood, c.kind)
    assert plan.roles[0] == "verb"


def test_render():
    assert render(ClausePlan("phrase"), []) == ""
    assert attach_proclitic("ل", "الكتاب") == "للكتاب"
    assert attach_proclitic("ب", "الكتاب") == "بالكتاب"
    assert render(ClausePlan("verbal", ["هل"], terminal="؟"), ["كتب", "ب-", "القلم"]) == "هل كتب بالقلم؟"
