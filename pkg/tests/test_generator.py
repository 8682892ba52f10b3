import pytest

from arabic_transfer.errors import GenerationError
from arabic_transfer.features import FeatureBundle, Pronoun, nominal, verbal
from arabic_transfer.generator import (conjugate, inflect_noun, render_cardinal,
                                       render_number, render_ordinal, verb_form,
                                       verb_paradigm)

I = Pronoun(1, "N", "S")
HE = Pronoun(3, "M", "S")
SHE = Pronoun(3, "F", "S")
THEY = Pronoun(3, "M", "P")


@pytest.fixture
def write(lex):
    return lex.lookup_english("write", "verb")


@pytest.mark.parametrize("pronoun,tense,polarity,expected", [
    (I, "present", "affirmative", "أكتب"),
    (THEY, "past", "affirmative", "كتبوا"),
    (I, "present", "negative", "لا أكتب"),
    (I, "past", "negative", "لم أكتب"),
    (I, "future", "affirmative", "سأكتب"),
    (I, "future", "negative", "لن أكتب"),
    (Pronoun(3, "F", "S"), "future", "affirmative", "ستكتب"),
])
def test_conjugate(write, pronoun, tense, polarity, expected):
    assert conjugate(write, verbal(pronoun, tense, polarity)) == expected


def test_object_enclitic(write):
    assert conjugate(write, verbal(HE, obj=HE)) == "يكتبه"
    # وا loses its alif before an object
    assert conjugate(write, verbal(THEY, "past", obj=HE)) == "كتبوه"


def test_interrogative_particle_leads(write):
    assert verb_form(write, verbal(HE, "past", mood="interrogative")) == (["هل"], "كتب")


def test_weak_verbs(lex):
    stand = lex.lookup_english("stand", "verb")
    assert conjugate(stand, verbal(I, "past")) == "قمت"
    assert conjugate(stand, verbal(HE, "past")) == "قام"
    assert conjugate(stand, verbal(HE)) == "يقوم"
    arrive = lex.lookup_english("arrive", "verb")
    assert conjugate(arrive, verbal(HE)) == "يصل"
    forget = lex.lookup_english("forget", "verb")
    assert conjugate(forget, verbal(HE)) == "ينسى"
    assert conjugate(forget, verbal(THEY, "past")) == "نسوا"
    assert conjugate(stand, verbal(SHE, "past")) == "قامت"
    assert conjugate(forget, verbal(I, obj=HE)) == "أنساه"


def test_paradigm_has_thirteen_rows(write):
    for tense in ("present", "past", "future"):
        for polarity in ("affirmative", "negative"):
            forms = verb_paradigm(write, tense, polarity)
            assert len(forms) == 13 and all(forms)


def test_non_verb_rejected(lex):
    with pytest.raises(GenerationError):
        conjugate(lex.lookup_english("book", "noun"), verbal(HE))


def test_unsupported_tense(write):
    with pytest.raises(GenerationError, match="unsupported bundle"):
        conjugate(write, FeatureBundle(person=3, gender="M", number="S", tense="none"))


@pytest.mark.parametrize("english,bundle,expected", [
    ("book", nominal("S", "M", "definite"), "الكتاب"),
    ("teacher", nominal("P", "M", "definite", "nominative", True), "المعلمون"),
    ("teacher", nominal("P", "M", "definite", "accusative", True), "المعلمين"),
    ("teacher", nominal("S", "M", "indefinite", "accusative", True), "معلما"),
    ("teacher", nominal("B", "M", "indefinite"), "معلمان"),
    ("teacher", nominal("B", "M", "definite", "genitive"), "المعلمين"),
    ("book", nominal("S", "M", "indefinite", possessor=HE), "كتابه"),
    ("teacher", nominal("P", "M", "by-annexation", "nominative", True), "معلمو"),
])
def test_inflect_noun(lex, english, bundle, expected):
    assert inflect_noun(lex.lookup_english(english, "noun"), bundle) == expected


def test_feminine_adjective_and_plurals(lex):
    big = lex.lookup_english("big", "adjective")
    assert inflect_noun(big, nominal("S", "F", "indefinite")) == "كبيرة"
    assert inflect_noun(big, nominal("P", "F", "definite")) == "الكبيرات"
    assert inflect_noun(big, nominal("B", "F", "indefinite")) == "كبيرتان"


def test_no_article_with_possessor(lex):
    book = lex.lookup_english("book", "noun")
    word = inflect_noun(book, nominal("S", "M", "definite", possessor=HE))
    assert not word.startswith("ال")


def test_missing_broken_plural(lex):
    from dataclasses import replace
    book = replace(lex.lookup_english("book", "noun"), plural_class="broken", broken_plural="")
    with pytest.raises(GenerationError, match="broken plural"):
        inflect_noun(book, nominal("P", "M", "definite"))
    with pytest.raises(GenerationError):
        render_number(3, book)


def test_numbers(lex):
    teacher = lex.lookup_english("teacher", "noun")
    assert render_number(2, teacher) == "معلمان"
    assert render_cardinal(1435) == "ألف و أربع مائة و خمس و ثلاثون"
    assert render_ordinal(1, "M") == "الأول"
