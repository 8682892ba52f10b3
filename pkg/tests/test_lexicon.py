import pytest

from arabic_transfer.errors import ResourceError
from arabic_transfer.lexicon import dump_lexicon, load_lexicon
from arabic_transfer.normalize import arabic_tokens, fold, normalize


def test_normalize_strips_vowels_and_tatweel():
    assert normalize("كُتِبَ") == "كتب"
    assert normalize("كـتـاب") == "كتاب"
    assert normalize("سريعاً") == "سريعا"


def test_normalize_keeps_hamza_unless_folded():
    assert normalize("أكتب") == "أكتب"
    assert fold("أكتب") == "اكتب"
    assert fold("إلى آخر") == "الى اخر"


def test_arabic_tokens_drops_punctuation():
    assert arabic_tokens("قال: \"الصدق\"، و الكذب.") == ["قال", "الصدق", "و", "الكذب"]


def test_lookup_and_senses(lex):
    e = lex.lookup_english("write", "verb")
    assert e.arabic_root == "كتب" and e.arabic_lemma == "كتب"
    assert lex.lookup_english("Write", "verb") is e
    assert lex.lookup_english("write", "noun") is None
    assert lex.lookup_english("teacher", "noun").plural_class == "regular-masculine"


def test_citation_form_is_first_entry_of_root(lex):
    assert lex.citation_form("علم") == "معلم"
    assert lex.citation_form("كتب") == "كتب"
    assert lex.citation_form("zzz") is None


def test_compatibility_tables(lex):
    # the article never takes an object pronoun, and the present prefixes
    # never follow a nominal proclitic
    assert not lex.compatibility("proclitic-prefix", "ال", "ي")
    assert lex.compatibility("proclitic-prefix", "و", "ي")


def test_dump_and_reload_round_trip(lex, tmp_path):
    dump_lexicon(lex, tmp_path)
    again = load_lexicon(tmp_path)
    assert again.entries == lex.entries
    assert again.stopwords == lex.stopwords
    assert again.schemes == lex.schemes
    assert again.clitics == lex.clitics


def test_missing_directory(tmp_path):
    with pytest.raises(ResourceError):
        load_lexicon(tmp_path / "absent")


def test_malformed_file_names_line(lex, tmp_path):
    dump_lexicon(lex, tmp_path)
    with open(tmp_path / "schemes.tsv", "a", encoding="utf-8") as fh:
        fh.write("فاعل\tx,y\n")
    with pytest.raises(ResourceError, match="schemes.tsv"):
        load_lexicon(tmp_path)


def test_environment_variable_selects_directory(lex, tmp_path, monkeypatch):
    dump_lexicon(lex, tmp_path)
    monkeypatch.setenv("ARABIC_TRANSFER_LEXICON", str(tmp_path))
    assert load_lexicon().source == str(tmp_path)


def _fresh(lex, tmp_path):
    dump_lexicon(lex, tmp_path)
    return tmp_path


def test_empty_scheme_file(lex, tmp_path):
    d = _fresh(lex, tmp_path)
    (d / "schemes.tsv").write_text("# nothing\n", encoding="utf-8")
    with pytest.raises(ResourceError, match="resource missing or empty: schemes"):
        load_lexicon(d)


def test_infix_position_beyond_length(lex, tmp_path):
    d = _fresh(lex, tmp_path)
    (d / "schemes.tsv").write_text("فاعل\t9\n", encoding="utf-8")
    with pytest.raises(ResourceError, match="exceeds length"):
        load_lexicon(d)


def test_duplicate_key_rejected_identical_row_merged(lex, tmp_path):
    d = _fresh(lex, tmp_path)
    rows = (d / "bilingual.tsv").read_text(encoding="utf-8").splitlines()
    first = next(r for r in rows if r and not r.startswith("#"))
    with open(d / "bilingual.tsv", "a", encoding="utf-8") as fh:
        fh.write(first + "\n")
    assert load_lexicon(d).entries == lex.entries
    cells = first.split("\t")
    cells[3] = "زززز"
    with open(d / "bilingual.tsv", "a", encoding="utf-8") as fh:
        fh.write("\t".join(cells) + "\n")
    with pytest.raises(ResourceError, match="duplicate entry"):
        load_lexicon(d)


def test_shipped_resources(lex):
    assert len(lex.clitics.proclitics) >= 21
    assert len(lex.clitics.enclitics) >= 13
    assert len(lex.entries) >= 150
    assert lex.lookup_english("book", "noun").arabic_lemma == "كتاب"
    assert lex.lookup_english("book", "noun").gender == "M"
    assert lex.lookup_english("zzzz", "noun") is None
    for s in lex.schemes:
        assert len(s.pattern) - len(s.infix_positions) == 3


def test_compatibility_is_pure(lex):
    calls = [lex.clitic_compat.compatible("أ", "ها") for _ in range(5)]
    assert len(set(calls)) == 1
