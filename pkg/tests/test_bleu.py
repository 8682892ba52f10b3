import math
import random
from fractions import Fraction

import pytest

from arabic_transfer.bleu import (brevity_penalty, clipped_precision, closest_ref_length,
                                  compare, corpus_bleu, load_segments, sentence_bleu,
                                  tokenize)
from arabic_transfer.errors import InputError


def oracle_precision(cand, refs, n):
    """Brute-force modified precision: list scans instead of Counters."""
    grams = [tuple(cand[i:i + n]) for i in range(len(cand) - n + 1)]
    if not grams:
        return Fraction(0)
    clipped = 0
    for g in set(grams):
        in_ref = max(sum(1 for i in range(len(r) - n + 1) if tuple(r[i:i + n]) == g)
                     for r in refs)
        clipped += min(grams.count(g), in_ref)
    return Fraction(clipped, len(grams))


def test_against_oracle():
    rnd = random.Random(7)
    words = "a b c d".split()
    for _ in range(500):
        cand = [rnd.choice(words) for _ in range(rnd.randint(1, 9))]
        refs = [[rnd.choice(words) for _ in range(rnd.randint(1, 9))]
                for _ in range(rnd.randint(1, 3))]
        for n in (1, 2, 3):
            assert clipped_precision(cand, refs, n) == oracle_precision(cand, refs, n)


def test_brevity_penalty():
    assert brevity_penalty(10, 8) == 1.0
    assert brevity_penalty(8, 8) == 1.0
    assert brevity_penalty(7, 14) == pytest.approx(math.exp(-1))
    assert brevity_penalty(0, 3) == 0.0


def test_closest_reference_length_prefers_shorter_on_tie():
    assert closest_ref_length(5, [4, 6]) == 4
    assert closest_ref_length(5, [7, 5]) == 5


def test_identity_scores_one():
    s = "the cat sat on the mat".split()
    for n in (1, 2, 3, 4):
        assert sentence_bleu(s, [s], n=n, smoothing="none").score == pytest.approx(1.0)


def test_unsmoothed_formula():
    cand = "the cat sat on a mat today".split()
    ref = "the cat sat on the mat".split()
    rep = sentence_bleu(cand, [ref], n=2, smoothing="none")
    p1, p2 = rep.precisions
    assert rep.score == pytest.approx(math.sqrt(p1 * p2))


def test_zero_precision_without_smoothing():
    assert sentence_bleu(["a", "b"], [["c", "d"]], smoothing="none").score == 0.0


def test_cap_rule_on_two_token_segment():
    # the capped-order rule gives 1/2 where the published score is 0.71;
    # kept as an alternative smoothing
    rep = sentence_bleu("نكتب قصة".split(), ["نكتب القصة".split()], smoothing="cap")
    assert rep.score == pytest.approx(0.5)


def test_corpus_sums_counts():
    c = [["a", "b"], ["c"]]
    r = [[["a", "b"]], [["d"]]]
    rep = corpus_bleu(c, r, n=1, smoothing="none")
    assert rep.counts == [(2, 3)]
    with pytest.raises(InputError):
        corpus_bleu(c, r[:1])


def test_unknown_smoothing():
    with pytest.raises(InputError):
        sentence_bleu(["a"], [["a"]], smoothing="magic")


def test_tokenize_case():
    assert tokenize("The Cat") == ["the", "cat"]
    assert tokenize("The Cat", preserve_case=True) == ["The", "Cat"]


def test_files_and_compare(tmp_path):
    h = tmp_path / "h.txt"
    r = tmp_path / "r.txt"
    h2 = tmp_path / "h2.txt"
    h.write_text("المعلم الكبير\nستكتب\n", encoding="utf-8")
    h2.write_text("معلم كبير\nستكتب\n", encoding="utf-8")
    r.write_text("معلم كبير\nستكتب\n", encoding="utf-8")
    cands, refs = load_segments(h, [r])
    cands2, _ = load_segments(h2, [r])
    rows = compare(cands, cands2, refs)
    assert rows[0][0] == pytest.approx(0.5) and rows[0][1] == pytest.approx(1.0)
    assert rows[1][2] == 0
    (tmp_path / "short.txt").write_text("x\n", encoding="utf-8")
    with pytest.raises(InputError, match="line count mismatch"):
        load_segments(h, [tmp_path / "short.txt"])
