"""A short tour: tagged English in, Arabic out, then back through the
analyzer, into an index, and finally scored with BLEU.

    python3 demos/walkthrough.py
"""
from pathlib import Path

from arabic_transfer.analyzer import analyze
from arabic_transfer.bleu import sentence_bleu
from arabic_transfer.ir import build_index, search, search_bilingual
from arabic_transfer.lexicon import load_lexicon
from arabic_transfer.pipeline import translate

SENTENCES = [
    "I_PRP write_VBP",
    "the_DT big_JJ teachers_NNS wrote_VBD the_DT lessons_NNS",
    "the_DT girl_NN will_MD not_RB go_VB",
]

DOCS = [
    ("school", "المعلمون في المدرسة و المعلمات في المكتبة"),
    ("home", "كتب الولد درسه في البيت"),
    ("market", "باع الرجل الكتب في السوق"),
]


def main():
    lex = load_lexicon()

    print("translation")
    outputs = []
    for s in SENTENCES:
        result = translate(s, lex)
        outputs.append(result.text)
        print(f"  {s}\n    -> {result.text}")
        for _, word, rule in result.trace:
            print(f"       {word}\t{rule}")

    print("\nanalysis of the last output")
    for word in outputs[-1].split():
        best = analyze(word, lex).best
        print(f"  {word}\t{best.describe()}")

    print("\nretrieval")
    # lemmas are root citation forms, so كتاب also finds المكتبة and الكتب
    index = build_index(DOCS, lex)
    for query in ("معلم", "كتاب"):
        print(f"  {query}: {search(index, query, lex)}")
        print(f"  {query} (surface match): {search(index, query, lex, mode='word')}")
    print(f"  'teachers' (English): {search_bilingual(index, 'teachers', lex)}")

    print("\nBLEU")
    ref = "كتب المعلمون الكبار الدروس".split()
    for hyp in (outputs[1], "كتب المعلمون الدروس"):
        rep = sentence_bleu(hyp.split(), [ref])
        print(f"  {hyp}\t{rep.score:.3f}")


if __name__ == "__main__":
    main()
