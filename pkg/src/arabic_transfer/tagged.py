"""POS-tagged English input (``word_TAG`` items) and English lemmatization."""
from dataclasses import dataclass

from .errors import ParseError

TAGS = (
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",
    "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP",
    "WP$", "WRB",
)
TAG_SET = frozenset(TAGS)
PUNCT = {"?": ".", ".": ".", "!": ".", ",": ",", ";": ",", ":": ","}


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str

    @property
    def lower(self):
        return self.surface.lower()

    def __str__(self):
        return f"{self.surface}_{self.tag}"


def parse_tagged(text):
    """Split ``word_TAG`` items.  Bare punctuation and punctuation tagged
    with itself (``?_.``) are kept as tokens with a punctuation tag."""
    out = []
    for i, item in enumerate(text.split()):
        if item in PUNCT:
            out.append(TaggedToken(item, PUNCT[item]))
            continue
        word, sep, tag = item.rpartition("_")
        if not sep or not word:
            raise ParseError(f"token {i}: expected word_TAG, got {item!r}", i)
        if word in PUNCT and tag in (".", ",", ":", word):
            out.append(TaggedToken(word, PUNCT[word]))
            continue
        if tag not in TAG_SET:
            raise ParseError(f"token {i}: unknown tag {tag!r} in {item!r}", i)
        out.append(TaggedToken(word, tag))
    return out


def split_sentences(tokens):
    """Clauses end at sentence punctuation; the punctuation stays with its
    clause."""
    out, cur = [], []
    for t in tokens:
        cur.append(t)
        if t.tag == "." :
            out.append(cur)
            cur = []
    if cur:
        out.append(cur)
    return out


# English lemmatization

IRREGULAR = {
    "wrote": "write", "written": "write", "ate": "eat", "eaten": "eat",
    "saw": "see", "seen": "see", "men": "man", "women": "woman",
    "children": "child", "people": "people", "was": "be", "were": "be",
    "is": "be", "are": "be", "am": "be", "been": "be", "being": "be",
    "did": "do", "does": "do", "done": "do", "has": "have", "had": "have",
    "went": "go", "gone": "go", "took": "take", "taken": "take",
    "read": "read", "sat": "sit", "drank": "drink", "drunk": "drink",
    "heard": "hear", "understood": "understand", "left": "leave",
    "found": "find", "stood": "stand", "said": "say", "led": "lead",
    "sold": "sell", "slept": "sleep", "ran": "run", "built": "build",
    "forgot": "forget", "forgotten": "forget", "threw": "throw",
    "thrown": "throw", "cut": "cut", "hit": "hit", "rode": "ride",
    "ridden": "ride", "stole": "steal", "stolen": "steal", "won": "win",
    "knives": "knife", "feet": "foot", "teeth": "tooth", "mice": "mouse",
    "better": "good", "best": "good",
}


def _candidates(word):
    yield word
    if word.endswith("ies") and len(word) > 4:
        yield word[:-3] + "y"
    if word.endswith("ied") and len(word) > 4:
        yield word[:-3] + "y"
    for suf in ("es", "s", "ed", "d", "ing"):
        if word.endswith(suf) and len(word) > len(suf) + 1:
            stem = word[:-len(suf)]
            yield stem
            if suf in ("ed", "ing") and len(stem) > 2 and stem[-1] == stem[-2]:
                yield stem[:-1]
            if suf == "ing":
                yield stem + "e"


def english_lemma(word, known=None):
    """Lemma of an inflected English word.  ``known`` is an optional
    predicate telling which lemmas the lexicon has; the first candidate it
    accepts wins, otherwise the most conservative reduction is returned."""
    w = word.lower()
    if w in IRREGULAR:
        return IRREGULAR[w]
    cands = list(_candidates(w))
    if known is not None:
        for c in cands:
            if known(c):
                return c
        return w
    return cands[1] if len(cands) > 1 else w
