"""Arabic word analysis: clitic and affix stripping, scheme matching, root
extraction and lemma assignment.

A surface word is read as ``proclitic + prefix + base + suffix + enclitic``.
Clitics are stripped first, then affixes; every combination allowed by the
inventories and compatibility tables is kept as a candidate and the
candidates are ranked deterministically.
"""
from dataclasses import dataclass

from .errors import InputError
from .features import FeatureBundle, Pronoun
from .normalize import normalize

MIN_ROOTED = 3


@dataclass(frozen=True)
class Segmentation:
    proclitic: str
    prefix: str
    base: str
    suffix: str
    enclitic: str
    scheme: object = None
    root: str = None
    lemma: str = ""
    restored: bool = False      # root recovered from a lexicon verb, see _weak_roots

    @property
    def parts(self):
        return (self.proclitic, self.prefix, self.base, self.suffix, self.enclitic)

    @property
    def surface(self):
        return "".join(self.parts)

    @property
    def stripped(self):
        return len(self.surface) - len(self.base)

    def is_trivial(self):
        return self.base == self.surface

    def __str__(self):
        return "|".join(self.parts)

    def describe(self):
        return (f"{self} root={self.root or '-'} scheme={self.scheme or '-'} "
                f"lemma={self.lemma}")

    def as_dict(self):
        return {"proclitic": self.proclitic, "prefix": self.prefix, "base": self.base,
                "suffix": self.suffix, "enclitic": self.enclitic,
                "scheme": str(self.scheme) if self.scheme else None,
                "root": self.root, "lemma": self.lemma, "restored": self.restored}


@dataclass(frozen=True)
class AnalysisResult:
    word: str
    candidates: tuple
    chosen: int = 0

    @property
    def best(self):
        return self.candidates[self.chosen]


def segment(word, lex):
    """All (proclitic, base1, enclitic) splits allowed by the clitic tables,
    longest clitics first.  The trivial split is always present."""
    if not word:
        raise InputError("empty token")
    inv = lex.clitics
    out = []
    for p in inv.proclitics:
        if not word.startswith(p):
            continue
        rest = word[len(p):]
        for e in inv.enclitics:
            if e and not rest.endswith(e):
                continue
            base1 = rest[:len(rest) - len(e)]
            if not base1:
                continue
            if not lex.clitic_compat.compatible(p, e):
                continue
            out.append((p, base1, e))
    if (("", word, "")) not in out:
        out.append(("", word, ""))
    out.sort(key=lambda c: (-(len(c[0]) + len(c[2])), c[0], c[2]))
    return out


def split_affixes(base1, lex):
    """(prefix, base, suffix) splits of a clitic-free stem."""
    inv = lex.clitics
    out = []
    for x in inv.prefixes:
        if not base1.startswith(x):
            continue
        rest = base1[len(x):]
        for s in inv.suffixes:
            if s and not rest.endswith(s):
                continue
            base = rest[:len(rest) - len(s)]
            if not base or not lex.affix_compat.compatible(x, s):
                continue
            out.append((x, base, s))
    return out


def match_scheme(base, lex):
    """(scheme, root) for every scheme of the right length that agrees with
    ``base`` at all of its infix positions."""
    return [(s, s.root_of(base)) for s in lex.schemes if s.matches(base)]


def _weak_roots(base, madda=False):
    """(root, verb class) guesses for a base whose weak letter was dropped,
    lengthened or rewritten by inflection."""
    if madda:
        # أ + أ written آ: the prefix swallowed the root's first hamza
        return [("أ" + base, "sound")] if len(base) == 2 else []
    out = []
    if len(base) == 2:
        f, l = base
        out += [(f + "و" + l, "hollow"), (f + "ي" + l, "hollow"), ("و" + base, "assimilated"),
                (base + "ي", "defective"), (base + "و", "defective")]
    elif len(base) == 3:
        f, a, l = base
        if a in "اوي":
            out += [(f + "و" + l, "hollow"), (f + "ي" + l, "hollow")]
        if l in "ىاوي":
            out += [(f + a + "ي", "defective"), (f + a + "و", "defective")]
    return out


def _restore(p, x, base, s, e, lex):
    madda = x == "آ"
    for root, vc in _weak_roots(base, madda):
        if any(v.pos_class == "verb" and (v.verb_class or "sound") == vc
               for v in lex.entries_for_root(root)):
            yield Segmentation(p, x, base, s, e, None, root, _lemma(root, base, lex), True)


def _madda_splits(base1, lex):
    # the inventories spell the first-person prefix أ; a stem that itself
    # starts with أ fuses with it into آ
    if not base1.startswith("آ"):
        return []
    rest = base1[1:]
    return [("آ", rest[:len(rest) - len(s)], s) for s in lex.clitics.suffixes
            if (not s or rest.endswith(s)) and len(rest) > len(s)
            and lex.affix_compat.compatible("أ", s)]


def _lemma(root, base, lex):
    if root is not None:
        cite = lex.citation_form(root)
        if cite:
            return cite
    return base


def _rank(seg, lex):
    known = seg.root is not None and lex.knows_root(seg.root)
    validated = seg.scheme is not None or seg.restored
    return (0 if validated else 1, 0 if known else 1, -seg.stripped,
            seg.root or "", seg.parts)


def analyze(word, lex, normalized=False):
    """Every candidate analysis of ``word`` ordered by preference."""
    w = word if normalized else normalize(word)
    if not w:
        raise InputError("empty token")
    trivial = Segmentation("", "", w, "", "", lemma=w)
    if len(w) < MIN_ROOTED:
        return AnalysisResult(w, (trivial,), 0)
    cands = set()
    for p, base1, e in segment(w, lex):
        for x, base, s in split_affixes(base1, lex) + _madda_splits(base1, lex):
            if not lex.clitic_affix_compat.compatible(p, "أ" if x == "آ" else x):
                continue
            cands.update(_restore(p, x, base, s, e, lex))
            matches = match_scheme(base, lex) if len(base) >= MIN_ROOTED else []
            if not matches:
                cands.add(Segmentation(p, x, base, s, e, None, None, base))
            for scheme, root in matches:
                cands.add(Segmentation(p, x, base, s, e, scheme, root,
                                       _lemma(root, base, lex)))
    cands.add(trivial)
    ranked = sorted(cands, key=lambda c: _rank(c, lex))
    if ranked[0].scheme is None and not ranked[0].restored:
        # nothing validated by a scheme or the lexicon: keep the word whole
        ranked.remove(trivial)
        ranked.insert(0, trivial)
    return AnalysisResult(w, tuple(ranked), 0)


def lemmatize(word, lex):
    return analyze(word, lex).best.lemma


# trait maps for constituents; unknown constituents carry nothing

_PRESENT_PREFIX = {"أ": (1, "N"), "ت": (2, None), "ي": (3, "M"), "ن": (1, "N")}
_PRESENT_SUFFIX = {"": "S", "ان": "B", "ون": "P", "ين": "S", "ن": "P", "ا": "B", "وا": "P", "و": "P", "ي": "S"}
_PAST_SUFFIX = {
    "وا": Pronoun(3, "M", "P"), "و": Pronoun(3, "M", "P"), "تما": Pronoun(2, "N", "B"),
    "تم": Pronoun(2, "M", "P"),
    "تن": Pronoun(2, "F", "P"), "نا": Pronoun(1, "N", "P"), "تا": Pronoun(3, "F", "B"),
}
_NOUN_SUFFIX = {
    "ة": ("S", "F", None), "ات": ("P", "F", None), "ون": ("P", "M", "nominative"),
    "ين": ("P", "M", None), "ان": ("B", None, "nominative"), "تان": ("B", "F", "nominative"),
    "تين": ("B", "F", None), "ية": ("S", "F", None), "يات": ("P", "F", None),
}
ENCLITIC_PRONOUNS = {
    "ني": Pronoun(1, "N", "S"), "ي": Pronoun(1, "N", "S"), "ك": Pronoun(2, "M", "S"),
    "كما": Pronoun(2, "N", "B"), "كم": Pronoun(2, "M", "P"), "كن": Pronoun(2, "F", "P"),
    "ه": Pronoun(3, "M", "S"), "ها": Pronoun(3, "F", "S"), "نا": Pronoun(1, "N", "P"),
    "هما": Pronoun(3, "N", "B"), "هم": Pronoun(3, "M", "P"), "هن": Pronoun(3, "F", "P"),
}


def features_of(seg):
    """Traits carried by the constituents of one segmentation."""
    t = {}
    p = seg.proclitic
    if p.startswith("أ"):
        t["interrogative"] = True
        t["mood"] = "interrogative"
    if "س" in p:
        t["tense"] = "future"
    if "ال" in p or p == "لل" or p.endswith("لل"):
        t["definiteness"] = "definite"
    verbal = bool(seg.prefix) and seg.prefix in _PRESENT_PREFIX
    if verbal:
        person, gender = _PRESENT_PREFIX[seg.prefix]
        t.setdefault("tense", "present")
        t["person"] = person
        number = _PRESENT_SUFFIX.get(seg.suffix)
        if seg.prefix == "أ":
            number = "S"
        elif seg.prefix == "ن":
            number = "P"
        if number:
            t["number"] = number
        if seg.suffix in ("ين", "ن") and seg.prefix in ("ت", "ي"):
            gender = "F"
        if seg.suffix in ("ون", "وا", "و") and seg.prefix in ("ت", "ي"):
            gender = "M"
        if gender:
            t["gender"] = gender
    elif seg.suffix in _PAST_SUFFIX and seg.scheme is not None:
        pr = _PAST_SUFFIX[seg.suffix]
        t.update(tense="past", person=pr.person, gender=pr.gender, number=pr.number)
        verbal = True
    elif seg.suffix in _NOUN_SUFFIX:
        number, gender, case = _NOUN_SUFFIX[seg.suffix]
        t["number"] = number
        if gender:
            t["gender"] = gender
        if case:
            t["case"] = case
    if seg.enclitic in ENCLITIC_PRONOUNS:
        pr = ENCLITIC_PRONOUNS[seg.enclitic]
        if verbal:
            t["object_enclitic"] = pr
        else:
            t["possessor"] = pr
    return FeatureBundle(**t)
