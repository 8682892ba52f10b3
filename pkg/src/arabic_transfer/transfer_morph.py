"""Word-level transfer: tagged English clause -> slots carrying a lexicon
entry and a feature bundle each.

The clause is first cut into chunks (noun phrases, verb groups, copulas,
prepositional phrases, adverbs, numbers).  The chunk sequence is matched
against the clause rule table; the winning rule assigns grammatical
functions, and agreement is then propagated into the bundles.  Word order
is left to ``transfer_syntax``.
"""
import re
from dataclasses import dataclass, field, replace

from .errors import TransferError, UnknownWordError
from .features import FeatureBundle, Pronoun
from .lexicon import LexEntry
from .tagged import english_lemma, parse_tagged

SUBJECT_PRONOUNS = {
    "i": Pronoun(1, "N", "S"), "you": Pronoun(2, "M", "S"), "he": Pronoun(3, "M", "S"),
    "she": Pronoun(3, "F", "S"), "it": Pronoun(3, "M", "S"), "we": Pronoun(1, "N", "P"),
    "they": Pronoun(3, "M", "P"),
}
OBJECT_PRONOUNS = {
    "me": Pronoun(1, "N", "S"), "you": Pronoun(2, "M", "S"), "him": Pronoun(3, "M", "S"),
    "her": Pronoun(3, "F", "S"), "it": Pronoun(3, "M", "S"), "us": Pronoun(1, "N", "P"),
    "them": Pronoun(3, "M", "P"),
}
POSSESSIVE_PRONOUNS = {
    "my": Pronoun(1, "N", "S"), "your": Pronoun(2, "M", "S"), "his": Pronoun(3, "M", "S"),
    "her": Pronoun(3, "F", "S"), "its": Pronoun(3, "M", "S"), "our": Pronoun(1, "N", "P"),
    "their": Pronoun(3, "M", "P"),
}
# every reading the paradigm tables offer for the underspecified pronouns
PRONOUN_READINGS = {
    "you": (Pronoun(2, "M", "S"), Pronoun(2, "F", "S"), Pronoun(2, "N", "B"),
            Pronoun(2, "M", "P"), Pronoun(2, "F", "P")),
    "they": (Pronoun(3, "M", "P"), Pronoun(3, "F", "P"), Pronoun(3, "M", "B"),
             Pronoun(3, "F", "B")),
}

DEFINITE_DT = {"the"}
INDEFINITE_DT = {"a", "an"}
DUAL_DT = {"both"}
NEGATORS = {"not", "n't"}
COMPANION = {"with": "مع"}
BE = "be"
VERB_TAGS = {"MD", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
NOUN_TAGS = {"NN", "NNS", "NNP", "NNPS"}

NUMBER_WORDS = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4, "five": 5, "six": 6,
    "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11, "twelve": 12,
    "thirteen": 13, "fourteen": 14, "fifteen": 15, "sixteen": 16,
    "seventeen": 17, "eighteen": 18, "nineteen": 19, "twenty": 20,
    "thirty": 30, "forty": 40, "fifty": 50, "sixty": 60, "seventy": 70,
    "eighty": 80, "ninety": 90,
}
SCALES = {"hundred": 100, "thousand": 1000, "million": 1000000}
ORDINAL_WORDS = {"first": 1, "second": 2, "third": 3, "fourth": 4, "fifth": 5,
                 "sixth": 6, "seventh": 7, "eighth": 8, "ninth": 9, "tenth": 10}


def english_number(words):
    """Value of a cardinal written as words or digits, e.g. "one thousand
    four hundred thirty five" -> 1435."""
    total, cur = 0, 0
    for w in words:
        w = w.lower().replace(",", "")
        if w.isdigit():
            cur += int(w)
        elif w in NUMBER_WORDS:
            cur += NUMBER_WORDS[w]
        elif w in SCALES:
            scale = SCALES[w]
            if scale == 100:
                cur = max(cur, 1) * 100
            else:
                total += max(cur, 1) * scale
                cur = 0
        elif w == "and":
            continue
        else:
            raise TransferError(f"not a number word: {w}")
    return total + cur


@dataclass
class Slot:
    """One target word (or fixed word group) with its provenance."""
    role: str
    entry: LexEntry = None
    bundle: FeatureBundle = None
    rule: str = ""
    phrase: int = None
    tokens: tuple = ()
    count: int = None
    ordinal: int = None
    text: str = None
    clitic: str = None
    unknown: bool = False
    member: int = 0

    def describe(self):
        lemma = self.entry.arabic_lemma if self.entry else (self.text or "")
        return f"{self.role}:{lemma} {self.bundle or ''} [{self.rule}]".strip()


@dataclass
class NounPhrase:
    tokens: list
    head: LexEntry = None
    head_token: object = None
    pronoun: Pronoun = None
    definiteness: str = None          # definite / indefinite / None for bare
    number: str = "S"
    adjectives: list = field(default_factory=list)
    ordinal: int = None
    count: int = None
    possessor: Pronoun = None
    annex: list = field(default_factory=list)   # following terms of an annexation chain
    conj: list = field(default_factory=list)    # coordinated sibling phrases
    cardinal: int = None                        # free-standing number
    unknown: bool = False

    @property
    def gender(self):
        if self.pronoun is not None:
            return self.pronoun.gender
        return self.head.gender if self.head and self.head.gender in ("M", "F") else "M"

    @property
    def human(self):
        if self.pronoun is not None:
            return True
        return bool(self.head and self.head.human)

    def members(self):
        return [self] + self.conj


@dataclass
class Chunk:
    kind: str              # NP PP V COP PASS AUX ADV NUM
    tokens: list
    np: NounPhrase = None
    prep: LexEntry = None
    verb: LexEntry = None
    attrs: list = None


@dataclass
class Clause:
    rule: str
    kind: str              # verbal / nominal / phrase
    tense: str
    polarity: str
    mood: str
    slots: list
    chunks: list = None
    warnings: list = field(default_factory=list)
    passive: bool = False


# lexicon access

POS_FOR_TAG = {
    "NN": ("noun",), "NNS": ("noun",), "NNP": ("proper-noun", "noun"),
    "NNPS": ("proper-noun", "noun"), "JJ": ("adjective", "number-word"),
    "JJR": ("adjective",), "JJS": ("adjective",), "VB": ("verb",), "VBD": ("verb",),
    "VBG": ("verb", "adjective"), "VBN": ("verb", "adjective"), "VBP": ("verb",),
    "VBZ": ("verb",), "RB": ("adverb",), "IN": ("preposition",), "TO": ("preposition",),
    "CC": ("conjunction",),
}


class _Lookup:
    def __init__(self, lex, strict, warnings):
        self.lex = lex
        self.strict = strict
        self.warnings = warnings

    def entry(self, token, classes=None):
        classes = classes or POS_FOR_TAG.get(token.tag, ())
        for pos in classes:
            lemma = english_lemma(token.surface,
                                  known=lambda c, p=pos: self.lex.lookup_english(c, p) is not None)
            e = self.lex.lookup_english(lemma, pos)
            if e is not None:
                return e
        if self.strict:
            raise UnknownWordError(token.surface, token.tag)
        self.warnings.append(f"unknown word {token.surface!r} ({token.tag}); passed through")
        pos = classes[0] if classes else "noun"
        return LexEntry(token.surface.lower(), pos, "", token.surface, "M", False, "-")


def _is_unknown(entry):
    return entry is not None and not entry.arabic_root and entry.arabic_lemma.isascii()


def _lemma_of(token, lex):
    return english_lemma(token.surface, known=lambda c: bool(lex.english_senses(c)) or c == BE)


# chunking

def _starts_np(tok):
    return (tok.tag in NOUN_TAGS or tok.tag in ("DT", "PRP$", "CD", "JJ", "JJR", "JJS", "PDT")
            or tok.tag == "PRP")


def _is_verbish(tok):
    return tok.tag in VERB_TAGS or (tok.tag == "RB" and tok.lower in NEGATORS)


class _Chunker:
    def __init__(self, tokens, look):
        self.toks = tokens
        self.i = 0
        self.look = look

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def noun_phrase(self, allow_conj=True):
        start = self.i
        np = NounPhrase(tokens=[])
        tok = self.peek()
        if tok.tag == "PRP":
            self.i += 1
            word = tok.lower
            np.pronoun = SUBJECT_PRONOUNS.get(word) or OBJECT_PRONOUNS.get(word)
            if np.pronoun is None:
                raise TransferError(f"unknown pronoun {tok.surface}")
            np.tokens = self.toks[start:self.i]
            return np
        nums = []
        while self.peek() is not None:
            tok = self.peek()
            if tok.tag == "DT":
                w = tok.lower
                if w in DEFINITE_DT:
                    np.definiteness = "definite"
                elif w in INDEFINITE_DT:
                    np.definiteness = "indefinite"
                elif w in DUAL_DT:
                    np.definiteness = "definite"
                    np.count = 2
                else:
                    raise TransferError(f"no rule for determiner {tok.surface}")
                self.i += 1
            elif (tok.tag == "," and np.adjectives and self.peek(1) is not None
                  and self.peek(1).tag in ("JJ",) + tuple(NOUN_TAGS)):
                # "a lovely, gigantic, ancient, house"
                self.i += 1
            elif tok.tag == "PRP$":
                np.possessor = POSSESSIVE_PRONOUNS[tok.lower]
                self.i += 1
            elif tok.tag == "CD":
                nums.append(tok.surface)
                self.i += 1
            elif tok.tag in ("JJ", "JJR", "JJS") or (tok.tag in ("VBG", "VBN") and
                                                      self._adjective_ahead()):
                e = self.look.entry(tok, ("adjective", "number-word"))
                if e.pos_class == "number-word":
                    np.ordinal = ORDINAL_WORDS.get(e.english_lemma, 1)
                else:
                    np.adjectives.append(e)
                self.i += 1
            else:
                break
        # nouns: NN NN compounds read as annexation
        nouns = []
        while self.peek() is not None and self.peek().tag in NOUN_TAGS:
            nouns.append(self.peek())
            self.i += 1
        if nums and not nouns:
            if np.ordinal is not None:
                raise TransferError("ordinal without a noun")
            np.cardinal = english_number(nums)
            np.tokens = self.toks[start:self.i]
            return np
        if not nouns:
            tags = " ".join(t.tag for t in self.toks[start:self.i + 1])
            raise TransferError(f"no rule for structure {tags}")
        if nums:
            value = english_number(nums)
            if np.ordinal is not None:
                np.ordinal = value + np.ordinal
            else:
                np.count = value
        # noun compounds keep English order: the first noun heads the chain
        head = nouns[0]
        np.head_token = head
        np.head = self.look.entry(head, POS_FOR_TAG[head.tag])
        np.unknown = _is_unknown(np.head)
        np.number = "P" if head.tag in ("NNS", "NNPS") else "S"
        if np.count == 2:
            np.number = "B"
        elif np.count == 1:
            np.number = "S"
        for extra in nouns[1:]:
            sub = NounPhrase(tokens=[extra])
            sub.head = self.look.entry(extra, POS_FOR_TAG[extra.tag])
            sub.head_token = extra
            sub.number = "P" if extra.tag in ("NNS", "NNPS") else "S"
            np.annex.append(sub)
        if np.annex:
            # the determiner belongs to the whole compound: it lands on the last term
            np.annex[-1].definiteness = np.definiteness
        # possessive 's: [NP 's NP]
        if self.peek() is not None and self.peek().tag == "POS":
            self.i += 1
            owned = self.noun_phrase(allow_conj=False)
            owner = np
            owned.tokens = self.toks[start:self.i]
            if owner.definiteness is None:
                owner.definiteness = "definite"
            owned.annex = owned.annex + [owner]
            np = owned
        # of-annexation
        while (self.peek() is not None and self.peek().tag == "IN" and self.peek().lower == "of"
               and self.peek(1) is not None and _starts_np(self.peek(1))):
            self.i += 1
            np.annex.append(self.noun_phrase(allow_conj=False))
        np.tokens = self.toks[start:self.i]
        if allow_conj:
            while (self.peek() is not None and self.peek().tag == "CC"
                   and self.peek(1) is not None and _starts_np(self.peek(1))
                   and self.peek(1).tag != "PRP"):
                cc = self.peek()
                self.i += 1
                member = self.noun_phrase(allow_conj=False)
                member.conj_word = self.look.entry(cc, ("conjunction",))
                if member.definiteness is None and member.possessor is None:
                    # "the teachers and learners": the article covers both
                    member.definiteness = np.definiteness
                np.conj.append(member)
        return np

    def _adjective_ahead(self):
        # a participle inside a noun phrase is read as an adjective when a noun follows
        j = self.i + 1
        while j < len(self.toks) and self.toks[j].tag in ("JJ", "VBG", "VBN"):
            j += 1
        return j < len(self.toks) and self.toks[j].tag in NOUN_TAGS

    def verb_group(self):
        start = self.i
        while self.peek() is not None and _is_verbish(self.peek()):
            self.i += 1
        return self.toks[start:self.i]

    def attributes(self):
        """Predicate of a copula: adjectives joined by and, or a noun phrase."""
        tok = self.peek()
        if tok is None:
            return None
        if tok.tag in ("JJ", "JJR", "JJS", "VBG", "VBN") and not self._adjective_ahead():
            attrs = []
            while self.peek() is not None:
                t = self.peek()
                if t.tag in ("JJ", "JJR", "JJS", "VBG", "VBN"):
                    attrs.append(self.look.entry(t, ("adjective",)))
                    self.i += 1
                elif t.tag == "CC" and self.peek(1) is not None and self.peek(1).tag == "JJ":
                    self.i += 1
                else:
                    break
            return attrs
        return None

    def run(self):
        chunks = []
        toks = self.toks
        # clause-initial auxiliary: a question
        first = self.peek()
        if first is not None and first.tag in ("MD", "VBP", "VBZ", "VBD") and len(toks) > 1 \
                and _starts_np(toks[1]):
            lem = english_lemma(first.surface)
            rest_has_verb = any(t.tag in VERB_TAGS for t in toks[2:])
            if lem == BE and not any(t.tag in ("VBG", "VBN", "VB") for t in toks[2:]):
                self.i += 1
                chunks.append(Chunk("COP", [first]))
            elif lem in ("do", BE, "have") or first.tag == "MD":
                if rest_has_verb or first.tag == "MD" or lem == "do":
                    self.i += 1
                    chunks.append(Chunk("AUX", [first]))
        while self.peek() is not None:
            tok = self.peek()
            prev = chunks[-1].kind if chunks else None
            if tok.tag in (".", ","):
                chunks.append(Chunk("PUNCT", [tok]))
                self.i += 1
            elif self._awaiting_attribute(chunks):
                cop = next(c for c in chunks if c.kind == "COP")
                attrs = self.attributes()
                if attrs is not None:
                    cop.attrs = attrs
                    chunks.append(Chunk("ATTR", [], attrs=attrs))
                else:
                    np = self.noun_phrase()
                    cop.attrs = [np]
                    chunks.append(Chunk("ATTR", np.tokens, np=np))
            elif _is_verbish(tok):
                group = self.verb_group()
                chunks.append(self._classify_verbs(group, chunks))
            elif tok.tag in ("IN", "TO"):
                self.i += 1
                prep = self.look.entry(tok, ("preposition",))
                if self.peek() is None or not _starts_np(self.peek()):
                    raise TransferError(f"no rule for structure {tok.tag} without object")
                np = self.noun_phrase()
                if prep.english_lemma in COMPANION and np.human:
                    # "with" + a person is company, not an instrument
                    prep = replace(prep, arabic_lemma=COMPANION[prep.english_lemma])
                chunks.append(Chunk("PP", [tok] + np.tokens, np=np, prep=prep))
            elif tok.tag in ("RB", "RBR", "RBS"):
                self.i += 1
                chunks.append(Chunk("ADV", [tok], verb=self.look.entry(tok, ("adverb",))))
            elif _starts_np(tok):
                np = self.noun_phrase()
                kind = "NUM" if np.cardinal is not None else "NP"
                chunks.append(Chunk(kind, np.tokens, np=np))
            else:
                tags = " ".join(t.tag for t in toks)
                raise TransferError(f"no rule for structure {tags}")
        return chunks

    @staticmethod
    def _awaiting_attribute(chunks):
        """A copula has been seen together with its subject but no predicate
        yet: "NP is _" or, in questions, "is NP _"."""
        cops = [c for c in chunks if c.kind == "COP"]
        if not cops or cops[0].attrs is not None or any(c.kind == "ATTR" for c in chunks):
            return False
        kinds = [c.kind for c in chunks]
        return "NP" in kinds and kinds[-1] in ("COP", "NP") and (
            kinds[-1] == "COP" or kinds[0] == "COP")

    def _classify_verbs(self, group, chunks):
        lemmas = [english_lemma(t.surface) for t in group if t.tag != "RB"]
        aux_first = any(c.kind == "AUX" for c in chunks)
        main = [t for t in group if t.tag in VERB_TAGS]
        last = main[-1] if main else None
        last_lemma = english_lemma(last.surface) if last else None
        if last_lemma == BE:
            return Chunk("COP", group)
        if BE in lemmas[:-1] and last is not None and last.tag == "VBN":
            c = Chunk("PASS", group)
            c.verb = self.look.entry(last, ("verb",))
            return c
        if last is not None and last.tag in ("JJ",):
            return Chunk("COP", group)
        c = Chunk("V", group)
        if last is None:
            raise TransferError("verb group without a verb")
        # adjectival participle after a copula: "were standing"
        c.verb = self.look.entry(last, ("verb",))
        if aux_first:
            c.kind = "V"
        return c


# tense, polarity, mood

def detect_tense(tokens):
    """(tense, polarity, mood) of a clause from its auxiliaries."""
    tense, polarity, mood = "present", "affirmative", "declarative"
    verbs = [t for t in tokens if t.tag in VERB_TAGS]
    if any(t.tag == "RB" and t.lower in NEGATORS for t in tokens):
        polarity = "negative"
    if tokens and tokens[-1].surface == "?":
        mood = "interrogative"
    first = tokens[0] if tokens else None
    if first is not None and first.tag in ("MD", "VBP", "VBZ", "VBD") and len(tokens) > 1 \
            and _starts_np(tokens[1]):
        mood = "interrogative"
    if not verbs:
        return tense, polarity, mood
    lem = [english_lemma(t.surface) for t in verbs]
    if any(t.tag == "MD" and t.lower in ("will", "shall", "'ll") for t in verbs):
        return "future", polarity, mood
    if lem[0] == "do" and len(verbs) > 1:
        return ("past" if verbs[0].tag == "VBD" else "present"), polarity, mood
    if lem[0] == "have" and any(t.tag == "VBN" for t in verbs[1:]):
        return "past", polarity, mood
    if lem[0] == BE and len(verbs) > 1 and verbs[-1].tag == "VBG":
        # progressive forms: present continuous reads as future, past continuous as past
        return ("past" if verbs[0].tag == "VBD" else "future"), polarity, mood
    if lem[0] == BE and len(verbs) > 1 and verbs[-1].tag == "VBN":
        return ("past" if verbs[0].tag in ("VBD", "VBZ") and verbs[0].tag == "VBD" else
                "present"), polarity, mood
    if len(verbs) > 1 and verbs[0].tag == "VBZ" and verbs[-1].tag == "VBN":
        return "past", polarity, mood
    main = verbs[0]
    if main.tag in ("VBD", "VBN"):
        tense = "past"
    return tense, polarity, mood


# clause rules: chunk-sequence patterns, most specific first

RULES = (
    ("question-verbal", r"AUX NP V( NP)?( PP)*( ADV)*"),
    ("question-verbal-intransitive", r"AUX NP( NP)?( PP)*( ADV)*"),
    ("question-nominal-future", r"AUX NP COP ATTR( PP)*"),
    ("question-nominal", r"COP NP ATTR( PP)*"),
    ("verbal-svo", r"NP V( NP)?( PP)*( ADV)*"),
    ("verbal-svo-adverb-first", r"NP V ADV( NP)?( PP)*"),
    ("passive-agentless", r"NP PASS( PP)*( ADV)*"),
    ("nominal-copula", r"NP COP ATTR( PP)*"),
    ("noun-phrase", r"NP( PP)*"),
    ("prepositional-phrase", r"PP( PP)*"),
    ("number", r"NUM"),
)
_COMPILED = tuple((rid, re.compile(pat + r"$")) for rid, pat in RULES)


def match_rule(chunks):
    sig = " ".join(c.kind for c in chunks if c.kind != "PUNCT")
    for rid, rx in _COMPILED:
        if rx.match(sig):
            return rid
    return None


# agreement and bundle construction

def _np_number(np):
    if len(np.members()) == 1:
        return np.number
    return "B" if len(np.members()) == 2 and all(m.number == "S" for m in np.members()) else "P"


def _group_gender(np):
    """One masculine member makes a coordinated group masculine."""
    return "M" if any(m.gender == "M" for m in np.members()) else "F"


def _group_human(np):
    return all(m.human for m in np.members())


def agreement_target(np):
    """(gender, number) an adjective or predicate must take to agree with
    ``np``; non-human plurals agree as feminine singular."""
    number = _np_number(np)
    gender = _group_gender(np)
    if number == "P" and not _group_human(np):
        return "F", "S"
    return gender, number


def verb_agreement(np):
    """Bundle fields a preceding verb takes from a noun subject: gender of
    the nearest member, always singular."""
    first = np
    gender = first.gender
    if _np_number(first) == "P" and len(first.members()) == 1 and not first.human:
        gender = "F"
    return Pronoun(3, gender, "S")


# rule id reported for the head noun of a phrase in each function
FUNCTION_RULES = {
    "subject": "subject-nominative",
    "object": "object-accusative",
    "complement": "preposition-object-genitive",
}


class _Builder:
    def __init__(self, lex, rule):
        self.lex = lex
        self.rule = rule
        self.slots = []
        self.next_phrase = 0

    def add(self, **kw):
        s = Slot(**kw)
        self.slots.append(s)
        return s

    def phrase(self, np, function, case, default_def, prep=None, rule=None):
        """Slots for one noun phrase (and its coordinated siblings)."""
        rule = rule or self.rule
        for k, member in enumerate(np.members()):
            if k > 0:
                conj = getattr(member, "conj_word", None)
                self.add(role="conjunction", entry=conj, rule="coordination",
                         phrase=self.next_phrase, tokens=())
            self._simple_phrase(member, function, case, default_def, prep if k == 0 else None,
                                rule)

    def _simple_phrase(self, np, function, case, default_def, prep, rule):
        rule = FUNCTION_RULES.get(function, rule)
        pid = self.next_phrase
        self.next_phrase += 1
        if prep is not None:
            self.add(role="preposition", entry=prep, rule="preposition", phrase=pid)
        if np.cardinal is not None:
            self.add(role=function, rule="number-digits", phrase=pid, tokens=tuple(np.tokens),
                     count=np.cardinal, bundle=FeatureBundle(case=case))
            return
        chain = [np] + _flatten_annex(np)
        last = chain[-1]
        last_def = last.definiteness or (default_def if last is np else "definite")
        if last.possessor is not None:
            last_def = "definite"
        for k, member in enumerate(chain):
            final = k == len(chain) - 1
            d = last_def if final else "by-annexation"
            if member.possessor is not None:
                d = "definite"
            c = case if k == 0 else "genitive"
            number = member.number
            bundle = FeatureBundle(person=3, gender=member.gender, number=number, tense="none",
                                   definiteness=d, case=c, humanness=member.human,
                                   possessor=member.possessor)
            self.add(role=function if k == 0 else "annexed", entry=member.head, bundle=bundle,
                     rule=rule if k == 0 else "annexation", phrase=pid,
                     tokens=(member.head_token,), count=member.count if member.count not in
                     (None, 1, 2) else None, unknown=member.unknown)
        # adjectives agree with their own noun; in a chain they all follow
        # the last term and share its definiteness.  Emitted in English
        # order, ordering is done by transfer_syntax.
        chain_def = "definite" if last_def == "definite" else "indefinite"
        for k, member in enumerate(chain):
            gender, number = agreement_target(member)
            c = case if k == 0 else "genitive"
            d = chain_def
            if len(chain) == 1 and member.possessor is not None:
                d = "definite"
            if member.ordinal is not None:
                self.add(role="ordinal", rule="ordinal", phrase=pid, ordinal=member.ordinal,
                         member=k,
                         bundle=FeatureBundle(gender=gender, number=number, definiteness=d, case=c))
            for adj in member.adjectives:
                self.add(role="adjective", entry=adj, rule="noun-adjective-agreement", phrase=pid,
                         member=k, unknown=_is_unknown(adj),
                         bundle=FeatureBundle(person=3, gender=gender, number=number, tense="none",
                                              definiteness=d, case=c, humanness=member.human))


def _flatten_annex(np):
    out = []
    for a in np.annex:
        out.append(a)
        out.extend(_flatten_annex(a))
    return out


def _verb_bundle(subject_pronoun, tense, polarity, mood, obj=None):
    p = subject_pronoun
    return FeatureBundle(person=p.person, gender=p.gender, number=p.number, tense=tense,
                         polarity=polarity, mood=mood, object_enclitic=obj)


def transfer_clause(tokens, lex, strict=True, readings=None):
    """Slots for one tagged clause.

    ``readings`` overrides the pronoun choice for underspecified English
    pronouns, e.g. ``{"you": Pronoun(2, "F", "S")}``.
    """
    if isinstance(tokens, str):
        tokens = parse_tagged(tokens)
    if not tokens:
        return Clause("empty", "phrase", "none", "affirmative", "declarative", [])
    warnings = []
    look = _Lookup(lex, strict, warnings)
    chunks = _Chunker(list(tokens), look).run()
    rule = match_rule(chunks)
    tags = " ".join(t.tag for t in tokens)
    if rule is None:
        raise TransferError(f"no rule for structure {tags}")
    tense, polarity, mood = detect_tense(list(tokens))
    body = [c for c in chunks if c.kind != "PUNCT"]
    b = _Builder(lex, rule)
    readings = readings or {}

    def pron(np):
        for word, choice in readings.items():
            if np.tokens and np.tokens[0].lower == word:
                return choice
        return np.pronoun

    if rule in ("noun-phrase", "prepositional-phrase", "number"):
        for c in body:
            if c.kind in ("NP", "NUM"):
                # a bare coordination reads as generic, hence definite
                b.phrase(c.np, "head", "nominative", "definite" if c.np.conj else "indefinite")
            elif c.kind == "PP":
                b.phrase(c.np, "complement", "genitive", "indefinite", prep=c.prep)
        return Clause(rule, "phrase", "none", "affirmative", "declarative", b.slots, chunks,
                      warnings)

    if rule in ("nominal-copula", "question-nominal", "question-nominal-future"):
        subj = next(c.np for c in body if c.kind == "NP")
        attr = next(c for c in body if c.kind == "ATTR")
        b.phrase(subj, "subject", "nominative", "definite")
        marked = tense != "present" or polarity == "negative"
        case = "accusative" if marked else "nominative"
        gender, number = agreement_target(subj)
        if subj.pronoun is not None:
            p = pron(subj)
            gender, number = p.gender if p.gender != "N" else "M", p.number
        if attr.attrs and isinstance(attr.attrs[0], LexEntry):
            for a in attr.attrs:
                b.add(role="attribute", entry=a, rule="subject-predicate-agreement",
                      bundle=FeatureBundle(person=3, gender=gender, number=number, tense="none",
                                           definiteness="indefinite", case=case,
                                           humanness=_group_human(subj)))
        else:
            b.phrase(attr.np, "attribute", case, "indefinite", rule="subject-predicate")
        for c in body:
            if c.kind == "PP":
                b.phrase(c.np, "complement", "genitive", "definite", prep=c.prep)
        clause = Clause(rule, "nominal", tense, polarity, mood, b.slots, chunks, warnings)
        clause.subject_gender = subj.gender if subj.pronoun is None else (
            pron(subj).gender if pron(subj).gender != "N" else "M")
        if _np_number(subj) == "P" and len(subj.members()) == 1 and not subj.human:
            clause.subject_gender = "F"
        return clause

    # verbal clauses
    nps = [c.np for c in body if c.kind == "NP"]
    vchunk = next((c for c in body if c.kind in ("V", "PASS")), None)
    if vchunk is None:
        aux = next(c for c in body if c.kind == "AUX")
        vchunk = aux
        vchunk.verb = look.entry(aux.tokens[0], ("verb",))
    subj = nps[0]
    obj = nps[1] if len(nps) > 1 else None
    passive = vchunk.kind == "PASS"
    if subj.pronoun is not None:
        agree = pron(subj)
    else:
        agree = verb_agreement(subj)
    if passive:
        agree = verb_agreement(subj) if subj.pronoun is None else agree
    obj_enclitic = None
    if obj is not None and obj.pronoun is not None:
        obj_enclitic = OBJECT_PRONOUNS.get(obj.tokens[0].lower, obj.pronoun)
        obj_enclitic = pron(obj) if obj.tokens[0].lower in readings else obj_enclitic
    vb = _verb_bundle(agree, tense, polarity, mood, obj_enclitic)
    b.add(role="verb", entry=vchunk.verb, bundle=vb,
          rule="passive-agentless" if passive else
          ("verb-pronoun-subject" if subj.pronoun is not None else "verb-first-agreement"),
          tokens=tuple(vchunk.tokens), unknown=_is_unknown(vchunk.verb))
    if subj.pronoun is None:
        b.phrase(subj, "subject", "nominative", "definite")
    if obj is not None and obj.pronoun is None:
        b.phrase(obj, "object", "accusative", "indefinite")
    for c in body:
        if c.kind == "PP":
            b.phrase(c.np, "complement", "genitive", "indefinite", prep=c.prep)
        elif c.kind == "ADV":
            b.add(role="adverb", entry=c.verb, rule="adverb-accusative", tokens=tuple(c.tokens),
                  unknown=_is_unknown(c.verb))
    clause = Clause(rule, "verbal", tense, polarity, mood, b.slots, chunks, warnings, passive)
    return clause
