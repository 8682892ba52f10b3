"""End to end: tagged English -> Arabic, and Arabic -> word analyses with
English hints."""
import itertools
import sys
from dataclasses import dataclass, field

from . import generator as gen
from .analyzer import analyze, features_of
from .errors import ArtifactError, TransferError
from .normalize import arabic_tokens
from .tagged import parse_tagged, split_sentences
from .transfer_morph import PRONOUN_READINGS, transfer_clause
from .transfer_syntax import plan_clause, render


@dataclass
class Translation:
    text: str
    clauses: list = field(default_factory=list)      # per clause output string
    trace: list = field(default_factory=list)        # (clause index, word, rule id)
    warnings: list = field(default_factory=list)


def generate_slot(slot):
    """Surface string for one slot."""
    e, b = slot.entry, slot.bundle
    if slot.unknown:
        return e.arabic_lemma if e is not None else (slot.text or "")
    if slot.role == "verb":
        # particles are placed by the clause plan
        _, word = gen.verb_form(e, b.with_(mood="declarative"))
        return word
    if slot.role == "ordinal":
        return gen.render_ordinal(slot.ordinal, b.gender or "M",
                                  b.definiteness == "definite", b.case or "nominative")
    if slot.role in ("preposition", "conjunction", "adverb"):
        return e.arabic_lemma
    if slot.count is not None and e is None:
        return gen.render_cardinal(slot.count, b.case or "nominative")
    if slot.count is not None:
        return gen.render_number(slot.count, e, b.case or "nominative")
    return gen.inflect_noun(e, b)


def translate_clause(tokens, lex, strict=True, readings=None):
    """(arabic string, clause, [(word, rule)])."""
    clause = transfer_clause(tokens, lex, strict=strict, readings=readings)
    plan = plan_clause(clause.slots, clause.tense, clause.polarity, clause.mood,
                       clause.kind, getattr(clause, "subject_gender", "M"))
    words = [generate_slot(s) for s in plan.constituents]
    text = render(plan, words)
    trace = [(p, f"particle:{clause.rule}") for p in plan.particles]
    trace += [(w, s.rule) for w, s in zip(words, plan.constituents)]
    return text, clause, trace


def translate(tagged_input, lex, strict=True, readings=None):
    """Translate one or more tagged sentences; sentences are joined by a
    space."""
    tokens = parse_tagged(tagged_input)
    result = Translation("")
    for i, clause_tokens in enumerate(split_sentences(tokens)):
        try:
            text, clause, trace = translate_clause(clause_tokens, lex, strict, readings)
        except ArtifactError as exc:
            exc.clause = i
            if isinstance(exc, TransferError) and exc.args and "clause" not in str(exc):
                exc.args = (f"clause {i}: {exc.args[0]}",) + exc.args[1:]
            raise
        result.clauses.append(text)
        result.trace.extend((i, w, r) for w, r in trace)
        result.warnings.extend(clause.warnings)
    result.text = " ".join(c for c in result.clauses if c)
    return result


def translate_variants(tagged_input, lex, strict=True):
    """Every reading of the underspecified pronouns (you, they) present in
    the input: list of (label, arabic)."""
    words = {t.lower for t in parse_tagged(tagged_input)}
    keys = [k for k in PRONOUN_READINGS if k in words]
    if not keys:
        return [("", translate(tagged_input, lex, strict).text)]
    out = []
    for combo in itertools.product(*(PRONOUN_READINGS[k] for k in keys)):
        readings = dict(zip(keys, combo))
        label = ",".join(f"{k}={p}" for k, p in readings.items())
        out.append((label, translate(tagged_input, lex, strict, readings).text))
    return out


def warn(messages, stream=None):
    stream = stream or sys.stderr
    for m in messages:
        print(f"warning: {m}", file=stream)


# Arabic -> hints

SUBJECT_HINTS = {"1NS": "I", "1NP": "we", "3MS": "he", "3FS": "she"}
OBJECT_HINTS = {"1NS": "me", "1NP": "us", "3MS": "him", "3FS": "it", "3MP": "them",
                "3FP": "them", "3NB": "them"}


@dataclass
class WordAnalysis:
    word: str
    segmentation: object
    features: object
    hints: list
    gloss: str = None

    def as_dict(self):
        return {"word": self.word, "segmentation": self.segmentation.as_dict(),
                "features": {k: str(v) if not isinstance(v, (int, bool, str)) else v
                             for k, v in self.features.traits().items()},
                "hints": self.hints, "gloss": self.gloss}


def _gloss(seg, lex, verbal):
    if not seg.root:
        return None
    entries = lex.entries_for_root(seg.root)
    if verbal:
        entries = [e for e in entries if e.pos_class == "verb"] or entries
    return entries[0].english_lemma if entries else None


def hints_for(features, gloss):
    """English hint words from the traits of one word, before reordering."""
    out = []
    t = features.traits()
    verbal = features.is_verbal or "object_enclitic" in t
    if verbal:
        tense = t.get("tense")
        if tense == "future":
            out.append("will")
        elif tense == "past" and features.interrogative:
            out.append("did")
        pr = features.subject
        if pr is not None:
            key = str(pr)
            out.append(SUBJECT_HINTS.get(key, "you" if pr.person == 2 else "they"))
    if gloss:
        out.append(gloss)
    if features.object_enclitic is not None:
        o = features.object_enclitic
        out.append(OBJECT_HINTS.get(str(o), "you" if o.person == 2 else "them"))
    if features.possessor is not None and not verbal:
        o = features.possessor
        out.append("of " + OBJECT_HINTS.get(str(o), "you" if o.person == 2 else "them"))
    return out


def analyze_arabic(text, lex):
    """Per-word analysis with the traits and the English hints they carry."""
    out = []
    for word in arabic_tokens(text):
        res = analyze(word, lex, normalized=True)
        seg = res.best
        feats = features_of(seg)
        gloss = _gloss(seg, lex, feats.is_verbal)
        out.append(WordAnalysis(word, seg, feats, hints_for(feats, gloss), gloss))
    return out
