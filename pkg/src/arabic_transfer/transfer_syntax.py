"""Arabic constituent order and sentence particles.

Verbal clauses come out verb first (VSO).  Copular clauses become verbless
nominal sentences whose tense, negation and question are carried by a
leading particle group.  Inside a noun phrase the noun comes first and the
adjectives follow in reversed English order.
"""
from dataclasses import dataclass, field

QUESTION_MARK = "؟"

# (tense, polarity) -> (masculine subject, feminine subject)
NOMINAL_PARTICLES = {
    ("present", "affirmative"): ((), ()),
    ("past", "affirmative"): (("كان",), ("كانت",)),
    ("future", "affirmative"): (("سيصبح",), ("ستصبح",)),
    ("present", "negative"): (("ليس",), ("ليست",)),
    ("past", "negative"): (("لم", "يكن"), ("لم", "تكن")),
    ("future", "negative"): (("لن", "يصبح"), ("لن", "تصبح")),
}
VERBAL_NEGATION = {"present": "لا", "past": "لم", "future": "لن"}

PHRASE_ORDER = ("subject", "attribute", "object", "head", "complement")


@dataclass
class ClausePlan:
    clause_kind: str
    particles: list = field(default_factory=list)
    constituents: list = field(default_factory=list)    # Slot objects in output order
    terminal: str = None

    @property
    def roles(self):
        return [s.role for s in self.constituents]


def nominal_particles(tense, polarity, mood, gender):
    """Leading particles of a nominal sentence."""
    masc, fem = NOMINAL_PARTICLES[(tense, polarity)]
    out = list(fem if gender == "F" else masc)
    if mood == "interrogative":
        out.insert(0, "هل")
    return out


def verbal_particles(tense, polarity, mood):
    out = []
    if mood == "interrogative":
        out.append("هل")
    if polarity == "negative":
        out.append(VERBAL_NEGATION[tense])
    return out


def reverse_adjectives(adjectives):
    """English premodifiers -> Arabic postmodifiers."""
    return list(reversed(adjectives))


def order_noun_phrase(slots):
    """Order the slots of one noun phrase: preposition, noun, annexed
    terms in chain order, then modifiers.  Modifiers of later chain terms
    come first and each term's modifiers are reversed."""
    prep = [s for s in slots if s.role == "preposition"]
    nouns = [s for s in slots if s.role not in ("preposition", "adjective", "ordinal")]
    mods = [s for s in slots if s.role in ("adjective", "ordinal")]
    members = sorted({s.member for s in mods}, reverse=True)
    ordered_mods = []
    for m in members:
        ordered_mods.extend(reverse_adjectives([s for s in mods if s.member == m]))
    return prep + nouns + ordered_mods


def _phrases(slots):
    """Group consecutive slots by phrase id."""
    groups = []
    for s in slots:
        if s.phrase is not None and groups and groups[-1][0] == s.phrase:
            groups[-1][1].append(s)
        else:
            groups.append((s.phrase, [s]))
    return groups


def plan_clause(slots, tense, polarity, mood, kind="verbal", subject_gender="M"):
    """ClausePlan for the slots of one transferred clause."""
    ordered = []
    verb = [s for s in slots if s.role == "verb"]
    rest = [s for s in slots if s.role != "verb"]
    for _, group in _phrases(rest):
        if group[0].phrase is None:
            ordered.extend(group)
        else:
            ordered.extend(order_noun_phrase(group))
    if kind == "verbal":
        particles = verbal_particles(tense, polarity, mood)
        # adverbs close the clause
        adverbs = [s for s in ordered if s.role == "adverb"]
        body = [s for s in ordered if s.role != "adverb"]
        constituents = verb + body + adverbs
    elif kind == "nominal":
        particles = nominal_particles(tense, polarity, mood, subject_gender)
        constituents = ordered
    else:
        particles, constituents = [], ordered
    terminal = QUESTION_MARK if mood == "interrogative" else None
    return ClausePlan(kind, particles, constituents, terminal)


def attach_proclitic(clitic, word):
    """Join a one-letter preposition to the next word, merging with the
    article: ل + الكتاب -> للكتاب."""
    if clitic == "ل" and word.startswith("ال"):
        return "لل" + word[2:]
    return clitic + word


def render(plan, words):
    """Sentence string.  ``words`` holds one surface string per
    constituent; a string ending in "-" is a proclitic preposition glued to
    the following word."""
    out = list(plan.particles)
    pending = None
    for w in words:
        if not w:
            continue
        if w.endswith("-") and len(w) > 1:
            pending = w[:-1]
            continue
        if pending is not None:
            w = attach_proclitic(pending, w)
            pending = None
        out.append(w)
    if pending is not None:
        out.append(pending)
    text = " ".join(out)
    if plan.terminal and text:
        text += plan.terminal
    return text
