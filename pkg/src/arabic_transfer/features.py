"""Feature bundles shared by analysis, transfer and generation."""
from dataclasses import dataclass, fields, replace

PERSONS = (1, 2, 3)
GENDERS = ("M", "F", "N")
NUMBERS = ("S", "B", "P")
TENSES = ("present", "past", "future", "none")
POLARITIES = ("affirmative", "negative")
MOODS = ("declarative", "interrogative")
DEFINITENESS = ("definite", "indefinite", "by-annexation")
CASES = ("nominative", "accusative", "genitive")


@dataclass(frozen=True)
class Pronoun:
    person: int
    gender: str
    number: str

    def __str__(self):
        return f"{self.person}{self.gender}{self.number}"

    @classmethod
    def parse(cls, text):
        """'3MS' style shorthand."""
        p, g, n = text[0], text[1], text[2]
        return cls(int(p), g, n)


# the thirteen subject pronouns in table order:
# I, you(M), you(F), you(B), you(M,P), you(F,P), he, she, we,
# they(B,M), they(B,F), they(M), they(F)
PRONOUN_ROWS = (
    ("I", Pronoun(1, "N", "S")),
    ("you(M)", Pronoun(2, "M", "S")),
    ("you(F)", Pronoun(2, "F", "S")),
    ("you(B)", Pronoun(2, "N", "B")),
    ("you(M,P)", Pronoun(2, "M", "P")),
    ("you(F,P)", Pronoun(2, "F", "P")),
    ("he", Pronoun(3, "M", "S")),
    ("she", Pronoun(3, "F", "S")),
    ("we", Pronoun(1, "N", "P")),
    ("they(B,M)", Pronoun(3, "M", "B")),
    ("they(B,F)", Pronoun(3, "F", "B")),
    ("they(M)", Pronoun(3, "M", "P")),
    ("they(F)", Pronoun(3, "F", "P")),
)
PRONOUNS = tuple(p for _, p in PRONOUN_ROWS)


def canonical_pronoun(person, gender, number):
    """Collapse gender where the paradigm does not distinguish it."""
    if person == 1 or (person == 2 and number == "B"):
        gender = "N"
    return Pronoun(person, gender, number)


@dataclass(frozen=True)
class FeatureBundle:
    """Morphological traits of one word.  Unset traits are None."""
    person: int = None
    gender: str = None
    number: str = None
    tense: str = None
    polarity: str = None
    mood: str = None
    definiteness: str = None
    case: str = None
    humanness: bool = None
    object_enclitic: Pronoun = None
    possessor: Pronoun = None
    # analysis-only marks
    interrogative: bool = None

    def traits(self):
        return {f.name: getattr(self, f.name) for f in fields(self)
                if getattr(self, f.name) is not None}

    def is_empty(self):
        return not self.traits()

    @property
    def is_verbal(self):
        return self.tense not in (None, "none")

    @property
    def subject(self):
        if self.person is None:
            return None
        return canonical_pronoun(self.person, self.gender or "M", self.number or "S")

    def with_(self, **kw):
        return replace(self, **kw)

    def __str__(self):
        parts = []
        for k, v in self.traits().items():
            parts.append(f"{k}={v}")
        return "{" + ", ".join(parts) + "}"


def verbal(pronoun, tense="present", polarity="affirmative", mood="declarative", obj=None):
    return FeatureBundle(person=pronoun.person, gender=pronoun.gender,
                         number=pronoun.number, tense=tense, polarity=polarity,
                         mood=mood, object_enclitic=obj)


def nominal(number="S", gender="M", definiteness="definite", case="nominative",
            human=False, possessor=None):
    return FeatureBundle(person=3, gender=gender, number=number, tense="none",
                         definiteness=definiteness, case=case, humanness=human,
                         possessor=possessor)
