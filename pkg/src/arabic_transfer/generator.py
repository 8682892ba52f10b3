"""Arabic surface generation from a lexicon entry and a feature bundle.

Verbs go through the paradigm tables below (present, past and the short
form used after لم/لن), with dedicated stems for the weak-verb models.
Nouns and adjectives get number, case, definiteness, tanwin alif and
possessive endings.  Numbers are rendered by bands.
"""
from .errors import GenerationError
from .features import PRONOUNS, FeatureBundle, Pronoun, canonical_pronoun

P = Pronoun

# (prefix, suffix) per subject pronoun
PRESENT = {
    P(1, "N", "S"): ("أ", ""),
    P(2, "M", "S"): ("ت", ""),
    P(2, "F", "S"): ("ت", "ين"),
    P(2, "N", "B"): ("ت", "ان"),
    P(2, "M", "P"): ("ت", "ون"),
    P(2, "F", "P"): ("ت", "ن"),
    P(3, "M", "S"): ("ي", ""),
    P(3, "F", "S"): ("ت", ""),
    P(1, "N", "P"): ("ن", ""),
    P(3, "M", "B"): ("ي", "ان"),
    P(3, "F", "B"): ("ت", "ان"),
    P(3, "M", "P"): ("ي", "ون"),
    P(3, "F", "P"): ("ي", "ن"),
}

PAST = {
    P(1, "N", "S"): "ت",
    P(2, "M", "S"): "ت",
    P(2, "F", "S"): "ت",
    P(2, "N", "B"): "تما",
    P(2, "M", "P"): "تم",
    P(2, "F", "P"): "تن",
    P(3, "M", "S"): "",
    P(3, "F", "S"): "ت",
    P(1, "N", "P"): "نا",
    P(3, "M", "B"): "ا",
    P(3, "F", "B"): "تا",
    P(3, "M", "P"): "وا",
    P(3, "F", "P"): "ن",
}

# short form after لم and لن
JUSSIVE = {
    P(1, "N", "S"): ("أ", ""),
    P(2, "M", "S"): ("ت", ""),
    P(2, "F", "S"): ("ت", "ي"),
    P(2, "N", "B"): ("ت", "ا"),
    P(2, "M", "P"): ("ت", "وا"),
    P(2, "F", "P"): ("ت", "ن"),
    P(3, "M", "S"): ("ي", ""),
    P(3, "F", "S"): ("ت", ""),
    P(1, "N", "P"): ("ن", ""),
    P(3, "M", "B"): ("ي", "ا"),
    P(3, "F", "B"): ("ت", "ا"),
    P(3, "M", "P"): ("ي", "وا"),
    P(3, "F", "P"): ("ي", "ن"),
}

# object and possessive enclitics; "it" is ه, non-human "them" is ها
OBJECT_ENCLITIC = {
    P(1, "N", "S"): "ني",
    P(2, "M", "S"): "ك",
    P(2, "F", "S"): "ك",
    P(2, "N", "B"): "كما",
    P(2, "M", "P"): "كم",
    P(2, "F", "P"): "كن",
    P(3, "M", "S"): "ه",
    P(3, "F", "S"): "ها",
    P(1, "N", "P"): "نا",
    P(3, "N", "B"): "هما",
    P(3, "M", "B"): "هما",
    P(3, "F", "B"): "هما",
    P(3, "M", "P"): "هم",
    P(3, "F", "P"): "هن",
}
POSSESSIVE_ENCLITIC = dict(OBJECT_ENCLITIC)
POSSESSIVE_ENCLITIC[P(1, "N", "S")] = "ي"


def _closed_past(pr):
    # the last root letter loses its vowel before the first and second person
    # endings and the feminine plural ن; this shortens hollow stems
    return pr.person != 3 or pr == P(3, "F", "P")


def _pronoun(bundle):
    if bundle.person is None:
        raise GenerationError(f"unsupported bundle {bundle}: no person")
    if bundle.person == 1 and bundle.number == "B":
        raise GenerationError(f"unsupported bundle {bundle}: no dual first person")
    pr = canonical_pronoun(bundle.person, bundle.gender or "M", bundle.number or "S")
    if pr not in PRESENT:
        raise GenerationError(f"unsupported bundle {bundle}")
    return pr


def _join(prefix, stem, suffix):
    if prefix == "أ" and stem.startswith("أ"):
        # hamza followed by hamza on alif is written with madda
        return "آ" + stem[1:] + suffix
    return prefix + stem + suffix


def _letters(entry):
    r = entry.arabic_root
    return r[0], r[1], r[2]


def present_form(entry, pr, mood="indicative"):
    """Imperfective verb word for subject ``pr``.  ``mood`` is indicative,
    jussive (after لم) or subjunctive (after لن); the last two share their
    endings, only the jussive shortens weak stems."""
    prefix, suffix = (PRESENT if mood == "indicative" else JUSSIVE)[pr]
    short = mood == "jussive"
    model = entry.conjugation_model or "sound"
    lemma = entry.arabic_lemma
    if model == "sound":
        return _join(prefix, lemma, suffix)
    f, a, l = _letters(entry)
    if model == "wasala":
        return _join(prefix, a + l, suffix)
    if model in ("qama", "baa", "khafa"):
        glide = {"qama": "و", "baa": "ي", "khafa": "ا"}[model]
        closed = suffix == "ن" or (short and suffix == "")
        stem = f + l if closed else f + glide + l
        return _join(prefix, stem, suffix)
    fa = f + a
    if model == "nasiya":
        if suffix == "":
            stem = fa if short else fa + "ى"
        elif suffix in ("ون", "ين", "وا", "ي"):
            stem = fa
        else:
            stem = lemma
        return _join(prefix, stem, suffix)
    if model in ("rama", "daa"):
        glide = "ي" if model == "rama" else "و"
        if suffix == "":
            stem = fa if short else fa + glide
        elif suffix in ("ون", "وا", "ين", "ي"):
            stem = fa
        else:
            stem = fa + glide
        return _join(prefix, stem, suffix)
    raise GenerationError(f"unknown conjugation model {model}")


def past_form(entry, pr):
    suffix = PAST[pr]
    model = entry.conjugation_model or "sound"
    lemma = entry.arabic_lemma
    if model in ("sound", "wasala"):
        return lemma + suffix
    f, a, l = _letters(entry)
    if model in ("qama", "baa", "khafa"):
        if _closed_past(pr):
            return f + l + suffix
        return f + "ا" + l + suffix
    fa = f + a
    if model == "nasiya":
        if suffix == "وا":
            return fa + suffix
        return lemma + suffix
    if model in ("rama", "daa"):
        glide = "ي" if model == "rama" else "و"
        if suffix == "":
            return lemma
        if pr == P(3, "F", "S") or suffix == "تا":
            return fa + suffix
        if suffix == "وا":
            return fa + suffix
        return fa + glide + suffix
    raise GenerationError(f"unknown conjugation model {model}")


def _attach_object(word, obj):
    enc = OBJECT_ENCLITIC.get(canonical_pronoun(obj.person, obj.gender, obj.number))
    if enc is None:
        enc = OBJECT_ENCLITIC[P(3, obj.gender, obj.number)]
    if word.endswith("وا"):
        word = word[:-1]
    elif word.endswith("ى"):
        # final alif maqsura is written as a plain alif before an enclitic
        word = word[:-1] + "ا"
    return word + enc


def conjugate(entry, bundle):
    """Inflected verb (with any leading particles) for ``bundle``."""
    particles, word = verb_form(entry, bundle)
    return " ".join(particles + [word])


def verb_form(entry, bundle):
    """(particles, verb word) for ``bundle``; the particles are the
    negation and question words that precede the verb."""
    if entry.pos_class != "verb":
        raise GenerationError(f"{entry.english_lemma} is not a verb")
    pr = _pronoun(bundle)
    tense = bundle.tense or "present"
    negative = bundle.polarity == "negative"
    particles = []
    if tense == "present":
        word = present_form(entry, pr)
        if negative:
            particles.append("لا")
    elif tense == "past":
        if negative:
            word = present_form(entry, pr, "jussive")
            particles.append("لم")
        else:
            word = past_form(entry, pr)
    elif tense == "future":
        if negative:
            word = present_form(entry, pr, "subjunctive")
            particles.append("لن")
        else:
            word = "س" + present_form(entry, pr)
    else:
        raise GenerationError(f"unsupported bundle {bundle}: tense {tense}")
    if bundle.object_enclitic is not None:
        word = _attach_object(word, bundle.object_enclitic)
    if bundle.mood == "interrogative":
        particles.insert(0, "هل")
    return particles, word


def verb_paradigm(entry, tense="present", polarity="affirmative"):
    """All thirteen forms, in pronoun table order."""
    out = []
    for pr in PRONOUNS:
        b = FeatureBundle(person=pr.person, gender=pr.gender, number=pr.number,
                          tense=tense, polarity=polarity, mood="declarative")
        out.append(conjugate(entry, b))
    return out


# nouns and adjectives

_NO_TANWIN_ALIF = ("ة", "ى", "اء", "ا", "ء")


def feminine(word):
    if word.endswith("ة"):
        return word
    if word == "أول":
        return "أولى"
    return word + "ة"


def _tie(word):
    """ة becomes ت before a suffix."""
    return word[:-1] + "ت" if word.endswith("ة") else word


def _oblique(case):
    return case in ("accusative", "genitive")


def nominal_stem(entry, bundle):
    """Number, gender and case, before definiteness."""
    number = bundle.number or "S"
    case = bundle.case or "nominative"
    base = entry.arabic_lemma
    adjective = entry.pos_class in ("adjective", "number-word")
    if adjective and bundle.gender == "F":
        base = feminine(base)
    if number == "S":
        return base
    if number == "B":
        return _tie(base) + ("ين" if _oblique(case) else "ان")
    if adjective:
        if bundle.gender == "F":
            return base[:-1] + "ات"
        if entry.plural_class == "broken" and entry.broken_plural:
            return entry.broken_plural
        return base + ("ين" if _oblique(case) else "ون")
    if entry.plural_class == "regular-masculine":
        return base + ("ين" if _oblique(case) else "ون")
    if entry.plural_class == "regular-feminine":
        return (base[:-1] if base.endswith("ة") else base) + "ات"
    if entry.plural_class == "broken":
        if not entry.broken_plural:
            raise GenerationError(f"no broken plural for {entry.arabic_lemma}")
        return entry.broken_plural
    raise GenerationError(f"no plural for {entry.arabic_lemma}")


def inflect_noun(entry, bundle):
    """Nominal surface form for ``bundle``."""
    if entry.pos_class not in ("noun", "adjective", "proper-noun", "number-word"):
        raise GenerationError(f"{entry.english_lemma} is not nominal")
    if entry.pos_class == "proper-noun":
        return entry.arabic_lemma
    if entry.plural_class == "broken" and not entry.broken_plural and bundle.number == "P":
        raise GenerationError(f"no broken plural for {entry.arabic_lemma}")
    word = nominal_stem(entry, bundle)
    number = bundle.number or "S"
    if bundle.possessor is not None:
        pr = bundle.possessor
        enc = POSSESSIVE_ENCLITIC.get(canonical_pronoun(pr.person, pr.gender, pr.number))
        if enc is None:
            enc = POSSESSIVE_ENCLITIC[P(3, pr.gender, pr.number)]
        if word.endswith("ون") and number == "P" and entry.plural_class == "regular-masculine":
            word = word[:-1]
        return _tie(word) + enc
    if bundle.definiteness == "by-annexation" and number in ("B", "P") \
            and word.endswith(("ون", "ين", "ان")) and word != entry.broken_plural:
        # first term of an annexation loses the final nun
        return word[:-1]
    if bundle.definiteness == "definite":
        return "ال" + word
    if (bundle.definiteness == "indefinite" and bundle.case == "accusative"
            and number == "S" and bundle.gender != "F"
            and not word.endswith(_NO_TANWIN_ALIF)):
        return word + "ا"
    return word


# numbers

UNITS_M = {1: "واحد", 2: "اثنان", 3: "ثلاث", 4: "أربع", 5: "خمس", 6: "ست",
           7: "سبع", 8: "ثمان", 9: "تسع", 10: "عشر"}
TENS = {2: "عشر", 3: "ثلاث", 4: "أربع", 5: "خمس", 6: "ست", 7: "سبع", 8: "ثمان", 9: "تسع"}
ORDINALS = {1: "أول", 2: "ثاني", 3: "ثالث", 4: "رابع", 5: "خامس", 6: "سادس",
            7: "سابع", 8: "ثامن", 9: "تاسع", 10: "عاشر"}


def _ten(n, case):
    return TENS[n] + ("ين" if _oblique(case) else "ون")


def _unit_with_polarity(n, noun_gender):
    """3..10 take ة with masculine nouns and drop it with feminine ones."""
    bare = UNITS_M[n]
    if n == 8 and noun_gender == "M":
        return "ثمانية"
    return bare + "ة" if noun_gender == "M" else ("ثماني" if n == 8 else bare)


def _one_two(n, gender, case):
    if n == 1:
        return "واحد" if gender == "M" else "واحدة"
    if gender == "M":
        return "اثنين" if _oblique(case) else "اثنان"
    return "اثنتين" if _oblique(case) else "اثنتان"


def render_number(value, counted, case="nominative"):
    """Counted noun phrase for 1 <= value <= 99."""
    if not isinstance(value, int) or not 1 <= value <= 99:
        raise GenerationError(f"unsupported number {value}")
    g = counted.gender if counted.gender in ("M", "F") else "M"
    sing = FeatureBundle(number="S", gender=g, case=case, definiteness="indefinite")
    acc = FeatureBundle(number="S", gender=g, case="accusative", definiteness="indefinite")
    if value == 1:
        return inflect_noun(counted, sing) + " " + _one_two(1, g, case)
    if value == 2:
        return inflect_noun(counted, FeatureBundle(number="B", gender=g, case=case,
                                                   definiteness="indefinite"))
    if value <= 10:
        plural = inflect_noun(counted, FeatureBundle(number="P", gender=g, case="genitive",
                                                     definiteness="indefinite"))
        return _unit_with_polarity(value, g) + " " + plural
    noun = inflect_noun(counted, acc)
    if value <= 19:
        u = value - 10
        if u == 1:
            head = "أحد عشر" if g == "M" else "إحدى عشرة"
        elif u == 2:
            if g == "M":
                head = ("اثني" if _oblique(case) else "اثنا") + " عشر"
            else:
                head = ("اثنتي" if _oblique(case) else "اثنتا") + " عشرة"
        else:
            head = _unit_with_polarity(u, g) + " " + ("عشر" if g == "M" else "عشرة")
        return head + " " + noun
    tens, u = divmod(value, 10)
    if u == 0:
        return _ten(tens, case) + " " + noun
    unit = _one_two(u, g, case) if u <= 2 else _unit_with_polarity(u, g)
    return unit + " و " + _ten(tens, case) + " " + noun


def render_cardinal(value, case="nominative"):
    """Free-standing cardinal by digit decomposition (thousands, hundreds,
    units and tens), e.g. 1435."""
    if not isinstance(value, int) or not 0 < value < 1000000:
        raise GenerationError(f"unsupported number {value}")
    parts = []
    thousands, rest = divmod(value, 1000)
    if thousands:
        if thousands == 1:
            parts.append("ألف")
        elif thousands == 2:
            parts.append("ألفين" if _oblique(case) else "ألفان")
        elif thousands <= 10:
            parts.append(UNITS_M[thousands] + " آلاف")
        else:
            parts.append(render_cardinal(thousands, case) + " ألف")
    hundreds, rest = divmod(rest, 100)
    if hundreds:
        if hundreds == 1:
            parts.append("مائة")
        elif hundreds == 2:
            parts.append("مائتين" if _oblique(case) else "مائتان")
        else:
            parts.append(UNITS_M[hundreds] + " مائة")
    if rest:
        tens, u = divmod(rest, 10)
        if rest <= 10:
            parts.append(UNITS_M[rest] if rest > 2 else _one_two(rest, "M", case))
        elif rest < 20:
            parts.append({11: "أحد", 12: "اثنا"}.get(rest, UNITS_M.get(u, "")) + " عشر")
        elif u == 0:
            parts.append(_ten(tens, case))
        else:
            unit = UNITS_M[u] if u > 2 else _one_two(u, "M", case)
            parts.append(unit + " و " + _ten(tens, case))
    return " و ".join(parts)


def render_ordinal(value, gender="M", definite=True, case="nominative"):
    """Ordinal adjective; compounds keep the units word and the article on
    both halves, e.g. الواحد و العشرون."""
    art = "ال" if definite else ""
    if 1 <= value <= 10:
        word = ORDINALS[value]
        return art + (feminine(word) if gender == "F" else word)
    if 20 <= value <= 99:
        tens, u = divmod(value, 10)
        tail = art + _ten(tens, case)
        if u == 0:
            return tail
        unit = "واحد" if u == 1 else ORDINALS[u]
        if gender == "F":
            unit = feminine(unit)
        return art + unit + " و " + tail
    if 11 <= value <= 19:
        u = value - 10
        unit = "حادي" if u == 1 else ORDINALS[u]
        if gender == "F":
            return art + feminine(unit) + " عشرة"
        return art + unit + " عشر"
    raise GenerationError(f"unsupported number {value}")
