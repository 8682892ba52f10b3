"""Loading and validation of the static linguistic resources.

A lexicon directory holds five UTF-8 TSV files::

    clitics.tsv     kind <TAB> form           kind in proclitic/enclitic/prefix/suffix
    compat.tsv      table <TAB> left <TAB> right   each row is an INCOMPATIBLE pair;
                    table is clitic (proclitic/enclitic), affix (prefix/suffix)
                    or proclitic-prefix
    schemes.tsv     pattern <TAB> infix positions  comma separated, 1-based, "-" for none
    bilingual.tsv   english <TAB> pos <TAB> root <TAB> lemma <TAB> gender <TAB> human
                    <TAB> plural class [<TAB> broken plural [<TAB> verb class]]
    stopwords.tsv   one word per line

Lines starting with ``#`` and blank lines are ignored.  The empty affix is
written ``''``.  Everything is NFC normalised with short vowels removed.
"""
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ResourceError
from .normalize import normalize

ENV_VAR = "ARABIC_TRANSFER_LEXICON"
DATA_DIR = Path(__file__).parent / "data"

FILES = {
    "clitics": "clitics.tsv",
    "compat": "compat.tsv",
    "schemes": "schemes.tsv",
    "bilingual": "bilingual.tsv",
    "stopwords": "stopwords.tsv",
}

EMPTY = "''"
KINDS = ("proclitic", "enclitic", "prefix", "suffix")
POS_CLASSES = ("verb", "noun", "adjective", "adverb", "preposition",
               "conjunction", "proper-noun", "number-word")
PLURAL_CLASSES = ("regular-masculine", "regular-feminine", "broken")
VERB_CLASSES = ("sound", "assimilated", "hollow", "defective")
# default model per weak class, used when the entry does not name one
DEFAULT_MODELS = {"sound": "sound", "assimilated": "wasala", "hollow": "qama",
                  "defective": "nasiya"}
MODELS = {
    "sound": ("sound",),
    "assimilated": ("wasala",),
    "hollow": ("qama", "baa", "khafa"),
    "defective": ("nasiya", "rama", "daa"),
}


@dataclass(frozen=True)
class CliticInventory:
    proclitics: tuple
    enclitics: tuple
    prefixes: tuple
    suffixes: tuple

    def of(self, kind):
        return getattr(self, kind + "es" if kind.endswith("x") else kind + "s")


@dataclass(frozen=True)
class CompatibilityTable:
    """Pairs listed here may not co-occur in one word."""
    name: str
    incompatible_pairs: frozenset

    def compatible(self, left, right):
        return (left, right) not in self.incompatible_pairs


@dataclass(frozen=True)
class SchemeEntry:
    pattern: str
    infix_positions: tuple

    @property
    def length(self):
        return len(self.pattern)

    @property
    def root_slots(self):
        return self.length - len(self.infix_positions)

    def matches(self, base):
        if len(base) != self.length:
            return False
        return all(base[p - 1] == self.pattern[p - 1] for p in self.infix_positions)

    def root_of(self, base):
        skip = set(self.infix_positions)
        return "".join(ch for i, ch in enumerate(base, 1) if i not in skip)

    def __str__(self):
        return self.pattern


@dataclass(frozen=True)
class LexEntry:
    english_lemma: str
    pos_class: str
    arabic_root: str
    arabic_lemma: str
    gender: str = "-"
    human: bool = False
    plural_class: str = "-"
    broken_plural: str = ""
    verb_class: str = ""
    conjugation_model: str = ""

    @property
    def key(self):
        return (self.english_lemma, self.pos_class)

    def row(self):
        vc = self.verb_class
        if vc and self.conjugation_model and self.conjugation_model != DEFAULT_MODELS.get(vc):
            vc = f"{vc}/{self.conjugation_model}"
        cells = [self.english_lemma, self.pos_class, self.arabic_root or "-",
                 self.arabic_lemma, self.gender, "yes" if self.human else "no",
                 self.plural_class, self.broken_plural or "-", vc or "-"]
        return cells


@dataclass(frozen=True)
class Lexicon:
    clitics: CliticInventory
    clitic_compat: CompatibilityTable
    affix_compat: CompatibilityTable
    schemes: tuple
    entries: tuple
    stopwords: frozenset
    source: str = ""
    clitic_affix_compat: CompatibilityTable = CompatibilityTable("proclitic-prefix", frozenset())
    _by_key: dict = field(default_factory=dict, repr=False, compare=False)
    _by_root: dict = field(default_factory=dict, repr=False, compare=False)
    _by_form: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for e in self.entries:
            self._by_key[e.key] = e
            if e.arabic_root:
                self._by_root.setdefault(e.arabic_root, []).append(e)
            self._by_form.setdefault(e.arabic_lemma, []).append(e)
            if e.broken_plural:
                self._by_form.setdefault(e.broken_plural, []).append(e)

    def lookup_english(self, lemma, pos_class):
        """Exact match on lowercased lemma and POS class; None when absent."""
        return self._by_key.get((lemma.lower(), pos_class))

    def english_senses(self, lemma):
        lemma = lemma.lower()
        return [e for e in self.entries if e.english_lemma == lemma]

    def entries_for_root(self, root):
        return list(self._by_root.get(root, ()))

    def entries_for_form(self, form):
        return list(self._by_form.get(form, ()))

    def citation_form(self, root):
        """Lemma used to index every word built on ``root``.

        The first bilingual entry carrying the root wins, so file order
        decides which citation form represents a root family.
        """
        found = self._by_root.get(root)
        return found[0].arabic_lemma if found else None

    def knows_root(self, root):
        return root in self._by_root

    def compatibility(self, table, left, right):
        tab = {"clitic": self.clitic_compat, "affix": self.affix_compat,
               "proclitic-prefix": self.clitic_affix_compat}[table]
        return tab.compatible(left, right)


def default_lexicon_dir():
    return Path(os.environ.get(ENV_VAR) or DATA_DIR)


def _rows(path, name):
    if not path.is_file():
        raise ResourceError(f"resource missing: {name} ({path})")
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cells = [normalize(c.strip()) for c in line.split("\t")]
            out.append((lineno, line, cells))
    return out


def _bad(path, lineno, line, why):
    return ResourceError(f"{path.name}:{lineno}: {why}: {line!r}")


def _form(cell):
    return "" if cell == EMPTY else cell


def _load_clitics(path):
    kinds = {k: [] for k in KINDS}
    for lineno, line, cells in _rows(path, "clitics"):
        if len(cells) != 2 or cells[0] not in kinds:
            raise _bad(path, lineno, line, "expected kind<TAB>form")
        form = _form(cells[1])
        if not cells[1] or any(ch.isspace() for ch in form):
            raise _bad(path, lineno, line, "bad form")
        if form not in kinds[cells[0]]:
            kinds[cells[0]].append(form)
    for forms in kinds.values():
        if "" not in forms:
            forms.insert(0, "")
    return CliticInventory(*(tuple(kinds[k]) for k in KINDS))


def _load_compat(path):
    pairs = {"clitic": set(), "affix": set(), "proclitic-prefix": set()}
    for lineno, line, cells in _rows(path, "compat"):
        if len(cells) != 3 or cells[0] not in pairs or not cells[1] or not cells[2]:
            raise _bad(path, lineno, line, "expected table<TAB>left<TAB>right")
        pairs[cells[0]].add((_form(cells[1]), _form(cells[2])))
    return tuple(CompatibilityTable(k, frozenset(v)) for k, v in pairs.items())


def _load_schemes(path):
    rows = _rows(path, "schemes")
    if not rows:
        raise ResourceError("resource missing or empty: schemes")
    seen = {}
    for lineno, line, cells in rows:
        if len(cells) != 2 or not cells[0]:
            raise _bad(path, lineno, line, "expected pattern<TAB>positions")
        pattern, infixes = cells
        try:
            positions = () if infixes in ("", "-") else tuple(int(p) for p in infixes.split(","))
        except ValueError:
            raise _bad(path, lineno, line, "infix positions must be integers") from None
        if list(positions) != sorted(set(positions)):
            raise _bad(path, lineno, line, "infix positions must be strictly ascending")
        for p in positions:
            if not 1 <= p <= len(pattern):
                raise _bad(path, lineno, line, f"infix position {p} exceeds length {len(pattern)}")
        entry = SchemeEntry(pattern, positions)
        if entry.root_slots != 3:
            raise _bad(path, lineno, line, "scheme must leave exactly 3 root slots")
        if pattern in seen and seen[pattern] != entry:
            raise _bad(path, lineno, line, f"scheme {pattern} already defined with other infixes")
        seen[pattern] = entry
    return tuple(seen.values())


def _load_bilingual(path):
    rows = _rows(path, "bilingual")
    if not rows:
        raise ResourceError("resource missing or empty: bilingual")
    entries = {}
    for lineno, line, cells in rows:
        if not 7 <= len(cells) <= 9:
            raise _bad(path, lineno, line, "expected 7 to 9 columns")
        cells += ["-"] * (9 - len(cells))
        eng, pos, root, lemma, gender, human, plural, broken, vclass = cells
        eng = eng.lower()
        if not eng or not lemma or pos not in POS_CLASSES:
            raise _bad(path, lineno, line, "bad english lemma, arabic lemma or pos class")
        root = "" if root == "-" else root
        broken = "" if broken == "-" else broken
        if gender not in ("M", "F", "-"):
            raise _bad(path, lineno, line, "gender must be M, F or -")
        if pos in ("noun", "adjective", "proper-noun") and gender == "-":
            raise _bad(path, lineno, line, "nominal entries need a gender")
        if human not in ("yes", "no"):
            raise _bad(path, lineno, line, "humanness must be yes or no")
        if plural not in PLURAL_CLASSES + ("-",):
            raise _bad(path, lineno, line, "unknown plural class")
        if plural == "broken" and not broken:
            raise _bad(path, lineno, line, "broken plural class needs a plural form")
        model = ""
        if vclass == "-":
            vclass = ""
        if pos == "verb":
            if len(root) != 3:
                raise _bad(path, lineno, line, "verb roots have exactly 3 letters")
            vclass = vclass or "sound"
            vclass, _, model = vclass.partition("/")
            if vclass not in VERB_CLASSES:
                raise _bad(path, lineno, line, "unknown verb class")
            model = model or DEFAULT_MODELS[vclass]
            if model not in MODELS[vclass]:
                raise _bad(path, lineno, line, f"unknown conjugation model {model}")
        elif vclass:
            raise _bad(path, lineno, line, "verb class on a non-verb entry")
        entry = LexEntry(eng, pos, root, lemma, gender, human == "yes", plural,
                         broken, vclass, model)
        if entry.key in entries:
            if entries[entry.key] != entry:
                raise _bad(path, lineno, line, f"duplicate entry for {eng}/{pos}")
            continue
        entries[entry.key] = entry
    return tuple(entries.values())


def _load_stopwords(path):
    words = []
    for lineno, line, cells in _rows(path, "stopwords"):
        if len(cells) != 1 or not cells[0] or " " in cells[0]:
            raise _bad(path, lineno, line, "expected one word per line")
        words.append(cells[0])
    if not words:
        raise ResourceError("resource missing or empty: stopwords")
    return frozenset(words)


def load_lexicon(directory=None):
    """Read the five resource files under ``directory`` into a Lexicon."""
    d = Path(directory) if directory is not None else default_lexicon_dir()
    if not d.is_dir():
        raise ResourceError(f"resource missing: lexicon directory {d}")
    clitics = _load_clitics(d / FILES["clitics"])
    clitic_compat, affix_compat, cross = _load_compat(d / FILES["compat"])
    schemes = _load_schemes(d / FILES["schemes"])
    entries = _load_bilingual(d / FILES["bilingual"])
    stopwords = _load_stopwords(d / FILES["stopwords"])
    return Lexicon(clitics, clitic_compat, affix_compat, schemes, entries,
                   stopwords, source=str(d), clitic_affix_compat=cross)


def _cell(form):
    return form if form else EMPTY


def dump_lexicon(lex, directory):
    """Write ``lex`` back out in the canonical TSV layout."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    with open(d / FILES["clitics"], "w", encoding="utf-8") as fh:
        for kind in KINDS:
            for form in lex.clitics.of(kind):
                fh.write(f"{kind}\t{_cell(form)}\n")
    with open(d / FILES["compat"], "w", encoding="utf-8") as fh:
        for tab in (lex.clitic_compat, lex.affix_compat, lex.clitic_affix_compat):
            for left, right in sorted(tab.incompatible_pairs):
                fh.write(f"{tab.name}\t{_cell(left)}\t{_cell(right)}\n")
    with open(d / FILES["schemes"], "w", encoding="utf-8") as fh:
        for s in lex.schemes:
            pos = ",".join(map(str, s.infix_positions)) or "-"
            fh.write(f"{s.pattern}\t{pos}\n")
    with open(d / FILES["bilingual"], "w", encoding="utf-8") as fh:
        for e in lex.entries:
            fh.write("\t".join(e.row()) + "\n")
    with open(d / FILES["stopwords"], "w", encoding="utf-8") as fh:
        for w in sorted(lex.stopwords):
            fh.write(w + "\n")
