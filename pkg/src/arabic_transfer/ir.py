"""Lemma-based retrieval over Arabic documents and its evaluation.

Documents are normalized, stripped of stop words and lemmatized; the
postings are keyed by lemma.  A query goes through the same steps and a
document scores the term frequencies of the query lemmas it contains.  The
word-match baseline does the same on surface words.
"""
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .analyzer import lemmatize
from .errors import InputError, ResourceError
from .normalize import arabic_tokens
from .tagged import english_lemma

FORMAT = "arabic-transfer-index"
VERSION = 1
QUERY_CLASSES = ("noun", "verb", "adjective", "adverb", "proper-noun")


@dataclass
class DocStats:
    words: int
    terms: int          # after stop-word removal
    lemmas: int         # distinct lemmas


@dataclass
class IndexedCorpus:
    documents: dict = field(default_factory=dict)     # id -> DocStats
    postings: dict = field(default_factory=dict)      # lemma -> {id: tf}
    words: dict = field(default_factory=dict)         # surface -> {id: tf}

    def lemmas_of(self, doc_id):
        return sorted(t for t, p in self.postings.items() if doc_id in p)

    @property
    def vocabulary(self):
        return sorted(self.postings)


def index_terms(text, lex):
    """(all tokens, tokens kept after stop-word removal)."""
    toks = arabic_tokens(text)
    return toks, [t for t in toks if t not in lex.stopwords]


def build_index(docs, lex):
    """Index ``docs``, a sequence of (id, text) pairs."""
    docs = list(docs)
    if not docs:
        raise InputError("no documents to index")
    corpus = IndexedCorpus()
    cache = {}
    for doc_id, text in docs:
        if doc_id in corpus.documents:
            raise InputError(f"duplicate document id {doc_id!r}")
        toks, terms = index_terms(text, lex)
        lemmas = Counter()
        for t in terms:
            if t not in cache:
                cache[t] = lemmatize(t, lex)
            lemmas[cache[t]] += 1
        for lemma, tf in lemmas.items():
            corpus.postings.setdefault(lemma, {})[doc_id] = tf
        for w, tf in Counter(terms).items():
            corpus.words.setdefault(w, {})[doc_id] = tf
        corpus.documents[doc_id] = DocStats(len(toks), len(terms), len(lemmas))
    return corpus


def query_lemmas(query, lex):
    _, terms = index_terms(query, lex)
    return sorted({lemmatize(t, lex) for t in terms})


def _rank(table, keys, threshold, k):
    matched, score = Counter(), Counter()
    for key in keys:
        for doc, tf in table.get(key, {}).items():
            matched[doc] += 1
            score[doc] += tf
    hits = [(doc, score[doc]) for doc in matched if matched[doc] >= threshold]
    hits.sort(key=lambda x: (-x[1], x[0]))
    return hits[:k] if k else hits


def search(index, query, lex, k=None, threshold=1, mode="lemma"):
    """Ranked (doc id, score) pairs.  ``mode`` is "lemma" or "word" (the
    surface baseline)."""
    if mode == "word":
        _, terms = index_terms(query, lex)
        return _rank(index.words, sorted(set(terms)), threshold, k)
    return _rank(index.postings, query_lemmas(query, lex), threshold, k)


def translate_query(english_query, lex, expansion=0, warnings=None):
    """Arabic lemmas for an English query, word by word.  ``expansion`` adds
    up to that many further equivalents per word (other senses of the
    English word, then other words of the same root)."""
    out = []
    for word in english_query.split():
        lemma = english_lemma(word, known=lambda c: bool(lex.english_senses(c)))
        senses = [e for e in lex.english_senses(lemma) if e.pos_class in QUERY_CLASSES]
        if not senses:
            if warnings is not None:
                warnings.append(f"no translation for {word!r}; skipped")
            continue
        equivalents = [senses[0].arabic_lemma]
        extra = [e.arabic_lemma for e in senses[1:]]
        for e in senses:
            extra.extend(x.arabic_lemma for x in lex.entries_for_root(e.arabic_root))
        for form in extra:
            if len(equivalents) > expansion:
                break
            if form not in equivalents:
                equivalents.append(form)
        out.extend(equivalents)
    return out


def search_bilingual(index, english_query, lex, expansion=0, k=None, threshold=1,
                     warnings=None):
    arabic = translate_query(english_query, lex, expansion, warnings)
    if not arabic:
        return []
    lemmas = sorted({lemmatize(w, lex) for w in arabic})
    return _rank(index.postings, lemmas, threshold, k)


# persistence

def save_index(index, path):
    """Write a line-based JSON index (stable key order)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"format": FORMAT, "version": VERSION}) + "\n")
        for doc_id in sorted(index.documents):
            s = index.documents[doc_id]
            fh.write(json.dumps({"doc": doc_id, "words": s.words, "terms": s.terms,
                                 "lemmas": s.lemmas}, ensure_ascii=False) + "\n")
        for lemma in sorted(index.postings):
            fh.write(json.dumps({"lemma": lemma, "postings": index.postings[lemma]},
                                ensure_ascii=False, sort_keys=True) + "\n")
        for w in sorted(index.words):
            fh.write(json.dumps({"word": w, "postings": index.words[w]},
                                ensure_ascii=False, sort_keys=True) + "\n")


def load_index(path):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    try:
        head = json.loads(lines[0])
    except (IndexError, json.JSONDecodeError):
        raise ResourceError(f"{path}: not an index file")
    if head.get("format") != FORMAT:
        raise ResourceError(f"{path}: not an index file")
    if head.get("version") != VERSION:
        raise ResourceError(f"{path}: unsupported index version {head.get('version')}")
    index = IndexedCorpus()
    for n, line in enumerate(lines[1:], 2):
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ResourceError(f"{path}:{n}: {exc}")
        if "doc" in rec:
            index.documents[rec["doc"]] = DocStats(rec["words"], rec["terms"], rec["lemmas"])
        elif "lemma" in rec:
            index.postings[rec["lemma"]] = rec["postings"]
        elif "word" in rec:
            index.words[rec["word"]] = rec["postings"]
    return index


def read_corpus_dir(directory):
    """(id, text) for every *.txt file, id = file stem, sorted by id."""
    d = Path(directory)
    if not d.is_dir():
        raise ResourceError(f"{directory}: not a directory")
    files = sorted(d.glob("*.txt"))
    return [(f.stem, f.read_text(encoding="utf-8")) for f in files]


# evaluation

@dataclass
class MetricsReport:
    precision: Fraction
    recall: Fraction
    silence: Fraction
    noise: Fraction
    accuracy: Fraction = None
    eleven_point: tuple = ()

    def as_dict(self):
        d = {k: float(getattr(self, k)) for k in ("precision", "recall", "silence", "noise")}
        d["accuracy"] = None if self.accuracy is None else float(self.accuracy)
        d["eleven_point"] = [float(x) for x in self.eleven_point]
        return d


def metrics_from_counts(relevant_retrieved, retrieved, relevant, accuracy=None,
                        eleven_point=()):
    """Precision, recall, silence and noise from the three counts.  With
    nothing retrieved precision is 0; with nothing relevant recall is 1."""
    if relevant_retrieved < 0 or relevant_retrieved > min(retrieved, relevant):
        raise InputError("relevant retrieved exceeds retrieved or relevant")
    p = Fraction(relevant_retrieved, retrieved) if retrieved else Fraction(0)
    r = Fraction(relevant_retrieved, relevant) if relevant else Fraction(1)
    return MetricsReport(p, r, 1 - r, 1 - p, accuracy, tuple(eleven_point))


def lemmatization_accuracy(correct, total):
    if total <= 0:
        raise InputError("no words to score")
    return Fraction(correct, total)


RECALL_LEVELS = tuple(Fraction(i, 10) for i in range(11))


def eleven_point(ranked, relevant):
    """Interpolated precision at recall 0.0, 0.1 .. 1.0: at each level the
    best precision reached at that recall or beyond."""
    relevant = set(relevant)
    points = []
    hits = 0
    for i, doc in enumerate(ranked, 1):
        if doc in relevant:
            hits += 1
            points.append((Fraction(hits, len(relevant)), Fraction(hits, i)))
    out = []
    for level in RECALL_LEVELS:
        ps = [p for r, p in points if r >= level]
        out.append(max(ps) if ps else Fraction(0))
    return tuple(out)


def evaluate_run(ranked, relevant):
    retrieved = list(ranked)
    rel = set(relevant)
    hit = len(rel & set(retrieved))
    return metrics_from_counts(hit, len(retrieved), len(rel),
                               eleven_point=eleven_point(retrieved, rel) if rel else ())


def mean_report(reports):
    if not reports:
        raise InputError("no queries to average")
    n = len(reports)

    def avg(name):
        return sum((getattr(r, name) for r in reports), Fraction(0)) / n
    curves = [r.eleven_point for r in reports if r.eleven_point]
    curve = tuple(sum(c[i] for c in curves) / len(curves) for i in range(11)) if curves else ()
    return MetricsReport(avg("precision"), avg("recall"), avg("silence"), avg("noise"),
                         None, curve)


def evaluate(index, queries, judgments, lex, threshold=1, mode="lemma"):
    """Per-query MetricsReport and their means.  ``queries`` maps a query id
    to its text, ``judgments`` a query id to its relevant doc ids."""
    for qid, docs in judgments.items():
        unknown = set(docs) - set(index.documents)
        if unknown:
            raise InputError(f"judgments for {qid} name unknown documents: {sorted(unknown)}")
    per = {}
    for qid in sorted(queries):
        ranked = [d for d, _ in search(index, queries[qid], lex, threshold=threshold, mode=mode)]
        per[qid] = evaluate_run(ranked, judgments.get(qid, ()))
    return per, mean_report(list(per.values()))


def read_tsv_pairs(path):
    """Two-column TSV; blank lines and # comments ignored."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise InputError(f"{path}:{n}: expected two tab-separated columns")
            out.append((parts[0], parts[1]))
    return out


def read_judgments(path):
    """``query-id <TAB> doc-id`` lines -> {query id: set of doc ids}."""
    out = {}
    for q, d in read_tsv_pairs(path):
        out.setdefault(q, set()).add(d)
    return out
