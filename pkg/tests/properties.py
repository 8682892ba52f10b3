"""Randomized property suites, shared by test_properties.py and the
acceptance report.

Every suite is a hypothesis test wrapped so that it counts the examples it
actually executed; ``run_suite`` runs each suite at most once per session
and keeps its outcome.  Inputs are drawn as one integer decoded in mixed
radix over the cross product of the input domains: the engine's cost per
drawn value, not the code under test, dominates the runtime at 10**4
examples.
"""
import gc
import itertools
import math
import time
from fractions import Fraction

from hypothesis import HealthCheck, given, settings, strategies as st

from arabic_transfer.analyzer import analyze
from arabic_transfer.bleu import corpus_bleu, sentence_bleu
from arabic_transfer.features import CASES, PRONOUNS, nominal, verbal
from arabic_transfer.generator import inflect_noun, verb_form
from arabic_transfer.ir import eleven_point, metrics_from_counts
from arabic_transfer.lexicon import load_lexicon
from arabic_transfer.normalize import normalize

EXAMPLES = 10_000
cases = settings(max_examples=EXAMPLES, deadline=None, database=None,
                 suppress_health_check=list(HealthCheck))

LEX = load_lexicon()
INV = LEX.clitics
LETTERS = "ءآأؤإئابةتثجحخدذرزسشصضطظعغفقكلمنهوىي"

VERBS = [e for e in LEX.entries if e.pos_class == "verb"]
MASC_PLURALS = [e for e in LEX.entries
                if e.pos_class == "noun" and e.plural_class == "regular-masculine"]
NOUNS = [e for e in LEX.entries if e.pos_class in ("noun", "adjective")]
STEMS = sorted({e.arabic_lemma for e in LEX.entries if " " not in e.arabic_lemma})
OBJECTS = (None,) + PRONOUNS


def decode(domains, n):
    out = []
    for d in domains:
        n, i = divmod(n, len(d))
        out.append(d[i])
    return tuple(out)


def product(*domains):
    """Strategy over the cross product of indexable ``domains``."""
    size = math.prod(len(d) for d in domains)
    return st.integers(0, size - 1).map(lambda n: decode(domains, n))


PARTS = (INV.proclitics, INV.prefixes, STEMS, INV.suffixes, INV.enclitics)


def make_word(built, n):
    """A word assembled from the inventories around a lexicon stem, or a
    random string of one to nine letters."""
    if built:
        return "".join(decode(PARTS, n))
    length = 1 + n % 9
    return "".join(decode([LETTERS] * length, n // 9))


def segmentation_reassembly(seen):
    @cases
    @given(st.booleans(), st.integers(0, 10**18))
    def prop(built, n):
        seen.append(1)
        w = normalize(make_word(built, n))
        for cand in analyze(w, LEX).candidates:
            assert cand.surface == w
            assert cand.base
            assert cand.root is None or len(cand.root) == 3
    prop()


def generator_analyzer_round_trip(seen):
    @cases
    @given(product(VERBS, PRONOUNS, ("present", "past", "future"),
                   ("affirmative", "negative"), OBJECTS))
    def prop(args):
        seen.append(1)
        entry, pronoun, tense, polarity, obj = args
        _, word = verb_form(entry, verbal(pronoun, tense, polarity, obj=obj))
        roots = {c.root for c in analyze(word, LEX).candidates}
        assert entry.arabic_root in roots, word
    prop()


def nominal_case_alternation(seen):
    # the agreement gender only matters for adjectives but widens the space
    # past 10**4 distinct inputs
    @cases
    @given(product(MASC_PLURALS, NOUNS, CASES, ("definite", "indefinite"), ("M", "F")))
    def prop(args):
        seen.append(1)
        plural_noun, noun, case, definiteness, gender = args
        oblique = case != "nominative"
        p = inflect_noun(plural_noun, nominal("P", plural_noun.gender, definiteness, case))
        assert p.endswith("ين" if oblique else "ون"), p
        d = inflect_noun(noun, nominal("B", gender, definiteness, case))
        assert d.endswith("ين" if oblique else "ان"), d
    prop()


def metric_complements(seen):
    counts = range(10**6 + 1)

    @cases
    @given(product(counts, counts, counts))
    def prop(args):
        seen.append(1)
        hit, extra_retrieved, extra_relevant = args
        m = metrics_from_counts(hit, hit + extra_retrieved, hit + extra_relevant)
        assert m.silence + m.recall == 1
        assert m.noise + m.precision == 1
        for v in (m.precision, m.recall, m.silence, m.noise):
            assert 0 <= v <= 1
    prop()


def _nth_permutation(items, n):
    items, out = list(items), []
    while items:
        n, i = divmod(n, len(items))
        out.append(items.pop(i))
    return out


DOCS = 12


def eleven_point_monotonic(seen):
    # ranking = the n-th permutation of 12 documents cut at some depth;
    # relevance = a non-empty bit mask over them
    @cases
    @given(product(range(math.factorial(DOCS)), range(DOCS + 1), range(1, 2**DOCS)))
    def prop(args):
        seen.append(1)
        n, depth, mask = args
        ranked = _nth_permutation(range(DOCS), n)[:depth]
        relevant = {d for d in range(DOCS) if mask >> d & 1}
        curve = eleven_point(ranked, relevant)
        assert len(curve) == 11
        assert all(a >= b for a, b in zip(curve, curve[1:]))
        assert all(Fraction(0) <= p <= 1 for p in curve)
    prop()


# every sentence of one to four tokens over a three-word vocabulary
SENTENCES = [list(t) for k in range(1, 5) for t in itertools.product("abc", repeat=k)]
ORDERS = list(itertools.permutations(range(3)))


def bleu_reference_permutation(seen):
    @cases
    @given(product(SENTENCES, (1, 2, 3), SENTENCES, SENTENCES, SENTENCES, ORDERS,
                   ("none", "cap", "geometric", "ibleu")))
    def prop(args):
        seen.append(1)
        candidate, k, r1, r2, r3, order, smoothing = args
        refs = [r1, r2, r3][:k]
        shuffled = [refs[i] for i in order if i < len(refs)]
        a = sentence_bleu(candidate, refs, smoothing=smoothing)
        b = sentence_bleu(candidate, shuffled, smoothing=smoothing)
        assert (a.score, a.counts, a.r) == (b.score, b.counts, b.r)
        assert 0 <= a.score <= 1
        # an exact-copy reference never lowers a numerator
        c = sentence_bleu(candidate, refs + [list(refs[0])], smoothing=smoothing)
        assert all(x[0] >= y[0] for x, y in zip(c.counts, a.counts))
        # a one-segment corpus scores like the segment
        assert corpus_bleu([candidate], [refs], smoothing=smoothing).score == a.score
    prop()


SUITES = {
    "segmentation-reassembly": segmentation_reassembly,
    "generator-analyzer-round-trip": generator_analyzer_round_trip,
    "nominal-case-alternation": nominal_case_alternation,
    "silence-recall-noise-precision": metric_complements,
    "eleven-point-monotonic": eleven_point_monotonic,
    "bleu-reference-permutation": bleu_reference_permutation,
}

RESULTS = {}     # name -> (examples run, seconds, exception or None)


def run_suite(name):
    if name not in RESULTS:
        seen = []
        # the engine allocates heavily; collecting over the long-lived heap
        # (lexicon, caches) would otherwise cost a large share of the run
        gc.collect()
        gc.freeze()
        gc.disable()
        start = time.perf_counter()
        try:
            SUITES[name](seen)
            err = None
        except Exception as exc:      # kept so the failure can be re-raised
            err = exc
        finally:
            gc.enable()
            gc.unfreeze()
        RESULTS[name] = (len(seen), time.perf_counter() - start, err)
    return RESULTS[name]
