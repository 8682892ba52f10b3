"""BLEU with clipped n-gram precision and brevity penalty.

Counts are kept as integers so precisions stay exact rationals.  Corpus
scores sum clipped counts over all segments before dividing.  Short
segments need a smoothing rule; four are available:

none       any zero precision gives a zero score
cap        score only up to the largest order with a non-zero count
geometric  the k-th order with no match scores 1 / (2**k * total)
ibleu      geometric over orders 1..N-1, averaged over N; the
           per-segment scores of the reference implementation this mimics
"""
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

SMOOTHING = ("none", "cap", "geometric", "ibleu")


def ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def clipped_counts(candidate, references, n):
    """(clipped matches, candidate n-gram total) for one segment."""
    cand = ngrams(candidate, n)
    best = Counter()
    for ref in references:
        for g, c in ngrams(ref, n).items():
            if c > best[g]:
                best[g] = c
    num = sum(min(c, best[g]) for g, c in cand.items())
    return num, sum(cand.values())


def _as_segments(candidates, references):
    # a single token list (and its references) or a list of segments
    if candidates and isinstance(candidates[0], str):
        return [candidates], [references]
    return candidates, references


def clipped_precision(candidates, references, n):
    """Modified n-gram precision as a Fraction, summed over segments.
    ``references`` holds one list of reference token lists per candidate.
    No candidate n-grams yields 0."""
    cands, refs = _as_segments(candidates, references)
    num = den = 0
    for c, rs in zip(cands, refs):
        a, b = clipped_counts(c, rs, n)
        num += a
        den += b
    return Fraction(num, den) if den else Fraction(0)


def closest_ref_length(c, ref_lengths):
    """Reference length closest to ``c``; ties go to the shorter one."""
    return min(ref_lengths, key=lambda r: (abs(r - c), r))


def brevity_penalty(c, r):
    if c == 0:
        return 0.0
    if c > r:
        return 1.0
    return math.exp(1 - r / c)


@dataclass
class BleuReport:
    counts: list        # (clipped matches, total) per order
    bp: float
    c: int
    r: int
    n: int
    score: float
    smoothing: str = "ibleu"

    @property
    def precisions(self):
        return [Fraction(a, b) if b else Fraction(0) for a, b in self.counts]

    def as_dict(self):
        return {"score": self.score, "bp": self.bp, "c": self.c, "r": self.r, "n": self.n,
                "p_n": [f"{a}/{b}" for a, b in self.counts], "smoothing": self.smoothing}


def _combine(counts, n, smoothing):
    """Geometric mean of the precisions under ``smoothing``."""
    if smoothing not in SMOOTHING:
        raise InputError(f"unknown smoothing {smoothing!r}")
    if smoothing == "none":
        if any(a == 0 for a, _ in counts):
            return 0.0
        return math.exp(sum(math.log(a / b) for a, b in counts) / n)
    if smoothing == "cap":
        usable = [k for k, (a, b) in enumerate(counts) if a > 0 and b > 0]
        if not usable:
            return 0.0
        top = max(usable) + 1
        if any(counts[k][0] == 0 for k in range(top)):
            return 0.0
        return math.exp(sum(math.log(a / b) for a, b in counts[:top]) / top)
    orders = counts if smoothing == "geometric" else counts[:max(n - 1, 1)]
    total, k = 0.0, 1
    for a, b in orders:
        if b == 0:
            continue
        if a == 0:
            k *= 2
            total += math.log(1 / (k * b))
        else:
            total += math.log(a / b)
    return math.exp(total / n)


def _report(counts, c, r, n, smoothing):
    bp = brevity_penalty(c, r)
    score = 0.0 if c == 0 else bp * _combine(counts, n, smoothing)
    return BleuReport(counts, bp, c, r, n, min(score, 1.0), smoothing)


def tokenize(line, preserve_case=False):
    return (line if preserve_case else line.lower()).split()


def sentence_bleu(candidate, references, n=4, smoothing="ibleu"):
    counts = [clipped_counts(candidate, references, k) for k in range(1, n + 1)]
    c = len(candidate)
    r = closest_ref_length(c, [len(x) for x in references])
    return _report(counts, c, r, n, smoothing)


def corpus_bleu(candidates, references, n=4, smoothing="ibleu"):
    """Corpus score from counts summed over segments."""
    if len(candidates) != len(references):
        raise InputError(f"{len(candidates)} candidates but {len(references)} reference sets")
    counts = [[0, 0] for _ in range(n)]
    c = r = 0
    for cand, refs in zip(candidates, references):
        for k in range(n):
            a, b = clipped_counts(cand, refs, k + 1)
            counts[k][0] += a
            counts[k][1] += b
        c += len(cand)
        r += closest_ref_length(len(cand), [len(x) for x in refs])
    return _report([tuple(x) for x in counts], c, r, n, smoothing)


def read_lines(path):
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh]


def load_segments(hyp_path, ref_paths, preserve_case=False):
    """Tokenized hypotheses and, per line, the list of references."""
    hyps = read_lines(hyp_path)
    refs = [read_lines(p) for p in ref_paths]
    for p, lines in zip(ref_paths, refs):
        if len(lines) != len(hyps):
            raise InputError(f"line count mismatch: {hyp_path} has {len(hyps)} lines, "
                             f"{p} has {len(lines)}")
    cands = [tokenize(h, preserve_case) for h in hyps]
    ref_sets = [[tokenize(r[i], preserve_case) for r in refs] for i in range(len(hyps))]
    return cands, ref_sets


def compare(cands1, cands2, ref_sets, n=4, smoothing="ibleu"):
    """Per-segment (score1, score2, score2 - score1)."""
    if len(cands1) != len(cands2):
        raise InputError(f"line count mismatch: {len(cands1)} vs {len(cands2)} hypotheses")
    out = []
    for a, b, refs in zip(cands1, cands2, ref_sets):
        s1 = sentence_bleu(a, refs, n, smoothing).score
        s2 = sentence_bleu(b, refs, n, smoothing).score
        out.append((s1, s2, s2 - s1))
    return out
