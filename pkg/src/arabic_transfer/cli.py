"""Command line entry point: ``arabic-transfer <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data or lexicon error.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bleu, ir
from .analyzer import analyze
from .errors import ArtifactError, InputError, ResourceError
from .features import PRONOUN_ROWS, FeatureBundle, Pronoun
from .generator import conjugate, inflect_noun, verb_paradigm
from .lexicon import default_lexicon_dir, load_lexicon
from .pipeline import analyze_arabic, translate, translate_variants, warn

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


@dataclass
class CliConfig:
    lexicon_dir: Path
    output_format: str = "text"
    trace: bool = False

    def lexicon(self):
        if not self.lexicon_dir.is_dir():
            raise ResourceError(f"lexicon directory {self.lexicon_dir} does not exist")
        return load_lexicon(self.lexicon_dir)


def _emit(cfg, text_lines, payload):
    if cfg.output_format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _inputs(args_text):
    """Arguments joined as one item, or one item per stdin line."""
    if args_text:
        return [" ".join(args_text)]
    return [line.rstrip("\n") for line in sys.stdin]


# subcommands

def cmd_translate(cfg, args):
    lex = cfg.lexicon()
    status = EXIT_OK
    for line in _inputs(args.sentence):
        if not line.strip():
            print("")
            continue
        try:
            if args.variants:
                rows = translate_variants(line, lex, strict=not args.lenient)
                _emit(cfg, [f"{label}\t{text}" if label else text for label, text in rows],
                      {"input": line, "variants": [{"reading": l, "text": t} for l, t in rows]})
                continue
            res = translate(line, lex, strict=not args.lenient)
        except ArtifactError as exc:
            print(f"error: {exc}", file=sys.stderr)
            print("")
            status = EXIT_DATA
            continue
        warn(res.warnings)
        lines = [res.text]
        if cfg.trace:
            lines += [f"  {word}\t{rule}" for _, word, rule in res.trace]
        _emit(cfg, lines, {"input": line, "text": res.text, "warnings": res.warnings,
                           "trace": [{"clause": c, "word": w, "rule": r}
                                     for c, w, r in res.trace]})
    return status


def cmd_analyze(cfg, args):
    lex = cfg.lexicon()
    for line in _inputs(args.text):
        words = analyze_arabic(line, lex)
        lines, records = [], []
        for w in words:
            lines.append(f"{w.word}\t{w.segmentation.describe()}\t{w.features}\t"
                         f"{' '.join(w.hints)}")
            rec = w.as_dict()
            if args.all:
                cands = analyze(w.word, lex, normalized=True).candidates
                lines += [f"  {c.describe()}" for c in cands]
                rec["candidates"] = [c.as_dict() for c in cands]
            records.append(rec)
        _emit(cfg, lines, {"input": line, "words": records})
    return EXIT_OK


def _find_entry(lex, lemma, pos):
    e = lex.lookup_english(lemma, pos)
    if e is None:
        raise InputError(f"no {pos} {lemma!r} in the lexicon")
    return e


def cmd_generate(cfg, args):
    lex = cfg.lexicon()
    entry = _find_entry(lex, args.lemma, args.pos)
    polarity = "negative" if args.negative else "affirmative"
    if args.pos == "verb":
        if args.paradigm:
            forms = verb_paradigm(entry, args.tense, polarity)
            rows = [(label, f) for (label, _), f in zip(PRONOUN_ROWS, forms)]
            _emit(cfg, [f"{l}\t{f}" for l, f in rows],
                  {"lemma": args.lemma, "tense": args.tense, "polarity": polarity,
                   "forms": [{"pronoun": l, "form": f} for l, f in rows]})
            return EXIT_OK
        pr = Pronoun.parse(args.pronoun)
        obj = Pronoun.parse(args.object) if args.object else None
        b = FeatureBundle(person=pr.person, gender=pr.gender, number=pr.number,
                          tense=args.tense, polarity=polarity,
                          mood="interrogative" if args.question else "declarative",
                          object_enclitic=obj)
        form = conjugate(entry, b)
    else:
        poss = Pronoun.parse(args.possessor) if args.possessor else None
        b = FeatureBundle(person=3, gender=args.gender or entry.gender, number=args.number,
                          tense="none", definiteness=args.definiteness, case=args.case,
                          humanness=entry.human, possessor=poss)
        form = inflect_noun(entry, b)
    _emit(cfg, [form], {"lemma": args.lemma, "bundle": str(b), "form": form})
    return EXIT_OK


def cmd_index(cfg, args):
    lex = cfg.lexicon()
    docs = ir.read_corpus_dir(args.directory)
    index = ir.build_index(docs, lex)
    ir.save_index(index, args.output)
    stats = {d: vars(s) for d, s in sorted(index.documents.items())}
    lines = [f"{d}\t{s.words}\t{s.terms}\t{s.lemmas}" for d, s in sorted(index.documents.items())]
    lines.append(f"{len(index.documents)} documents, {len(index.postings)} lemmas -> {args.output}")
    _emit(cfg, lines, {"documents": stats, "lemmas": len(index.postings),
                       "output": str(args.output)})
    return EXIT_OK


def cmd_search(cfg, args):
    lex = cfg.lexicon()
    index = ir.load_index(args.index)
    query = " ".join(args.query)
    warnings = []
    if args.english:
        hits = ir.search_bilingual(index, query, lex, args.expansion, args.k, args.threshold,
                                   warnings)
    else:
        hits = ir.search(index, query, lex, args.k, args.threshold,
                         "word" if args.baseline else "lemma")
    warn(warnings)
    _emit(cfg, [f"{d}\t{s}" for d, s in hits],
          {"query": query, "hits": [{"doc": d, "score": s} for d, s in hits],
           "warnings": warnings})
    return EXIT_OK


def cmd_eval(cfg, args):
    lex = cfg.lexicon()
    index = ir.load_index(args.index)
    judgments = ir.read_judgments(args.judgments)
    queries = dict(ir.read_tsv_pairs(args.queries))
    per, mean = ir.evaluate(index, queries, judgments, lex, args.threshold,
                            "word" if args.baseline else "lemma")
    lines = ["query\tprecision\trecall\tsilence\tnoise"]
    for q, m in per.items():
        lines.append(f"{q}\t{float(m.precision):.4f}\t{float(m.recall):.4f}\t"
                     f"{float(m.silence):.4f}\t{float(m.noise):.4f}")
    lines.append(f"mean\t{float(mean.precision):.4f}\t{float(mean.recall):.4f}\t"
                 f"{float(mean.silence):.4f}\t{float(mean.noise):.4f}")
    if mean.eleven_point:
        lines.append("11-point\t" + " ".join(f"{float(x):.4f}" for x in mean.eleven_point))
    _emit(cfg, lines, {"queries": {q: m.as_dict() for q, m in per.items()},
                       "mean": mean.as_dict()})
    return EXIT_OK


def cmd_bleu(cfg, args):
    cands, refs = bleu.load_segments(args.hyp, args.ref, args.preserve_case)
    corpus = bleu.corpus_bleu(cands, refs, args.n, args.smoothing)
    payload = {"corpus": corpus.as_dict()}
    lines = [f"BLEU = {corpus.score:.4f} (BP={corpus.bp:.4f}, c={corpus.c}, r={corpus.r}, "
             f"p_n={' '.join(f'{a}/{b}' for a, b in corpus.counts)})"]
    if args.hyp2:
        cands2, _ = bleu.load_segments(args.hyp2, args.ref, args.preserve_case)
        corpus2 = bleu.corpus_bleu(cands2, refs, args.n, args.smoothing)
        lines.append(f"BLEU(hyp2) = {corpus2.score:.4f}")
        rows = bleu.compare(cands, cands2, refs, args.n, args.smoothing)
        lines.append("segment\thyp\thyp2\tdelta")
        lines += [f"{i}\t{a:.2f}\t{b:.2f}\t{d:+.2f}" for i, (a, b, d) in enumerate(rows, 1)]
        payload["corpus2"] = corpus2.as_dict()
        payload["segments"] = [{"segment": i, "hyp": a, "hyp2": b, "delta": d}
                               for i, (a, b, d) in enumerate(rows, 1)]
    elif args.segments:
        reports = [bleu.sentence_bleu(c, r, args.n, args.smoothing) for c, r in zip(cands, refs)]
        lines.append("segment\tscore")
        lines += [f"{i}\t{rep.score:.2f}" for i, rep in enumerate(reports, 1)]
        payload["segments"] = [dict(rep.as_dict(), segment=i) for i, rep in enumerate(reports, 1)]
    _emit(cfg, lines, payload)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="arabic-transfer",
                description="English to Arabic transfer translation, Arabic analysis, "
                            "lemma retrieval and BLEU.")
    p.add_argument("--lexicon", type=Path, help="lexicon directory (default: $%s or the "
                   "bundled data)" % "ARABIC_TRANSFER_LEXICON")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--trace", action="store_true", help="show the rule behind each word")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    t = sub.add_parser("translate", help="tagged English (word_TAG ...) to Arabic")
    t.add_argument("sentence", nargs="*", help="tagged sentence; stdin lines if omitted")
    t.add_argument("--variants", action="store_true", help="all readings of you/they")
    t.add_argument("--lenient", action="store_true",
                   help="pass unknown words through instead of failing")
    t.set_defaults(func=cmd_translate)

    a = sub.add_parser("analyze", help="segment and analyze Arabic words")
    a.add_argument("text", nargs="*", help="Arabic text; stdin lines if omitted")
    a.add_argument("--all", action="store_true", help="list every candidate analysis")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="inflect one lexicon entry")
    g.add_argument("lemma", help="English lemma")
    g.add_argument("--pos", default="verb",
                   choices=("verb", "noun", "adjective", "proper-noun"))
    g.add_argument("--pronoun", default="3MS", help="subject as person+gender+number, e.g. 2FS")
    g.add_argument("--tense", default="present", choices=("present", "past", "future"))
    g.add_argument("--negative", action="store_true")
    g.add_argument("--question", action="store_true")
    g.add_argument("--object", help="object pronoun, e.g. 3FS")
    g.add_argument("--paradigm", action="store_true", help="all thirteen persons")
    g.add_argument("--number", default="S", choices=("S", "B", "P"))
    g.add_argument("--gender", choices=("M", "F"))
    g.add_argument("--definiteness", default="indefinite",
                   choices=("definite", "indefinite", "by-annexation"))
    g.add_argument("--case", default="nominative",
                   choices=("nominative", "accusative", "genitive"))
    g.add_argument("--possessor", help="possessive pronoun, e.g. 3MS")
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("index", help="index a directory of .txt documents")
    i.add_argument("directory")
    i.add_argument("-o", "--output", required=True, type=Path)
    i.set_defaults(func=cmd_index)

    s = sub.add_parser("search", help="query an index")
    s.add_argument("index", type=Path)
    s.add_argument("query", nargs="+")
    s.add_argument("--english", action="store_true", help="English query, translated")
    s.add_argument("--expansion", type=int, default=0,
                   help="extra Arabic equivalents per English word")
    s.add_argument("--baseline", action="store_true", help="surface word match")
    s.add_argument("-k", type=int, default=None, help="at most k results")
    s.add_argument("--threshold", type=int, default=1, help="minimum matched lemmas")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("eval", help="precision, recall, silence, noise over judged queries")
    e.add_argument("index", type=Path)
    e.add_argument("judgments", help="TSV: query-id, doc-id")
    e.add_argument("--queries", required=True, help="TSV: query-id, Arabic query")
    e.add_argument("--baseline", action="store_true")
    e.add_argument("--threshold", type=int, default=1)
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("bleu", help="BLEU of a hypothesis file against references")
    b.add_argument("--hyp", required=True)
    b.add_argument("--ref", required=True, action="append")
    b.add_argument("--hyp2", help="second hypothesis, printed side by side")
    b.add_argument("-n", type=int, default=4)
    b.add_argument("--segments", action="store_true", help="per-segment scores")
    b.add_argument("--smoothing", default="ibleu", choices=bleu.SMOOTHING)
    b.add_argument("--preserve-case", action="store_true")
    b.set_defaults(func=cmd_bleu)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    cfg = CliConfig(args.lexicon or default_lexicon_dir(), "json" if args.json else "text",
                    args.trace)
    try:
        return args.func(cfg, args)
    except (ArtifactError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
