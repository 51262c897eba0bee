"""Command-line frontend: summarize one document, evaluate a signal against
the generic summary, or run the full experiment grid over a corpus.

Exit codes: 0 success, 2 I/O or file-format failure, 3 signal absent from
the document, 4 empty document, 64 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .corpus import NormalizerConfig, RawDocument
from .errors import EmptyDocument, EmptyVocabulary, SignalNotInDocument, SigsummError
from .evaluation import (
    EXPERIMENT_LENGTHS,
    EXPERIMENT_STRENGTHS,
    evaluate_pair,
    export_similarity_density,
    run_experiment,
    write_results_csv,
    write_skip_manifest,
    write_table_csvs,
)
from .factorization import DEFAULT_MAX_ITER, DEFAULT_REL_TOL, DEFAULT_SEED
from .signal import DEFAULT_EXPONENT_CAP, fragment_signal, load_keywords
from .summarizer import DocumentModel, Summary

EXIT_OK = 0
EXIT_IO = 2
EXIT_NO_SIGNAL = 3
EXIT_EMPTY_DOC = 4
EXIT_USAGE = 64


class UsageError(Exception):
    """Bad flag combination detected after argparse."""


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; map that to 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Effective settings of one invocation, echoed into every JSON output
    and into config.json next to experiment CSVs."""

    seed: int = DEFAULT_SEED
    length_pct: tuple[float, ...] = (25.0,)
    polarity: str | None = None
    stem: bool = False
    stopwords_file: str | None = None
    max_iter: int = DEFAULT_MAX_ITER
    rel_tol: float = DEFAULT_REL_TOL
    exponent_cap: float = DEFAULT_EXPONENT_CAP
    out: str | None = None
    format: str = "json"

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--stem", action="store_true", help="apply suffix stemming")
    parser.add_argument("--stopwords", metavar="FILE", help="stopword list, one per line")
    parser.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    parser.add_argument("--rel-tol", type=float, default=DEFAULT_REL_TOL)
    parser.add_argument("--exponent-cap", type=float, default=DEFAULT_EXPONENT_CAP)
    parser.add_argument("--out", metavar="PATH", help="output file or directory")
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> _Parser:
    parser = _Parser(prog="sigsumm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_sum = sub.add_parser("summarize", help="summarize one document")
    p_sum.add_argument("document", help="UTF-8 text file")
    p_sum.add_argument("--keywords", metavar="FILE", help="signal phrases (JSON array or lines)")
    p_sum.add_argument("--polarity", choices=("negative", "positive"))
    p_sum.add_argument("--length-pct", type=float, default=25.0)
    _add_common_flags(p_sum)

    p_eval = sub.add_parser("evaluate", help="compare personal vs generic summary")
    p_eval.add_argument("document")
    p_eval.add_argument("--keywords", metavar="FILE", required=True)
    p_eval.add_argument("--polarity", choices=("negative", "positive"), required=True)
    p_eval.add_argument("--length-pct", type=float, default=25.0)
    _add_common_flags(p_eval)

    p_exp = sub.add_parser("experiment", help="run the evaluation grid over a corpus")
    p_exp.add_argument("corpus_dir", help="directory of .txt documents")
    p_exp.add_argument(
        "--keywords-dir",
        metavar="DIR",
        help="directory of <doc_id>.keywords files (default: corpus dir)",
    )
    p_exp.add_argument("--lengths", default=",".join(str(x) for x in EXPERIMENT_LENGTHS))
    p_exp.add_argument("--strengths", default=",".join(str(x) for x in EXPERIMENT_STRENGTHS))
    p_exp.add_argument("--polarity", choices=("both", "negative", "positive"), default="both")
    p_exp.add_argument("--dataset", default=None, help="dataset label in CSVs")
    _add_common_flags(p_exp)
    return parser


def _normalizer(args) -> NormalizerConfig:
    stopwords = None
    if args.stopwords:
        words = Path(args.stopwords).read_text(encoding="utf-8").split()
        stopwords = frozenset(w.lower() for w in words)
    return NormalizerConfig(stem=args.stem, stopwords=stopwords)


def _model(args, doc: RawDocument) -> DocumentModel:
    return DocumentModel(
        doc,
        normalizer=_normalizer(args),
        seed=args.seed,
        max_iter=args.max_iter,
        rel_tol=args.rel_tol,
        exponent_cap=args.exponent_cap,
    )


def _read_document(path_str: str) -> RawDocument:
    path = Path(path_str)
    return RawDocument(doc_id=path.stem, text=path.read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _config_echo(args, lengths: tuple[float, ...]) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        length_pct=lengths,
        polarity=getattr(args, "polarity", None),
        stem=args.stem,
        stopwords_file=args.stopwords,
        max_iter=args.max_iter,
        rel_tol=args.rel_tol,
        exponent_cap=args.exponent_cap,
        out=args.out,
        format=args.format,
    )


def _summary_record(model: DocumentModel, summary: Summary, config: RunConfig) -> dict:
    return {
        "doc_id": summary.doc_id,
        "kind": summary.kind,
        "polarity": summary.polarity,
        "length_pct": summary.length_pct,
        "budget_words": summary.budget_words,
        "total_words": summary.total_words,
        "selected": list(summary.selected),
        "sentences": [
            {
                "index": j,
                "text": model.sentences[j].text,
                "score": summary.scores[j],
            }
            for j in summary.selected
        ],
        "scores": list(summary.scores),
        "provenance": summary.provenance,
        "config": config.as_dict(),
    }


def _to_json(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def cmd_summarize(args) -> int:
    doc = _read_document(args.document)
    model = _model(args, doc)
    sig = None
    if args.keywords:
        if not args.polarity:
            raise UsageError("--polarity is required when --keywords is given")
        phrases = load_keywords(args.keywords)
        sig = fragment_signal(phrases, model.vocab, args.polarity, model.normalizer)
    summary = model.summarize(sig, args.length_pct)
    config = _config_echo(args, (args.length_pct,))
    if args.format == "csv":
        lines = ["index,score,text"]
        for j in summary.selected:
            text = model.sentences[j].text.replace('"', '""')
            lines.append(f'{j},{summary.scores[j]!r},"{text}"')
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_to_json(_summary_record(model, summary, config)), args.out)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    doc = _read_document(args.document)
    model = _model(args, doc)
    phrases = load_keywords(args.keywords)
    sig = fragment_signal(phrases, model.vocab, args.polarity, model.normalizer)
    report = evaluate_pair(model, sig, args.length_pct)
    config = _config_echo(args, (args.length_pct,))
    record = {
        "doc_id": report.doc_id,
        "polarity": report.polarity,
        "phrases": list(report.phrases),
        "length_pct": report.length_pct,
        "jaccard": report.jaccard,
        "jsd": report.jsd,
        "ratio": report.ratio,
        "sigma_personal": report.sigma_personal,
        "sigma_generic": report.sigma_generic,
        "config": config.as_dict(),
    }
    if args.format == "csv":
        fields = [k for k in record if k != "config"]
        values = []
        for k in fields:
            v = record[k]
            if isinstance(v, list):
                values.append('"' + ";".join(v).replace('"', '""') + '"')
            elif v is None:
                values.append("")
            elif isinstance(v, float):
                values.append(repr(v))
            else:
                values.append(str(v))
        _emit(",".join(fields) + "\n" + ",".join(values) + "\n", args.out)
    else:
        _emit(_to_json(record), args.out)
    return EXIT_OK


def _parse_floats(text: str, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated numbers, got {text!r}")
    if not values:
        raise UsageError(f"{flag} is empty")
    return values


def cmd_experiment(args) -> int:
    corpus_dir = Path(args.corpus_dir)
    if not corpus_dir.is_dir():
        raise FileNotFoundError(f"{corpus_dir} is not a directory")
    doc_paths = sorted(corpus_dir.glob("*.txt"))
    if not doc_paths:
        raise FileNotFoundError(f"no .txt documents in {corpus_dir}")
    docs = [_read_document(str(p)) for p in doc_paths]

    kw_dir = Path(args.keywords_dir) if args.keywords_dir else corpus_dir
    keywords = {}
    for doc in docs:
        kw_path = kw_dir / f"{doc.doc_id}.keywords"
        if kw_path.exists():
            keywords[doc.doc_id] = load_keywords(kw_path)

    lengths = _parse_floats(args.lengths, "--lengths")
    strengths = tuple(int(s) for s in _parse_floats(args.strengths, "--strengths"))
    polarities = ("negative", "positive") if args.polarity == "both" else (args.polarity,)
    dataset = args.dataset or corpus_dir.name

    result = run_experiment(
        docs,
        keywords,
        lengths=lengths,
        strengths=strengths,
        polarities=polarities,
        dataset=dataset,
        normalizer=_normalizer(args),
        seed=args.seed,
        max_iter=args.max_iter,
        rel_tol=args.rel_tol,
        exponent_cap=args.exponent_cap,
    )

    out_dir = Path(args.out) if args.out else Path("results")
    out_dir.mkdir(parents=True, exist_ok=True)
    write_results_csv(result, out_dir / "results.csv")
    write_table_csvs(result, out_dir)
    export_similarity_density(result, out_dir / "density.csv")
    write_skip_manifest(result, out_dir / "skipped.txt")
    config = _config_echo(args, lengths)
    (out_dir / "config.json").write_text(_to_json(config.as_dict()), encoding="utf-8")
    sys.stderr.write(f"wrote {out_dir}/results.csv and tables for {dataset}\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "summarize": cmd_summarize,
        "evaluate": cmd_evaluate,
        "experiment": cmd_experiment,
    }[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        sys.stderr.write(f"sigsumm: error: {exc}\n")
        return EXIT_USAGE
    except SignalNotInDocument as exc:
        sys.stderr.write(f"sigsumm: signal not in document: {exc}\n")
        return EXIT_NO_SIGNAL
    except (EmptyDocument, EmptyVocabulary) as exc:
        sys.stderr.write(f"sigsumm: empty document: {exc}\n")
        return EXIT_EMPTY_DOC
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"sigsumm: {exc}\n")
        return EXIT_IO
    except SigsummError as exc:
        sys.stderr.write(f"sigsumm: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
