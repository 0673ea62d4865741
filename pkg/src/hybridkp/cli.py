"""Command line entry point: ``hybridkp {build-idf,build-kb,extract,evaluate}``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import datetime as dt
import hashlib
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .corpus_stats import LOG_BASES, build_idf, load_idf, save_idf
from .errors import ConfigError, HybridKPError
from .evaluation import DEFAULT_K_VALUES, GoldSet, aggregate, evaluate_document, format_report
from .knowledge_base import build_kb, load_kb, read_keyphrase_list, save_kb
from .preprocess import load_stoplist
from .scoring import ScoringConfig, extract_top_k, rank_document

log = logging.getLogger("hybridkp")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc


def _sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _list_docs(corpus_dir: Path) -> list[Path]:
    if not corpus_dir.is_dir():
        raise DataError(f"{corpus_dir} is not a directory")
    docs = sorted(corpus_dir.glob("*.txt"))
    if not docs:
        raise DataError(f"no .txt files in {corpus_dir}")
    return docs


def _load_stops(args):
    try:
        return load_stoplist(args.stoplist)
    except OSError as exc:
        raise DataError(f"cannot read stoplist {args.stoplist}: {exc}") from exc


def _config(args, model_log_base: str) -> ScoringConfig:
    try:
        return ScoringConfig(
            alpha=args.alpha,
            t_pos=args.tpos,
            k=args.top_k if isinstance(args.top_k, int) else max(args.top_k),
            max_len=args.max_len,
            discard_over=args.discard_over,
            min_pf=args.min_pf,
            sim_floor=args.sim_floor,
            log_base=args.log_base or model_log_base,
            normalize=args.normalize,
        )
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc


def _load_models(args):
    try:
        model = load_idf(args.idf)
        kb = load_kb(args.kb)
    except OSError as exc:
        raise DataError(f"cannot read {exc.filename}: {exc.strerror}") from exc
    return model, kb


def _manifest(args, cfg: ScoringConfig, stops) -> dict:
    return {
        "tool": "hybridkp",
        "version": __version__,
        "timestamp": dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds"),
        "config": cfg.as_dict(),
        "idf": {"path": str(args.idf), "sha256": _sha256(args.idf)},
        "kb": {"path": str(args.kb), "sha256": _sha256(args.kb)},
        "stoplist": {"source": stops.source_path, "sha256": stops.digest},
    }


def _write_manifest(path, manifest: dict) -> None:
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def cmd_build_idf(args) -> int:
    stops = _load_stops(args)
    docs = _list_docs(Path(args.corpus_dir))
    model = build_idf((_read_text(p) for p in docs), stops, args.log_base or "e")
    save_idf(model, args.out)
    print(f"N={model.n_docs}\tvocabulary={len(model)}")
    return EXIT_OK


def cmd_build_kb(args) -> int:
    phrases = read_keyphrase_list(_read_text(Path(args.keyphrases)))
    if not phrases:
        raise DataError(f"{args.keyphrases} contains no keyphrases")
    kb = build_kb(phrases, args.log_base or "e")
    save_kb(kb, args.out)
    print(f"keyphrases={len(phrases)}\tkeywords={len(kb.keywords)}\tsubphrases={len(kb.subphrases)}")
    return EXIT_OK


def cmd_extract(args) -> int:
    stops = _load_stops(args)
    model, kb = _load_models(args)
    cfg = _config(args, model.log_base)
    text = _read_text(Path(args.document))
    top = extract_top_k(text, model, kb, cfg, stops)
    if args.json:
        print(json.dumps([s.as_dict() for s in top], indent=2))
    else:
        for rank, s in enumerate(top, start=1):
            print(f"{rank}\t{s.key}\t{s.score:.6f}")
    if args.manifest:
        _write_manifest(args.manifest, _manifest(args, cfg, stops))
    return EXIT_OK


def _read_id_list(path) -> set[str]:
    ids = set()
    for line in _read_text(Path(path)).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            ids.add(Path(line).stem if line.endswith((".txt", ".key")) else line)
    return ids


def cmd_evaluate(args) -> int:
    stops = _load_stops(args)
    model, kb = _load_models(args)
    cfg = _config(args, model.log_base)
    k_values = args.top_k
    docs = _list_docs(Path(args.corpus_dir))
    gold_dir = Path(args.gold_dir or args.corpus_dir)

    if args.kb_sources:
        overlap = sorted(_read_id_list(args.kb_sources) & {p.stem for p in docs})
        if overlap:
            raise DataError(
                f"{len(overlap)} test document(s) also used to build the knowledge base: "
                + ", ".join(overlap[:10])
            )

    results = []
    for doc in docs:
        key_path = gold_dir / f"{doc.stem}.key"
        if not key_path.is_file():
            log.warning("no gold file for %s; skipped", doc.name)
            continue
        gold = GoldSet.from_text(doc.stem, _read_text(key_path))
        ranked = [s.key for s in rank_document(_read_text(doc), model, kb, cfg, stops)]
        result = evaluate_document(doc.stem, ranked, gold, k_values)
        if result is not None:
            results.append(result)
    if not results:
        raise DataError("no evaluable documents (need <doc>.txt with a non-empty <doc>.key)")

    report = aggregate(results, k_values)
    if args.json:
        payload = report.as_dict()
        payload["documents"] = [
            {
                "doc_id": r.doc_id,
                "n_gold": r.n_gold,
                "per_k": {
                    str(k): {"precision": m.precision, "recall": m.recall, "keys": m.matched}
                    for k, m in sorted(r.per_k.items())
                },
            }
            for r in results
        ]
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = format_report(report, results)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    if args.manifest:
        manifest = _manifest(args, cfg, stops)
        manifest["config"]["k_values"] = list(k_values)
        _write_manifest(args.manifest, manifest)
    return EXIT_OK


def _k_list(value: str) -> list[int]:
    try:
        ks = sorted({int(v) for v in value.split(",") if v.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None
    if not ks or ks[0] < 1:
        raise argparse.ArgumentTypeError("K values must be positive integers")
    return ks


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--stoplist", help="stoplist file (default: built-in English list)")
    p.add_argument("--log-base", choices=sorted(LOG_BASES), help="logarithm base (default: e)")


def _add_scoring(p: argparse.ArgumentParser) -> None:
    p.add_argument("--idf", required=True, help="IDF model file from build-idf")
    p.add_argument("--kb", required=True, help="knowledge-base file from build-kb")
    p.add_argument("--alpha", type=float, default=0.6, help="weight of the PFxIDF score (default 0.6)")
    p.add_argument("--tpos", type=int, default=120, help="drop candidates first seen after this chunk")
    p.add_argument("--max-len", type=int, default=3, help="longest candidate n-gram (default 3)")
    p.add_argument("--discard-over", type=int, default=5, help="drop chunks longer than this (default 5)")
    p.add_argument("--min-pf", type=int, default=2, help="keep candidates occurring at least this often")
    p.add_argument("--sim-floor", type=float, default=0.0, help="...or whose domain score exceeds this")
    p.add_argument("--normalize", action="store_true", help="max-normalise both scores per document")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--manifest", help="write a run manifest (JSON) to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hybridkp", description="Hybrid PFxIDF + glossary keyphrase extraction")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-idf", help="build a document-frequency model from a directory of .txt files")
    p.add_argument("corpus_dir")
    p.add_argument("-o", "--out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_build_idf)

    p = sub.add_parser("build-kb", help="compile a keyphrase list into a knowledge-base file")
    p.add_argument("keyphrases", help="one keyphrase per line")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--log-base", choices=sorted(LOG_BASES), help="logarithm base (default: e)")
    p.set_defaults(func=cmd_build_kb)

    p = sub.add_parser("extract", help="print the top-K keyphrases of one document")
    p.add_argument("document")
    p.add_argument("-k", "--top-k", type=int, default=10)
    _add_common(p)
    _add_scoring(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("evaluate", help="precision/recall against <doc>.key gold files")
    p.add_argument("corpus_dir")
    p.add_argument("--gold-dir", help="directory holding <doc>.key files (default: corpus_dir)")
    p.add_argument("-k", "--top-k", type=_k_list, default=list(DEFAULT_K_VALUES), help="e.g. 5,10,15")
    p.add_argument("--kb-sources", help="ids of documents the keyphrase list came from; must not overlap")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    _add_common(p)
    _add_scoring(p)
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hybridkp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, HybridKPError, OSError) as exc:
        print(f"hybridkp: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
