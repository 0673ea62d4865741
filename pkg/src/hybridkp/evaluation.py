"""Stem-matched precision / recall evaluation against author keyphrases.

An extracted phrase matches a gold phrase when their Porter-stemmed word
sequences are identical. Matching is a set intersection on stem keys, so two
extracted variants of one gold phrase earn a single match.
"""

from __future__ import annotations

import logging
import statistics
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .preprocess import normalize_phrase, stem_word

log = logging.getLogger(__name__)

DEFAULT_K_VALUES = (5, 10, 15)


def stem_phrase(phrase: str | Sequence[str]) -> str:
    words = normalize_phrase(phrase) if isinstance(phrase, str) else [w.lower() for w in phrase]
    return " ".join(stem_word(w) for w in words)


@dataclass(frozen=True)
class GoldSet:
    doc_id: str
    keys: tuple[str, ...]
    stems: frozenset[str] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "stems", frozenset(s for s in map(stem_phrase, self.keys) if s))

    @classmethod
    def from_text(cls, doc_id: str, text: str) -> "GoldSet":
        keys = tuple(line.strip() for line in text.splitlines() if line.strip())
        return cls(doc_id, keys)

    def __len__(self) -> int:
        return len(self.stems)


@dataclass(frozen=True, slots=True)
class DocMetrics:
    precision: float
    recall: float
    matched: int
    n_extracted: int


@dataclass(frozen=True)
class DocResult:
    doc_id: str
    n_gold: int
    per_k: Mapping[int, DocMetrics]


@dataclass(frozen=True, slots=True)
class KStats:
    precision_mean: float
    precision_sd: float
    recall_mean: float
    recall_sd: float
    avg_keys_mean: float
    avg_keys_sd: float


@dataclass(frozen=True)
class EvalReport:
    per_k: Mapping[int, KStats]
    n_docs: int
    avg_gold_keys: float
    sd_kind: str = "sample"

    def as_dict(self) -> dict:
        return {
            "n_docs": self.n_docs,
            "avg_gold_keys": self.avg_gold_keys,
            "sd_kind": self.sd_kind,
            "per_k": {str(k): vars_of(s) for k, s in sorted(self.per_k.items())},
        }


def vars_of(obj) -> dict:
    return {name: getattr(obj, name) for name in obj.__slots__}


def match_count(extracted: Iterable[str | Sequence[str]], gold: GoldSet) -> int:
    return len({stem_phrase(p) for p in extracted} & gold.stems)


def doc_metrics(extracted: Sequence[str], gold: GoldSet, k: int) -> DocMetrics | None:
    """Precision, recall and match count for one document at cut-off ``k``.

    Returns None (and logs a warning) when the gold set is empty.
    """
    if len(extracted) > k:
        raise ValueError(f"{len(extracted)} phrases extracted but k = {k}")
    if not gold.stems:
        log.warning("document %s has no gold keyphrases; skipped", gold.doc_id)
        return None
    matched = match_count(extracted, gold)
    precision = matched / len(extracted) if extracted else 0.0
    return DocMetrics(precision, matched / len(gold.stems), matched, len(extracted))


def _mean_sd(values: list[float]) -> tuple[float, float]:
    mean = statistics.fmean(values)
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    return mean, sd


def aggregate(results: Sequence[DocResult], k_values: Iterable[int] = DEFAULT_K_VALUES) -> EvalReport:
    """Mean and sample standard deviation of each metric across documents."""
    if not results:
        raise ValueError("no documents to aggregate")
    if len(results) < 2:
        log.warning("only one document evaluated; standard deviations reported as 0")
    per_k = {}
    for k in k_values:
        rows = [r.per_k[k] for r in results]
        p = _mean_sd([m.precision for m in rows])
        r = _mean_sd([m.recall for m in rows])
        a = _mean_sd([float(m.matched) for m in rows])
        per_k[k] = KStats(p[0], p[1], r[0], r[1], a[0], a[1])
    avg_gold = statistics.fmean(r.n_gold for r in results)
    return EvalReport(per_k, len(results), avg_gold)


def evaluate_document(
    doc_id: str, ranked: Sequence[str], gold: GoldSet, k_values: Iterable[int] = DEFAULT_K_VALUES
) -> DocResult | None:
    """Score one ranked list at several cut-offs (nested prefixes of ``ranked``)."""
    per_k = {}
    for k in k_values:
        m = doc_metrics(list(ranked[:k]), gold, k)
        if m is None:
            return None
        per_k[k] = m
    return DocResult(doc_id, len(gold.stems), per_k)


def format_report(report: EvalReport, results: Sequence[DocResult] = ()) -> str:
    lines = [
        f"documents: {report.n_docs}    average author keyphrases: {report.avg_gold_keys:.3f}    (SD: {report.sd_kind})",
        "",
        f"{'# of KEYS':<10}{'Average Keys ± SD':<20}{'Pre ± SD':<18}{'Re ± SD':<18}",
    ]
    for k, s in sorted(report.per_k.items()):
        lines.append(
            f"{k:<10}"
            f"{f'{s.avg_keys_mean:.3f} ± {s.avg_keys_sd:.3f}':<20}"
            f"{f'{s.precision_mean:.3f} ± {s.precision_sd:.3f}':<18}"
            f"{f'{s.recall_mean:.3f} ± {s.recall_sd:.3f}':<18}"
        )
    if results:
        ks = sorted(report.per_k)
        lines += ["", "doc_id\tgold\t" + "\t".join(f"P@{k}\tR@{k}\tkeys@{k}" for k in ks)]
        for r in sorted(results, key=lambda r: r.doc_id):
            cells = "\t".join(
                f"{r.per_k[k].precision:.4f}\t{r.per_k[k].recall:.4f}\t{r.per_k[k].matched}" for k in ks
            )
            lines.append(f"{r.doc_id}\t{r.n_gold}\t{cells}")
    return "\n".join(lines) + "\n"
