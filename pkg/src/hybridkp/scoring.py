"""Candidate scoring and top-K selection.

Each candidate gets

* a frequency score: ``PF * log(N / DF)`` for single words and
  ``PF * log(N)`` for multi-word phrases;
* a domain score: the keyword weights of its words plus the sub-phrase
  weights of all its n-grams with n >= 2 (the full phrase included);
* a combined score ``alpha * freq + (1 - alpha) * domain``.

Candidates first seen after chunk ``t_pos`` are dropped before scoring;
after scoring, a candidate survives only if it occurs at least ``min_pf``
times or its domain score exceeds ``sim_floor``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Sequence

from . import candidates as cand
from .corpus_stats import IdfModel, LOG_BASES
from .errors import ConfigError
from .knowledge_base import KnowledgeBase, ngrams
from .preprocess import StopList, default_stoplist


@dataclass(frozen=True)
class ScoringConfig:
    alpha: float = 0.6
    t_pos: int = cand.DEFAULT_T_POS
    k: int = 10
    max_len: int = cand.DEFAULT_MAX_LEN
    discard_over: int = cand.DEFAULT_DISCARD_OVER
    min_pf: int = 2
    sim_floor: float = 0.0
    log_base: str = "e"
    normalize: bool = False

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")
        for name in ("t_pos", "k", "max_len", "min_pf"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be a positive integer, got {getattr(self, name)}")
        if self.discard_over < self.max_len:
            raise ConfigError(f"discard_over ({self.discard_over}) must be >= max_len ({self.max_len})")
        if self.log_base not in LOG_BASES:
            raise ConfigError(f"unsupported log base {self.log_base!r}")

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True, slots=True)
class ScoredCandidate:
    key: str
    pf: int
    plength: int
    first_pos: int
    score_pfidf: float
    score_d: float
    score: float

    def as_dict(self) -> dict:
        return asdict(self)


def score_pfidf(candidate: cand.Candidate, model: IdfModel) -> float:
    if candidate.length == 1:
        return candidate.pf * model.idf(candidate.words[0])
    return candidate.pf * model.log(model.n_docs)


def score_domain(candidate: cand.Candidate | Sequence[str], kb: KnowledgeBase) -> float:
    words = candidate.words if isinstance(candidate, cand.Candidate) else tuple(candidate)
    terms = [kb.keyword_weight(w) for w in words]
    terms += [kb.subphrase_weight(" ".join(g)) for g in ngrams(words, 2)]
    # exactly rounded, so equal term multisets give bit-equal scores
    return math.fsum(terms)


def combine(score_pfidf: float, score_d: float, alpha: float) -> float:
    return alpha * score_pfidf + (1.0 - alpha) * score_d


def score_candidates(
    candidates: Iterable[cand.Candidate],
    model: IdfModel,
    kb: KnowledgeBase,
    cfg: ScoringConfig,
) -> list[ScoredCandidate]:
    rows = [(c, score_pfidf(c, model), score_domain(c, kb)) for c in candidates]
    if cfg.normalize and rows:
        # per-document max normalisation of each component
        top_f = max(r[1] for r in rows) or 1.0
        top_d = max(r[2] for r in rows) or 1.0
        rows = [(c, f / top_f, d / top_d) for c, f, d in rows]
    return [
        ScoredCandidate(c.key, c.pf, c.length, c.first_pos, f, d, combine(f, d, cfg.alpha))
        for c, f, d in rows
    ]


def filter_by_weight(scored: Iterable[ScoredCandidate], cfg: ScoringConfig) -> list[ScoredCandidate]:
    return [s for s in scored if s.pf >= cfg.min_pf or s.score_d > cfg.sim_floor]


def rank_key(s: ScoredCandidate):
    # ties: more frequent, then earlier, then alphabetical
    return (-s.score, -s.pf, s.first_pos, s.key)


def rank(scored: Iterable[ScoredCandidate]) -> list[ScoredCandidate]:
    return sorted(scored, key=rank_key)


def check_inputs(model: IdfModel | None, kb: KnowledgeBase | None, cfg: ScoringConfig) -> None:
    if model is None:
        raise ConfigError("no IDF model loaded")
    if kb is None:
        raise ConfigError("no knowledge base loaded")
    if model.log_base != cfg.log_base:
        raise ConfigError(
            f"IDF model uses log base {model.log_base!r} but the configuration asks for {cfg.log_base!r}"
        )


def rank_document(
    text: str,
    model: IdfModel,
    kb: KnowledgeBase,
    cfg: ScoringConfig,
    stops: StopList | None = None,
) -> list[ScoredCandidate]:
    """Every candidate that survives both filters, best first."""
    check_inputs(model, kb, cfg)
    stops = default_stoplist() if stops is None else stops
    pool = cand.extract_candidates(text, stops, cfg.max_len, cfg.discard_over)
    pool = cand.filter_by_position(pool, cfg.t_pos)
    return rank(filter_by_weight(score_candidates(pool.values(), model, kb, cfg), cfg))


def extract_top_k(
    text: str,
    model: IdfModel,
    kb: KnowledgeBase,
    cfg: ScoringConfig | None = None,
    stops: StopList | None = None,
) -> list[ScoredCandidate]:
    cfg = ScoringConfig() if cfg is None else cfg
    return rank_document(text, model, kb, cfg, stops)[: cfg.k]
