"""Candidate keyphrase identification.

Two passes over the token stream:

1. stopwords, punctuation and numbers split the text into chunks, numbered
   1, 2, ... in reading order;
2. each chunk of at most ``discard_over`` words is expanded into all of its
   contiguous n-grams with ``n <= max_len``. Longer chunks are dropped
   whole.

Every candidate inherits the position of the chunk it came from, and the
earliest such position is what the positional filter looks at.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .preprocess import StopList, Token, is_boundary, tokenize

DEFAULT_MAX_LEN = 3
DEFAULT_DISCARD_OVER = 5
DEFAULT_T_POS = 120


@dataclass(frozen=True, slots=True)
class Chunk:
    words: tuple[str, ...]
    position: int


@dataclass(frozen=True, slots=True)
class Candidate:
    words: tuple[str, ...]
    pf: int
    first_pos: int

    @property
    def key(self) -> str:
        return " ".join(self.words)

    @property
    def length(self) -> int:
        return len(self.words)


# candidate key -> Candidate
CandidateSet = dict[str, Candidate]


def split_chunks(tokens: Iterable[Token], stops: StopList) -> list[Chunk]:
    chunks: list[Chunk] = []
    run: list[str] = []
    for tok in tokens:
        if is_boundary(tok, stops):
            if run:
                chunks.append(Chunk(tuple(run), len(chunks) + 1))
                run = []
        else:
            run.append(tok.normalized)
    if run:
        chunks.append(Chunk(tuple(run), len(chunks) + 1))
    return chunks


def _check_lengths(max_len: int, discard_over: int) -> None:
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    if discard_over < max_len:
        raise ValueError(f"discard_over ({discard_over}) must be >= max_len ({max_len})")


def expand_chunk(
    chunk: Chunk,
    max_len: int = DEFAULT_MAX_LEN,
    discard_over: int = DEFAULT_DISCARD_OVER,
) -> list[tuple[str, ...]]:
    """All n-grams of the chunk for n = 1..min(L, max_len), shortest first.

    A chunk longer than ``discard_over`` words yields nothing.
    """
    _check_lengths(max_len, discard_over)
    words = chunk.words
    size = len(words)
    if size > discard_over:
        return []
    return [
        words[i : i + n]
        for n in range(1, min(size, max_len) + 1)
        for i in range(size - n + 1)
    ]


def collect_candidates(
    chunks: Iterable[Chunk],
    max_len: int = DEFAULT_MAX_LEN,
    discard_over: int = DEFAULT_DISCARD_OVER,
) -> CandidateSet:
    pf: Counter[tuple[str, ...]] = Counter()
    first: dict[tuple[str, ...], int] = {}
    for chunk in chunks:
        for gram in expand_chunk(chunk, max_len, discard_over):
            pf[gram] += 1
            if gram not in first or chunk.position < first[gram]:
                first[gram] = chunk.position
    return {" ".join(g): Candidate(g, pf[g], first[g]) for g in pf}


def filter_by_position(candidates: CandidateSet, t_pos: int) -> CandidateSet:
    """Keep candidates whose first chunk position is at most ``t_pos``."""
    if t_pos < 1:
        raise ValueError(f"t_pos must be >= 1, got {t_pos}")
    return {k: c for k, c in candidates.items() if c.first_pos <= t_pos}


def extract_candidates(
    text: str,
    stops: StopList,
    max_len: int = DEFAULT_MAX_LEN,
    discard_over: int = DEFAULT_DISCARD_OVER,
) -> CandidateSet:
    """Chunk, expand and aggregate in one go (no positional filter)."""
    return collect_candidates(split_chunks(tokenize(text), stops), max_len, discard_over)

