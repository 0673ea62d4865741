"""Glossary knowledge base compiled from a list of manually assigned keyphrases.

Two tables come out of the list:

* keyword table: every word with the number of times it appears as a
  keyphrase on its own (``alone``), the number of times it appears inside a
  multi-word keyphrase (``c``), and a weight in (0, 1];
* sub-phrase table: every contiguous n-gram (n >= 2) of every keyphrase,
  weighted by the sum of its words' keyword weights.

Keyword weights: 1 for words that only ever stand alone, ``1/log(c)`` for
words that only occur inside longer phrases, ``0.5 * (1 + 1/log(c))`` for
words seen both ways. Both log forms are capped at 1 (``c = 1`` would
otherwise divide by zero).

File layout::

    [KEYWORDS]
    anxiety<TAB>3<TAB>2<TAB>1.0
    [SUBPHRASES]
    risk factors<TAB>1.4342944819032517
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .corpus_stats import log_function
from .errors import ConfigError, FormatError
from .preprocess import normalize_phrase


@dataclass(frozen=True, slots=True)
class KeywordEntry:
    alone: int
    part: int
    weight: float


@dataclass(frozen=True)
class KnowledgeBase:
    keywords: Mapping[str, KeywordEntry]
    subphrases: Mapping[str, float]
    log_base: str = field(default="e", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "keywords", MappingProxyType(dict(self.keywords)))
        object.__setattr__(self, "subphrases", MappingProxyType(dict(self.subphrases)))

    def keyword_weight(self, word: str) -> float:
        entry = self.keywords.get(word)
        return entry.weight if entry is not None else 0.0

    def subphrase_weight(self, phrase: str) -> float:
        return self.subphrases.get(phrase, 0.0)


def read_keyphrase_list(text: str) -> list[tuple[str, ...]]:
    """One keyphrase per line; blank lines and ``#`` comments are skipped."""
    phrases = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words = normalize_phrase(line)
        if words:
            phrases.append(words)
    return phrases


def count_modes(phrases: Iterable[Sequence[str]]) -> dict[str, tuple[int, int]]:
    """Map each word to ``(alone_count, part_count)``.

    Occurrences inside multi-word phrases are counted with multiplicity.
    """
    alone: Counter[str] = Counter()
    part: Counter[str] = Counter()
    for words in phrases:
        if len(words) == 1:
            alone[words[0]] += 1
        else:
            part.update(words)
    return {w: (alone[w], part[w]) for w in alone.keys() | part.keys()}


def keyword_weight(alone_count: int, part_count: int, log_base: str = "e") -> float:
    if alone_count < 0 or part_count < 0 or alone_count + part_count < 1:
        raise ValueError(f"invalid counts alone={alone_count} c={part_count}")
    if part_count == 0:
        return 1.0
    lg = log_function(log_base)(part_count)
    inv = math.inf if lg == 0 else 1.0 / lg
    if alone_count == 0:
        return min(1.0, inv)
    return min(1.0, 0.5 * (1.0 + inv))


def ngrams(words: Sequence[str], min_n: int, max_n: int | None = None) -> list[tuple[str, ...]]:
    size = len(words)
    top = size if max_n is None else min(size, max_n)
    return [tuple(words[i : i + n]) for n in range(min_n, top + 1) for i in range(size - n + 1)]


def build_kb(phrases: Iterable[Sequence[str]], log_base: str = "e") -> KnowledgeBase:
    phrases = [tuple(p) for p in phrases]
    if not phrases:
        raise ConfigError("keyphrase list is empty")
    keywords = {
        w: KeywordEntry(a, c, keyword_weight(a, c, log_base))
        for w, (a, c) in count_modes(phrases).items()
    }
    subphrases = {}
    for words in phrases:
        for gram in ngrams(words, 2):
            key = " ".join(gram)
            if key not in subphrases:
                subphrases[key] = math.fsum(keywords[w].weight for w in gram)
    return KnowledgeBase(keywords, subphrases, log_base)


def dumps_kb(kb: KnowledgeBase) -> str:
    lines = ["[KEYWORDS]"]
    for w in sorted(kb.keywords):
        e = kb.keywords[w]
        lines.append(f"{w}\t{e.alone}\t{e.part}\t{e.weight!r}")
    lines.append("[SUBPHRASES]")
    lines.extend(f"{p}\t{kb.subphrases[p]!r}" for p in sorted(kb.subphrases))
    return "\n".join(lines) + "\n"


def loads_kb(text: str, source: str = "<string>") -> KnowledgeBase:
    keywords: dict[str, KeywordEntry] = {}
    subphrases: dict[str, float] = {}
    section = None
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line in ("[KEYWORDS]", "[SUBPHRASES]"):
            if line in seen:
                raise FormatError(source, lineno, f"duplicate section {line}")
            seen.add(line)
            section = line
            continue
        parts = line.split("\t")
        if section == "[KEYWORDS]":
            if len(parts) != 4 or not parts[0]:
                raise FormatError(source, lineno, "expected 'keyword<TAB>alone<TAB>c<TAB>weight'")
            try:
                alone, part, weight = int(parts[1]), int(parts[2]), float(parts[3])
            except ValueError:
                raise FormatError(source, lineno, "non-numeric keyword counts or weight") from None
            if alone < 0 or part < 0 or alone + part < 1:
                raise FormatError(source, lineno, "keyword counts must be non-negative and not both zero")
            if not 0.0 < weight <= 1.0:
                raise FormatError(source, lineno, f"keyword weight {weight} outside (0, 1]")
            keywords[parts[0]] = KeywordEntry(alone, part, weight)
        elif section == "[SUBPHRASES]":
            if len(parts) != 2 or len(parts[0].split(" ")) < 2:
                raise FormatError(source, lineno, "expected 'sub phrase<TAB>weight' with at least two words")
            try:
                weight = float(parts[1])
            except ValueError:
                raise FormatError(source, lineno, f"weight {parts[1]!r} is not a number") from None
            if not weight >= 0.0 or math.isinf(weight):
                raise FormatError(source, lineno, f"sub-phrase weight {weight} is not a finite non-negative number")
            subphrases[parts[0]] = weight
        else:
            raise FormatError(source, lineno, "row before any [KEYWORDS]/[SUBPHRASES] header")
    if "[KEYWORDS]" not in seen:
        raise FormatError(source, 1, "missing [KEYWORDS] section")
    return KnowledgeBase(keywords, subphrases)


def save_kb(kb: KnowledgeBase, path: str | Path) -> None:
    Path(path).write_text(dumps_kb(kb), encoding="utf-8")


def load_kb(path: str | Path) -> KnowledgeBase:
    return loads_kb(Path(path).read_text(encoding="utf-8"), str(path))


def inconsistent_subphrases(kb: KnowledgeBase, tol: float = 1e-12) -> list[str]:
    """Sub-phrases whose stored weight differs from the sum of their keyword weights."""
    bad = []
    for phrase, weight in kb.subphrases.items():
        expected = math.fsum(kb.keyword_weight(w) for w in phrase.split(" "))
        if abs(weight - expected) > tol:
            bad.append(phrase)
    return bad
