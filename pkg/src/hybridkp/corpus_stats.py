"""Document-frequency model over a background corpus.

Only single words get a DF entry; multi-word candidates are scored as if
their DF were 1. The model file is plain UTF-8::

    N<TAB>300
    LOGBASE<TAB>e
    anxiety<TAB>41
    ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .errors import ConfigError, FormatError
from .preprocess import StopList, TokenKind, tokenize

LOG_BASES: dict[str, Callable[[float], float]] = {
    "e": math.log,
    "2": math.log2,
    "10": math.log10,
}


def log_function(base: str) -> Callable[[float], float]:
    try:
        return LOG_BASES[base]
    except KeyError:
        raise ConfigError(f"unsupported log base {base!r}; choose one of {sorted(LOG_BASES)}") from None


@dataclass(frozen=True)
class IdfModel:
    n_docs: int
    df: Mapping[str, int]
    log_base: str = "e"
    _log: Callable[[float], float] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_docs < 1:
            raise ConfigError("IDF model needs at least one document")
        object.__setattr__(self, "df", MappingProxyType(dict(self.df)))
        object.__setattr__(self, "_log", log_function(self.log_base))

    def log(self, x: float) -> float:
        return self._log(x)

    def idf(self, word: str) -> float:
        # unseen words count as DF = 1
        return self._log(self.n_docs / self.df.get(word, 1))

    def __len__(self) -> int:
        return len(self.df)


def idf(model: IdfModel, word: str) -> float:
    return model.idf(word)


def document_words(text: str, stops: StopList) -> set[str]:
    """Distinct non-stoplisted word forms of one document."""
    return {
        t.normalized
        for t in tokenize(text)
        if t.kind is TokenKind.WORD and t.normalized not in stops.entries
    }


def build_idf(corpus: Iterable[str], stops: StopList, log_base: str = "e") -> IdfModel:
    log_function(log_base)
    df: dict[str, int] = {}
    n_docs = 0
    for text in corpus:
        n_docs += 1
        for word in document_words(text, stops):
            df[word] = df.get(word, 0) + 1
    if n_docs == 0:
        raise ConfigError("cannot build an IDF model from an empty corpus")
    return IdfModel(n_docs, df, log_base)


def dumps_idf(model: IdfModel) -> str:
    lines = [f"N\t{model.n_docs}", f"LOGBASE\t{model.log_base}"]
    lines.extend(f"{w}\t{model.df[w]}" for w in sorted(model.df))
    return "\n".join(lines) + "\n"


def loads_idf(text: str, source: str = "<string>") -> IdfModel:
    lines = text.splitlines()
    if len(lines) < 2:
        raise FormatError(source, len(lines) + 1, "missing N / LOGBASE header")

    def header(lineno: int, name: str) -> str:
        parts = lines[lineno - 1].split("\t")
        if len(parts) != 2 or parts[0] != name:
            raise FormatError(source, lineno, f"expected '{name}<TAB>value'")
        return parts[1]

    try:
        n_docs = int(header(1, "N"))
    except ValueError:
        raise FormatError(source, 1, "N is not an integer") from None
    if n_docs < 1:
        raise FormatError(source, 1, "N must be positive")
    log_base = header(2, "LOGBASE")
    if log_base not in LOG_BASES:
        raise FormatError(source, 2, f"unsupported log base {log_base!r}")

    df: dict[str, int] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise FormatError(source, lineno, "expected 'word<TAB>df'")
        word, raw = parts
        try:
            count = int(raw)
        except ValueError:
            raise FormatError(source, lineno, f"df {raw!r} is not an integer") from None
        if not 1 <= count <= n_docs:
            raise FormatError(source, lineno, f"df {count} outside 1..{n_docs}")
        if word in df:
            raise FormatError(source, lineno, f"duplicate word {word!r}")
        df[word] = count
    return IdfModel(n_docs, df, log_base)


def save_idf(model: IdfModel, path: str | Path) -> None:
    Path(path).write_text(dumps_idf(model), encoding="utf-8")


def load_idf(path: str | Path) -> IdfModel:
    return loads_idf(Path(path).read_text(encoding="utf-8"), str(path))
