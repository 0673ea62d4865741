"""Tokenization, stoplist handling and stemming.

A document is turned into a flat stream of :class:`Token` objects. Word
tokens keep internal hyphens, apostrophes and periods (``off-the-shelf``,
``patient's``, ``i.e``), so that abbreviations can be listed in a stoplist
like any other word.
"""

from __future__ import annotations

import enum
import hashlib
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .porter import stem_word

__all__ = [
    "Token",
    "TokenKind",
    "StopList",
    "tokenize",
    "is_boundary",
    "load_stoplist",
    "default_stoplist",
    "normalize_phrase",
    "stem_word",
]

_TOKEN_RE = re.compile(r"\w+(?:[-'’.]\w+)*|\S")
_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?")

DEFAULT_STOPLIST_NAME = "stoplist.txt"


class TokenKind(str, enum.Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    normalized: str
    kind: TokenKind
    char_offset: int


def _classify(surface: str) -> TokenKind:
    if any(ch.isalpha() for ch in surface):
        return TokenKind.WORD
    if _NUMBER_RE.fullmatch(surface):
        return TokenKind.NUMBER
    return TokenKind.PUNCTUATION


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word, number and punctuation tokens.

    Whitespace is the only thing dropped, so the original text can be
    rebuilt from the surfaces and offsets.

    >>> [t.surface for t in tokenize("risk factors.")]
    ['risk', 'factors', '.']
    """
    return [
        Token(m.group(), m.group().lower(), _classify(m.group()), m.start())
        for m in _TOKEN_RE.finditer(text)
    ]


@dataclass(frozen=True)
class StopList:
    """Stopwords plus common verbs, matched exactly on lowercased forms."""

    entries: frozenset[str]
    source_path: str = "<inline>"
    digest: str = ""

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_words(cls, words, source_path: str = "<inline>") -> "StopList":
        entries = frozenset(w.strip().lower() for w in words if w.strip())
        digest = hashlib.sha256("\n".join(sorted(entries)).encode("utf-8")).hexdigest()
        return cls(entries, source_path, digest)


def parse_stoplist(text: str) -> set[str]:
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            words.add(line)
    return words


def load_stoplist(path: str | Path | None = None) -> StopList:
    """Load a stoplist file (one entry per line, ``#`` starts a comment).

    With no path the packaged English stopword + common-verb list is used.
    """
    if path is None:
        raw = resources.files("hybridkp").joinpath("data", DEFAULT_STOPLIST_NAME).read_bytes()
        source = f"<builtin:{DEFAULT_STOPLIST_NAME}>"
    else:
        raw = Path(path).read_bytes()
        source = str(path)
    stops = StopList.from_words(parse_stoplist(raw.decode("utf-8")), source)
    return StopList(stops.entries, source, hashlib.sha256(raw).hexdigest())


_DEFAULT: StopList | None = None


def default_stoplist() -> StopList:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_stoplist()
    return _DEFAULT


def is_boundary(token: Token, stops: StopList) -> bool:
    """True for punctuation, numbers and stoplisted words."""
    return token.kind is not TokenKind.WORD or token.normalized in stops.entries


def normalize_phrase(phrase: str) -> tuple[str, ...]:
    """Lowercased word sequence of a free-text keyphrase; punctuation is dropped."""
    return tuple(t.normalized for t in tokenize(phrase) if t.kind is not TokenKind.PUNCTUATION)
