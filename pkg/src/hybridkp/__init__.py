"""Hybrid keyphrase extraction: PFxIDF scoring blended with a glossary knowledge base."""

__version__ = "0.1.0"

from .candidates import Candidate, Chunk, collect_candidates, expand_chunk, filter_by_position, split_chunks
from .corpus_stats import IdfModel, build_idf, load_idf, save_idf
from .errors import ConfigError, FormatError
from .evaluation import GoldSet, aggregate, doc_metrics, match_count, stem_phrase
from .knowledge_base import KnowledgeBase, build_kb, load_kb, save_kb
from .preprocess import StopList, Token, default_stoplist, load_stoplist, stem_word, tokenize
from .scoring import ScoredCandidate, ScoringConfig, extract_top_k

__all__ = [
    "Candidate", "Chunk", "collect_candidates", "expand_chunk", "filter_by_position", "split_chunks",
    "IdfModel", "build_idf", "load_idf", "save_idf",
    "ConfigError", "FormatError",
    "GoldSet", "aggregate", "doc_metrics", "match_count", "stem_phrase",
    "KnowledgeBase", "build_kb", "load_kb", "save_kb",
    "StopList", "Token", "default_stoplist", "load_stoplist", "stem_word", "tokenize",
    "ScoredCandidate", "ScoringConfig", "extract_top_k",
]
