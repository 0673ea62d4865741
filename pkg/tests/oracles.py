"""Brute-force reference computations used by the tests.

These re-derive everything from the raw inputs (the keyphrase list, the
corpus texts, whitespace-separated documents) without touching the package,
so they can check it end to end.
"""

import math

LOGS = {"e": math.log, "2": math.log2, "10": math.log10}


def keyword_weight_from_list(word, phrases, base="e"):
    """Keyword weight found by scanning the keyphrase list directly."""
    alone = sum(1 for p in phrases if len(p) == 1 and p[0] == word)
    c = 0
    for p in phrases:
        if len(p) > 1:
            for w in p:
                if w == word:
                    c += 1
    return weight_rule(alone, c, base)


def weight_rule(alone, c, base="e"):
    if alone == 0 and c == 0:
        return 0.0
    if c == 0:
        return 1.0
    lg = LOGS[base](c)
    if alone == 0:
        if lg == 0:
            return 1.0
        return 1.0 if 1.0 / lg > 1.0 else 1.0 / lg
    if lg == 0:
        return 1.0
    value = 0.5 * (1 + 1 / lg)
    return 1.0 if value > 1.0 else value


def all_subphrases(phrases):
    out = set()
    for p in phrases:
        for i in range(len(p)):
            for j in range(i + 2, len(p) + 1):
                out.add(tuple(p[i:j]))
    return out


def domain_score(words, phrases, base="e"):
    table = all_subphrases(phrases)
    terms = [keyword_weight_from_list(w, phrases, base) for w in words]
    for i in range(len(words)):
        for j in range(i + 2, len(words) + 1):
            gram = tuple(words[i:j])
            if gram in table:
                terms.append(math.fsum(keyword_weight_from_list(w, phrases, base) for w in gram))
    return math.fsum(terms)


def pfidf_score(pf, plength, n_docs, df, base="e"):
    if plength == 1:
        return pf * LOGS[base](n_docs / max(df, 1))
    return pf * LOGS[base](n_docs)


def blend(freq, dom, alpha):
    return alpha * freq + (1 - alpha) * dom


def doc_frequency(word, corpus_docs):
    """Documents (lists of lowercased words) that contain ``word``."""
    return sum(1 for doc in corpus_docs if word in doc)


def pipeline(doc_words, corpus_docs, phrases, stopwords, alpha=0.6, t_pos=120, k=10,
             max_len=3, discard_over=5, min_pf=2, sim_floor=0.0, base="e"):
    """Rank the candidates of a whitespace-tokenised document.

    ``doc_words`` holds raw tokens; any token that is not purely alphabetic
    or is a stopword breaks a chunk.
    """
    chunks, run = [], []
    for tok in doc_words:
        low = tok.lower()
        if not low.isalpha() or low in stopwords:
            if run:
                chunks.append(run)
            run = []
        else:
            run.append(low)
    if run:
        chunks.append(run)

    found = {}
    for pos, chunk in enumerate(chunks, start=1):
        if len(chunk) > discard_over:
            continue
        for i in range(len(chunk)):
            for j in range(i + 1, min(len(chunk), i + max_len) + 1):
                gram = tuple(chunk[i:j])
                if gram not in found:
                    found[gram] = [0, pos]
                found[gram][0] += 1

    n_docs = len(corpus_docs)
    rows = []
    for gram, (pf, pos) in found.items():
        if pos > t_pos:
            continue
        freq = pfidf_score(pf, len(gram), n_docs, doc_frequency(gram[0], corpus_docs), base)
        dom = domain_score(gram, phrases, base)
        if not (pf >= min_pf or dom > sim_floor):
            continue
        rows.append((" ".join(gram), pf, pos, blend(freq, dom, alpha)))
    rows.sort(key=lambda r: (-r[3], -r[1], r[2], r[0]))
    return [(r[0], r[3]) for r in rows[:k]]
