import math
import random

import pytest
from hypothesis import given, strategies as st

from hybridkp.errors import ConfigError, FormatError
from hybridkp.knowledge_base import (
    build_kb,
    count_modes,
    dumps_kb,
    inconsistent_subphrases,
    keyword_weight,
    load_kb,
    loads_kb,
    read_keyphrase_list,
    save_kb,
)

import oracles


def phrases(*items):
    return [tuple(p.split()) for p in items]


def test_count_modes():
    assert count_modes(phrases("anxiety")) == {"anxiety": (1, 0)}
    assert count_modes(phrases("risk factors", "risk assessment"))["risk"] == (0, 2)
    assert count_modes(phrases("stress", "parenting stress", "stress disorder"))["stress"] == (1, 2)


def test_count_modes_multiplicity():
    modes = count_modes(phrases("risk", "risk", "risk factors", "risk risk"))
    assert modes["risk"] == (2, 3)


def test_keyword_weight_examples():
    assert keyword_weight(3, 0) == 1.0
    assert keyword_weight(0, 10) == pytest.approx(0.43429448190325176, abs=1e-12)
    assert keyword_weight(2, 10) == pytest.approx(0.7171472409516259, abs=1e-12)
    assert keyword_weight(0, 2) == 1.0
    assert keyword_weight(0, 1) == 1.0
    assert keyword_weight(5, 1) == 1.0


def test_keyword_weight_rejects_empty_counts():
    with pytest.raises(ValueError):
        keyword_weight(0, 0)


@given(st.integers(0, 50), st.integers(0, 5000), st.sampled_from(["e", "2", "10"]))
def test_keyword_weight_range_and_order(alone, c, base):
    if alone + c == 0:
        return
    w = keyword_weight(alone, c, base)
    assert 0.0 < w <= 1.0
    if c:
        assert keyword_weight(max(alone, 1), c, base) >= keyword_weight(0, c, base)


def test_build_kb_subphrases():
    kb = build_kb(phrases("parental negative affect"))
    assert set(kb.subphrases) == {"parental negative", "negative affect", "parental negative affect"}
    assert build_kb(phrases("anxiety")).subphrases == {}


def test_build_kb_clamped_pair():
    kb = build_kb(phrases("risk factors"))
    assert kb.keywords["risk"].weight == 1.0
    assert kb.subphrases["risk factors"] == 2.0


def test_build_kb_hand_oracle():
    src = phrases("stress", "parenting stress", "stress disorder", "risk factors", "risk",
                  "parenting stress")
    kb = build_kb(src)
    for word, entry in kb.keywords.items():
        assert entry.weight == pytest.approx(oracles.keyword_weight_from_list(word, src), abs=1e-12)
    # stress: alone once, inside 3 multi-word phrases
    assert (kb.keywords["stress"].alone, kb.keywords["stress"].part) == (1, 3)
    assert kb.keywords["stress"].weight == pytest.approx(0.5 * (1 + 1 / math.log(3)), abs=1e-12)
    assert set(kb.subphrases) == {"parenting stress", "stress disorder", "risk factors"}


def test_empty_list_is_error():
    with pytest.raises(ConfigError):
        build_kb([])


random_lists = st.lists(
    st.lists(st.sampled_from(["risk", "stress", "anxiety", "child", "heart", "failure", "care"]),
             min_size=1, max_size=5),
    min_size=1, max_size=40,
)


@given(random_lists, st.sampled_from(["e", "2", "10"]))
def test_kb_self_consistency(raw, base):
    kb = build_kb(raw, base)
    assert inconsistent_subphrases(kb) == []
    assert all(0.0 < e.weight <= 1.0 for e in kb.keywords.values())
    assert all(e.alone + e.part >= 1 for e in kb.keywords.values())


@given(random_lists, st.randoms())
def test_kb_order_independent(raw, rnd):
    shuffled = raw[:]
    rnd.shuffle(shuffled)
    assert dumps_kb(build_kb(raw)) == dumps_kb(build_kb(shuffled))


def test_round_trip(tmp_path):
    kb = build_kb(phrases("parental negative affect", "anxiety", "negative affect", "risk factors"))
    path = tmp_path / "kb.txt"
    save_kb(kb, path)
    loaded = load_kb(path)
    assert loaded == kb
    lines = path.read_text().splitlines()
    assert lines[0] == "[KEYWORDS]"
    assert "[SUBPHRASES]" in lines
    assert "anxiety\t1\t0\t1.0" in lines


def test_read_keyphrase_list():
    text = "Risk Factors\n\n# comment\nanxiety\nrisk factors\n"
    assert read_keyphrase_list(text) == [("risk", "factors"), ("anxiety",), ("risk", "factors")]


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("anxiety\t1\t0\t1.0\n", 1),
        ("[KEYWORDS]\nanxiety\t1\t0\n", 2),
        ("[KEYWORDS]\nanxiety\t1\t0\t1.5\n", 2),
        ("[KEYWORDS]\nanxiety\tx\t0\t1.0\n", 2),
        ("[KEYWORDS]\n[SUBPHRASES]\nsingle\t1.0\n", 3),
        ("[KEYWORDS]\n[SUBPHRASES]\nrisk factors\tabc\n", 3),
        ("[SUBPHRASES]\nrisk factors\t1.0\n", 1),
    ],
)
def test_malformed_kb_names_line(text, lineno):
    with pytest.raises(FormatError) as info:
        loads_kb(text, "bad.kb")
    assert info.value.lineno == lineno


def test_unknown_words_contribute_zero_to_consistency():
    kb = loads_kb("[KEYWORDS]\nrisk\t0\t1\t1.0\n[SUBPHRASES]\nrisk factors\t1.0\n")
    assert inconsistent_subphrases(kb) == []
