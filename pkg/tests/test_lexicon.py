from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphoseed.errors import EncodingError, LexiconError
from morphoseed.lexicon import (
    POSTag,
    WordFormationPattern,
    dice_similarity,
    lexicon_stats,
    load_lexicon,
    parse_encoding,
    render_encoding,
    suggest_sms_clusters,
)

HOSTS = "树木养植花水山石人马法学言心好大"


def test_parse_encoding_fields():
    enc = parse_encoding("树1_04_01")
    assert (enc.host, enc.entry_index, enc.sememe_count, enc.sememe_index) == ("树", 1, 4, 1)


def test_parse_rejects_index_beyond_count():
    with pytest.raises(EncodingError):
        parse_encoding("树1_04_05")


def test_parse_render_round_trip():
    assert render_encoding(parse_encoding("木1_07_01")) == "木1_07_01"


def test_parser_accepts_unpadded_and_canonicalizes():
    assert render_encoding(parse_encoding("木1_7_1")) == "木1_07_01"


@pytest.mark.parametrize("bad", ["", "树", "1_04_01", "树树1_04_01", "树1_04", "树1_04_01_02", "树a_04_01", "树1_04_-1"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(EncodingError):
        parse_encoding(bad)


@given(
    host=st.sampled_from(HOSTS),
    x1=st.integers(min_value=1, max_value=9),
    x2=st.integers(min_value=1, max_value=30),
    data=st.data(),
)
def test_round_trip_identity_property(host, x1, x2, data):
    x3 = data.draw(st.integers(min_value=1, max_value=x2))
    text = f"{host}{x1}_{x2:02d}_{x3:02d}"
    enc = parse_encoding(text)
    assert render_encoding(enc) == text
    assert parse_encoding(render_encoding(enc)) == enc


def test_pos_and_pattern_sets_are_closed():
    assert len(POSTag) == 13
    assert len(WordFormationPattern) == 15
    with pytest.raises(ValueError):
        POSTag.parse("verbish")
    with pytest.raises(ValueError):
        WordFormationPattern.parse("Compound")


# ---------------------------------------------------------------------------
# loading and validation


def _write_lexicon(tmp_path, morphemes, mcs, words):
    m = tmp_path / "morphemes.tsv"
    c = tmp_path / "mcs.tsv"
    w = tmp_path / "words.tsv"
    m.write_text("".join(line + "\n" for line in morphemes), encoding="utf-8")
    c.write_text("".join(line + "\n" for line in mcs), encoding="utf-8")
    w.write_text("".join(line + "\n" for line in words), encoding="utf-8")
    return m, c, w


GOOD_MORPHEMES = [
    "养1_11_02\tverbal\t栽种培育",
    "植1_04_01\tverbal\t栽种培育",
    "木1_07_01\tnominal\t木本植物",
    "树1_04_01\tnominal\t木本植物",
]
GOOD_MCS = [
    "养1_11_02\tverbal\t养1_11_02,植1_04_01\t栽种培育",
    "木1_07_01\tnominal\t木1_07_01,树1_04_01\t木本植物",
]
GOOD_WORDS = ["植树\tverbal\tVerb-Object\t养1_11_02\t木1_07_01"]


def test_load_fixture_lexicon_is_clean(lexicon):
    assert len(lexicon.words) >= 200
    assert len(lexicon.mcs) >= 50
    # the reference entry and its bindings
    entry = next(w for w in lexicon.words if w.surface == "植树")
    assert entry.first_mc == "养1_11_02" and entry.second_mc == "木1_07_01"
    assert "植1_04_01" in lexicon.mcs["养1_11_02"].member_ids
    assert "树1_04_01" in lexicon.mcs["木1_07_01"].member_ids


def test_minimal_lexicon_accepted(tmp_path):
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES, GOOD_MCS, GOOD_WORDS)
    lex = load_lexicon(*files)
    assert lex.mc_of_morpheme["植1_04_01"] == "养1_11_02"


def test_binding_violation_rejected_with_location(tmp_path):
    words = ["桃树\tverbal\tVerb-Object\t养1_11_02\t木1_07_01"]
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES, GOOD_MCS, words)
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    issue = exc.value.issues[0]
    assert "桃" in issue.message and issue.line == 1 and "words.tsv" in issue.file


def test_duplicate_encoding_rejected(tmp_path):
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES + ["养1_11_02\tverbal\t重复"], GOOD_MCS, GOOD_WORDS)
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    assert any("duplicate encoding" in str(i) for i in exc.value.issues)


def test_morpheme_in_two_mcs_rejected(tmp_path):
    mcs = GOOD_MCS + ["树1_04_01\tnominal\t树1_04_01\t重复概念"]
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES, mcs, GOOD_WORDS)
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    assert any("already belongs" in str(i) for i in exc.value.issues)


def test_dangling_mc_reference_rejected(tmp_path):
    words = ["植树\tverbal\tVerb-Object\t养1_11_02\t坑1_01_01"]
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES, GOOD_MCS, words)
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    assert any("unknown concept" in str(i) for i in exc.value.issues)


def test_mc_id_must_equal_first_member(tmp_path):
    mcs = ["植1_04_01\tverbal\t养1_11_02,植1_04_01\t栽种"] + GOOD_MCS[1:]
    files = _write_lexicon(tmp_path, GOOD_MORPHEMES, mcs, [])
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    assert any("first member" in str(i) for i in exc.value.issues)


def test_sememe_count_conflict_rejected(tmp_path):
    morphemes = GOOD_MORPHEMES + ["树1_05_02\tnominal\t矛盾计数"]
    files = _write_lexicon(tmp_path, morphemes, GOOD_MCS, GOOD_WORDS)
    with pytest.raises(LexiconError) as exc:
        load_lexicon(*files)
    assert any("count" in str(i) for i in exc.value.issues)


def test_noncompound_single_member_binding_accepted(tmp_path):
    morphemes = GOOD_MORPHEMES + ["葡1_01_01\tnominal\t葡萄"]
    mcs = GOOD_MCS + ["葡1_01_01\tnominal\t葡1_01_01\t葡萄"]
    words = GOOD_WORDS + ["葡萄\tnominal\tNoncompound\t葡1_01_01\t葡1_01_01"]
    lex = load_lexicon(*_write_lexicon(tmp_path, morphemes, mcs, words))
    assert any(w.surface == "葡萄" for w in lex.words)


def test_partition_property(lexicon):
    seen = {}
    for mc in lexicon.mcs.values():
        for member in mc.member_ids:
            assert member not in seen, f"{member} in both {seen.get(member)} and {mc.id}"
            seen[member] = mc.id
    # every binding host constraint holds (noncompounds excepted)
    for word in lexicon.words:
        if word.pattern.value == "Noncompound":
            continue
        assert word.surface[0] in lexicon.mcs[word.first_mc].hosts
        assert word.surface[1] in lexicon.mcs[word.second_mc].hosts


# ---------------------------------------------------------------------------
# stats


def test_stats_counts_and_percentages(lexicon):
    stats = lexicon_stats(lexicon)
    assert stats.morphemes == len(lexicon.morphemes)
    assert stats.words == len(lexicon.words)
    assert stats.mcs == len(lexicon.mcs)
    assert abs(sum(stats.pattern_percentages.values()) - 100.0) < 0.1
    assert sum(stats.mcs_per_pos.values()) == stats.mcs


# ---------------------------------------------------------------------------
# advisory clustering


def _dice_oracle(a: str, b: str) -> float:
    # brute-force multiset Dice over code-point unigrams + bigrams
    def toks(g):
        out = {}
        pts = list(g)
        for t in pts + ["".join(p) for p in zip(pts, pts[1:])]:
            out[t] = out.get(t, 0) + 1
        return out

    ta, tb = toks(a), toks(b)
    inter = sum(min(n, tb.get(t, 0)) for t, n in ta.items())
    total = sum(ta.values()) + sum(tb.values())
    return 2 * inter / total if total else 0.0


def test_dice_matches_brute_force_oracle():
    cases = [("树立，建立", "建立"), ("栽种培育", "栽种培育"), ("甲乙", "丙丁"), ("", "甲")]
    for a, b in cases:
        assert dice_similarity(a, b) == pytest.approx(_dice_oracle(a, b), abs=1e-12)


def test_cluster_identical_glosses():
    clusters = suggest_sms_clusters([("a1_01_01", "同义"), ("b1_01_01", "同义")], 0.5)
    assert clusters == [["a1_01_01", "b1_01_01"]]


def test_cluster_example_overlapping_glosses():
    # expected value computed by the brute-force oracle above
    sim = _dice_oracle("树立，建立", "建立")
    assert sim == pytest.approx(0.5)
    clusters = suggest_sms_clusters([("树1_04_03", "树立，建立"), ("立1_05_02", "建立")], 0.5)
    assert clusters == [["树1_04_03", "立1_05_02"]] or clusters == [sorted(["树1_04_03", "立1_05_02"])]


def test_cluster_disjoint_glosses_stay_singletons():
    clusters = suggest_sms_clusters([("a1_01_01", "甲乙"), ("b1_01_01", "丙丁")], 0.5)
    assert clusters == [["a1_01_01"], ["b1_01_01"]]


def test_cluster_empty_input():
    assert suggest_sms_clusters([], 0.5) == []


@given(st.permutations(list(range(6))))
def test_cluster_partition_invariant_under_permutation(perm):
    base = [
        ("e1_01_01", "建立树立"), ("a1_01_01", "树立，建立"), ("b1_01_01", "建立"),
        ("c1_01_01", "飞行"), ("d1_01_01", "飞行移动"), ("f1_01_01", "毫无关联"),
    ]
    shuffled = [base[i] for i in perm]
    reference = suggest_sms_clusters(base, 0.4)
    assert suggest_sms_clusters(shuffled, 0.4) == reference
    flat = sorted(enc for cluster in reference for enc in cluster)
    assert flat == sorted(enc for enc, _ in base)
