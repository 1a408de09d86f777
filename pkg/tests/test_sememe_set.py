import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skbforge.errors import DegenerateTrim, EmptyResult
from skbforge.formats import WordList
from skbforge.lexicon import DictionaryEntry, Sense
from skbforge.sememe_set import (
    FrequencyTable,
    SememeSetConfig,
    build_sememe_set,
    count_defining_frequencies,
    filter_stopwords,
    trim_by_frequency,
)

from .oracles import oracle_trim


def cfg_with(stopwords=(), negators=(), top=0.01, bottom=0.10):
    return SememeSetConfig(
        top_trim_fraction=top,
        bottom_trim_fraction=bottom,
        stopwords=WordList(stopwords, kind="stopword"),
        negators=WordList(negators, kind="negator"),
    )


def entry(headword, *definitions):
    return DictionaryEntry(
        headword=headword,
        pos="noun",
        senses=[Sense(sense_id=f"{headword}%{i}", definition=d) for i, d in enumerate(definitions)],
    )


# --- stop-word filtering -----------------------------------------------------

def test_negators_survive_stopword_filter():
    cdv = WordList(["that", "to", "not", "look"], kind="cdv")
    out = filter_stopwords(cdv, cfg_with(stopwords=["that", "to", "not"], negators=["not"]))
    assert list(out) == ["not", "look"]


def test_empty_stopword_list_is_identity():
    cdv = WordList(["alpha", "beta"], kind="cdv")
    assert list(filter_stopwords(cdv, cfg_with())) == ["alpha", "beta"]


def test_filter_matches_set_algebra_oracle(gloss_wordlists):
    cdv = gloss_wordlists["cdv"]
    sw = gloss_wordlists["stopwords"]
    neg = gloss_wordlists["negators"]
    out = filter_stopwords(cdv, cfg_with(stopwords=list(sw), negators=list(neg)))
    expected = [w for w in cdv if w not in set(sw) or w in set(neg)]
    assert list(out) == expected


def test_filter_stopwords_idempotent(gloss_wordlists):
    cfg = cfg_with(stopwords=list(gloss_wordlists["stopwords"]),
                   negators=list(gloss_wordlists["negators"]))
    once = filter_stopwords(gloss_wordlists["cdv"], cfg)
    twice = filter_stopwords(once, cfg)
    assert list(once) == list(twice)


def test_all_stopword_cdv_rejected():
    cdv = WordList(["the", "a"], kind="cdv")
    with pytest.raises(EmptyResult):
        filter_stopwords(cdv, cfg_with(stopwords=["the", "a"]))


# --- frequency counting ---------------------------------------------------------

def test_counting_is_additive_across_definitions():
    entries = [entry("w1", "look at this"), entry("w2", "a quick look")]
    table = count_defining_frequencies(entries, WordList(["look"], kind="cdv"))
    assert table.counts["look"] == 2


def test_lemma_twice_in_one_definition_counts_twice():
    entries = [entry("w1", "good and good again")]
    table = count_defining_frequencies(entries, WordList(["good"], kind="cdv"))
    assert table.counts["good"] == 2


def test_counting_lemmatizes_before_matching():
    entries = [entry("w1", "gives gifts and giving freely")]
    table = count_defining_frequencies(entries, WordList(["give"], kind="cdv"))
    assert table.counts["give"] == 2


def test_counts_match_linear_scan_oracle(gloss_entries, gloss_wordlists):
    from skbforge.extract import normalize_definition

    vocab = WordList([w for w in gloss_wordlists["cdv"]], kind="cdv")
    table = count_defining_frequencies(gloss_entries, vocab)
    expected: dict[str, int] = {w: 0 for w in vocab}
    for e in gloss_entries:
        for s in e.senses:
            for t in normalize_definition(s.definition):
                if t.lemma in expected:
                    expected[t.lemma] += 1
    assert table.counts == expected


# --- trimming --------------------------------------------------------------------

def test_trim_100_lemmas_defaults():
    counts = {f"w{i:03d}": i + 1 for i in range(100)}
    inv = trim_by_frequency(FrequencyTable(counts=counts), cfg_with())
    assert len(inv) == 89
    # exactly one from the top (w099, count 100) and ten from the bottom
    assert "w099" not in inv
    for i in range(10):
        assert f"w{i:03d}" not in inv


def test_zero_trim_is_identity():
    counts = {"a": 3, "b": 1}
    inv = trim_by_frequency(FrequencyTable(counts=counts), cfg_with(top=0.0, bottom=0.0))
    assert inv.counts == counts


def test_zero_count_lemmas_always_removed():
    counts = {"a": 3, "b": 0, "c": 1}
    inv = trim_by_frequency(FrequencyTable(counts=counts), cfg_with(top=0.0, bottom=0.0))
    assert inv.sememes == {"a", "c"}


def test_trim_everything_rejected():
    with pytest.raises(DegenerateTrim):
        trim_by_frequency(FrequencyTable(counts={"a": 0}), cfg_with(top=0.0, bottom=0.0))


def test_boundary_ties_resolve_lexicographically():
    # all counts equal: the bottom cut must take the lexicographically last ranks
    counts = {w: 5 for w in ["apple", "berry", "cherry", "date"]}
    inv = trim_by_frequency(FrequencyTable(counts=counts), cfg_with(top=0.0, bottom=0.25))
    assert inv.sememes == {"apple", "berry", "cherry"}


@settings(max_examples=200, deadline=None)
@given(
    counts=st.dictionaries(
        st.text(alphabet="abcdefghij", min_size=1, max_size=6),
        st.integers(min_value=1, max_value=1000),
        min_size=1, max_size=120,
    ),
    top=st.floats(min_value=0.0, max_value=0.3),
    bottom=st.floats(min_value=0.0, max_value=0.5),
)
def test_trim_matches_sort_and_slice_oracle(counts, top, bottom):
    expected = oracle_trim(counts, top, bottom)
    table = FrequencyTable(counts=dict(counts))
    if not expected:
        with pytest.raises(DegenerateTrim):
            trim_by_frequency(table, cfg_with(top=top, bottom=bottom))
    else:
        inv = trim_by_frequency(table, cfg_with(top=top, bottom=bottom))
        assert inv.counts == expected


@settings(max_examples=100, deadline=None)
@given(
    counts=st.dictionaries(
        st.text(alphabet="abcdefghij", min_size=1, max_size=6),
        st.integers(min_value=1, max_value=50),
        min_size=5, max_size=60,
    ),
    bottom1=st.floats(min_value=0.0, max_value=0.4),
    bottom2=st.floats(min_value=0.0, max_value=0.4),
)
def test_enlarging_bottom_trim_never_adds_sememes(counts, bottom1, bottom2):
    lo, hi = sorted([bottom1, bottom2])
    table = FrequencyTable(counts=dict(counts))
    try:
        small = trim_by_frequency(table, cfg_with(top=0.0, bottom=hi)).sememes
    except DegenerateTrim:
        return
    large = trim_by_frequency(table, cfg_with(top=0.0, bottom=lo)).sememes
    assert small <= large


def test_inventory_counts_all_positive(gloss_inventory):
    assert all(c >= 1 for c in gloss_inventory.counts.values())


def test_trim_deterministic(gloss_entries, gloss_wordlists):
    cfg = cfg_with(stopwords=list(gloss_wordlists["stopwords"]),
                   negators=list(gloss_wordlists["negators"]))
    a = build_sememe_set(gloss_entries, gloss_wordlists["cdv"], cfg)
    b = build_sememe_set(gloss_entries, gloss_wordlists["cdv"], cfg)
    assert a.counts == b.counts


# --- composition -------------------------------------------------------------------

def test_build_equals_manual_composition(gloss_entries, gloss_wordlists):
    cfg = cfg_with(stopwords=list(gloss_wordlists["stopwords"]),
                   negators=list(gloss_wordlists["negators"]))
    composed = build_sememe_set(gloss_entries, gloss_wordlists["cdv"], cfg)
    vocab = filter_stopwords(gloss_wordlists["cdv"], cfg)
    table = count_defining_frequencies(gloss_entries, vocab)
    manual = trim_by_frequency(table, cfg)
    assert composed.counts == manual.counts


def test_stopword_only_cdv_propagates_empty_result():
    cdv = WordList(["the"], kind="cdv")
    with pytest.raises(EmptyResult):
        build_sememe_set([entry("w", "the the")], cdv, cfg_with(stopwords=["the"]))
