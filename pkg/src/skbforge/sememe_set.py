"""Derive the sememe inventory from a controlled defining vocabulary.

Pipeline: drop stop words (negators are kept even when stop-listed), count
how often each remaining CDV lemma occurs across all definitions, then trim
the most and least frequent tails of the ranked lemma list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateTrim, EmptyResult, NoAnnotations
from .formats import WordList
from .lexicon import DictionaryEntry, SememeInventory


@dataclass
class SememeSetConfig:
    top_trim_fraction: float = 0.01
    bottom_trim_fraction: float = 0.10
    stopwords: WordList = field(default_factory=lambda: WordList([], kind="stopword"))
    negators: WordList = field(default_factory=lambda: WordList([], kind="negator"))

    def __post_init__(self):
        if not (0 <= self.top_trim_fraction < 1) or not (0 <= self.bottom_trim_fraction < 1):
            raise ValueError("trim fractions must lie in [0, 1)")
        if self.top_trim_fraction + self.bottom_trim_fraction >= 1:
            raise ValueError("trim fractions must sum to less than 1")


@dataclass
class FrequencyTable:
    """Definition-token occurrence counts for the filtered CDV."""

    counts: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.counts)


def filter_stopwords(cdv: WordList, cfg: SememeSetConfig) -> WordList:
    """Remove stop words from the CDV, keeping any negator that is in the CDV."""
    if not len(cdv):
        raise EmptyResult("cannot filter an empty CDV")
    kept = [w for w in cdv if w not in cfg.stopwords or w in cfg.negators]
    if not kept:
        raise EmptyResult("stop-word filtering removed every CDV word")
    return WordList(kept, kind="cdv")


def count_defining_frequencies(
    entries: list[DictionaryEntry], vocab: WordList
) -> FrequencyTable:
    """Count occurrences of each vocab lemma over all definition token sequences.

    Counting is per token occurrence: a lemma appearing twice in one definition
    contributes 2.  Senses without token annotations are normalized with the
    built-in fallback normalizer.  Vocab lemmas never seen keep count 0.
    """
    from .extract import normalize_definition  # deferred: extract imports this module's types

    counts = {w: 0 for w in vocab}
    saw_tokens = False
    for entry in entries:
        for sense in entry.senses:
            tokens = sense.tokens
            if tokens is None:
                tokens = normalize_definition(sense.definition)
            if tokens:
                saw_tokens = True
            for token in tokens:
                if token.lemma in counts:
                    counts[token.lemma] += 1
    if entries and not saw_tokens:
        raise NoAnnotations("no token annotations and nothing to normalize")
    return FrequencyTable(counts=counts)


def trim_by_frequency(table: FrequencyTable, cfg: SememeSetConfig) -> SememeInventory:
    """Drop the top and bottom tails of the ranked distinct-lemma list.

    Lemmas are ranked by (count desc, lemma asc); ceil(fraction * N) ranks are
    cut from each end.  Zero-count lemmas are removed unconditionally, so every
    inventory sememe has count >= 1.
    """
    if not table.counts:
        raise DegenerateTrim("cannot trim an empty frequency table")
    ranked = sorted(table.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    n = len(ranked)
    top = math.ceil(cfg.top_trim_fraction * n)
    bottom = math.ceil(cfg.bottom_trim_fraction * n)
    kept = ranked[top : n - bottom] if bottom else ranked[top:]
    kept = [(lemma, count) for lemma, count in kept if count > 0]
    if not kept:
        raise DegenerateTrim("frequency trimming removed every lemma")
    return SememeInventory(counts=dict(kept))


def build_sememe_set(
    entries: list[DictionaryEntry], cdv: WordList, cfg: SememeSetConfig
) -> SememeInventory:
    """Full construction: stop-word filter, frequency count, percentile trim."""
    vocab = filter_stopwords(cdv, cfg)
    table = count_defining_frequencies(entries, vocab)
    return trim_by_frequency(table, cfg)
