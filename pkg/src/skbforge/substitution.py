"""Sememe-based word substitution: senses bucketed by their exact sememe set.

Two words substitute for each other when some sense of each carries the
identical sememe set (and, by default, a compatible POS).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptySkb, UnknownWord
from .lexicon import UNKNOWN_POS, Skb

SememeKey = tuple[str, ...]

HISTOGRAM_BUCKETS = ("0", "1", "2-5", "6-20", ">20")


def sememe_key(sememes) -> SememeKey:
    """Canonical bucket key: sorted, deduplicated lemma tuple."""
    key = tuple(sorted(set(sememes)))
    if not key:
        raise ValueError("a sememe key cannot be empty")
    return key


@dataclass
class SubstitutionIndex:
    """Immutable-after-build partition of SKB records by sememe key."""

    buckets: dict[SememeKey, set[tuple[str, str, str]]] = field(default_factory=dict)
    key_of: dict[str, SememeKey] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.buckets)


def build_index(skb: Skb) -> SubstitutionIndex:
    if not len(skb):
        raise EmptySkb("cannot index an empty SKB")
    index = SubstitutionIndex()
    for record in skb.by_sense_id.values():
        key = sememe_key(record.sememes)
        index.buckets.setdefault(key, set()).add(
            (record.headword, record.pos, record.sense_id)
        )
        index.key_of[record.sense_id] = key
    return index


def _pos_compatible(a: str, b: str) -> bool:
    return a == UNKNOWN_POS or b == UNKNOWN_POS or a == b


def substitutes(
    index: SubstitutionIndex,
    skb: Skb,
    word: str,
    pos: str | None = None,
    require_pos_match: bool = True,
) -> set[str]:
    """All words sharing an exact sememe set with some sense of ``word``.

    POS constraints apply only between records that both carry a known tag;
    the word itself is never its own substitute.
    """
    records = skb.records_for(word)
    if not records:
        raise UnknownWord(f"{word!r} is not in the SKB")
    out: set[str] = set()
    for record in records:
        if pos is not None and record.pos != UNKNOWN_POS and record.pos != pos:
            continue
        for other_word, other_pos, _ in index.buckets[index.key_of[record.sense_id]]:
            if other_word == word:
                continue
            if require_pos_match and not _pos_compatible(record.pos, other_pos):
                continue
            out.add(other_word)
    return out


def substitute_stats(
    index: SubstitutionIndex, skb: Skb, require_pos_match: bool = True
) -> dict:
    """Mean substitute count over all SKB headwords, plus a bucketed histogram."""
    histogram = {b: 0 for b in HISTOGRAM_BUCKETS}
    total = 0
    words = skb.headwords()
    for word in words:
        n = len(substitutes(index, skb, word, require_pos_match=require_pos_match))
        total += n
        if n == 0:
            histogram["0"] += 1
        elif n == 1:
            histogram["1"] += 1
        elif n <= 5:
            histogram["2-5"] += 1
        elif n <= 20:
            histogram["6-20"] += 1
        else:
            histogram[">20"] += 1
    return {
        "words": len(words),
        "mean_substitutes": total / len(words) if words else 0.0,
        "histogram": histogram,
    }
