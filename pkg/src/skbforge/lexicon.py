"""Core data model: dictionary entries, sememe inventories, and the SKB itself.

A sememe here is just a canonical lemma drawn from the filtered defining
vocabulary.  An SKB is a set of sense records, each mapping one dictionary
sense to a non-empty set of sememes, plus the inventory those sememes come
from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DuplicateSenseId, EmptySkb, UnknownSememe

# POS tag used when a dictionary does not supply one.
UNKNOWN_POS = "unknown"

# Joiner for multi-word headwords ("ice cream" -> "ice_cream").
_WS_RE = re.compile(r"\s+")


def make_lemma(text: str) -> str:
    """Canonicalize a lemma: case-fold, trim, join internal whitespace with '_'.

    Raises ValueError on empty input.
    """
    canon = _WS_RE.sub("_", text.strip().casefold())
    if not canon:
        raise ValueError("empty lemma")
    return canon


def make_pos(tag: str | None) -> str:
    if tag is None:
        return UNKNOWN_POS
    tag = tag.strip().casefold()
    return tag if tag else UNKNOWN_POS


@dataclass(frozen=True)
class TokenAnnotation:
    """One definition token in CoNLL-U row terms.

    ``head`` is 0 for the root, otherwise the 1-based index of the governing
    token.  ``head`` and ``deprel`` are None for tokens produced by the
    fallback normalizer, which does not parse.
    """

    index: int
    form: str
    lemma: str
    upos: str = "_"
    head: int | None = None
    deprel: str | None = None


@dataclass
class Sense:
    sense_id: str
    definition: str
    tokens: list[TokenAnnotation] | None = None


@dataclass
class DictionaryEntry:
    headword: str
    pos: str
    senses: list[Sense]


@dataclass
class SememeInventory:
    """The finite sememe set with per-sememe definition-occurrence counts."""

    counts: dict[str, int] = field(default_factory=dict)

    @property
    def sememes(self) -> set[str]:
        return set(self.counts)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.counts

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class SkbRecord:
    headword: str
    pos: str
    sense_id: str
    sememes: frozenset[str]

    def __post_init__(self):
        if not self.sememes:
            raise ValueError(f"record {self.sense_id!r} has no sememes")


@dataclass
class Skb:
    """A sememe knowledge base: inventory plus records indexed two ways.

    Single-writer during build; treat as immutable once built.
    """

    inventory: SememeInventory
    by_sense_id: dict[str, SkbRecord] = field(default_factory=dict)
    by_headword: dict[str, list[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.by_sense_id)

    def records(self) -> list[SkbRecord]:
        """All records, ordered by sense_id for deterministic iteration."""
        return [self.by_sense_id[sid] for sid in sorted(self.by_sense_id)]

    def records_for(self, headword: str) -> list[SkbRecord]:
        return [self.by_sense_id[sid] for sid in self.by_headword.get(headword, [])]

    def headwords(self) -> list[str]:
        return sorted(self.by_headword)


@dataclass(frozen=True)
class SkbStats:
    word_count: int
    sense_count: int
    sememe_count: int
    avg_sememes_per_sense: Fraction

    def as_dict(self) -> dict:
        return {
            "words": self.word_count,
            "senses": self.sense_count,
            "sememes": self.sememe_count,
            "avg_sememes_per_sense": float(self.avg_sememes_per_sense),
        }


def insert_record(skb: Skb, record: SkbRecord) -> Skb:
    """Insert one record; it becomes retrievable by headword and sense_id."""
    unknown = record.sememes - skb.inventory.sememes
    if unknown:
        raise UnknownSememe(
            f"record {record.sense_id!r} uses sememes outside the inventory: "
            + ", ".join(sorted(unknown))
        )
    if record.sense_id in skb.by_sense_id:
        raise DuplicateSenseId(f"sense id {record.sense_id!r} already present")
    skb.by_sense_id[record.sense_id] = record
    skb.by_headword.setdefault(record.headword, []).append(record.sense_id)
    return skb


def compute_stats(skb: Skb) -> SkbStats:
    """Exact word/sense/sememe counts and the average sememes per sense."""
    if not skb.by_sense_id:
        raise EmptySkb("cannot compute statistics of an empty SKB")
    used: set[str] = set()
    total = 0
    for record in skb.by_sense_id.values():
        used.update(record.sememes)
        total += len(record.sememes)
    return SkbStats(
        word_count=len(skb.by_headword),
        sense_count=len(skb.by_sense_id),
        sememe_count=len(used),
        avg_sememes_per_sense=Fraction(total, len(skb.by_sense_id)),
    )


def effective_inventory(skb: Skb) -> SememeInventory:
    """The inventory restricted to sememes annotated to at least one record.

    After distillation the effective set shrinks: pruned sememes no longer
    appear on any sense.
    """
    used: set[str] = set()
    for record in skb.by_sense_id.values():
        used.update(record.sememes)
    return SememeInventory(
        counts={s: c for s, c in skb.inventory.counts.items() if s in used}
    )
