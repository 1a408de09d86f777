"""Per-sense sememe extraction and dependency-importance distillation.

Extraction normalizes a definition (externally parsed tokens when available,
otherwise the built-in rule normalizer) and intersects its lemmas with the
sememe inventory.  Distillation scores each sememe by the number of direct
dependents of its originating token in the definition's dependency parse and
prunes low scorers on senses that carry at least ``m`` sememes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import partial

from .errors import EmptyDefinition, MissingParse, SememeNotInTokens
from .lexicon import (
    DictionaryEntry,
    SememeInventory,
    Skb,
    SkbRecord,
    TokenAnnotation,
    insert_record,
    make_lemma,
)
from .parallel import parallel_map

_TOKEN_RE = re.compile(r"[^\W\d_]+(?:[-'’][^\W\d_]+)*|\d+")

# Forms the suffix rules cannot reach (irregular inflection, silent-e stems).
_IRREGULAR = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "isn't": "be", "aren't": "be",
    "has": "have", "had": "have", "having": "have", "hasn't": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "don't": "do", "doesn't": "do", "didn't": "do",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    "gave": "give", "given": "give", "giving": "give",
    "made": "make", "making": "make",
    "took": "take", "taken": "take", "taking": "take",
    "came": "come", "coming": "come",
    "got": "get", "gotten": "get", "getting": "get",
    "saw": "see", "seen": "see", "seeing": "see",
    "said": "say", "saying": "say",
    "found": "find", "finding": "find",
    "kept": "keep", "keeping": "keep",
    "left": "leave", "leaving": "leave",
    "felt": "feel", "feeling": "feel",
    "held": "hold", "holding": "hold",
    "sent": "send", "sending": "send",
    "used": "use", "using": "use",
    "lives": "live", "lived": "live", "living": "live",
    "moved": "move", "moving": "move",
    "wrote": "write", "written": "write", "writing": "write",
    "grew": "grow", "grown": "grow", "growing": "grow",
    "ate": "eat", "eaten": "eat", "eating": "eat",
    "wore": "wear", "worn": "wear", "wearing": "wear",
    "drank": "drink", "drunk": "drink", "drinking": "drink",
    "became": "become", "becoming": "become",
    "bought": "buy", "buying": "buy",
    "sold": "sell", "selling": "sell",
    "built": "build", "building": "build",
    "cutting": "cut", "putting": "put",
    "ran": "run", "running": "run",
    "sat": "sit", "sitting": "sit",
    "lay": "lie", "lying": "lie",
    "children": "child", "men": "man", "women": "woman", "people": "person",
    "feet": "foot", "teeth": "tooth", "mice": "mouse",
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "can't": "can", "cannot": "can", "won't": "will",
    "died": "die", "tied": "tie", "lied": "lie", "agreed": "agree",
    "closing": "close", "closed": "close",
    "buses": "bus", "gases": "gas", "tomatoes": "tomato", "potatoes": "potato",
    "heroes": "hero", "echoes": "echo",
}

# Surface forms that look inflected but are their own lemma.
_KEEP = {
    "series", "species", "news", "physics", "politics", "mathematics",
    "gas", "yes", "always", "perhaps", "sometimes", "towards", "lens",
    "during", "thing", "something", "anything", "nothing", "everything",
    "morning", "evening", "ceiling", "king", "ring", "wing", "spring",
    "string", "clothing", "wedding", "pudding",
    "hundred", "naked", "sacred", "wicked", "tired", "indeed",
}

_VOWELS = set("aeiou")
_ES_STRIP = ("ches", "shes", "xes", "zes", "sses")


def _dedouble(stem: str) -> str:
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    return stem


def _restore_e(stem: str) -> str:
    if stem.endswith(("v", "u", "c", "bl", "iz")):
        return stem + "e"
    # -ate verbs ("conflat" -> "conflate") but not plain -at stems ("float")
    if stem.endswith("at") and len(stem) >= 3 and stem[-3] not in _VOWELS:
        return stem + "e"
    return stem


def lemmatize(token: str) -> str:
    """English rule lemmatizer: irregular table plus -s/-es/-ies/-ing/-ed rules."""
    word = token.casefold()
    if word.endswith(("'s", "’s")):
        word = word[:-2]
    if word in _IRREGULAR:
        return _IRREGULAR[word]
    if word in _KEEP:
        return word
    if word.endswith("ies") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith(_ES_STRIP):
        return word[:-2]
    if word.endswith("s") and len(word) >= 4 and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    if word.endswith("ing") and len(word) >= 6:
        stem = word[:-3]
        if stem.endswith("e"):
            return stem
        return _restore_e(_dedouble(stem))
    if word.endswith("eed"):
        return word
    if word.endswith("ied") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith("ed") and len(word) >= 5:
        stem = word[:-2]
        if stem.endswith("e"):
            return stem
        return _restore_e(_dedouble(stem))
    return word


def normalize_definition(text: str) -> list[TokenAnnotation]:
    """Tokenize and lemmatize a raw definition; punctuation is dropped.

    The result carries no dependency heads: distillation needs an externally
    parsed sidecar.
    """
    if not text or not text.strip():
        raise EmptyDefinition("cannot normalize an empty definition")
    tokens = []
    for i, match in enumerate(_TOKEN_RE.finditer(text), start=1):
        form = match.group(0)
        tokens.append(
            TokenAnnotation(index=i, form=form, lemma=make_lemma(lemmatize(form)))
        )
    if not tokens:
        raise EmptyDefinition("definition contains no word tokens")
    return tokens


def extract_sense_sememes(
    tokens: list[TokenAnnotation], inventory: SememeInventory
) -> set[str]:
    """Lemmas of the definition tokens intersected with the inventory."""
    return {t.lemma for t in tokens if t.lemma in inventory}


@dataclass
class DistillConfig:
    t: int = 1
    m: int = 4

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("score slack t must be non-negative")
        if self.m < 2:
            raise ValueError("sense-size threshold m must be at least 2")


@dataclass
class ImportanceScores:
    scores: dict[str, int] = field(default_factory=dict)


def importance_scores(
    tokens: list[TokenAnnotation], sememes: set[str]
) -> ImportanceScores:
    """Dependent count per sememe, maximized over repeated token positions."""
    if any(t.head is None for t in tokens):
        raise MissingParse("tokens carry no dependency heads")
    dependents = [0] * (len(tokens) + 1)
    for t in tokens:
        if t.head:
            dependents[t.head] += 1
    scores: dict[str, int] = {}
    for t in tokens:
        if t.lemma in sememes:
            prev = scores.get(t.lemma, -1)
            scores[t.lemma] = max(prev, dependents[t.index])
    missing = sememes - scores.keys()
    if missing:
        raise SememeNotInTokens(
            "sememes absent from the parsed tokens: " + ", ".join(sorted(missing))
        )
    return ImportanceScores(scores=scores)


def distill_sense(
    sememes: set[str], scores: ImportanceScores, cfg: DistillConfig
) -> set[str]:
    """Keep sememes scoring at least max - t; senses smaller than m pass through."""
    if len(sememes) < cfg.m:
        return set(sememes)
    missing = sememes - scores.scores.keys()
    if missing:
        raise SememeNotInTokens(
            "scores do not cover sememes: " + ", ".join(sorted(missing))
        )
    cutoff = max(scores.scores[s] for s in sememes) - cfg.t
    return {s for s in sememes if scores.scores[s] >= cutoff}


def _sense_tokens(
    sense, parses: dict[str, list[TokenAnnotation]] | None
) -> list[TokenAnnotation]:
    if parses is not None and sense.sense_id in parses:
        return parses[sense.sense_id]
    if sense.tokens is not None:
        return sense.tokens
    return normalize_definition(sense.definition)


def _extract_one(job, inventory: SememeInventory) -> tuple[str, frozenset[str]]:
    sense_id, tokens = job
    return sense_id, frozenset(extract_sense_sememes(tokens, inventory))


def build_skb(
    entries: list[DictionaryEntry],
    inventory: SememeInventory,
    parses: dict[str, list[TokenAnnotation]] | None = None,
    diagnostics: list[dict] | None = None,
    jobs: int = 1,
) -> Skb:
    """Annotate every sense; senses with an empty extraction are dropped with a warning."""
    meta = []
    token_jobs = []
    for entry in entries:
        for sense in entry.senses:
            try:
                tokens = _sense_tokens(sense, parses)
            except EmptyDefinition:
                if diagnostics is not None:
                    diagnostics.append(
                        {"sense_id": sense.sense_id,
                         "warning": "definition has no word tokens; sense dropped"}
                    )
                continue
            meta.append((entry.headword, entry.pos, sense.sense_id))
            token_jobs.append((sense.sense_id, tokens))
    extracted = parallel_map(partial(_extract_one, inventory=inventory), token_jobs, jobs)
    skb = Skb(inventory=inventory)
    for (headword, pos, sense_id), (_, sememes) in zip(meta, extracted):
        if not sememes:
            if diagnostics is not None:
                diagnostics.append(
                    {"sense_id": sense_id, "warning": "no sememes extracted; sense dropped"}
                )
            continue
        insert_record(
            skb,
            SkbRecord(headword=headword, pos=pos, sense_id=sense_id, sememes=sememes),
        )
    return skb


def _distill_one(job, cfg: DistillConfig):
    record, tokens = job
    if len(record.sememes) < cfg.m:
        return record, None
    if tokens is None or any(t.head is None for t in tokens):
        return record, "missing dependency parse; sense left undistilled"
    try:
        scores = importance_scores(tokens, set(record.sememes))
    except SememeNotInTokens as e:
        return record, f"{e}; sense left undistilled"
    kept = distill_sense(set(record.sememes), scores, cfg)
    return (
        SkbRecord(
            headword=record.headword,
            pos=record.pos,
            sense_id=record.sense_id,
            sememes=frozenset(kept),
        ),
        None,
    )


def distill_skb(
    skb: Skb,
    parses: dict[str, list[TokenAnnotation]],
    cfg: DistillConfig,
    diagnostics: list[dict] | None = None,
    jobs: int = 1,
) -> Skb:
    """Rewrite every record through distill_sense and shrink the inventory.

    Per-sense failures (no parse, lemma mismatch against the parse) are
    reported as diagnostics; the affected record is kept unchanged.
    """
    records = skb.records()
    distill_jobs = [(r, parses.get(r.sense_id)) for r in records]
    results = parallel_map(partial(_distill_one, cfg=cfg), distill_jobs, jobs)
    new_records = []
    for record, warning in results:
        new_records.append(record)
        if warning and diagnostics is not None:
            diagnostics.append({"sense_id": record.sense_id, "warning": warning})
    used = set()
    for r in new_records:
        used.update(r.sememes)
    inventory = SememeInventory(
        counts={s: c for s, c in skb.inventory.counts.items() if s in used}
    )
    out = Skb(inventory=inventory)
    for r in new_records:
        insert_record(out, r)
    return out
