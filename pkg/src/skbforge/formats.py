"""Parsers and serializers for every external file format.

All readers take text streams (or paths via the ``*_path`` helpers), are
deterministic, and raise exactly one typed error with a line number on the
first invalid input.  Formats:

* dictionary: JSON Lines, one ``{"headword", "pos", "senses": [...]}`` per line
* token annotations: CoNLL-U sidecar keyed by a ``# sense_id = <id>`` comment
* word lists: one word per line, ``#`` comments
* embeddings: ``<count> <dim>`` header then ``<word> <f1> ... <fdim>`` rows
* SKB export: JSONL with an inventory header line followed by record lines
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .errors import (
    CyclicHeads,
    DimMismatch,
    DuplicateSenseId,
    EmptyDefinition,
    EmptyList,
    MalformedLine,
    MissingSenseId,
    NonContiguousIndices,
    NonFiniteValue,
    UnknownSememe,
    VersionMismatch,
)
from .lexicon import (
    DictionaryEntry,
    Sense,
    SememeInventory,
    Skb,
    SkbRecord,
    TokenAnnotation,
    insert_record,
    make_lemma,
    make_pos,
)

SKB_FORMAT_VERSION = 1

WORDLIST_KINDS = ("cdv", "stopword", "negator")


class WordList:
    """An ordered, case-folded, duplicate-free word list of a given kind."""

    def __init__(self, words: Iterable[str], kind: str):
        if kind not in WORDLIST_KINDS:
            raise ValueError(f"unknown word list kind {kind!r}")
        self.kind = kind
        self.words: list[str] = []
        seen = set()
        for w in words:
            lemma = make_lemma(w)
            if lemma not in seen:
                seen.add(lemma)
                self.words.append(lemma)
        self._set = seen

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._set

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)


class EmbeddingTable:
    """Word vectors of a fixed dimension, keyed by lemma."""

    def __init__(self, dim: int):
        self.dim = dim
        self.vectors: dict[str, np.ndarray] = {}

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, lemma: str) -> np.ndarray:
        return self.vectors[lemma]


# --- dictionary JSONL ---------------------------------------------------------

def parse_dictionary(stream: IO[str]) -> list[DictionaryEntry]:
    """Parse dictionary JSONL into entries, one per line, in file order."""
    entries: list[DictionaryEntry] = []
    seen_ids: set[str] = set()
    for n, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedLine(f"invalid JSON: {e.msg}", line=n) from e
        if not isinstance(obj, dict):
            raise MalformedLine("expected a JSON object", line=n)
        try:
            headword = make_lemma(obj["headword"])
            pos = make_pos(obj.get("pos"))
            raw_senses = obj["senses"]
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedLine(f"bad entry: {e}", line=n) from e
        if not isinstance(raw_senses, list) or not raw_senses:
            raise MalformedLine("entry must carry at least one sense", line=n)
        senses = []
        for s in raw_senses:
            try:
                sense_id = str(s["id"])
                definition = str(s["definition"])
            except (KeyError, TypeError) as e:
                raise MalformedLine(f"bad sense: {e}", line=n) from e
            if not definition.strip():
                raise EmptyDefinition(f"sense {sense_id!r} has an empty definition", line=n)
            if sense_id in seen_ids:
                raise DuplicateSenseId(f"sense id {sense_id!r} repeated", line=n)
            seen_ids.add(sense_id)
            senses.append(Sense(sense_id=sense_id, definition=definition))
        entries.append(DictionaryEntry(headword=headword, pos=pos, senses=senses))
    return entries


def parse_dictionary_path(path: str | Path) -> list[DictionaryEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_dictionary(fh)


# --- CoNLL-U sidecar ------------------------------------------------------------

def _check_tree(tokens: list[TokenAnnotation], start_line: int) -> None:
    n = len(tokens)
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise CyclicHeads(f"expected exactly one root, found {len(roots)}", line=start_line)
    for t in tokens:
        if t.head == t.index:
            raise CyclicHeads(f"token {t.index} is its own head", line=start_line)
        if t.head is None or not (0 <= t.head <= n):
            raise CyclicHeads(f"token {t.index} has out-of-range head {t.head}", line=start_line)
    # walk up from every token; cycles or disconnected parts never reach 0
    for t in tokens:
        seen = set()
        cur = t.index
        while cur != 0:
            if cur in seen:
                raise CyclicHeads(f"cycle through token {cur}", line=start_line)
            seen.add(cur)
            cur = tokens[cur - 1].head
    return None


def parse_conllu(stream: IO[str]) -> dict[str, list[TokenAnnotation]]:
    """Parse a CoNLL-U sidecar into per-sense token lists.

    Each sentence block must carry a ``# sense_id = <id>`` comment.  Multiword
    range lines (``1-2``) and empty nodes (``1.1``) are skipped as in standard
    CoNLL-U readers.  Head pointers are verified to form a single-rooted tree.
    """
    parses: dict[str, list[TokenAnnotation]] = {}
    sense_id: str | None = None
    tokens: list[TokenAnnotation] = []
    block_start = 1

    def flush(end_line: int) -> None:
        nonlocal sense_id, tokens
        if not tokens and sense_id is None:
            return
        if sense_id is None:
            raise MissingSenseId("sentence block without a sense_id comment", line=block_start)
        if not tokens:
            raise MalformedLine(f"sense {sense_id!r} has an empty block", line=block_start)
        for pos, t in enumerate(tokens, start=1):
            if t.index != pos:
                raise NonContiguousIndices(
                    f"token ids of sense {sense_id!r} are not 1..{len(tokens)}",
                    line=block_start,
                )
        _check_tree(tokens, block_start)
        if sense_id in parses:
            raise DuplicateSenseId(f"sense id {sense_id!r} annotated twice", line=block_start)
        parses[sense_id] = tokens
        sense_id, tokens = None, []

    n = 0
    for n, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush(n)
            block_start = n + 1
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("sense_id"):
                _, _, value = comment.partition("=")
                sense_id = value.strip()
                if not sense_id:
                    raise MissingSenseId("empty sense_id comment", line=n)
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise MalformedLine(f"expected 10 columns, found {len(cols)}", line=n)
        ident, form, lemma, upos, _, _, head, deprel, _, _ = cols
        if "-" in ident or "." in ident:
            continue  # surface range / empty node
        try:
            index = int(ident)
            head_idx = int(head)
        except ValueError as e:
            raise MalformedLine(f"non-integer ID or HEAD: {e}", line=n) from e
        try:
            lemma_canon = make_lemma(lemma if lemma != "_" else form)
        except ValueError as e:
            raise MalformedLine(str(e), line=n) from e
        tokens.append(
            TokenAnnotation(
                index=index,
                form=form,
                lemma=lemma_canon,
                upos=upos,
                head=head_idx,
                deprel=deprel,
            )
        )
    flush(n + 1)
    return parses


def parse_conllu_path(path: str | Path) -> dict[str, list[TokenAnnotation]]:
    with open(path, encoding="utf-8") as fh:
        return parse_conllu(fh)


def write_conllu(parses: dict[str, list[TokenAnnotation]], stream: IO[str]) -> None:
    """Serialize parses back to the sidecar format, blocks sorted by sense_id."""
    for sense_id in sorted(parses):
        stream.write(f"# sense_id = {sense_id}\n")
        for t in parses[sense_id]:
            head = t.head if t.head is not None else "_"
            deprel = t.deprel if t.deprel is not None else "_"
            stream.write(
                f"{t.index}\t{t.form}\t{t.lemma}\t{t.upos}\t_\t_\t{head}\t{deprel}\t_\t_\n"
            )
        stream.write("\n")


# --- word lists -----------------------------------------------------------------

def parse_wordlist(stream: IO[str], kind: str) -> WordList:
    """One word per line; ``#`` comments and blank lines ignored."""
    words = []
    for raw in stream:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words.append(line)
    wl = WordList(words, kind=kind)
    if kind == "cdv" and not len(wl):
        raise EmptyList("the controlled defining vocabulary is empty")
    return wl


def parse_wordlist_path(path: str | Path, kind: str) -> WordList:
    with open(path, encoding="utf-8") as fh:
        return parse_wordlist(fh, kind)


# --- embeddings -------------------------------------------------------------------

def parse_embeddings(stream: IO[str]) -> EmbeddingTable:
    """Whitespace text format: ``<count> <dim>`` header, one word vector per row."""
    header = stream.readline()
    parts = header.split()
    if len(parts) != 2:
        raise MalformedLine("header must be '<count> <dim>'", line=1)
    try:
        count, dim = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise MalformedLine(f"bad header: {e}", line=1) from e
    if count < 0 or dim <= 0:
        raise MalformedLine("count must be >= 0 and dim > 0", line=1)
    table = EmbeddingTable(dim)
    for n, raw in enumerate(stream, start=2):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != dim + 1:
            raise DimMismatch(f"expected {dim} components, found {len(fields) - 1}", line=n)
        word = make_lemma(fields[0])
        vec = np.empty(dim, dtype=np.float64)
        for i, f in enumerate(fields[1:]):
            try:
                v = float(f)
            except ValueError as e:
                raise MalformedLine(f"bad float {f!r}", line=n) from e
            if not math.isfinite(v):
                raise NonFiniteValue(f"non-finite component {f!r}", line=n)
            vec[i] = v
        if word in table.vectors:
            raise MalformedLine(f"word {word!r} repeated", line=n)
        table.vectors[word] = vec
    if len(table) != count:
        raise MalformedLine(f"header declared {count} rows, found {len(table)}")
    return table


def parse_embeddings_path(path: str | Path) -> EmbeddingTable:
    with open(path, encoding="utf-8") as fh:
        return parse_embeddings(fh)


# --- SKB export --------------------------------------------------------------------

def write_skb(skb: Skb, stream: IO[str]) -> None:
    """Write the export format: inventory header line, then sorted record lines.

    Unused inventory sememes are kept but flagged, so a round trip preserves
    the full inventory.
    """
    used: set[str] = set()
    for record in skb.by_sense_id.values():
        used.update(record.sememes)
    inventory = [
        {"lemma": s, "count": skb.inventory.counts[s], "used": s in used}
        for s in sorted(skb.inventory.counts)
    ]
    header = {"format": "skb", "version": SKB_FORMAT_VERSION, "inventory": inventory}
    stream.write(json.dumps(header, ensure_ascii=False, sort_keys=True) + "\n")
    for record in sorted(skb.by_sense_id.values(), key=lambda r: (r.headword, r.sense_id)):
        obj = {
            "headword": record.headword,
            "pos": record.pos,
            "sense_id": record.sense_id,
            "sememes": sorted(record.sememes),
        }
        stream.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")


def read_skb(stream: IO[str]) -> Skb:
    header_line = stream.readline()
    try:
        header = json.loads(header_line)
    except json.JSONDecodeError as e:
        raise MalformedLine(f"invalid JSON header: {e.msg}", line=1) from e
    if not isinstance(header, dict) or header.get("format") != "skb":
        raise MalformedLine("not an SKB export file", line=1)
    if header.get("version") != SKB_FORMAT_VERSION:
        raise VersionMismatch(
            f"unsupported SKB export version {header.get('version')!r}", line=1
        )
    counts = {}
    for item in header.get("inventory", []):
        counts[make_lemma(item["lemma"])] = int(item["count"])
    skb = Skb(inventory=SememeInventory(counts=counts))
    for n, raw in enumerate(stream, start=2):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedLine(f"invalid JSON: {e.msg}", line=n) from e
        try:
            record = SkbRecord(
                headword=make_lemma(obj["headword"]),
                pos=make_pos(obj.get("pos")),
                sense_id=str(obj["sense_id"]),
                sememes=frozenset(make_lemma(s) for s in obj["sememes"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedLine(f"bad record: {e}", line=n) from e
        try:
            insert_record(skb, record)
        except UnknownSememe as e:
            raise UnknownSememe(f"line {n}: {e}") from e
    return skb


def write_skb_path(skb: Skb, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_skb(skb, fh)


def read_skb_path(path: str | Path) -> Skb:
    with open(path, encoding="utf-8") as fh:
        return read_skb(fh)


# --- standalone inventory file -------------------------------------------------------

def write_inventory(inventory: SememeInventory, stream: IO[str]) -> None:
    obj = {
        "format": "skb-inventory",
        "version": SKB_FORMAT_VERSION,
        "sememes": [
            {"lemma": s, "count": inventory.counts[s]} for s in sorted(inventory.counts)
        ],
    }
    json.dump(obj, stream, ensure_ascii=False, sort_keys=True, indent=2)
    stream.write("\n")


def read_inventory(stream: IO[str]) -> SememeInventory:
    try:
        obj = json.load(stream)
    except json.JSONDecodeError as e:
        raise MalformedLine(f"invalid JSON: {e.msg}") from e
    if not isinstance(obj, dict) or obj.get("format") != "skb-inventory":
        raise MalformedLine("not an inventory file")
    if obj.get("version") != SKB_FORMAT_VERSION:
        raise VersionMismatch(f"unsupported inventory version {obj.get('version')!r}")
    counts = {make_lemma(i["lemma"]): int(i["count"]) for i in obj["sememes"]}
    return SememeInventory(counts=counts)


def read_inventory_path(path: str | Path) -> SememeInventory:
    with open(path, encoding="utf-8") as fh:
        return read_inventory(fh)


def write_inventory_path(inventory: SememeInventory, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_inventory(inventory, fh)


# --- diagnostics ------------------------------------------------------------------

def write_diagnostics(diagnostics: list[dict], stream: IO[str]) -> None:
    """Per-sense warnings as JSONL, sorted by sense_id for stable output."""
    for item in sorted(diagnostics, key=lambda d: d.get("sense_id", "")):
        stream.write(json.dumps(item, ensure_ascii=False, sort_keys=True) + "\n")
