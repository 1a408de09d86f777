#!/usr/bin/env python3
"""Generate the gloss-corpus fixture under fixtures/gloss/.

The corpus is a synthetic learner's-dictionary: every definition is written
from a small controlled defining vocabulary using a handful of syntactic
templates, each template carrying an explicit dependency tree.  Synonym
clusters share identical definitions, which gives the substitution index
something to find.  The generator is fully seeded; rerunning it reproduces
the committed fixture byte for byte.

Outputs: dict.jsonl, parses.conllu, cdv.txt, stopwords.txt, negators.txt,
embeddings.txt
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures" / "gloss"
SEED = 20240601
EMB_DIM = 32

GENUS = [
    "animal", "plant", "person", "object", "place", "substance", "action",
    "quality", "machine", "food", "liquid", "sound", "emotion", "game",
    "structure", "tool", "vehicle", "cloth", "container", "area", "event",
    "material", "shape", "device",
]
MODS = [
    "small", "large", "long", "short", "soft", "hard", "wild", "young",
    "old", "red", "green", "blue", "dark", "bright", "heavy", "light",
    "quick", "slow", "warm", "cold", "sweet", "thin", "thick", "flat",
    "round", "sharp", "smooth", "rough", "deep", "high",
]
VERBS = [
    "live", "move", "make", "use", "eat", "grow", "work", "play", "cut",
    "hold", "carry", "cover", "produce", "send", "give", "keep", "wear",
    "drink", "build", "clean", "open", "close", "push", "pull", "throw",
    "catch", "burn", "float",
]
OBJS = [
    "water", "land", "air", "fire", "ground", "house", "field", "forest",
    "river", "road", "city", "farm", "garden", "room", "door", "window",
    "table", "chair", "box", "bag", "paper", "book", "metal", "wood",
    "stone", "milk", "bread", "fruit", "grain", "seed", "leaf", "branch",
    "wheel", "engine", "rope", "wire", "board", "sheet", "glass", "corn",
]
ADVS = [
    "quickly", "slowly", "carefully", "gently", "often", "usually",
    "easily", "quietly", "suddenly", "together",
]
PARTS = [
    "edge", "side", "surface", "end", "top", "bottom", "corner", "face",
    "back", "front",
]
RARE = [
    "violet", "copper", "marble", "velvet", "amber", "cedar", "coral",
    "crimson", "ebony", "fern", "garnet", "hazel", "indigo", "ivory",
    "jade", "lilac", "maple", "ochre", "onyx", "pearl", "plum", "quartz",
    "ruby", "sage", "topaz",
]
NEGATORS = ["not", "never", "no"]

STOPWORDS = [
    "a", "an", "the", "that", "this", "these", "those", "to", "of", "in",
    "on", "at", "for", "with", "or", "and", "it", "its", "is", "are",
    "was", "were", "be", "been", "being", "have", "having", "has", "had",
    "do", "does", "did", "you", "your", "who", "which", "what", "when",
    "where", "how", "by", "from", "as", "if", "than", "then", "there",
    "here", "one", "some", "any", "each", "every", "all", "most", "more",
    "other", "another", "such", "so", "too", "also", "can", "could",
    "will", "would", "may", "might", "must", "should", "not", "never",
    "no",
]

THIRD_SG_EXC = {"carry": "carries", "push": "pushes", "catch": "catches", "close": "closes"}
GERUND_EXC = {"cut": "cutting"}

ONSETS = ["b", "br", "cl", "d", "dr", "f", "fl", "g", "gr", "h", "j", "k",
          "l", "m", "n", "p", "pl", "pr", "r", "sk", "sl", "t", "tr", "v",
          "w", "z"]
NUCLEI = ["a", "e", "i", "o", "u", "ai", "ea", "ou"]
CODAS = ["", "l", "m", "n", "r", "rn", "st", "t", "x"]


def third_sg(verb: str) -> str:
    if verb in THIRD_SG_EXC:
        return THIRD_SG_EXC[verb]
    if verb.endswith(("s", "x", "z", "ch", "sh")):
        return verb + "es"
    return verb + "s"


def gerund(verb: str) -> str:
    if verb in GERUND_EXC:
        return GERUND_EXC[verb]
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    return verb + "ing"


class Block:
    """One definition: surface text plus its token-level annotation."""

    def __init__(self, rows):
        # rows: (form, lemma, upos, head, deprel)
        self.rows = rows

    @property
    def text(self) -> str:
        return " ".join(r[0] for r in self.rows)

    def content_lemmas(self) -> list[str]:
        return [r[1] for r in self.rows if r[1] not in STOPWORDS]


def t_noun_habitat(mod, genus, verb, obj, adv, prep="in"):
    # distills to {genus, verb}: both carry the top dependent count
    return Block([
        ("a", "a", "DET", 3, "det"),
        (mod, mod, "ADJ", 3, "amod"),
        (genus, genus, "NOUN", 0, "root"),
        ("that", "that", "PRON", 5, "nsubj"),
        (third_sg(verb), verb, "VERB", 3, "acl:relcl"),
        (prep, prep, "ADP", 7, "case"),
        (obj, obj, "NOUN", 5, "obl"),
        (adv, adv, "ADV", 5, "advmod"),
    ])


def t_noun_purpose(mod, mod2, genus, verb, obj):
    # distills to {genus} alone: the genus outscores everything by 2
    return Block([
        ("a", "a", "DET", 4, "det"),
        (mod, mod, "ADJ", 4, "amod"),
        (mod2, mod2, "ADJ", 4, "amod"),
        (genus, genus, "NOUN", 0, "root"),
        ("used", "use", "VERB", 4, "acl"),
        ("for", "for", "SCONJ", 7, "mark"),
        (gerund(verb), verb, "VERB", 5, "advcl"),
        (obj, obj, "NOUN", 7, "obj"),
    ])


def t_noun_of(genus, obj, mod=None):
    rows = [("a", "a", "DET", None, "det")]
    if mod:
        rows.append((mod, mod, "ADJ", None, "amod"))
    g = len(rows) + 1
    rows = [(f, l, u, g, d) for f, l, u, _, d in rows]
    rows.append((genus, genus, "NOUN", 0, "root"))
    rows.append(("of", "of", "ADP", g + 2, "case"))
    rows.append((obj, obj, "NOUN", g, "nmod"))
    return Block(rows)


def t_verb_manner(verb, mod, obj, adv):
    # distills to {verb, obj}
    return Block([
        ("to", "to", "PART", 2, "mark"),
        (verb, verb, "VERB", 0, "root"),
        ("a", "a", "DET", 5, "det"),
        (mod, mod, "ADJ", 5, "amod"),
        (obj, obj, "NOUN", 2, "obj"),
        (adv, adv, "ADV", 2, "advmod"),
    ])


def t_verb_manner_tool(verb, mod, obj, adv, tool):
    # distills to {verb} alone
    return Block([
        ("to", "to", "PART", 2, "mark"),
        (verb, verb, "VERB", 0, "root"),
        ("a", "a", "DET", 5, "det"),
        (mod, mod, "ADJ", 5, "amod"),
        (obj, obj, "NOUN", 2, "obj"),
        (adv, adv, "ADV", 2, "advmod"),
        ("with", "with", "ADP", 9, "case"),
        ("a", "a", "DET", 9, "det"),
        (tool, tool, "NOUN", 2, "obl"),
    ])


def t_verb_tool(verb, obj, tool):
    return Block([
        ("to", "to", "PART", 2, "mark"),
        (verb, verb, "VERB", 0, "root"),
        (obj, obj, "NOUN", 2, "obj"),
        ("with", "with", "ADP", 6, "case"),
        ("a", "a", "DET", 6, "det"),
        (tool, tool, "NOUN", 2, "obl"),
    ])


def t_adj_pair(adv, mod, mod2):
    return Block([
        (adv, adv, "ADV", 2, "advmod"),
        (mod, mod, "ADJ", 0, "root"),
        ("and", "and", "CCONJ", 4, "cc"),
        (mod2, mod2, "ADJ", 2, "conj"),
    ])


def t_adj_negated(negator, mod, mod2):
    return Block([
        (negator, negator, "ADV", 2, "advmod"),
        (mod, mod, "ADJ", 0, "root"),
        ("or", "or", "CCONJ", 4, "cc"),
        (mod2, mod2, "ADJ", 2, "conj"),
    ])


def t_adj_part(mod, part, verb, obj, adv):
    # distills to {part, verb}
    return Block([
        ("having", "have", "VERB", 0, "root"),
        ("a", "a", "DET", 4, "det"),
        (mod, mod, "ADJ", 4, "amod"),
        (part, part, "NOUN", 1, "obj"),
        ("that", "that", "PRON", 6, "nsubj"),
        (third_sg(verb), verb, "VERB", 4, "acl:relcl"),
        (obj, obj, "NOUN", 6, "obj"),
        (adv, adv, "ADV", 6, "advmod"),
    ])


def t_empty():
    return Block([
        ("one", "one", "NUM", 0, "root"),
        ("of", "of", "ADP", 3, "case"),
        ("these", "these", "PRON", 1, "nmod"),
    ])


def make_word(rng, used: set) -> str:
    while True:
        n = rng.choice([2, 2, 3])
        word = "".join(
            rng.choice(ONSETS) + rng.choice(NUCLEI) + (rng.choice(CODAS) if i == n - 1 else "")
            for i in range(n)
        )
        if 4 <= len(word) <= 10 and word not in used:
            used.add(word)
            return word


# habitat verbs are kept to a small pool so distilled (genus, verb) keys collide
HABITAT_VERBS = ["live", "move", "grow", "work", "float", "burn", "play", "eat"]

# the last two adverbs never head anything, so distillation prunes them from
# every sense that carries them and the effective inventory shrinks
PAIR_ADVS = ADVS[:8]


def cluster_definition(rng, pos: str) -> Block:
    if pos == "noun":
        kind = rng.choices(["habitat", "purpose", "of"], weights=[40, 30, 30])[0]
        if kind == "habitat":
            return t_noun_habitat(rng.choice(MODS), rng.choice(GENUS),
                                  rng.choice(HABITAT_VERBS), rng.choice(OBJS),
                                  rng.choice(ADVS), prep=rng.choice(["in", "on"]))
        if kind == "purpose":
            mod = rng.choice(MODS)
            return t_noun_purpose(mod, rng.choice([m for m in MODS if m != mod]),
                                  rng.choice(GENUS), rng.choice(VERBS), rng.choice(OBJS))
        return t_noun_of(rng.choice(GENUS), rng.choice(OBJS),
                         mod=rng.choice(MODS) if rng.random() < 0.5 else None)
    if pos == "verb":
        kind = rng.choices(["manner", "manner_tool", "tool"], weights=[35, 35, 30])[0]
        if kind == "manner":
            return t_verb_manner(rng.choice(VERBS), rng.choice(MODS),
                                 rng.choice(OBJS), rng.choice(ADVS))
        if kind == "manner_tool":
            return t_verb_manner_tool(rng.choice(VERBS), rng.choice(MODS),
                                      rng.choice(OBJS), rng.choice(ADVS),
                                      rng.choice(OBJS))
        return t_verb_tool(rng.choice(VERBS), rng.choice(OBJS), rng.choice(OBJS))
    kind = rng.choices(["part", "pair", "negated"], weights=[40, 30, 30])[0]
    if kind == "part":
        return t_adj_part(rng.choice(MODS), rng.choice(PARTS),
                          rng.choice(VERBS), rng.choice(OBJS), rng.choice(ADVS))
    mod = rng.choice(MODS)
    mod2 = rng.choice([m for m in MODS if m != mod])
    if kind == "pair":
        return t_adj_pair(rng.choice(PAIR_ADVS), mod, mod2)
    return t_adj_negated(rng.choices(["not", "never"], weights=[3, 1])[0], mod, mod2)


def extra_definition(rng, pos: str) -> Block:
    if pos == "noun":
        return t_noun_of(rng.choice(GENUS), rng.choice(OBJS),
                         mod=rng.choice(RARE) if rng.random() < 0.15 else rng.choice(MODS))
    if pos == "verb":
        return t_verb_tool(rng.choice(VERBS), rng.choice(OBJS), rng.choice(OBJS))
    mod = rng.choice(MODS)
    return t_adj_pair(rng.choice(PAIR_ADVS), mod, rng.choice([m for m in MODS if m != mod]))


def main() -> None:
    rng = random.Random(SEED)
    used_words = set(GENUS + MODS + VERBS + OBJS + ADVS + PARTS + RARE + STOPWORDS)

    entries = []  # (headword, pos, [(sense_id, Block)])

    def add_entry(headword, pos, blocks):
        pos_tag = pos if rng.random() >= 0.05 else None  # a few untagged entries
        senses = []
        for i, block in enumerate(blocks, start=1):
            senses.append((f"{headword.replace(' ', '_')}%{pos or 'x'}%{i}", block))
        entries.append((headword, pos_tag, senses))

    # synonym clusters of pseudo-words sharing one definition
    for _ in range(1000):
        pos = rng.choices(["noun", "verb", "adj"], weights=[5, 3, 2])[0]
        size = rng.choices([1, 2, 3], weights=[6, 3, 1])[0]
        definition = cluster_definition(rng, pos)
        for _ in range(size):
            word = make_word(rng, used_words)
            blocks = [definition]
            if rng.random() < 0.35:
                blocks = blocks + [extra_definition(rng, pos)]
            add_entry(word, pos, blocks)

    # the defining vocabulary defines itself too
    for genus in GENUS:
        add_entry(genus, "noun", [t_noun_of(rng.choice([g for g in GENUS if g != genus]),
                                            rng.choice(OBJS))])
    for verb in VERBS:
        add_entry(verb, "verb", [t_verb_tool(rng.choice([v for v in VERBS if v != verb]),
                                             rng.choice(OBJS), rng.choice(OBJS))])
    for mod in MODS:
        add_entry(mod, "adj", [t_adj_pair(rng.choice(PAIR_ADVS),
                                          rng.choice([m for m in MODS if m != mod]),
                                          rng.choice([m for m in MODS if m != mod]))])
    for obj in rng.sample(OBJS, 25):
        add_entry(obj, "noun", [t_noun_of(rng.choice(GENUS), rng.choice([o for o in OBJS if o != obj]))])

    # multiword phrases
    for _ in range(25):
        phrase = f"{rng.choice(MODS)} {make_word(rng, used_words)}"
        add_entry(phrase, "noun", [cluster_definition(rng, "noun")])

    # senses whose definition is all stop words: dropped with a warning
    for i in range(3):
        word = make_word(rng, used_words)
        add_entry(word, "noun", [t_empty()])

    # --- write files ---------------------------------------------------------
    OUT.mkdir(parents=True, exist_ok=True)

    with open(OUT / "dict.jsonl", "w", encoding="utf-8", newline="\n") as fh:
        for headword, pos, senses in entries:
            obj = {
                "headword": headword,
                "pos": pos,
                "senses": [{"id": sid, "definition": b.text} for sid, b in senses],
            }
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")

    with open(OUT / "parses.conllu", "w", encoding="utf-8", newline="\n") as fh:
        for _, _, senses in entries:
            for sid, block in senses:
                fh.write(f"# sense_id = {sid}\n")
                for i, (form, lemma, upos, head, deprel) in enumerate(block.rows, start=1):
                    fh.write(f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_\n")
                fh.write("\n")

    cdv = sorted(set(GENUS + MODS + VERBS + OBJS + ADVS + PARTS + RARE + ["not", "never"]))
    (OUT / "cdv.txt").write_text(
        "# controlled defining vocabulary\n" + "\n".join(cdv) + "\n", encoding="utf-8")
    (OUT / "stopwords.txt").write_text(
        "# stop words\n" + "\n".join(STOPWORDS) + "\n", encoding="utf-8")
    (OUT / "negators.txt").write_text("\n".join(NEGATORS) + "\n", encoding="utf-8")

    # embeddings: a word's vector is the sum of its content lemmas' basis
    # vectors plus noise, so synonyms land close together
    basis: dict[str, list[float]] = {}

    def basis_vec(lemma: str) -> list[float]:
        if lemma not in basis:
            basis[lemma] = [rng.gauss(0.0, 1.0) for _ in range(EMB_DIM)]
        return basis[lemma]

    for lemma in cdv:
        basis_vec(lemma)

    rows = []
    for headword, _, senses in entries:
        if rng.random() < 0.03:
            continue  # leave a few words without embeddings
        _, primary = senses[0]
        vec = [0.0] * EMB_DIM
        for lemma in primary.content_lemmas():
            for i, v in enumerate(basis_vec(lemma)):
                vec[i] += v
        norm = sum(v * v for v in vec) ** 0.5 or 1.0
        vec = [v / norm + rng.gauss(0.0, 0.02) for v in vec]
        rows.append((headword.replace(" ", "_"), vec))

    with open(OUT / "embeddings.txt", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{len(rows)} {EMB_DIM}\n")
        for word, vec in rows:
            fh.write(word + " " + " ".join(f"{v:.6f}" for v in vec) + "\n")

    n_senses = sum(len(s) for _, _, s in entries)
    print(f"wrote {len(entries)} entries, {n_senses} senses, "
          f"{len(cdv)} CDV words, {len(rows)} embeddings -> {OUT}")

    # self-check: every emitted token round-trips through the rule lemmatizer,
    # so extraction behaves identically with and without the sidecar
    sys.path.insert(0, str(ROOT / "src"))
    from skbforge.extract import lemmatize

    bad = set()
    for _, _, senses in entries:
        for _, block in senses:
            for form, lemma, *_ in block.rows:
                if lemmatize(form) != lemma:
                    bad.add((form, lemma))
    if bad:
        raise SystemExit(f"lemmatizer disagreement on: {sorted(bad)[:20]}")
    print("lemma self-check passed")


if __name__ == "__main__":
    main()
