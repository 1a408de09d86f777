"""Annotation-consistency probe: hold out senses, predict their sememes back.

Prediction is embedding-neighborhood collaborative filtering: the sememes of
the k nearest train headwords (cosine similarity) are pooled, each weighted by
``cos(target, neighbor) * c^rank``.  Consistent annotations put the held-out
gold sememes at the top of that ranking, measured with MAP and F1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from .errors import EmptyGold, EmptyTrain, NoEmbedding, NoUsableSenses, TooSmall
from .formats import EmbeddingTable
from .lexicon import Skb, SkbRecord, insert_record
from .parallel import parallel_map


@dataclass
class EvalConfig:
    holdout_fraction: float = 0.10
    seed: int = 0
    k_neighbors: int = 100
    rank_decay_c: float = 0.8
    f1_score_ratio: float = 0.5

    def __post_init__(self):
        if not (0 < self.holdout_fraction < 1):
            raise ValueError("holdout_fraction must lie in (0, 1)")
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be positive")
        if not (0 < self.rank_decay_c < 1):
            raise ValueError("rank_decay_c must lie in (0, 1)")
        if not (0 < self.f1_score_ratio <= 1):
            raise ValueError("f1_score_ratio must lie in (0, 1]")


@dataclass(frozen=True)
class PerSenseResult:
    sense_id: str
    ap: float
    f1: float
    predicted: tuple[str, ...]
    gold: tuple[str, ...]


@dataclass
class EvalReport:
    map_score: float
    f1_score: float
    per_sense: list[PerSenseResult]
    excluded: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "map": self.map_score,
            "f1": self.f1_score,
            "excluded": len(self.excluded),
            "per_sense": [
                {
                    "sense_id": p.sense_id,
                    "ap": p.ap,
                    "f1": p.f1,
                    "predicted": list(p.predicted),
                    "gold": list(p.gold),
                }
                for p in self.per_sense
            ],
        }


def split_holdout(skb: Skb, cfg: EvalConfig) -> tuple[Skb, list[SkbRecord]]:
    """Seeded sample of ceil(fraction * senses) held-out records; rest is train."""
    sense_ids = sorted(skb.by_sense_id)
    if len(sense_ids) < 10:
        raise TooSmall(f"need at least 10 senses, have {len(sense_ids)}")
    k = math.ceil(cfg.holdout_fraction * len(sense_ids))
    rng = random.Random(cfg.seed)
    test_ids = set(rng.sample(sense_ids, k))
    train = Skb(inventory=skb.inventory)
    test = []
    for sid in sense_ids:
        record = skb.by_sense_id[sid]
        if sid in test_ids:
            test.append(record)
        else:
            insert_record(train, record)
    return train, test


def _unit(vec: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        return np.zeros_like(vec)
    return vec / norm


@dataclass
class _PredictContext:
    """Frozen train-side state shared by every prediction."""

    words: list[str]
    unit_matrix: np.ndarray
    sememe_sets: list[frozenset[str]]
    k: int
    c: float
    f1_ratio: float


def _make_context(train: Skb, emb: EmbeddingTable, cfg: EvalConfig) -> _PredictContext:
    words = sorted(w for w in train.by_headword if w in emb)
    if words:
        matrix = np.stack([_unit(emb[w]) for w in words])
    else:
        matrix = np.zeros((0, emb.dim))
    sets = []
    for w in words:
        pool: set[str] = set()
        for record in train.records_for(w):
            pool.update(record.sememes)
        sets.append(frozenset(pool))
    return _PredictContext(
        words=words,
        unit_matrix=matrix,
        sememe_sets=sets,
        k=cfg.k_neighbors,
        c=cfg.rank_decay_c,
        f1_ratio=cfg.f1_score_ratio,
    )


def _rank_sememes(
    ctx: _PredictContext, headword: str, target_vec: np.ndarray
) -> list[tuple[str, float]]:
    cosines = ctx.unit_matrix @ _unit(target_vec)
    order = sorted(
        (i for i, w in enumerate(ctx.words) if w != headword),
        key=lambda i: (-cosines[i], ctx.words[i]),
    )
    scores: dict[str, float] = {}
    for rank, i in enumerate(order[: ctx.k], start=1):
        weight = float(cosines[i]) * ctx.c**rank
        for s in ctx.sememe_sets[i]:
            scores[s] = scores.get(s, 0.0) + weight
    ranked = [(s, v) for s, v in scores.items() if v > 0.0]
    ranked.sort(key=lambda sv: (-sv[1], sv[0]))
    return ranked


def predict_sememes(
    target: SkbRecord, train: Skb, emb: EmbeddingTable, cfg: EvalConfig
) -> list[tuple[str, float]]:
    """Ranked (sememe, score) predictions for one held-out record."""
    if not len(train):
        raise EmptyTrain("train SKB is empty")
    if target.headword not in emb:
        raise NoEmbedding(f"no embedding for {target.headword!r}")
    ctx = _make_context(train, emb, cfg)
    return _rank_sememes(ctx, target.headword, emb[target.headword])


def average_precision(ranked: list[str], gold: set[str]) -> float:
    """AP of a ranking against a gold set; gold items never ranked contribute 0."""
    if not gold:
        raise EmptyGold("gold sememe set is empty")
    found = 0
    total = 0.0
    for rank, lemma in enumerate(ranked, start=1):
        if lemma in gold:
            found += 1
            total += found / rank
    return total / len(gold)


def select_predicted(ranked: list[tuple[str, float]], cfg: EvalConfig) -> set[str]:
    """Scores within f1_score_ratio of the best make the predicted set."""
    if not ranked:
        return set()
    cutoff = cfg.f1_score_ratio * ranked[0][1]
    return {s for s, v in ranked if v >= cutoff}


def f1_of(predicted: set[str], gold: set[str]) -> float:
    if not gold:
        raise EmptyGold("gold sememe set is empty")
    if not predicted:
        return 0.0
    tp = len(predicted & gold)
    if tp == 0:
        return 0.0
    precision = tp / len(predicted)
    recall = tp / len(gold)
    return 2 * precision * recall / (precision + recall)


def _eval_one(job, ctx: _PredictContext):
    sense_id, headword, gold, vec = job
    ranked = _rank_sememes(ctx, headword, vec)
    ap = average_precision([s for s, _ in ranked], set(gold))
    if ranked:
        cutoff = ctx.f1_ratio * ranked[0][1]
        predicted = {s for s, v in ranked if v >= cutoff}
    else:
        predicted = set()
    f1 = f1_of(predicted, set(gold))
    return PerSenseResult(
        sense_id=sense_id,
        ap=ap,
        f1=f1,
        predicted=tuple(sorted(predicted)),
        gold=tuple(sorted(gold)),
    )


def evaluate_consistency(
    skb: Skb, emb: EmbeddingTable, cfg: EvalConfig, jobs: int = 1
) -> EvalReport:
    """Split, predict every held-out sense, and average AP / F1.

    Held-out senses whose headword has no embedding are skipped and listed in
    the report.
    """
    train, test = split_holdout(skb, cfg)
    if not len(train):
        raise EmptyTrain("holdout left no train senses")
    ctx = _make_context(train, emb, cfg)
    excluded = [r.sense_id for r in test if r.headword not in emb]
    jobs_list = [
        (r.sense_id, r.headword, tuple(sorted(r.sememes)), emb[r.headword])
        for r in test
        if r.headword in emb
    ]
    if not jobs_list:
        raise NoUsableSenses("no held-out sense has an embedding")
    results = parallel_map(partial(_eval_one, ctx=ctx), jobs_list, jobs)
    results.sort(key=lambda p: p.sense_id)
    return EvalReport(
        map_score=sum(p.ap for p in results) / len(results),
        f1_score=sum(p.f1 for p in results) / len(results),
        per_sense=results,
        excluded=sorted(excluded),
    )
