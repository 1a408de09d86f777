"""Figure and table rendering for the reporting commands.

Every report is written twice: a PNG rendered with the Agg backend and a TSV
carrying the same numbers, so plots can be regenerated downstream.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .consistency import EvalReport
from .lexicon import Skb

_FIG_SIZE = (6.0, 4.0)
_BAR_COLOR = "#4878a8"


def _write_tsv(path: Path, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(str(v) for v in row) + "\n")


def _bar_figure(path: Path, labels: list[str], values: list[int], title: str, xlabel: str) -> None:
    fig, ax = plt.subplots(figsize=_FIG_SIZE)
    ax.bar(range(len(labels)), values, color=_BAR_COLOR)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=0)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("senses" if "sememe" in xlabel else "count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_sense_size_report(skb: Skb, outdir: str | Path, stem: str = "sememes_per_sense") -> list[Path]:
    """Histogram of sememe-set sizes across all SKB records."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sizes = Counter(len(r.sememes) for r in skb.by_sense_id.values())
    labels = sorted(sizes)
    rows = [(k, sizes[k]) for k in labels]
    tsv = outdir / f"{stem}.tsv"
    png = outdir / f"{stem}.png"
    _write_tsv(tsv, ["sememes", "senses"], rows)
    _bar_figure(png, [str(k) for k in labels], [sizes[k] for k in labels],
                "Sememes per sense", "sememes per sense")
    return [tsv, png]


def render_substitute_report(stats: dict, outdir: str | Path, stem: str = "substitutes") -> list[Path]:
    """Histogram of substitute counts per headword from substitute_stats()."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    histogram = stats["histogram"]
    labels = list(histogram)
    rows = [(k, histogram[k]) for k in labels]
    tsv = outdir / f"{stem}.tsv"
    png = outdir / f"{stem}.png"
    _write_tsv(tsv, ["substitutes", "words"], rows)
    _bar_figure(png, labels, [histogram[k] for k in labels],
                f"Substitutes per word (mean {stats['mean_substitutes']:.2f})",
                "substitutes per word")
    return [tsv, png]


def render_eval_report(report: EvalReport, outdir: str | Path, stem: str = "consistency") -> list[Path]:
    """Per-sense average-precision distribution for a consistency run."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tsv = outdir / f"{stem}.tsv"
    png = outdir / f"{stem}.png"
    _write_tsv(
        tsv,
        ["sense_id", "ap", "f1"],
        [(p.sense_id, repr(p.ap), repr(p.f1)) for p in report.per_sense],
    )
    fig, ax = plt.subplots(figsize=_FIG_SIZE)
    ax.hist([p.ap for p in report.per_sense], bins=20, range=(0.0, 1.0), color=_BAR_COLOR)
    ax.set_xlabel("average precision")
    ax.set_ylabel("senses")
    ax.set_title(f"Consistency (MAP {report.map_score:.3f}, F1 {report.f1_score:.3f})")
    fig.tight_layout()
    fig.savefig(png, dpi=120)
    plt.close(fig)
    return [tsv, png]
