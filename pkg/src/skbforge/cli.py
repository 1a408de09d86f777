"""skb-forge: one executable per pipeline stage.

Machine output goes to stdout or ``--out`` files; progress, summaries, and the
run manifest go to stderr.  Exit codes: 0 success, 1 I/O failure, 2 validation
failure.  Reruns on identical inputs and flags are byte-identical, including
the seeded consistency evaluation and any ``--jobs`` setting.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from . import __version__
from .consistency import EvalConfig, evaluate_consistency
from .errors import SkbError
from .extract import DistillConfig, build_skb, distill_skb
from .formats import (
    parse_conllu_path,
    parse_dictionary_path,
    parse_embeddings_path,
    parse_wordlist_path,
    read_inventory_path,
    read_skb_path,
    write_diagnostics,
    write_inventory_path,
    write_skb_path,
)
from .lexicon import compute_stats, effective_inventory, make_lemma, make_pos
from .manifest import RunManifest
from .parallel import default_jobs
from .sememe_set import SememeSetConfig, build_sememe_set
from .substitution import build_index, substitute_stats, substitutes


def _emit_manifest(manifest: RunManifest, path: str | None) -> None:
    click.echo("manifest: " + json.dumps(manifest.data, sort_keys=True), err=True)
    if path:
        Path(path).write_text(manifest.as_json() + "\n", encoding="utf-8")


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _write_diag(diagnostics: list[dict], path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            write_diagnostics(diagnostics, fh)
    elif diagnostics:
        click.echo(f"{len(diagnostics)} per-sense warning(s); pass --diagnostics to keep them", err=True)


def _load_config_file(path: str | None) -> dict:
    """key = value lines; '#' comments. Flags override config values."""
    if not path:
        return {}
    config = {}
    for n, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise SkbError(f"config line {n}: expected 'key = value'")
        config[key.strip().replace("-", "_")] = value.strip()
    return config


def _pick(flag_value, config: dict, key: str, default, cast):
    if flag_value is not None:
        return flag_value
    if key in config:
        return cast(config[key])
    return default


def _run(fn):
    """Map typed validation errors to exit 2 and I/O errors to exit 1."""
    try:
        fn()
    except (SkbError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        raise SystemExit(2)
    except OSError as e:
        click.echo(f"i/o error: {e}", err=True)
        raise SystemExit(1)


jobs_option = click.option(
    "--jobs",
    type=int,
    default=None,
    help="Worker count for parallel stages (default: $SKB_FORGE_JOBS or 1). Output is independent of this.",
)
config_option = click.option("--config", "config_path", type=click.Path(exists=False), default=None,
                             help="Optional key=value config file; flags take precedence.")
manifest_option = click.option("--manifest", "manifest_path", type=click.Path(), default=None,
                               help="Also write the run manifest to this file.")


@click.group()
@click.version_option(version=__version__, prog_name="skb-forge")
def main():
    """Build, distill, evaluate, and query sememe knowledge bases."""


@main.command("build-sememe-set")
@click.option("--dict", "dict_path", required=True, type=click.Path(exists=True))
@click.option("--cdv", "cdv_path", required=True, type=click.Path(exists=True))
@click.option("--stopwords", "stopwords_path", type=click.Path(exists=True), default=None)
@click.option("--negators", "negators_path", type=click.Path(exists=True), default=None)
@click.option("--top-trim", type=float, default=None, help="Fraction of most frequent lemmas to drop (default 0.01).")
@click.option("--bottom-trim", type=float, default=None, help="Fraction of least frequent lemmas to drop (default 0.10).")
@click.option("--out", "out_path", required=True, type=click.Path())
@config_option
@manifest_option
def cmd_build_sememe_set(dict_path, cdv_path, stopwords_path, negators_path,
                         top_trim, bottom_trim, out_path, config_path, manifest_path):
    """Derive the sememe inventory from a CDV and a dictionary."""

    def body():
        config = _load_config_file(config_path)
        cfg = SememeSetConfig(
            top_trim_fraction=_pick(top_trim, config, "top_trim", 0.01, float),
            bottom_trim_fraction=_pick(bottom_trim, config, "bottom_trim", 0.10, float),
            stopwords=parse_wordlist_path(stopwords_path, "stopword")
            if stopwords_path else SememeSetConfig().stopwords,
            negators=parse_wordlist_path(negators_path, "negator")
            if negators_path else SememeSetConfig().negators,
        )
        manifest = RunManifest("build-sememe-set", {
            "top_trim": cfg.top_trim_fraction, "bottom_trim": cfg.bottom_trim_fraction,
        })
        manifest.add_input("dict", dict_path)
        manifest.add_input("cdv", cdv_path)
        if stopwords_path:
            manifest.add_input("stopwords", stopwords_path)
        if negators_path:
            manifest.add_input("negators", negators_path)
        manifest.start("build")
        entries = parse_dictionary_path(dict_path)
        cdv = parse_wordlist_path(cdv_path, "cdv")
        inventory = build_sememe_set(entries, cdv, cfg)
        manifest.stop("build")
        write_inventory_path(inventory, out_path)
        click.echo(f"wrote {len(inventory)} sememes to {out_path}", err=True)
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("annotate")
@click.option("--dict", "dict_path", required=True, type=click.Path(exists=True))
@click.option("--inventory", "inventory_path", required=True, type=click.Path(exists=True))
@click.option("--conllu", "conllu_path", type=click.Path(exists=True), default=None,
              help="Token-annotation sidecar; falls back to the rule normalizer when absent.")
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--diagnostics", "diagnostics_path", type=click.Path(), default=None)
@jobs_option
@config_option
@manifest_option
def cmd_annotate(dict_path, inventory_path, conllu_path, out_path,
                 diagnostics_path, jobs, config_path, manifest_path):
    """Extract per-sense sememes and write the full SKB."""

    def body():
        config = _load_config_file(config_path)
        n_jobs = _pick(jobs, config, "jobs", default_jobs(), int)
        manifest = RunManifest("annotate", {"jobs_invariant": True})
        manifest.add_input("dict", dict_path)
        manifest.add_input("inventory", inventory_path)
        if conllu_path:
            manifest.add_input("conllu", conllu_path)
        entries = parse_dictionary_path(dict_path)
        inventory = read_inventory_path(inventory_path)
        parses = parse_conllu_path(conllu_path) if conllu_path else None
        diagnostics: list[dict] = []
        manifest.start("extract")
        skb = build_skb(entries, inventory, parses=parses, diagnostics=diagnostics, jobs=n_jobs)
        manifest.stop("extract")
        write_skb_path(skb, out_path)
        _write_diag(diagnostics, diagnostics_path)
        click.echo(f"annotated {len(skb)} senses -> {out_path}", err=True)
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("distill")
@click.option("--skb", "skb_path", required=True, type=click.Path(exists=True))
@click.option("--conllu", "conllu_path", required=True, type=click.Path(exists=True))
@click.option("--t", type=int, default=None, help="Importance-score slack below the per-sense maximum (default 1).")
@click.option("--m", type=int, default=None, help="Minimum sememe count for a sense to be distilled (default 4).")
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--diagnostics", "diagnostics_path", type=click.Path(), default=None)
@jobs_option
@config_option
@manifest_option
def cmd_distill(skb_path, conllu_path, t, m, out_path, diagnostics_path,
                jobs, config_path, manifest_path):
    """Prune unimportant sememes using dependency-parse importance scores."""

    def body():
        config = _load_config_file(config_path)
        cfg = DistillConfig(
            t=_pick(t, config, "t", 1, int),
            m=_pick(m, config, "m", 4, int),
        )
        n_jobs = _pick(jobs, config, "jobs", default_jobs(), int)
        manifest = RunManifest("distill", {"t": cfg.t, "m": cfg.m})
        manifest.add_input("skb", skb_path)
        manifest.add_input("conllu", conllu_path)
        skb = read_skb_path(skb_path)
        parses = parse_conllu_path(conllu_path)
        diagnostics: list[dict] = []
        manifest.start("distill")
        distilled = distill_skb(skb, parses, cfg, diagnostics=diagnostics, jobs=n_jobs)
        manifest.stop("distill")
        write_skb_path(distilled, out_path)
        _write_diag(diagnostics, diagnostics_path)
        before = compute_stats(skb)
        after = compute_stats(distilled)
        click.echo(
            f"avg sememes per sense {float(before.avg_sememes_per_sense):.2f} -> "
            f"{float(after.avg_sememes_per_sense):.2f}; "
            f"effective sememes {before.sememe_count} -> {after.sememe_count}",
            err=True,
        )
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("eval-consistency")
@click.option("--skb", "skb_path", required=True, type=click.Path(exists=True))
@click.option("--embeddings", "emb_path", required=True, type=click.Path(exists=True))
@click.option("--holdout", type=float, default=None, help="Held-out fraction of senses (default 0.10).")
@click.option("--seed", type=int, default=None, help="Holdout sampling seed (default 0).")
@click.option("--k", type=int, default=None, help="Neighbor count (default 100).")
@click.option("--c", type=float, default=None, help="Rank decay in (0,1) (default 0.8).")
@click.option("--f1-ratio", type=float, default=None, help="Score-over-max cutoff for the predicted set (default 0.5).")
@click.option("--out", "out_path", type=click.Path(), default=None, help="Report JSON path (default: stdout).")
@click.option("--report-dir", "report_dir", type=click.Path(), default=None,
              help="Also render figures and TSV tables into this directory.")
@jobs_option
@config_option
@manifest_option
def cmd_eval_consistency(skb_path, emb_path, holdout, seed, k, c, f1_ratio,
                         out_path, report_dir, jobs, config_path, manifest_path):
    """Hold out senses, predict their sememes back, report MAP and F1."""

    def body():
        config = _load_config_file(config_path)
        cfg = EvalConfig(
            holdout_fraction=_pick(holdout, config, "holdout", 0.10, float),
            seed=_pick(seed, config, "seed", 0, int),
            k_neighbors=_pick(k, config, "k", 100, int),
            rank_decay_c=_pick(c, config, "c", 0.8, float),
            f1_score_ratio=_pick(f1_ratio, config, "f1_ratio", 0.5, float),
        )
        n_jobs = _pick(jobs, config, "jobs", default_jobs(), int)
        manifest = RunManifest("eval-consistency", {
            "holdout": cfg.holdout_fraction, "seed": cfg.seed, "k": cfg.k_neighbors,
            "c": cfg.rank_decay_c, "f1_ratio": cfg.f1_score_ratio,
        })
        manifest.add_input("skb", skb_path)
        manifest.add_input("embeddings", emb_path)
        skb = read_skb_path(skb_path)
        emb = parse_embeddings_path(emb_path)
        manifest.start("evaluate")
        report = evaluate_consistency(skb, emb, cfg, jobs=n_jobs)
        manifest.stop("evaluate")
        payload = _dump_json(report.as_dict()) + "\n"
        if out_path:
            Path(out_path).write_text(payload, encoding="utf-8")
        else:
            click.echo(payload, nl=False)
        if report_dir:
            from .report import render_eval_report

            for p in render_eval_report(report, report_dir):
                click.echo(f"wrote {p}", err=True)
        click.echo(
            f"MAP {report.map_score:.4f}  F1 {report.f1_score:.4f}  "
            f"({len(report.per_sense)} senses scored, {len(report.excluded)} excluded)",
            err=True,
        )
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("substitutes")
@click.argument("word")
@click.option("--skb", "skb_path", required=True, type=click.Path(exists=True))
@click.option("--pos", default=None, help="Restrict the query word's senses to this POS tag.")
@click.option("--any-pos", is_flag=True, help="Ignore POS compatibility between substitute pairs.")
@manifest_option
def cmd_substitutes(word, skb_path, pos, any_pos, manifest_path):
    """Print the word's sememe-set substitutes, one per line."""

    def body():
        manifest = RunManifest("substitutes", {"word": word, "pos": pos, "any_pos": any_pos})
        manifest.add_input("skb", skb_path)
        skb = read_skb_path(skb_path)
        index = build_index(skb)
        result = substitutes(
            index, skb, make_lemma(word),
            pos=make_pos(pos) if pos else None,
            require_pos_match=not any_pos,
        )
        for w in sorted(result):
            click.echo(w)
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("stats")
@click.option("--skb", "skb_path", required=True, type=click.Path(exists=True))
@click.option("--substitutes", "with_substitutes", is_flag=True,
              help="Include mean substitute count and its histogram.")
@click.option("--report-dir", "report_dir", type=click.Path(), default=None,
              help="Render histogram figures and TSV tables into this directory.")
@manifest_option
def cmd_stats(skb_path, with_substitutes, report_dir, manifest_path):
    """Print SKB statistics as JSON."""

    def body():
        manifest = RunManifest("stats", {"substitutes": with_substitutes})
        manifest.add_input("skb", skb_path)
        skb = read_skb_path(skb_path)
        stats = compute_stats(skb)
        out = stats.as_dict()
        out["inventory_sememes"] = len(skb.inventory)
        sub_stats = None
        if with_substitutes:
            sub_stats = substitute_stats(build_index(skb), skb)
            out["substitutes"] = {
                "mean": sub_stats["mean_substitutes"],
                "histogram": sub_stats["histogram"],
            }
        click.echo(_dump_json(out))
        if report_dir:
            from .report import render_sense_size_report, render_substitute_report

            written = render_sense_size_report(skb, report_dir)
            if sub_stats is not None:
                written += render_substitute_report(sub_stats, report_dir)
            for p in written:
                click.echo(f"wrote {p}", err=True)
        _emit_manifest(manifest, manifest_path)

    _run(body)


@main.command("export")
@click.option("--skb", "skb_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--effective-inventory", "effective", is_flag=True,
              help="Drop inventory sememes no record uses.")
@manifest_option
def cmd_export(skb_path, out_path, effective, manifest_path):
    """Validate and re-serialize an SKB export canonically."""

    def body():
        manifest = RunManifest("export", {"effective_inventory": effective})
        manifest.add_input("skb", skb_path)
        skb = read_skb_path(skb_path)
        if effective:
            skb.inventory = effective_inventory(skb)
        write_skb_path(skb, out_path)
        click.echo(f"wrote {len(skb)} records -> {out_path}", err=True)
        _emit_manifest(manifest, manifest_path)

    _run(body)


if __name__ == "__main__":
    main()
