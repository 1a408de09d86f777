import json
import shutil
import subprocess
import sys
import time
from pathlib import Path

import pytest

SKB_FORGE = shutil.which("skb-forge")
BASE = [SKB_FORGE] if SKB_FORGE else [sys.executable, "-m", "skbforge.cli"]


def run_cli(*args, env=None):
    return subprocess.run(
        BASE + [str(a) for a in args], capture_output=True, text=True, env=env
    )


@pytest.fixture(scope="module")
def workdir(tmp_path_factory, gloss_dir):
    """Run the whole pipeline once on the gloss fixture; tests share the artifacts."""
    wd = tmp_path_factory.mktemp("cli")
    t0 = time.time()
    steps = [
        ("build-sememe-set", "--dict", gloss_dir / "dict.jsonl", "--cdv", gloss_dir / "cdv.txt",
         "--stopwords", gloss_dir / "stopwords.txt", "--negators", gloss_dir / "negators.txt",
         "--out", wd / "inventory.json"),
        ("annotate", "--dict", gloss_dir / "dict.jsonl", "--inventory", wd / "inventory.json",
         "--conllu", gloss_dir / "parses.conllu", "--out", wd / "skb.jsonl",
         "--diagnostics", wd / "diag.jsonl"),
        ("distill", "--skb", wd / "skb.jsonl", "--conllu", gloss_dir / "parses.conllu",
         "--t", 1, "--m", 4, "--out", wd / "skb_distilled.jsonl"),
        ("eval-consistency", "--skb", wd / "skb.jsonl", "--embeddings",
         gloss_dir / "embeddings.txt", "--seed", 7, "--out", wd / "eval.json"),
        ("stats", "--skb", wd / "skb_distilled.jsonl", "--substitutes"),
    ]
    for step in steps:
        proc = run_cli(*step)
        assert proc.returncode == 0, (step[0], proc.stderr)
    elapsed = time.time() - t0
    (wd / "elapsed.txt").write_text(str(elapsed))
    return wd


def test_pipeline_completes_quickly(workdir):
    assert float((workdir / "elapsed.txt").read_text()) < 10.0


def test_build_sememe_set_deterministic(workdir, gloss_dir, tmp_path):
    out2 = tmp_path / "inventory.json"
    proc = run_cli("build-sememe-set", "--dict", gloss_dir / "dict.jsonl",
                   "--cdv", gloss_dir / "cdv.txt",
                   "--stopwords", gloss_dir / "stopwords.txt",
                   "--negators", gloss_dir / "negators.txt", "--out", out2)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "inventory.json").read_bytes()


def test_missing_required_flag_is_usage_error(gloss_dir):
    proc = run_cli("build-sememe-set", "--dict", gloss_dir / "dict.jsonl",
                   "--out", "whatever.json")
    assert proc.returncode == 2


def test_validation_error_exit_code(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"headword": "x"}\n', encoding="utf-8")
    proc = run_cli("stats", "--skb", bad)
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_io_error_exit_code(workdir):
    proc = run_cli("export", "--skb", workdir / "skb.jsonl",
                   "--out", workdir / "no_such_dir" / "out.jsonl")
    assert proc.returncode == 1


def test_annotate_normalizer_agrees_with_sidecar(workdir, gloss_dir, tmp_path):
    """Extraction from raw definitions equals extraction from the parse sidecar."""
    out2 = tmp_path / "skb_nosidecar.jsonl"
    proc = run_cli("annotate", "--dict", gloss_dir / "dict.jsonl",
                   "--inventory", workdir / "inventory.json", "--out", out2)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "skb.jsonl").read_bytes()


def test_annotate_jobs_invariant(workdir, gloss_dir, tmp_path):
    out2 = tmp_path / "skb_jobs8.jsonl"
    proc = run_cli("annotate", "--dict", gloss_dir / "dict.jsonl",
                   "--inventory", workdir / "inventory.json",
                   "--conllu", gloss_dir / "parses.conllu",
                   "--jobs", 8, "--out", out2)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "skb.jsonl").read_bytes()


def test_jobs_env_var_default(workdir, gloss_dir, tmp_path):
    import os

    out2 = tmp_path / "skb_envjobs.jsonl"
    env = dict(os.environ, SKB_FORGE_JOBS="3")
    proc = run_cli("annotate", "--dict", gloss_dir / "dict.jsonl",
                   "--inventory", workdir / "inventory.json",
                   "--conllu", gloss_dir / "parses.conllu", "--out", out2, env=env)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "skb.jsonl").read_bytes()


def test_distill_beautiful_worked_example(beautiful_dir, tmp_path):
    inv = tmp_path / "inv.json"
    skb = tmp_path / "skb.jsonl"
    distilled = tmp_path / "skb_star.jsonl"
    assert run_cli("build-sememe-set", "--dict", beautiful_dir / "dict.jsonl",
                   "--cdv", beautiful_dir / "cdv.txt",
                   "--stopwords", beautiful_dir / "stopwords.txt",
                   "--negators", beautiful_dir / "negators.txt",
                   "--top-trim", 0, "--bottom-trim", 0,
                   "--out", inv).returncode == 0
    assert run_cli("annotate", "--dict", beautiful_dir / "dict.jsonl",
                   "--inventory", inv, "--conllu", beautiful_dir / "parses.conllu",
                   "--out", skb).returncode == 0
    assert run_cli("distill", "--skb", skb, "--conllu", beautiful_dir / "parses.conllu",
                   "--t", 1, "--m", 4, "--out", distilled).returncode == 0
    records = {}
    with open(distilled, encoding="utf-8") as fh:
        fh.readline()
        for line in fh:
            obj = json.loads(line)
            records[obj["sense_id"]] = obj["sememes"]
    assert records["beautiful%adj%1"] == ["attractive"]
    assert records["beautiful%adj%2"] == ["give", "good", "pleasure"]


def test_eval_seeded_rerun_identical(workdir, gloss_dir, tmp_path):
    out2 = tmp_path / "eval2.json"
    proc = run_cli("eval-consistency", "--skb", workdir / "skb.jsonl",
                   "--embeddings", gloss_dir / "embeddings.txt",
                   "--seed", 7, "--out", out2)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "eval.json").read_bytes()
    assert "MAP" in proc.stderr  # one-line human summary


def test_eval_jobs_invariant(workdir, gloss_dir, tmp_path):
    out2 = tmp_path / "eval_jobs.json"
    proc = run_cli("eval-consistency", "--skb", workdir / "skb.jsonl",
                   "--embeddings", gloss_dir / "embeddings.txt",
                   "--seed", 7, "--jobs", 8, "--out", out2)
    assert proc.returncode == 0
    assert out2.read_bytes() == (workdir / "eval.json").read_bytes()


def test_eval_report_schema(workdir):
    report = json.loads((workdir / "eval.json").read_text())
    assert set(report) == {"map", "f1", "excluded", "per_sense"}
    assert 0.0 <= report["map"] <= 1.0
    assert 0.0 <= report["f1"] <= 1.0
    for item in report["per_sense"]:
        assert set(item) == {"sense_id", "ap", "f1", "predicted", "gold"}


def test_substitutes_command(workdir):
    proc = run_cli("substitutes", "water", "--skb", workdir / "skb_distilled.jsonl")
    assert proc.returncode == 0
    out_lines = [ln for ln in proc.stdout.splitlines() if ln]
    assert out_lines == sorted(out_lines)
    proc2 = run_cli("substitutes", "no_such_word_here", "--skb", workdir / "skb_distilled.jsonl")
    assert proc2.returncode == 2


def test_stats_json_and_substitute_gap(workdir):
    full = json.loads(run_cli("stats", "--skb", workdir / "skb.jsonl",
                              "--substitutes").stdout)
    dist = json.loads(run_cli("stats", "--skb", workdir / "skb_distilled.jsonl",
                              "--substitutes").stdout)
    assert full["senses"] == dist["senses"]
    assert dist["avg_sememes_per_sense"] <= full["avg_sememes_per_sense"]
    assert dist["substitutes"]["mean"] > full["substitutes"]["mean"]
    assert set(dist["substitutes"]["histogram"]) == {"0", "1", "2-5", "6-20", ">20"}


def test_stats_rerun_byte_identical(workdir):
    a = run_cli("stats", "--skb", workdir / "skb.jsonl", "--substitutes")
    b = run_cli("stats", "--skb", workdir / "skb.jsonl", "--substitutes")
    assert a.stdout == b.stdout


def test_export_round_trip_byte_stable(workdir, tmp_path):
    out1 = tmp_path / "e1.jsonl"
    out2 = tmp_path / "e2.jsonl"
    assert run_cli("export", "--skb", workdir / "skb.jsonl", "--out", out1).returncode == 0
    assert run_cli("export", "--skb", out1, "--out", out2).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert out1.read_bytes() == (workdir / "skb.jsonl").read_bytes()


def test_export_effective_inventory_shrinks(tmp_path):
    from skbforge.formats import write_skb_path
    from skbforge.lexicon import SememeInventory, Skb, SkbRecord, insert_record

    src = tmp_path / "src.jsonl"
    skb = Skb(inventory=SememeInventory(counts={"used1": 2, "unused1": 5}))
    insert_record(skb, SkbRecord(headword="w", pos="noun", sense_id="s1",
                                 sememes=frozenset({"used1"})))
    write_skb_path(skb, src)
    out = tmp_path / "eff.jsonl"
    assert run_cli("export", "--skb", src, "--out", out,
                   "--effective-inventory").returncode == 0
    header = json.loads(out.read_text().splitlines()[0])
    assert [item["lemma"] for item in header["inventory"]] == ["used1"]
    assert all(item["used"] for item in header["inventory"])


def test_config_file_with_flag_override(workdir, gloss_dir, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("t = 1\nm = 4\n", encoding="utf-8")
    out_cfg = tmp_path / "d1.jsonl"
    out_flags = tmp_path / "d2.jsonl"
    assert run_cli("distill", "--skb", workdir / "skb.jsonl",
                   "--conllu", gloss_dir / "parses.conllu",
                   "--config", cfg, "--out", out_cfg).returncode == 0
    assert out_cfg.read_bytes() == (workdir / "skb_distilled.jsonl").read_bytes()
    # flag overrides the config value: a huge t keeps everything
    assert run_cli("distill", "--skb", workdir / "skb.jsonl",
                   "--conllu", gloss_dir / "parses.conllu",
                   "--config", cfg, "--t", 999999, "--out", out_flags).returncode == 0
    stats_in = json.loads(run_cli("stats", "--skb", workdir / "skb.jsonl").stdout)
    stats_out = json.loads(run_cli("stats", "--skb", out_flags).stdout)
    assert stats_in["avg_sememes_per_sense"] == stats_out["avg_sememes_per_sense"]


def test_manifest_emitted_and_digests_stable(workdir, gloss_dir, tmp_path):
    m1 = tmp_path / "m1.json"
    m2 = tmp_path / "m2.json"
    for m in (m1, m2):
        proc = run_cli("stats", "--skb", workdir / "skb.jsonl", "--manifest", m)
        assert proc.returncode == 0
        assert "manifest:" in proc.stderr
    d1, d2 = json.loads(m1.read_text()), json.loads(m2.read_text())
    assert d1["config_digest"] == d2["config_digest"]
    assert d1["inputs"] == d2["inputs"]


def test_inputs_never_mutated(workdir, gloss_dir):
    import hashlib

    digests = {
        p: hashlib.sha256(Path(p).read_bytes()).hexdigest()
        for p in sorted(gloss_dir.iterdir())
    }
    run_cli("stats", "--skb", workdir / "skb.jsonl", "--substitutes")
    run_cli("eval-consistency", "--skb", workdir / "skb.jsonl",
            "--embeddings", gloss_dir / "embeddings.txt", "--seed", 1,
            "--out", workdir / "scratch_eval.json")
    for p, digest in digests.items():
        assert hashlib.sha256(Path(p).read_bytes()).hexdigest() == digest


def test_diagnostics_file_written(workdir):
    lines = [json.loads(ln) for ln in (workdir / "diag.jsonl").read_text().splitlines()]
    assert len(lines) == 3
    assert all("warning" in d and "sense_id" in d for d in lines)


def test_bad_config_value_is_validation_error(workdir, gloss_dir):
    proc = run_cli("distill", "--skb", workdir / "skb.jsonl",
                   "--conllu", gloss_dir / "parses.conllu",
                   "--t", -5, "--out", workdir / "never.jsonl")
    assert proc.returncode == 2
    proc2 = run_cli("eval-consistency", "--skb", workdir / "skb.jsonl",
                    "--embeddings", gloss_dir / "embeddings.txt",
                    "--holdout", 1.5, "--out", workdir / "never.json")
    assert proc2.returncode == 2
