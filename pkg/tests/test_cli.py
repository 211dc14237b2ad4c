from __future__ import annotations

import json

import numpy as np
import pytest

from morphoseed.cli import main
from morphoseed.embedding import load_model, save_vectors
from morphoseed.pipeline import load_config_file


@pytest.fixture(scope="module")
def artifacts(tmp_path_factory, fixture_dir):
    """One generate+train+compose CLI run shared by the command tests."""
    base = tmp_path_factory.mktemp("cli")
    corpus = base / "corpus"
    model = base / "model.vec"
    words = base / "words.vec"
    assert main([
        "-q", "generate", "--lexicon", str(fixture_dir), "--hierarchy", str(fixture_dir / "hierarchy.tsv"),
        "--threshold", "0.85", "--out", str(corpus),
    ]) == 0
    assert main([
        "-q", "train", "--corpus", str(corpus), "--dim", "20", "--window", "3",
        "--model", "cbow", "--epochs", "5", "--seed", "42", "--deterministic", "--out", str(model),
    ]) == 0
    assert main([
        "-q", "compose", "--lexicon", str(fixture_dir), "--model", str(model), "--out", str(words),
    ]) == 0
    return base


def test_validate_ok(fixture_dir, capsys):
    rc = main(["-q", "validate", "--lexicon", str(fixture_dir), "--hierarchy", str(fixture_dir / "hierarchy.tsv")])
    assert rc == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_broken_lexicon_exits_1(tmp_path, capsys):
    (tmp_path / "morphemes.tsv").write_text("树1_04_05\tnominal\t坏编码\n", encoding="utf-8")
    (tmp_path / "mcs.tsv").write_text("", encoding="utf-8")
    (tmp_path / "words.tsv").write_text("", encoding="utf-8")
    assert main(["-q", "validate", "--lexicon", str(tmp_path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_stats_tsv(fixture_dir, capsys):
    assert main(["-q", "stats", "--lexicon", str(fixture_dir)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("characters\t")
    assert "pattern.Modifier-Head\t" in out


def test_neighbors_output(fixture_dir, capsys):
    rc = main([
        "-q", "neighbors", "--hierarchy", str(fixture_dir / "hierarchy.tsv"),
        "--mc", "养1_11_02", "--threshold", "0.85",
    ])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split("\t") == ["养1_11_02", "1.000000"]
    assert {l.split("\t")[0] for l in lines} == {"养1_11_02", "浇1_04_03", "耕1_02_01"}


def test_generate_train_compose_artifacts(artifacts):
    report = json.loads((artifacts / "corpus" / "report.json").read_text())
    assert report["sentences_emitted"] > 0
    model = load_model(artifacts / "model.vec")
    assert model.dim == 20 and model.out_vectors is not None
    words = load_model(artifacts / "words.vec")
    assert len(words) > 200


def test_eval_and_sweep(artifacts, fixture_dir, tmp_path, capsys):
    words = artifacts / "words.vec"
    # a second "external" model over the same surfaces, from perturbed vectors
    base = load_model(words)
    rng = np.random.default_rng(0)
    noisy = base.vectors + rng.normal(scale=0.05, size=base.vectors.shape).astype(np.float32)
    external = tmp_path / "external.vec"
    save_vectors(base.tokens, noisy, external)

    rc = main([
        "-q", "eval", "--pairs", str(fixture_dir / "pairs.tsv"),
        "--internal", str(words), "--external", str(external), "--alpha", "0.35",
    ])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert {"internal", "external", "hybrid"} <= set(report)
    assert report["hybrid"]["alpha"] == 0.35

    sweep_csv = tmp_path / "sweep.csv"
    rc = main([
        "-q", "sweep", "--pairs", str(fixture_dir / "pairs.tsv"),
        "--internal", str(words), "--external", str(external),
        "--grid", "0:1:0.05", "--out", str(sweep_csv),
    ])
    assert rc == 0
    lines = sweep_csv.read_text().strip().splitlines()
    assert len(lines) == 22  # header + 21 grid points


def test_nearest_and_syntagmatic(artifacts, fixture_dir, capsys):
    rc = main([
        "-q", "nearest", "--model", str(artifacts / "model.vec"),
        "--lexicon", str(fixture_dir), "--mc", "养1_11_02", "-k", "3",
    ])
    assert rc == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 3
    rc = main([
        "-q", "syntagmatic", "--model", str(artifacts / "model.vec"),
        "--lexicon", str(fixture_dir), "--mc", "马1_03_01", "-k", "3",
    ])
    assert rc == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 3


def test_project_csv(artifacts, tmp_path, lexicon, capsys):
    model = load_model(artifacts / "model.vec")
    tokens = [m for m in sorted(lexicon.mcs) if m in model.index][:30]
    token_file = tmp_path / "tokens.txt"
    token_file.write_text("\n".join(tokens) + "\n", encoding="utf-8")
    out = tmp_path / "proj.csv"
    rc = main(["-q", "project", "--model", str(artifacts / "model.vec"), "--tokens", str(token_file), "--out", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "token,x,y" and len(lines) == 31


def test_oov_query_is_runtime_failure(artifacts, fixture_dir, capsys):
    rc = main([
        "-q", "nearest", "--model", str(artifacts / "model.vec"),
        "--lexicon", str(fixture_dir), "--mc", "无1_01_01", "-k", "3",
    ])
    assert rc == 2


def test_missing_file_is_validation_failure(capsys):
    assert main(["-q", "stats", "--lexicon", "/nonexistent/dir"]) == 1


def test_config_file_parsing(tmp_path, fixture_dir):
    cfg = tmp_path / "run.conf"
    cfg.write_text(
        "# demo config\n"
        f"lexicon = {fixture_dir}\n"
        f"hierarchy = {fixture_dir / 'hierarchy.tsv'}\n"
        "threshold = 0.85\n"
        "dim = 12\n"
        "deterministic = true\n",
        encoding="utf-8",
    )
    values = load_config_file(cfg)
    assert values["dim"] == 12 and values["threshold"] == 0.85 and values["deterministic"] is True
    cfg.write_text("unknown_key = 1\n", encoding="utf-8")
    from morphoseed.errors import ConfigError

    with pytest.raises(ConfigError):
        load_config_file(cfg)


def test_pipeline_flags_override_config(tmp_path, fixture_dir, capsys):
    cfg = tmp_path / "run.conf"
    cfg.write_text(
        f"lexicon = {fixture_dir}\n"
        f"hierarchy = {fixture_dir / 'hierarchy.tsv'}\n"
        f"out = {tmp_path / 'from_config'}\n"
        "epochs = 1\n"
        "dim = 4\n",
        encoding="utf-8",
    )
    out = tmp_path / "from_flag"
    rc = main(["-q", "pipeline", "--config", str(cfg), "--out", str(out)])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    assert (out / "model.vec").is_file()
    assert not (tmp_path / "from_config").exists()
    config = json.loads((out / "config.json").read_text())
    assert config["dim"] == 4 and config["epochs"] == 1


def test_pipeline_stage_skipping_and_force(tmp_path, fixture_dir, capsys):
    out = tmp_path / "run"
    args = [
        "-q", "pipeline", "--lexicon", str(fixture_dir),
        "--hierarchy", str(fixture_dir / "hierarchy.tsv"),
        "--pairs", str(fixture_dir / "pairs.tsv"),
        "--out", str(out), "--epochs", "1", "--dim", "4",
    ]
    assert main(args) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["stages"]["train"] == "ok"
    assert main(args) == 0
    second = json.loads(capsys.readouterr().out)
    assert second["stages"]["generate"] == "skipped"
    assert second["stages"]["train"] == "skipped"
    assert second["stages"]["compose"] == "skipped"
    assert main(args + ["--force"]) == 0
    third = json.loads(capsys.readouterr().out)
    assert third["stages"]["train"] == "ok"


def test_pipeline_missing_hierarchy_fails_before_generation(tmp_path, fixture_dir):
    out = tmp_path / "run"
    rc = main([
        "-q", "pipeline", "--lexicon", str(fixture_dir),
        "--hierarchy", str(tmp_path / "missing.tsv"), "--out", str(out),
    ])
    assert rc == 1
    assert not (out / "corpus").exists()
