import json
import subprocess
import sys

import pandas as pd
import pytest
from click.testing import CliRunner

from counterplay.core.management import cli
from counterplay.datasets.io import load_folds, load_matches, load_roster
from counterplay.evaluation.report import REPORT_COLUMNS
from counterplay.rating.serialization import load_state


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv("COUNTERPLAY_CONFIG", raising=False)
    monkeypatch.delenv("COUNTERPLAY_JOBS", raising=False)
    return CliRunner()


@pytest.fixture
def rps_csv(runner, tmp_path):
    out = tmp_path / "rps.csv"
    result = runner.invoke(cli, ["generate", "rps", "--n", "300", "--seed", "7", "--out", str(out)])
    assert result.exit_code == 0, result.output
    return out


def test_help_lists_every_command(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for name in ("generate", "split", "convert", "train", "evaluate", "reproduce", "inspect"):
        assert name in result.output


@pytest.mark.integration
def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "counterplay", "--help"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "reproduce" in result.stdout


def test_generate_writes_matches_roster_and_metadata(rps_csv, tmp_path):
    frame = pd.read_csv(rps_csv, dtype=str)
    assert list(frame.columns) == ["player_i", "player_j", "outcome"]
    assert len(frame) == 300
    assert load_roster(tmp_path / "rps.players.csv") == ["rock", "paper", "scissors"]
    meta = json.loads((tmp_path / "rps.meta.json").read_text())
    assert meta["generator"] == "rps"
    assert meta["n_matches"] == 300
    assert meta["seed"] == 7
    assert meta["n_players"] == 3


def test_generate_is_byte_identical_across_runs(runner, rps_csv, tmp_path):
    again = tmp_path / "again.csv"
    result = runner.invoke(cli, ["generate", "rps", "--n", "300", "--seed", "7", "--out", str(again)])
    assert result.exit_code == 0
    assert again.read_bytes() == rps_csv.read_bytes()


def test_generate_acg_records_every_team(runner, tmp_path):
    out = tmp_path / "acg.csv"
    result = runner.invoke(cli, ["generate", "acg", "--n", "50", "--seed", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads((tmp_path / "acg.meta.json").read_text())["n_players"] == 1140


def test_generate_unknown_generator_fails_with_config_error(runner, tmp_path):
    result = runner.invoke(cli, ["generate", "chess", "--out", str(tmp_path / "x.csv")])
    assert result.exit_code == 1
    assert "chess" in result.output


def test_generate_unwritable_path_is_an_io_error(runner, tmp_path):
    out = tmp_path / "missing-dir" / "rps.csv"
    result = runner.invoke(cli, ["generate", "rps", "--n", "10", "--out", str(out)])
    assert result.exit_code == 2
    assert "missing-dir" in result.output


def test_split_writes_a_fold_file(runner, rps_csv, tmp_path):
    out = tmp_path / "folds.csv"
    result = runner.invoke(cli, ["split", "--dataset", str(rps_csv), "--k", "3", "--seed", "2", "--out", str(out)])
    assert result.exit_code == 0, result.output
    split = load_folds(out, n_matches=300)
    assert split.k == 3
    assert sorted(split.sizes()) == [100, 100, 100]


def test_convert_maps_export_columns(runner, tmp_path):
    export = tmp_path / "export.csv"
    export.write_text("home,away,won\nAztecs,Britons,Aztecs\nBritons,Celts,\nCelts,Aztecs,Aztecs\n")
    out = tmp_path / "civs.csv"
    result = runner.invoke(
        cli,
        ["convert", str(export), "--first", "home", "--second", "away", "--winner", "won", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    dataset = load_matches(out, tmp_path / "civs.players.csv")
    assert dataset.player_names == ["Aztecs", "Britons", "Celts"]
    assert dataset.outcome.tolist() == [1.0, 0.5, 0.0]


def test_evaluate_writes_json_report(runner, rps_csv, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        cli,
        [
            "evaluate", "--model", "elo", "--k", "16", "--dataset", str(rps_csv),
            "--folds", "3", "--epochs", "2", "--seed", "0", "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    doc = json.loads(out.read_text())
    assert doc["model"] == "elo"
    assert doc["M/K"] == "K=16"
    assert doc["dataset"] == "rps"
    assert len(doc["per_fold_test"]) == 3
    assert doc["meta"]["config"]["k_factor"] == 16


@pytest.mark.parametrize("model", ["elo-rcc", "melo2"])
def test_evaluate_report_is_byte_identical_across_runs(runner, rps_csv, tmp_path, model):
    out = tmp_path / "r.json"
    args = [
        "evaluate", "--model", model, "--dataset", str(rps_csv),
        "--folds", "2", "--epochs", "2", "--seed", "3", "--out", str(out),
    ]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    first = out.read_bytes()
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert out.read_bytes() == first


def test_evaluate_with_fold_file_and_csv_report(runner, rps_csv, tmp_path):
    folds = tmp_path / "folds.csv"
    runner.invoke(cli, ["split", "--dataset", str(rps_csv), "--k", "2", "--out", str(folds)])
    out = tmp_path / "report.csv"
    result = runner.invoke(
        cli,
        [
            "evaluate", "--model", "elo-rcc", "--m", "3", "--dataset", str(rps_csv),
            "--folds", str(folds), "--epochs", "1", "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    frame = pd.read_csv(out)
    assert list(frame.columns) == REPORT_COLUMNS
    assert frame.loc[0, "M/K"] == "M=3"


def test_evaluate_reads_config_file_and_flags_win(runner, rps_csv, tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"model": "melo2", "epochs": 1, "folds": 2, "dataset": str(rps_csv)}))
    out = tmp_path / "report.json"
    result = runner.invoke(cli, ["evaluate", "--config", str(config), "--k", "8", "--out", str(out)])
    assert result.exit_code == 0, result.output
    doc = json.loads(out.read_text())
    assert doc["model"] == "melo2"
    assert doc["meta"]["params"]["k"] == 8.0
    assert doc["meta"]["folds"] == 2


def test_evaluate_missing_dataset_names_the_path(runner, tmp_path):
    missing = tmp_path / "nowhere.csv"
    result = runner.invoke(cli, ["evaluate", "--dataset", str(missing), "--epochs", "1"])
    assert result.exit_code == 2
    assert "nowhere.csv" in result.output


def test_evaluate_invalid_config_exits_with_one(runner, rps_csv):
    result = runner.invoke(cli, ["evaluate", "--model", "elo", "--m", "9", "--dataset", str(rps_csv)])
    assert result.exit_code == 1
    assert "do not apply" in result.output


def test_train_then_inspect(runner, rps_csv, tmp_path):
    state = tmp_path / "state.json"
    result = runner.invoke(
        cli,
        ["train", "--model", "elo-rcc", "--m", "3", "--dataset", str(rps_csv), "--epochs", "2", "--out", str(state)],
    )
    assert result.exit_code == 0, result.output
    model, names = load_state(str(state))
    assert model.n_players == 3
    assert sorted(names) == ["paper", "rock", "scissors"]

    result = runner.invoke(cli, ["inspect", str(state)])
    assert result.exit_code == 0, result.output
    assert "Counter table" in result.output
    assert "Best category" in result.output
    for name in ("rock", "paper", "scissors"):
        assert name in result.output


def test_inspect_shows_every_category_unless_occupied_is_given(runner, rps_csv, tmp_path):
    state = tmp_path / "state.json"
    result = runner.invoke(
        cli,
        ["train", "--model", "elo-rcc", "--m", "27", "--dataset", str(rps_csv), "--epochs", "1", "--out", str(state)],
    )
    assert result.exit_code == 0, result.output

    result = runner.invoke(cli, ["inspect", str(state)])
    assert result.exit_code == 0, result.output
    assert "Counter table" in result.output
    assert "occupied of" not in result.output

    result = runner.invoke(cli, ["inspect", str(state), "--occupied"])
    assert result.exit_code == 0, result.output
    assert "occupied of 27 categories" in result.output


def test_inspect_corrupted_state_is_a_parse_error(runner, tmp_path):
    state = tmp_path / "state.json"
    state.write_text("{broken")
    result = runner.invoke(cli, ["inspect", str(state)])
    assert result.exit_code == 1
    assert "state.json" in result.output


def test_inspect_rejects_unknown_schema_version(runner, tmp_path):
    state = tmp_path / "state.json"
    state.write_text(json.dumps({"schema_version": 99, "model": "elo", "ratings": [1000.0]}))
    result = runner.invoke(cli, ["inspect", str(state)])
    assert result.exit_code == 1
    assert "99" in result.output


@pytest.mark.integration
def test_reproduce_small_table(runner, tmp_path):
    out_dir = tmp_path / "results"
    args = ["reproduce", "t2", "--out-dir", str(out_dir), "--n", "200", "--epochs", "1", "--folds", "2"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    assert "skipping aoe2" in result.output
    table = pd.read_csv(out_dir / "t2.csv")
    assert list(table.columns) == REPORT_COLUMNS
    assert table["dataset"].tolist() == ["rps"] * 3 + ["acg"] * 3
    assert table["M/K"].tolist() == ["M=3", "M=9", "M=27"] * 2

    first = (out_dir / "t2.csv").read_bytes()
    assert runner.invoke(cli, args).exit_code == 0
    assert (out_dir / "t2.csv").read_bytes() == first
