import json

import numpy as np
import pytest

from counterplay.core.errors import DatasetIOError, RecordParseError, ValidationError
from counterplay.datasets.io import (
    convert_export,
    load_folds,
    load_matches,
    load_roster,
    save_folds,
    save_matches,
    save_roster,
    sidecar_path,
    write_metadata,
)
from counterplay.datasets.records import Dataset, make_folds
from counterplay.datasets.synthetic import gen_rps


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_load_matches_assigns_first_seen_ids(tmp_path):
    path = write(tmp_path / "m.csv", "player_i,player_j,outcome\nAztecs,Britons,1\nCelts,Aztecs,0.5\nBritons,Celts,0\n")
    dataset = load_matches(path)
    assert len(dataset) == 3
    assert dataset.player_names == ["Aztecs", "Britons", "Celts"]
    assert dataset.first.tolist() == [0, 2, 1]
    assert dataset.second.tolist() == [1, 0, 2]
    assert dataset.outcome.tolist() == [1.0, 0.5, 0.0]


def test_bad_outcome_names_the_line(tmp_path):
    path = write(tmp_path / "m.csv", "player_i,player_j,outcome\nA,B,1\nA,B,2\n")
    with pytest.raises(RecordParseError) as info:
        load_matches(path)
    assert info.value.line == 3
    assert isinstance(info.value, ValidationError)
    assert "m.csv:3" in str(info.value)


def test_blank_lines_are_skipped_but_counted(tmp_path):
    path = write(tmp_path / "m.csv", "player_i,player_j,outcome\nA,B,1\n\nA,B,2\n")
    with pytest.raises(RecordParseError) as info:
        load_matches(path)
    assert info.value.line == 4
    assert "m.csv:4" in str(info.value)

    ok = write(tmp_path / "ok.csv", "player_i,player_j,outcome\n\nA,B,1\n  \nB,A,0\n\n")
    dataset = load_matches(ok)
    assert len(dataset) == 2
    assert dataset.outcome.tolist() == [1.0, 0.0]


def test_blank_lines_in_rosters_folds_and_exports(tmp_path):
    roster = write(tmp_path / "players.csv", "player_id,name\n0,rock\n\n2,paper\n")
    with pytest.raises(RecordParseError) as info:
        load_roster(roster)
    assert info.value.line == 4

    folds = write(tmp_path / "folds.csv", "match_index,fold\n0,0\n\n1,x\n")
    with pytest.raises(RecordParseError) as info:
        load_folds(folds)
    assert info.value.line == 4

    export = write(tmp_path / "games.csv", "player_a,player_b,winner\nA,B,A\n\n\nA,B,C\n")
    with pytest.raises(RecordParseError) as info:
        convert_export(export, "player_a", "player_b", "winner")
    assert info.value.line == 5


@pytest.mark.parametrize(
    "text, line",
    [
        ("player_a,player_b,outcome\nA,B,1\n", 1),
        ("player_i,player_j,outcome\nA,,1\n", 2),
        ("player_i,player_j,outcome\nA,B,1\nA,A,1\n", 3),
        ("", 1),
    ],
)
def test_malformed_files(tmp_path, text, line):
    path = write(tmp_path / "m.csv", text)
    with pytest.raises(RecordParseError) as info:
        load_matches(path)
    assert info.value.line == line


def test_missing_file_is_io_error(tmp_path):
    with pytest.raises(DatasetIOError, match="missing.csv"):
        load_matches(tmp_path / "missing.csv")


def test_save_then_load_matches(tmp_path):
    dataset = gen_rps(200, seed=4)
    path = tmp_path / "rps.csv"
    save_matches(dataset, path)
    save_roster(dataset.player_names, sidecar_path(path, "players.csv"))
    loaded = load_matches(path, tmp_path / "rps.players.csv")
    assert loaded.player_names == dataset.player_names
    np.testing.assert_array_equal(loaded.first, dataset.first)
    np.testing.assert_array_equal(loaded.second, dataset.second)
    np.testing.assert_array_equal(loaded.outcome, dataset.outcome)
    assert path.read_text().splitlines()[0] == "player_i,player_j,outcome"


def test_roster_rejects_unknown_players(tmp_path):
    roster = tmp_path / "players.csv"
    save_roster(["rock", "paper"], roster)
    assert load_roster(roster) == ["rock", "paper"]
    path = write(tmp_path / "m.csv", "player_i,player_j,outcome\nrock,lizard,1\n")
    with pytest.raises(RecordParseError, match="lizard"):
        load_matches(path, roster)


def test_roster_ids_must_be_dense(tmp_path):
    roster = write(tmp_path / "players.csv", "player_id,name\n0,rock\n2,paper\n")
    with pytest.raises(RecordParseError):
        load_roster(roster)


def test_fold_round_trip(tmp_path):
    split = make_folds(gen_rps(100, seed=0), k=5, seed=3)
    path = tmp_path / "folds.csv"
    save_folds(split, path)
    loaded = load_folds(path, n_matches=100)
    assert loaded.k == 5
    np.testing.assert_array_equal(loaded.assignment, split.assignment)


def test_fold_file_must_cover_dataset(tmp_path):
    path = write(tmp_path / "folds.csv", "match_index,fold\n0,0\n1,1\n")
    with pytest.raises(ValidationError):
        load_folds(path, n_matches=3)
    bad = write(tmp_path / "bad.csv", "match_index,fold\n0,0\n1,x\n")
    with pytest.raises(RecordParseError) as info:
        load_folds(bad)
    assert info.value.line == 3


def test_write_metadata(tmp_path):
    path = tmp_path / "rps.meta.json"
    write_metadata(path, {"seed": 7, "generator": "rps"})
    assert json.loads(path.read_text()) == {"generator": "rps", "seed": 7}
    assert sidecar_path(tmp_path / "rps.csv", "meta.json") == path


def test_convert_export(tmp_path):
    export = write(tmp_path / "export.csv", "p1,p2,winner,map\nA,B,B,arabia\nB,C,draw,arena\nC,C,C,arabia\n")
    dataset = convert_export(export, "p1", "p2", "winner")
    assert dataset.player_names == ["A", "B", "C"]
    assert dataset.outcome.tolist() == [0.0, 0.5, 0.5]


def test_convert_export_errors(tmp_path):
    export = write(tmp_path / "export.csv", "p1,p2,winner\nA,B,Z\n")
    with pytest.raises(RecordParseError, match="Z"):
        convert_export(export, "p1", "p2", "winner")
    with pytest.raises(RecordParseError):
        convert_export(export, "p1", "p2", "result")
    with pytest.raises(DatasetIOError):
        convert_export(tmp_path / "missing.csv", "p1", "p2", "winner")


def test_dataset_validation():
    with pytest.raises(ValidationError):
        Dataset(["a"], [0], [1], [1.0])
    with pytest.raises(ValidationError):
        Dataset(["a", "b"], [0], [1], [0.7])
    assert len(Dataset.from_matches(["a"], [])) == 0
