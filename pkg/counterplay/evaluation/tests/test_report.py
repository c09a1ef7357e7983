import io
import json

import pandas as pd
import pytest

from counterplay.evaluation.report import REPORT_COLUMNS, AccuracyReport, reports_to_csv, write_text


@pytest.fixture
def report():
    return AccuracyReport(
        per_fold_train=[100.0, 98.0],
        per_fold_test=[96.0, 92.0],
        dataset="acg",
        model="elo-rcc",
        label="M=81",
        meta={"epochs": 100},
    )


def test_population_statistics(report):
    assert report.mean_train == 99.0
    assert report.std_train == 1.0
    assert report.mean_test == 94.0
    assert report.std_test == 2.0


def test_csv_header_and_row(report):
    text = reports_to_csv([report])
    assert text.splitlines()[0] == "dataset,model,M/K,train_mean,train_std,test_mean,test_std"
    frame = pd.read_csv(io.StringIO(text))
    assert list(frame.columns) == REPORT_COLUMNS
    assert frame.iloc[0].tolist() == ["acg", "elo-rcc", "M=81", 99.0, 1.0, 94.0, 2.0]
    assert report.to_csv_row().count("\n") == 1


def test_json_round_trip(report):
    doc = json.loads(report.to_json())
    assert doc["test_mean"] == 94.0
    assert doc["per_fold_test"] == [96.0, 92.0]
    again = AccuracyReport.from_document(doc)
    assert again.to_json() == report.to_json()


def test_write_text_is_atomic(tmp_path, report):
    path = tmp_path / "report.json"
    write_text(path, report.to_json())
    assert json.loads(path.read_text())["M/K"] == "M=81"
    assert not (tmp_path / "report.json.tmp").exists()
