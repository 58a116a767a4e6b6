import pytest

from simdsl.dataset import (
    DatasetVersion,
    QAExample,
    Split,
    load_dataset,
    validation_error,
    write_dataset,
)
from simdsl.exceptions import DatasetError
import simdsl.sdjson as sdjson

RECORD = {
    "id": "five",
    "version": "v1",
    "split": "test",
    "context": "A jar holds 5 marbles.",
    "question": "How many marbles are in the jar?",
    "answer": 5,
    "options": [4, 5, 6, 7],
    "program": "func simulation() { return 5; }",
}


def write_lines(tmp_path, *lines):
    location = tmp_path / "dataset.jsonl"
    location.write_text("".join(f"{line}\n" for line in lines))
    return location


def load_records(tmp_path, *records):
    return load_dataset(
        write_lines(tmp_path, *(sdjson.dumps(record) for record in records))
    )


def test_fixture(dataset_path):
    examples, report = load_dataset(dataset_path)

    assert [example.id for example in examples] == ["series", "five", "cooling"]
    assert report.loaded == 3
    assert report.by_version == {"v1": 2, "v2": 1}
    assert report.by_split == {"train": 1, "test": 2}

    mismatch, broken = report.quarantined
    assert (mismatch.line, mismatch.id) == (3, "mismatch")
    assert mismatch.reason == (
        "answer mismatch: reference program returns 9, gold answer is 10"
    )
    assert broken.line == 4
    assert broken.id is None
    assert broken.reason.startswith("malformed JSON")


def test_example_fields(dataset_path):
    examples, _ = load_dataset(dataset_path)
    cooling = examples[2]
    assert cooling.gold_answer == 70.0
    assert cooling.options == (60.0, 70.0, 75.0, 80.0)
    assert cooling.split is Split.TEST
    assert cooling.version is DatasetVersion.V2
    assert validation_error(cooling) is None


def test_single_valid_example(tmp_path):
    examples, report = load_records(tmp_path, RECORD)
    assert report.loaded == 1
    assert report.quarantined == []
    assert examples[0] == QAExample.from_dict(RECORD)


def test_duplicate_ids(tmp_path):
    examples, report = load_records(tmp_path, RECORD, RECORD)
    assert len(examples) == 1
    assert report.quarantined[0].reason == "duplicate id 'five'"
    assert report.quarantined[0].line == 2


@pytest.mark.parametrize(
    "change, reason",
    [
        ({"answer": "5"}, "field 'answer' must be a number"),
        ({"answer": True}, "field 'answer' must be a number"),
        ({"split": "dev"}, "unknown split 'dev'"),
        ({"version": "v3"}, "unknown dataset version 'v3'"),
        ({"options": [4, 5, 6]}, "expected 4 options, got 3"),
        ({"options": [4, 5, 5, 7]}, "options are not pairwise distinct"),
        ({"options": [1, 2, 3, 4]}, "gold answer is not among the options"),
        (
            {"program": "func simulation() { x = 1; }"},
            "reference program does not return a value",
        ),
    ],
)
def test_quarantine_reasons(tmp_path, change, reason):
    examples, report = load_records(tmp_path, {**RECORD, **change})
    assert examples == []
    assert report.quarantined[0].reason == reason


def test_missing_field(tmp_path):
    record = dict(RECORD)
    del record["program"]
    _, report = load_records(tmp_path, record)
    assert report.quarantined[0].reason == "missing field(s): program"
    assert report.quarantined[0].id == "five"


def test_unparseable_and_failing_programs(tmp_path):
    _, report = load_records(
        tmp_path,
        {**RECORD, "id": "a", "program": "func simulation() { return }"},
        {**RECORD, "id": "b", "program": "func simulation() { x = 5 / 0; return x; }"},
    )
    first, second = report.quarantined
    assert first.reason.startswith("reference program does not parse")
    assert second.reason.startswith("reference program fails: division-by-zero")


def test_step_limit_quarantines(tmp_path):
    program = "func simulation() { x = 0; repeat(10) { x = x + 1; } return x; }"
    record = {**RECORD, "answer": 10, "options": [9, 10, 11, 12], "program": program}
    location = write_lines(tmp_path, sdjson.dumps(record))
    assert load_dataset(location)[1].loaded == 1
    _, report = load_dataset(location, max_steps=5)
    reason = report.quarantined[0].reason
    assert reason.startswith("reference program fails: step-limit")


def test_not_an_object(tmp_path):
    _, report = load_dataset(write_lines(tmp_path, "[1, 2]", "", "5"))
    assert [entry.line for entry in report.quarantined] == [1, 3]
    assert report.quarantined[0].reason == "record is not a JSON object"


def test_tolerates_trailing_commas(tmp_path):
    line = sdjson.dumps(RECORD).replace("[4,5,6,7]", "[4,5,6,7,]")
    examples, report = load_dataset(write_lines(tmp_path, line))
    assert report.loaded == 1
    assert examples[0].options == (4.0, 5.0, 6.0, 7.0)


def test_unknown_format(dataset_path):
    with pytest.raises(DatasetError, match="unknown dataset format 'csv'"):
        load_dataset(dataset_path, format="csv")


def test_invalid_utf8_line_is_quarantined(tmp_path):
    location = tmp_path / "dataset.jsonl"
    valid = sdjson.dump_bytes(RECORD)
    location.write_bytes(b'{"id": "\xff\xfe"}\n' + valid + b"\n")
    examples, report = load_dataset(location)
    assert [example.id for example in examples] == ["five"]
    (entry,) = report.quarantined
    assert entry.line == 1
    assert entry.reason.startswith("not valid UTF-8")


def test_missing_file(tmp_path):
    with pytest.raises(DatasetError):
        load_dataset(tmp_path / "missing.jsonl")


def test_write_dataset(tmp_path, small_corpus):
    location = tmp_path / "corpus.jsonl"
    write_dataset(location, small_corpus)
    examples, report = load_dataset(location)
    assert report.quarantined == []
    assert examples == small_corpus
