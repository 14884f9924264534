"""Shared fixtures: paths to the bundled corpus and common loads."""

from pathlib import Path

import pytest

from essayscore import load_answers, load_grades, load_lexicons, load_model

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def corpus(data_dir):
    """(answers, questions, grades, lexicons) from the bundled corpus."""
    return (
        load_answers(data_dir / "answers.csv"),
        load_model(data_dir / "model.csv"),
        load_grades(data_dir / "grades.csv"),
        load_lexicons(data_dir / "stopwords.txt", data_dir / "normalization.csv"),
    )


def cli_args(data_dir: Path, out: Path, *extra: str, grades: bool = False) -> list[str]:
    """Standard CLI argument list pointing at the bundled corpus."""
    args = [
        "--answers", str(data_dir / "answers.csv"),
        "--model", str(data_dir / "model.csv"),
        "--stopwords", str(data_dir / "stopwords.txt"),
        "--normalization", str(data_dir / "normalization.csv"),
        "--out", str(out),
    ]
    if grades:
        args += ["--grades", str(data_dir / "grades.csv")]
    return args + list(extra)
