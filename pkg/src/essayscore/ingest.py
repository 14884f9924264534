"""Loaders for the five input files.

All inputs are UTF-8 text. Tabular files are RFC-4180 CSV with a required
header row; both LF and CRLF line endings are accepted. Loading is
order-preserving and purely a function of file contents.

File formats:

* ``answers.csv``       header ``student_id,question_id,answer_text``
* ``model.csv``         header ``question_id,model_answer,weight``
* ``grades.csv``        header ``student_id,question_id,score``
* ``stopwords.txt``     one token per line, ``#`` starts a comment line
* ``normalization.csv`` header ``slang,formal``
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DuplicateKey,
    EmptyId,
    EmptyModelAnswer,
    MalformedCsv,
    MissingFile,
    MultiTokenEntry,
    NegativeScore,
    NegativeWeight,
)

ANSWERS_HEADER = ["student_id", "question_id", "answer_text"]
MODEL_HEADER = ["question_id", "model_answer", "weight"]
GRADES_HEADER = ["student_id", "question_id", "score"]
NORMALIZATION_HEADER = ["slang", "formal"]


@dataclass(frozen=True)
class RawEssay:
    """One student's unprocessed answer text to one question."""

    student_id: str
    question_id: str
    text: str


@dataclass(frozen=True)
class QuestionSpec:
    """A question's model answer and its weight (maximum points)."""

    question_id: str
    model_answer: str
    weight: float


@dataclass(frozen=True)
class HumanGrade:
    """The teacher's score for one (student, question) pair."""

    student_id: str
    question_id: str
    score: float


@dataclass(frozen=True)
class Lexicons:
    """Stopword set and slang-to-formal normalization map, all lowercase.

    The normalization map is applied once per token (no chaining), so a
    cycle among entries is harmless.
    """

    stopwords: frozenset[str] = field(default_factory=frozenset)
    normalization: dict[str, str] = field(default_factory=dict)


def _data_rows(path: str | Path, header: list[str]) -> list[list[str]]:
    """Read a CSV file, check its header, and return the data rows."""
    p = Path(path)
    if not p.is_file():
        raise MissingFile(f"input file not found: {p}")
    try:
        with open(p, newline="", encoding="utf-8-sig") as fh:
            rows = list(csv.reader(fh, strict=True))
    except csv.Error as exc:
        raise MalformedCsv(f"{p}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise MalformedCsv(f"{p}: not valid UTF-8 ({exc})") from exc
    if not rows or rows[0] != header:
        raise MalformedCsv(
            f"{p}: expected header {','.join(header)!r}, "
            f"got {','.join(rows[0]) if rows else '<empty file>'!r}"
        )
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise MalformedCsv(
                f"{p}: line {i}: expected {len(header)} fields, got {len(row)}"
            )
    return rows[1:]


def _parse_number(text: str, path: Path | str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise MalformedCsv(
            f"{path}: line {line}: {column} {text!r} is not a number"
        ) from exc
    if not math.isfinite(value):
        raise MalformedCsv(f"{path}: line {line}: {column} {text!r} is not finite")
    return value


def load_answers(path: str | Path) -> list[RawEssay]:
    """Load the student answer corpus.

    Empty answer text is allowed (blank answers score zero downstream);
    empty identifiers and repeated (student_id, question_id) keys are not.
    """
    essays: list[RawEssay] = []
    seen: set[tuple[str, str]] = set()
    for i, (student_id, question_id, text) in enumerate(
        _data_rows(path, ANSWERS_HEADER), start=2
    ):
        if not student_id or not question_id:
            raise EmptyId(f"{path}: line {i}: empty student_id or question_id")
        key = (student_id, question_id)
        if key in seen:
            raise DuplicateKey(f"{path}: line {i}: duplicate answer for {key}")
        seen.add(key)
        essays.append(RawEssay(student_id, question_id, text))
    return essays


def load_model(path: str | Path) -> list[QuestionSpec]:
    """Load the model answers and question weights."""
    specs: list[QuestionSpec] = []
    seen: set[str] = set()
    for i, (question_id, model_answer, weight_text) in enumerate(
        _data_rows(path, MODEL_HEADER), start=2
    ):
        weight = _parse_number(weight_text, path, i, "weight")
        if weight < 0:
            raise NegativeWeight(f"{path}: line {i}: weight {weight} is negative")
        if not model_answer:
            raise EmptyModelAnswer(f"{path}: line {i}: empty model answer")
        if question_id in seen:
            raise DuplicateKey(f"{path}: line {i}: duplicate question {question_id!r}")
        seen.add(question_id)
        specs.append(QuestionSpec(question_id, model_answer, weight))
    return specs


def load_grades(path: str | Path) -> list[HumanGrade]:
    """Load the teacher's per-question grades."""
    grades: list[HumanGrade] = []
    seen: set[tuple[str, str]] = set()
    for i, (student_id, question_id, score_text) in enumerate(
        _data_rows(path, GRADES_HEADER), start=2
    ):
        score = _parse_number(score_text, path, i, "score")
        if score < 0:
            raise NegativeScore(f"{path}: line {i}: score {score} is negative")
        key = (student_id, question_id)
        if key in seen:
            raise DuplicateKey(f"{path}: line {i}: duplicate grade for {key}")
        seen.add(key)
        grades.append(HumanGrade(student_id, question_id, score))
    return grades


def _check_single_token(entry: str, path: str | Path, line: int) -> str:
    if not entry or any(ch.isspace() for ch in entry):
        raise MultiTokenEntry(
            f"{path}: line {line}: {entry!r} must be a single whitespace-free token"
        )
    return entry.lower()


def load_lexicons(stopword_path: str | Path, normalization_path: str | Path) -> Lexicons:
    """Load the stopword list and the slang/typo normalization dictionary.

    All entries are case-folded to lowercase on load. Later normalization
    rows overwrite earlier ones with the same key.
    """
    sp = Path(stopword_path)
    if not sp.is_file():
        raise MissingFile(f"input file not found: {sp}")
    stopwords: set[str] = set()
    with open(sp, encoding="utf-8-sig") as fh:
        for i, line in enumerate(fh, start=1):
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            stopwords.add(_check_single_token(entry, sp, i))

    normalization: dict[str, str] = {}
    for i, (slang, formal) in enumerate(
        _data_rows(normalization_path, NORMALIZATION_HEADER), start=2
    ):
        key = _check_single_token(slang, normalization_path, i)
        normalization[key] = _check_single_token(formal, normalization_path, i)

    return Lexicons(stopwords=frozenset(stopwords), normalization=normalization)
