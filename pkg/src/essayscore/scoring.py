"""Turn per-question similarities into student scores.

For each question, the idf corpus is the model answer plus every student
answer to that same question, so idf reflects which terms discriminate
within the question and the model answer's terms are always in
vocabulary. A question's points are similarity times the question's
weight; a student's total is the sum over questions. No rounding happens
here - values stay full precision until report emission.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MixedStudents, QuestionMismatch
from .ingest import Lexicons, QuestionSpec, RawEssay
from .ngrams import NGramProfile, extract_ngrams
from .preprocess import preprocess_pipeline
from .similarity import SIMILARITY_METRICS
from .vsm import TermVector, Vocabulary, fit_vocabulary, transform


@dataclass(frozen=True)
class ScoreRecord:
    """System similarity and points for one (student, question) pair."""

    student_id: str
    question_id: str
    similarity: float
    points: float


@dataclass(frozen=True)
class StudentScore:
    """One student's total points over all scored questions."""

    student_id: str
    total: float


def _to_grams(text: str, lexicons: Lexicons, n: int) -> NGramProfile:
    return extract_ngrams(preprocess_pipeline(text, lexicons), n)


def _question_vectors(
    question: QuestionSpec,
    answers: Sequence[RawEssay],
    lexicons: Lexicons,
    n: int,
    log_base: float,
) -> tuple[TermVector, Vocabulary]:
    """Fit the per-question vocabulary and return the model answer's vector."""
    docs = [_to_grams(question.model_answer, lexicons, n)]
    docs.extend(_to_grams(a.text, lexicons, n) for a in answers)
    vocab = fit_vocabulary(docs, log_base=log_base)
    return transform(docs[0], vocab), vocab


def score_question(
    answer: RawEssay,
    question: QuestionSpec,
    peer_answers: Sequence[RawEssay],
    lexicons: Lexicons,
    *,
    metric: str = "cosine",
    n: int = 1,
    log_base: float = math.e,
) -> ScoreRecord:
    """Score a single answer against its question's model answer.

    ``peer_answers`` should be every answer submitted for this question
    (the scored answer included); together with the model answer they form
    the idf corpus. If the scored answer is missing from the list it is
    added, so passing only the other students' answers is equivalent.
    """
    if answer.question_id != question.question_id:
        raise QuestionMismatch(
            f"answer {answer.student_id!r} is for question "
            f"{answer.question_id!r}, not {question.question_id!r}"
        )
    pool = list(peer_answers)
    for peer in pool:
        if peer.question_id != question.question_id:
            raise QuestionMismatch(
                f"peer answer {peer.student_id!r} is for question "
                f"{peer.question_id!r}, not {question.question_id!r}"
            )
    key = (answer.student_id, answer.question_id)
    if not any((p.student_id, p.question_id) == key for p in pool):
        pool.append(answer)

    q_vec, vocab = _question_vectors(question, pool, lexicons, n, log_base)
    d_vec = transform(_to_grams(answer.text, lexicons, n), vocab)
    sim = SIMILARITY_METRICS[metric](d_vec, q_vec)
    return ScoreRecord(
        student_id=answer.student_id,
        question_id=answer.question_id,
        similarity=sim,
        points=sim * question.weight,
    )


def score_corpus(
    answers: Sequence[RawEssay],
    questions: Sequence[QuestionSpec],
    lexicons: Lexicons,
    *,
    metric: str = "cosine",
    n: int = 1,
    log_base: float = math.e,
) -> list[ScoreRecord]:
    """Score every answer in a corpus, fitting one vocabulary per question.

    Records come back in the answers' original order. Produces exactly the
    same values as calling :func:`score_question` per answer, just without
    refitting the vocabulary for each one.
    """
    specs = {q.question_id: q for q in questions}
    by_question: dict[str, list[RawEssay]] = {}
    for answer in answers:
        if answer.question_id not in specs:
            raise QuestionMismatch(
                f"answer {answer.student_id!r} refers to unknown question "
                f"{answer.question_id!r}"
            )
        by_question.setdefault(answer.question_id, []).append(answer)

    contexts: dict[str, tuple[TermVector, Vocabulary, float]] = {}
    for question_id, group in by_question.items():
        question = specs[question_id]
        q_vec, vocab = _question_vectors(question, group, lexicons, n, log_base)
        contexts[question_id] = (q_vec, vocab, question.weight)

    records = []
    for answer in answers:
        q_vec, vocab, weight = contexts[answer.question_id]
        d_vec = transform(_to_grams(answer.text, lexicons, n), vocab)
        sim = SIMILARITY_METRICS[metric](d_vec, q_vec)
        records.append(
            ScoreRecord(answer.student_id, answer.question_id, sim, sim * weight)
        )
    return records


def aggregate_student(
    records: Iterable[ScoreRecord], student_id: str | None = None
) -> StudentScore:
    """Sum one student's points into a total.

    All records must belong to the same student. ``student_id`` fixes the
    identity when the record list may be empty.
    """
    records = list(records)
    ids = {r.student_id for r in records}
    if student_id is not None:
        ids.add(student_id)
    if len(ids) > 1:
        raise MixedStudents(f"records span several students: {sorted(ids)}")
    sid = ids.pop() if ids else ""
    return StudentScore(sid, math.fsum(r.points for r in records))


def aggregate_totals(records: Sequence[ScoreRecord]) -> list[StudentScore]:
    """Per-student totals, in order of each student's first record."""
    grouped: dict[str, list[ScoreRecord]] = {}
    for record in records:
        grouped.setdefault(record.student_id, []).append(record)
    return [aggregate_student(group, sid) for sid, group in grouped.items()]
