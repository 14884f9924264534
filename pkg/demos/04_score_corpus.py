"""Score the bundled corpus (4 students x 3 questions) end to end.

Run from the repository root:  python demos/04_score_corpus.py
"""

from pathlib import Path

from essayscore import (
    aggregate_totals,
    load_answers,
    load_lexicons,
    load_model,
    score_corpus,
)

data = Path(__file__).resolve().parent.parent / "data"
answers = load_answers(data / "answers.csv")
questions = load_model(data / "model.csv")
lexicons = load_lexicons(data / "stopwords.txt", data / "normalization.csv")

print(f"loaded {len(answers)} answers, {len(questions)} questions, "
      f"{len(lexicons.stopwords)} stopwords, "
      f"{len(lexicons.normalization)} normalization entries\n")

print("question weights:")
for q in questions:
    print(f"  {q.question_id}: weight {q.weight:g}  model answer: {q.model_answer!r}")

records = score_corpus(answers, questions, lexicons, metric="cosine", n=1)

print("\nper-question scores (cosine, unigrams):")
print(f"  {'student':<9}{'question':<10}{'similarity':>11}{'points':>9}")
for r in sorted(records, key=lambda r: (r.student_id, r.question_id)):
    print(f"  {r.student_id:<9}{r.question_id:<10}{r.similarity:>11.4f}{r.points:>9.2f}")

print("\ntotals (weights sum to 100, so these read like percentages):")
for total in sorted(aggregate_totals(records), key=lambda t: t.student_id):
    print(f"  {total.student_id}: {total.total:.2f}")

print("\nnotes: s1 copied the model answer for q1 and earns the full 20;")
print("s4 left q3 blank and gets 0 by the empty-vector convention.")
