"""Command-line interface: score a corpus, evaluate it, or sweep the grid.

Three subcommands share one input convention (CSV corpus files plus the
two lexicon files) and write CSV reports into an output directory:

* ``score``    -> ``scores.csv``, ``totals.csv``
* ``evaluate`` -> ``evaluation.csv``, ``stats.csv``, ``anova.csv``
* ``compare``  -> ``compare.csv`` plus an aligned per-question table on
  stdout covering all six (metric, n-gram) combinations

Diagnostics go to stderr; data goes to files (the compare table being the
one deliberate exception). Output rows are sorted so repeated runs over
the same inputs are byte-identical. Exit status is 0 on success, 1 for
input-data problems, 2 for bad command-line usage.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import EssayScoreError
from .evaluation import EvaluationReport, build_report
from .ingest import load_answers, load_grades, load_lexicons, load_model
from .ngrams import VALID_NGRAM_SIZES
from .scoring import aggregate_totals, score_corpus
from .similarity import SIMILARITY_METRICS

METRIC_CHOICES = tuple(sorted(SIMILARITY_METRICS))
DEFAULT_METRIC = "cosine"
DEFAULT_NGRAM = 1


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs for one command invocation."""

    answers: Path
    model: Path
    stopwords: Path
    normalization: Path
    out: Path
    grades: Path | None = None
    metric: str = DEFAULT_METRIC
    ngram: int = DEFAULT_NGRAM


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        answers=Path(args.answers),
        model=Path(args.model),
        stopwords=Path(args.stopwords),
        normalization=Path(args.normalization),
        out=Path(args.out),
        grades=Path(args.grades) if getattr(args, "grades", None) else None,
        metric=getattr(args, "metric", DEFAULT_METRIC),
        ngram=getattr(args, "ngram", DEFAULT_NGRAM),
    )


def _load_corpus(config: RunConfig):
    essays = load_answers(config.answers)
    questions = load_model(config.model)
    lexicons = load_lexicons(config.stopwords, config.normalization)
    return essays, questions, lexicons


def _write_rows(path: Path, header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


# ---------------------------------------------------------------------------
# score
# ---------------------------------------------------------------------------

def cmd_score(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    essays, questions, lexicons = _load_corpus(config)
    records = score_corpus(
        essays, questions, lexicons, metric=config.metric, n=config.ngram
    )
    config.out.mkdir(parents=True, exist_ok=True)

    score_rows = sorted(
        (r.student_id, r.question_id, f"{r.similarity:.4f}", f"{r.points:.2f}")
        for r in records
    )
    _write_rows(
        config.out / "scores.csv",
        ["student_id", "question_id", "similarity", "points"],
        score_rows,
    )
    total_rows = sorted(
        (t.student_id, f"{t.total:.2f}") for t in aggregate_totals(records)
    )
    _write_rows(config.out / "totals.csv", ["student_id", "total"], total_rows)
    return 0


# ---------------------------------------------------------------------------
# evaluate
# ---------------------------------------------------------------------------

def _evaluate_run(config: RunConfig, metric: str, ngram: int) -> EvaluationReport:
    essays, questions, lexicons = _load_corpus(config)
    grades = load_grades(config.grades)
    records = score_corpus(essays, questions, lexicons, metric=metric, n=ngram)
    report = build_report(records, grades)
    if report.unmatched_grades:
        print(
            f"warning: skipped {report.unmatched_grades} grade row(s) "
            f"referencing unknown students or unanswered questions",
            file=sys.stderr,
        )
    return report


def _rmse_rows(report: EvaluationReport, metric: str, ngram: int) -> list[tuple[str, str, str, str]]:
    """Long-form RMSE rows for one run; the per-student-total row is 'overall'."""
    rows = [
        (qid, metric, str(ngram), f"{value:.6f}")
        for qid, value in report.per_question.items()
    ]
    rows.append(("overall", metric, str(ngram), f"{report.overall:.6f}"))
    return rows


def _write_evaluation_files(config: RunConfig, report: EvaluationReport) -> None:
    config.out.mkdir(parents=True, exist_ok=True)
    _write_rows(
        config.out / "evaluation.csv",
        ["question_id", "metric", "ngram", "rmse"],
        sorted(_rmse_rows(report, config.metric, config.ngram)),
    )
    _write_rows(
        config.out / "stats.csv",
        ["source", "mean", "std", "cv"],
        [
            ("system", *(f"{v:.4f}" for v in report.system_stats)),
            ("human", *(f"{v:.4f}" for v in report.human_stats)),
        ],
    )
    anova = report.anova
    _write_rows(
        config.out / "anova.csv",
        ["comparison", "f", "wilks_lambda", "p", "eta_sq", "df_error"],
        [
            (
                "system_vs_human",
                f"{anova.f:.6g}",
                f"{anova.wilks_lambda:.6g}",
                f"{anova.p:.6g}",
                f"{anova.eta_sq:.6g}",
                str(anova.df_error),
            )
        ],
    )


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    report = _evaluate_run(config, config.metric, config.ngram)
    _write_evaluation_files(config, report)
    return 0


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

def _print_grid(rows: list[tuple[str, str, str, str]]) -> None:
    """Render the long-form rows as one metric x n-gram table per question."""
    cells = {(qid, metric, ngram): value for qid, metric, ngram, value in rows}
    question_ids = sorted({qid for qid, _, _, _ in rows})
    ngram_labels = [str(n) for n in VALID_NGRAM_SIZES]

    print("rmse by question (rows: metric, columns: n-gram size)")
    for qid in question_ids:
        print(f"\n{qid}")
        print("  " + f"{'':<10}" + "".join(f"{'n=' + n:>12}" for n in ngram_labels))
        for metric in METRIC_CHOICES:
            values = [cells[(qid, metric, n)] for n in ngram_labels]
            print("  " + f"{metric:<10}" + "".join(f"{v:>12}" for v in values))

    print("\nlowest rmse per metric (per-question cells):")
    for metric in METRIC_CHOICES:
        candidates = [
            (value, qid, ngram)
            for qid, m, ngram, value in rows
            if m == metric and qid != "overall"
        ]
        value, qid, ngram = min(candidates, key=lambda c: (float(c[0]), c[1], c[2]))
        print(f"  {metric:<10}{value}  (question {qid}, n={ngram})")


def cmd_compare(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    all_rows: list[tuple[str, str, str, str]] = []
    for metric in METRIC_CHOICES:
        for ngram in VALID_NGRAM_SIZES:
            report = _evaluate_run(config, metric, ngram)
            all_rows.extend(_rmse_rows(report, metric, ngram))
    all_rows.sort()
    config.out.mkdir(parents=True, exist_ok=True)
    _write_rows(
        config.out / "compare.csv",
        ["question_id", "metric", "ngram", "rmse"],
        all_rows,
    )
    _print_grid(all_rows)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common_arguments(sub: argparse.ArgumentParser, with_grades: bool) -> None:
    sub.add_argument("--answers", required=True, help="student answers CSV")
    sub.add_argument("--model", required=True, help="model answers CSV")
    if with_grades:
        sub.add_argument("--grades", required=True, help="teacher grades CSV")
    sub.add_argument("--stopwords", required=True, help="stopword list, one per line")
    sub.add_argument("--normalization", required=True, help="slang,formal CSV")
    sub.add_argument("--out", required=True, metavar="DIR", help="output directory")


def _add_config_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--metric",
        choices=METRIC_CHOICES,
        default=DEFAULT_METRIC,
        help="similarity metric (default: %(default)s)",
    )
    sub.add_argument(
        "--ngram",
        type=int,
        choices=VALID_NGRAM_SIZES,
        default=DEFAULT_NGRAM,
        help="n-gram size (default: %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="essayscore",
        description="Score student essay answers against teacher model answers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score a corpus and write points")
    _add_common_arguments(p_score, with_grades=False)
    _add_config_arguments(p_score)
    p_score.set_defaults(handler=cmd_score)

    p_eval = sub.add_parser("evaluate", help="compare system scores to grades")
    _add_common_arguments(p_eval, with_grades=True)
    _add_config_arguments(p_eval)
    p_eval.set_defaults(handler=cmd_evaluate)

    p_cmp = sub.add_parser("compare", help="sweep all metric/n-gram combinations")
    _add_common_arguments(p_cmp, with_grades=True)
    p_cmp.set_defaults(handler=cmd_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except EssayScoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
