import csv
import io
from typing import Dict, Sequence

import numpy as np

from ..exception import InvalidParametersError
from ..types import ProblemInstance, RunResult, SummaryTable
from ..utils import label_block, number, parse_number
from .measures import accuracy, avg_area, avg_bog

# Result-table label -> SummaryTable field, in table order
SUMMARY_LABELS = {
    "Best": "best",
    "AvgBest": "avg_best",
    "StdDev": "std_dev",
    "AvgBOG": "avg_bog",
    "BestAcc": "best_acc",
    "AvgAcc": "avg_acc",
    "AvgArea": "avg_area",
    "ItrBest": "itr_best",
    "TBest": "t_best",
    "AvgTBest": "avg_t_best",
    "AvgTRun": "avg_t_run",
}


def summarize(run_results: Sequence[RunResult], problem: ProblemInstance) -> SummaryTable:
    """Aggregate ``Q`` runs of equal length into one result-table column

    Accuracies are reported only when the problem has ``bounds``. ``itr_best`` and ``t_best``
    come from the run with the lowest final fitness (the first one on ties) and only when
    that run attained the known best.

    Args:
        run_results (``Sequence`` of :class:`~pydpso.types.RunResult`):
            Runs to aggregate; use :meth:`~pydpso.types.RunResult.truncate` for checkpoints

        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem the runs optimized

    Returns:
        :class:`~pydpso.types.SummaryTable`

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: On empty or ragged runs
    """

    if not run_results:
        raise InvalidParametersError("at least one run is required")

    curves = [run.bog_curve() for run in run_results]
    mean_bog = avg_bog(curves)

    bests = np.array([run.best_fitness for run in run_results], dtype=np.float64)
    best_run = run_results[int(np.argmin(bests))]

    best_acc = avg_acc = None
    if problem.bounds is not None:
        min_t, max_t = problem.bounds
        best_acc = accuracy(float(bests.min()), min_t, max_t)
        avg_acc = float(np.mean([accuracy(float(b), min_t, max_t) for b in bests]))

    t_bests = [run.t_best for run in run_results if run.t_best is not None]

    return SummaryTable(
        best=float(bests.min()),
        avg_best=float(bests.mean()),
        std_dev=float(bests.std()),
        avg_bog=mean_bog,
        best_acc=best_acc,
        avg_acc=avg_acc,
        avg_area=avg_area(curves),
        itr_best=best_run.itr_best,
        t_best=best_run.t_best,
        avg_t_best=float(np.mean(t_bests)) if t_bests else None,
        avg_t_run=float(np.mean([run.total_time for run in run_results])),
        q_runs=len(run_results),
        g_generations=len(curves[0]),
    )


def summary_row(summary: SummaryTable) -> Dict[str, str]:
    """Formatted cells keyed by result-table label"""
    return {label: number(getattr(summary, field)) for label, field in SUMMARY_LABELS.items()}


def summary_to_csv(summary: SummaryTable, header: bool = True) -> str:
    """One CSV row (plus a header row by default) with ``-`` for absent values"""

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(SUMMARY_LABELS), lineterminator="\n")
    if header:
        writer.writeheader()
    writer.writerow(summary_row(summary))
    return buffer.getvalue()


def summary_from_csv(text: str) -> Dict[str, object]:
    """Parse the first row written by :func:`summary_to_csv` back into label -> value

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If a label is missing
    """

    reader = csv.DictReader(io.StringIO(text))
    row = next(reader, None)
    if row is None:
        raise InvalidParametersError("summary CSV has no data row")

    missing = [label for label in SUMMARY_LABELS if label not in row]
    if missing:
        raise InvalidParametersError("summary CSV lacks {}".format(", ".join(missing)))
    return {label: parse_number(row[label]) for label in SUMMARY_LABELS}


def summary_to_text(summary: SummaryTable, title: str = None) -> str:
    """Human-readable block: one ``label  value`` line per result-table row"""

    cells = summary_row(summary)
    return label_block(list(cells.items()), title) + "\n"
