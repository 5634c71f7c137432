import csv
import io
from logging import getLogger
from pathlib import Path
from typing import Dict, Sequence, Union

from ujson import dumps, loads

from ..metrics import summary_from_csv
from ..utils import number, table
from .experiment import MANIFEST
from .suites import ALGORITHM_ORDER

logger = getLogger(__name__)

# Comparison column -> summary label
REPORT_COLUMNS = {"Best": "Best", "Mean": "AvgBest", "Std": "StdDev", "AvgTime": "AvgTRun"}


def collect_report(
    directories: Sequence[Union[str, Path]], checkpoint: int = None
) -> Dict[str, Dict[str, dict]]:
    """Gather summaries of finished experiments into ``{problem: {algorithm: row}}``

    Every ``run.json`` below the given directories is one experiment. Its summary at
    ``checkpoint`` (default: the last checkpoint of that experiment) is read back from
    ``summary_<checkpoint>.csv``.

    Args:
        directories (``Sequence``):
            Output directories of ``pydpso run`` or ``pydpso bench``

        checkpoint (``int``, *optional*):
            Generation count to compare at

    Raises:
        :class:`FileNotFoundError`: If no experiment is found
    """

    report: Dict[str, Dict[str, dict]] = {}
    found = 0

    for directory in directories:
        for manifest_path in sorted(Path(directory).rglob(MANIFEST)):
            manifest = loads(manifest_path.read_text())
            available = manifest.get("checkpoints") or []
            wanted = checkpoint if checkpoint is not None else (available[-1] if available else None)

            summary_path = manifest_path.parent / "summary_{}.csv".format(wanted)
            if wanted is None or not summary_path.exists():
                logger.warning(
                    "{} has no summary at checkpoint {}".format(manifest_path.parent, wanted)
                )
                continue

            summary = summary_from_csv(summary_path.read_text())
            row = {column: summary[label] for column, label in REPORT_COLUMNS.items()}
            row["checkpoint"] = wanted

            problem = report.setdefault(manifest["problem"], {})
            if manifest["algorithm"] in problem:
                logger.warning(
                    "{} on {} found twice, keeping {}".format(
                        manifest["algorithm"], manifest["problem"], manifest_path.parent
                    )
                )
            problem[manifest["algorithm"]] = row
            found += 1

    if not found:
        raise FileNotFoundError(
            "no experiment summaries found under {}".format(", ".join(str(d) for d in directories))
        )

    logger.info("Collected {} experiments on {} problems".format(found, len(report)))
    return report


def _algorithms(rows: dict) -> list:
    known = [a for a in ALGORITHM_ORDER if a in rows]
    return known + sorted(a for a in rows if a not in ALGORITHM_ORDER)


def render_report(report: Dict[str, Dict[str, dict]], fmt: str = "text") -> str:
    """Render a collected report as ``text``, ``json`` or ``csv``

    The text form has one block per problem with a row per algorithm and the columns
    ``Best``, ``Mean``, ``Std`` and ``AvgTime``.
    """

    if fmt == "json":
        return dumps(report, indent=4) + "\n"

    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["problem", "algorithm"] + list(REPORT_COLUMNS))
        for problem in sorted(report):
            for algorithm in _algorithms(report[problem]):
                row = report[problem][algorithm]
                writer.writerow(
                    [problem, algorithm] + [number(row[c]) for c in REPORT_COLUMNS]
                )
        return buffer.getvalue()

    elif fmt == "text":
        blocks = []
        for problem in sorted(report):
            rows = [
                [algorithm] + [number(report[problem][algorithm][c], 6) for c in REPORT_COLUMNS]
                for algorithm in _algorithms(report[problem])
            ]
            blocks.append(problem + "\n" + table(["Algorithm"] + list(REPORT_COLUMNS), rows))
        return "\n\n".join(blocks) + "\n"

    raise ValueError("unknown report format {!r}".format(fmt))
