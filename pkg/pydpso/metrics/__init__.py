__all__ = [
    "avg_bog",
    "accuracy",
    "accuracy_literal",
    "area",
    "avg_area",
    "summarize",
    "SUMMARY_LABELS",
    "summary_row",
    "summary_to_csv",
    "summary_from_csv",
    "summary_to_text",
]


from .measures import avg_bog, accuracy, accuracy_literal, area, avg_area
from .summary import (
    summarize,
    SUMMARY_LABELS,
    summary_row,
    summary_to_csv,
    summary_from_csv,
    summary_to_text,
)
