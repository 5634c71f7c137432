__all__ = ["MISSING", "number", "parse_number", "label_block", "table"]

from .text_format import MISSING, number, parse_number, label_block, table
