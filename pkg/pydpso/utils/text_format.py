from typing import Sequence

MISSING = "-"


def number(value, digits: int = None) -> str:
    """Format a table cell

    Args:
        value (``int`` | ``float`` | ``None``):
            The value to format

        digits (``int``, *optional*):
            Significant digits for floats. Defaults to ``None`` (shortest round-tripping form)

    Returns:
        :py:class:`str`: The formatted value, or ``"-"`` for ``None``
    """

    if value is None:
        return MISSING
    elif isinstance(value, bool):
        return str(value).lower()
    elif isinstance(value, int):
        return str(value)
    elif digits is None:
        return repr(float(value))
    return "{:.{}g}".format(float(value), digits)


def parse_number(text: str):
    """Inverse of :func:`number`: ``"-"`` becomes ``None``, integers stay integers"""

    text = text.strip()
    if text == MISSING or not text:
        return None
    try:
        return int(text)
    except ValueError:
        return float(text)


def label_block(pairs: Sequence[tuple], title: str = None) -> str:
    """Render ``(label, value)`` pairs as aligned ``label  value`` lines

    Args:
        pairs (``Sequence[tuple]``):
            Rows of the block, values already formatted

        title (``str``, *optional*):
            First line of the block
    """

    width = max((len(label) for label, _ in pairs), default=0)
    lines = [title] if title else []
    lines.extend("{}  {}".format(label.ljust(width), value) for label, value in pairs)
    return "\n".join(lines)


def table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Render a plain-text table with left-aligned first column and right-aligned others"""

    columns = [list(header)] + [list(row) for row in rows]
    widths = [max(len(str(row[i])) for row in columns) for i in range(len(header))]

    def line(row) -> str:
        cells = [str(row[0]).ljust(widths[0])]
        cells.extend(str(c).rjust(w) for c, w in zip(row[1:], widths[1:]))
        return "  ".join(cells).rstrip()

    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(header), rule] + [line(row) for row in rows])
