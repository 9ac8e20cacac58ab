# src/rainbow_schur/utils/io.py
"""Plain-text coloring files.

Line 1 holds n, the next data line the n colors separated by whitespace.
'#' starts a comment that runs to the end of its line.
"""

import logging
from pathlib import Path

from rainbow_schur.ap.base import KColoring
from rainbow_schur.core.base import Coloring

logger = logging.getLogger(__name__)


class ColoringFileError(ValueError):
    """Malformed coloring file; line and column are 1-based."""

    def __init__(self, path: Path, line: int, column: int, message: str):
        self.path = path
        self.line = line
        self.column = column
        super().__init__(f"{path}:{line}:{column}: {message}")


def _tokens(text: str) -> list[tuple[int, int, str]]:
    """(line, column, token) for every token outside comments."""
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        column = 0
        for token in line.split():
            column = line.index(token, column)
            out.append((line_no, column + 1, token))
            column += len(token)
    return out


def read_colors(path: Path, k: int = 3) -> tuple[int, ...]:
    """Color sequence from `path`, validated against n and the label range 1..k."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ColoringFileError(path, 0, 0, f"cannot read file: {e}") from e

    tokens = _tokens(text)
    if not tokens:
        raise ColoringFileError(path, 1, 1, "empty file, expected n on the first line")
    header_line, header_col, header = tokens[0]
    try:
        n = int(header)
    except ValueError:
        raise ColoringFileError(
            path, header_line, header_col, f"expected n, got '{header}'"
        ) from None
    if n < 1:
        raise ColoringFileError(path, header_line, header_col, f"n must be positive, got {n}")
    if any(line == header_line for line, _, _ in tokens[1:]):
        line, col, _ = next(t for t in tokens[1:] if t[0] == header_line)
        raise ColoringFileError(path, line, col, "n must stand alone on its line")

    body = tokens[1:]
    colors = []
    for line, col, token in body[:n]:
        try:
            value = int(token)
        except ValueError:
            raise ColoringFileError(
                path, line, col, f"expected a color, got '{token}'"
            ) from None
        if not 1 <= value <= k:
            raise ColoringFileError(path, line, col, f"color {value} outside 1..{k}")
        colors.append(value)

    if len(body) < n:
        last_line = len(text.splitlines()) or 1
        raise ColoringFileError(path, last_line, 1, f"expected {n} colors, found {len(body)}")
    if len(body) > n:
        line, col, _ = body[n]
        raise ColoringFileError(path, line, col, f"expected {n} colors, found {len(body)}")
    logger.debug(f"Read {n} colors from {path}")
    return tuple(colors)


def read_coloring(path: Path) -> Coloring:
    return Coloring.from_sequence(read_colors(path, 3))


def read_kcoloring(path: Path, k: int) -> KColoring:
    colors = read_colors(path, k)
    return KColoring(n=len(colors), k=k, colors=colors)


def write_coloring(path: Path, coloring: Coloring | KColoring) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = " ".join(str(c) for c in coloring.colors)
    path.write_text(f"{coloring.n}\n{body}\n", encoding="utf-8")
    logger.info(f"Wrote coloring of [{coloring.n}] to {path}")
