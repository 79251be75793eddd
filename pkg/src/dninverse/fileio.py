"""Plain-text formats for matrices, sign matrices, and graphs.

All three formats share the same frame: blank lines and lines starting with
'#' are ignored, the first content line is the size n, and what follows
depends on the kind. Matrices have n rows of n whitespace-separated decimals,
sign matrices have n rows of '+'/'-' characters, graphs have one "i j" line
per edge with 1-indexed endpoints. Writers emit 17 significant digits so a
write/read round trip is exact.
"""

from __future__ import annotations

from typing import Iterator

from .densemat import SymMatrix
from .errors import AsymmetricMatrix, DnInverseError
from .graphs import UGraph
from .signpattern import SignMatrix


class ParseError(DnInverseError):
    """Malformed input file; carries the path and a 1-based line number.

    A line number of 0 marks whole-file problems with no single line to blame.
    """

    def __init__(self, path, line_no: int, message: str) -> None:
        self.path = str(path)
        self.line_no = line_no
        self.reason = message
        location = f"{self.path}:{line_no}" if line_no else self.path
        super().__init__(f"{location}: {message}")


def _content_lines(path) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            stripped = raw.strip()
            if stripped and not stripped.startswith("#"):
                yield line_no, stripped


def _read_size(path, lines: Iterator[tuple[int, str]]) -> tuple[int, int]:
    try:
        line_no, text = next(lines)
    except StopIteration:
        raise ParseError(path, 0, "file has no content lines") from None
    try:
        n = int(text)
    except ValueError:
        raise ParseError(path, line_no, f"expected the size n, got {text!r}") from None
    if n < 1:
        raise ParseError(path, line_no, f"size must be at least 1, got {n}")
    return line_no, n


def _no_trailing(path, lines: Iterator[tuple[int, str]]) -> None:
    for line_no, text in lines:
        raise ParseError(path, line_no, f"unexpected extra content {text!r}")


def read_matrix(path) -> SymMatrix:
    """Parse a symmetric matrix file; malformed input raises :class:`ParseError`."""
    lines = _content_lines(path)
    _, n = _read_size(path, lines)
    rows = []
    for i in range(n):
        try:
            line_no, text = next(lines)
        except StopIteration:
            raise ParseError(path, 0, f"expected {n} matrix rows, found {i}") from None
        fields = text.split()
        if len(fields) != n:
            raise ParseError(
                path, line_no, f"expected {n} entries in row {i + 1}, found {len(fields)}"
            )
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise ParseError(path, line_no, f"invalid number in row {i + 1}") from None
    _no_trailing(path, lines)
    try:
        return SymMatrix(rows)
    except (AsymmetricMatrix, ValueError) as exc:
        raise ParseError(path, 0, str(exc)) from None


def write_matrix(path, a: SymMatrix, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if comment:
            for line in comment.splitlines():
                handle.write(f"# {line}\n")
        handle.write(f"{a.n}\n")
        for row in a.entries:
            handle.write(" ".join(f"{value:.17g}" for value in row) + "\n")


def read_sign_matrix(path) -> SignMatrix:
    """Parse a sign matrix file of '+'/'-' rows."""
    lines = _content_lines(path)
    _, n = _read_size(path, lines)
    rows = []
    for i in range(n):
        try:
            line_no, text = next(lines)
        except StopIteration:
            raise ParseError(path, 0, f"expected {n} sign rows, found {i}") from None
        if len(text) != n or any(ch not in "+-" for ch in text):
            raise ParseError(
                path, line_no, f"expected {n} characters from '+-', got {text!r}"
            )
        rows.append(text)
    _no_trailing(path, lines)
    return SignMatrix.from_rows(rows)


def write_sign_matrix(path, s: SignMatrix, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if comment:
            for line in comment.splitlines():
                handle.write(f"# {line}\n")
        handle.write(f"{s.n}\n")
        for row in s.to_rows():
            handle.write(row + "\n")


def read_graph(path) -> UGraph:
    """Parse an edge-list graph file with 1-indexed endpoints."""
    lines = _content_lines(path)
    _, n = _read_size(path, lines)
    edges = []
    seen = set()
    for line_no, text in lines:
        fields = text.split()
        if len(fields) != 2:
            raise ParseError(
                path, line_no, f"expected an edge line 'i j', got {text!r}"
            )
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(path, line_no, f"invalid edge endpoints {text!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(path, line_no, f"edge ({i}, {j}) out of range 1..{n}")
        if i == j:
            raise ParseError(path, line_no, f"self-loop at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(path, line_no, f"duplicate edge ({i}, {j})")
        seen.add(key)
        edges.append((i, j))
    return UGraph(n, edges)


def write_graph(path, g: UGraph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if comment:
            for line in comment.splitlines():
                handle.write(f"# {line}\n")
        handle.write(f"{g.n}\n")
        for i, j in g.edges:
            handle.write(f"{i} {j}\n")
