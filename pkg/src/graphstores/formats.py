"""Text file formats for the command-line front end.

Edge-list files: a header line ``n m``, then one edge per line as ``x y``
with an optional third token holding a weight; ``#`` lines and blank lines
are ignored. Query files: ``C x y`` asks membership, ``N x`` asks for the
neighbor list. Result files carry exactly one line per query: ``1``/``0``
for C, a space-separated target list (store enumeration order) for N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GraphStoreError, VertexRangeError


class ParseError(GraphStoreError):
    """Malformed input file; ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class GraphFile:
    n: int
    m: int
    edges: list[tuple[int, int, float | None]]

    @property
    def has_weights(self) -> bool:
        return any(w is not None for _, _, w in self.edges)


def _significant_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _int_token(token: str, number: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(number, f"{what} must be a decimal integer, got {token!r}") from None


def parse_edge_list(text: str) -> GraphFile:
    """Parse an edge-list file; raises ParseError / VertexRangeError."""
    lines = _significant_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing 'n m' header") from None
    tokens = header.split()
    if len(tokens) != 2:
        raise ParseError(number, f"header must be 'n m', got {header!r}")
    n = _int_token(tokens[0], number, "vertex count")
    m = _int_token(tokens[1], number, "edge count")
    if n < 1:
        raise ParseError(number, f"vertex count must be positive, got {n}")
    if m < 0:
        raise ParseError(number, f"edge count must be nonnegative, got {m}")

    edges: list[tuple[int, int, float | None]] = []
    for number, line in lines:
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(number, f"edge line must be 'x y [weight]', got {line!r}")
        if len(edges) >= m:
            raise ParseError(number, f"more than {m} edge lines")
        x = _int_token(tokens[0], number, "source vertex")
        y = _int_token(tokens[1], number, "target vertex")
        if not (0 <= x < n and 0 <= y < n):
            raise VertexRangeError(f"line {number}: edge ({x}, {y}) outside vertex range [0, {n})")
        weight: float | None = None
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(number, f"weight must be a number, got {tokens[2]!r}") from None
        edges.append((x, y, weight))
    return GraphFile(n=n, m=m, edges=edges)


def parse_queries(text: str) -> list[tuple]:
    """Parse a query file into ("C", x, y) / ("N", x) tuples."""
    queries: list[tuple] = []
    for number, line in _significant_lines(text):
        tokens = line.split()
        if tokens[0] == "C" and len(tokens) == 3:
            queries.append(
                ("C", _int_token(tokens[1], number, "source vertex"),
                 _int_token(tokens[2], number, "target vertex"))
            )
        elif tokens[0] == "N" and len(tokens) == 2:
            queries.append(("N", _int_token(tokens[1], number, "vertex")))
        else:
            raise ParseError(number, f"query must be 'C x y' or 'N x', got {line!r}")
    return queries


def format_results(lines: list[str]) -> str:
    """One result line per query, newline-terminated; empty for no queries."""
    return "\n".join(lines) + "\n" if lines else ""
