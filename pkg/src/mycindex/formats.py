"""Bit-exact graph6 and plain edge-list parsing and serialization.

graph6 encodes a labeled graph on one ASCII line: a size header followed
by the upper triangle of the adjacency matrix in column-major order
(x01, x02, x12, x03, ...), packed six bits per printable character with
value offset 63. Writing always emits the canonical (shortest header,
zero padded) form, and parsing rejects anything non-canonical so the
round trip is byte-exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from .graph_core import Graph, build_graph

__all__ = [
    "FormatError",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "stream_graphs",
]

_OFFSET = 63
_MAX_CHAR = 126
_MAX_LONG_N = 258047  # largest n of the 4-byte size header
_HEADER_PREFIX = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph input; carries the source line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number

    def __str__(self) -> str:
        base = super().__str__()
        if self.line_number is not None:
            return f"line {self.line_number}: {base}"
        return base


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts an optional ">>graph6<<" prefix. Rejects characters outside
    63..126, truncated adjacency data, extra trailing characters, nonzero
    padding bits, and non-canonical size headers.
    """
    text = line.rstrip("\r\n")
    if text.startswith(_HEADER_PREFIX):
        text = text[len(_HEADER_PREFIX):]
    if not text:
        raise FormatError("empty graph6 line")

    values = []
    for pos, ch in enumerate(text):
        code = ord(ch)
        if not _OFFSET <= code <= _MAX_CHAR:
            raise FormatError(
                f"character {ch!r} at column {pos + 1} outside graph6 range 63..126"
            )
        values.append(code - _OFFSET)

    # size header
    if values[0] != 63:
        n = values[0]
        body = values[1:]
    else:
        if len(values) < 4:
            raise FormatError("truncated long-form size header")
        if values[1] == 63:
            raise FormatError("graphs with n > 258047 are not supported")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        if n <= 62:
            raise FormatError(
                f"non-canonical size header: n={n} must use the short form"
            )
        body = values[4:]

    k = n * (n - 1) // 2
    needed = (k + 5) // 6
    if len(body) < needed:
        raise FormatError(
            f"truncated bit stream: need {needed} adjacency characters for n={n}, got {len(body)}"
        )
    if len(body) > needed:
        raise FormatError(
            f"trailing data: expected {needed} adjacency characters for n={n}, got {len(body)}"
        )

    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (body[t // 6] >> (5 - t % 6)) & 1:
                edges.append((i, j))
            t += 1
    for t in range(k, 6 * needed):
        if (body[t // 6] >> (5 - t % 6)) & 1:
            raise FormatError("nonzero padding bits after the adjacency data")
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    """Encode a Graph as its canonical graph6 line."""
    n = g.n
    if n > _MAX_LONG_N:
        raise ValueError(f"graph6 output supports n <= {_MAX_LONG_N}, got {n}")
    if n <= 62:
        out = [chr(n + _OFFSET)]
    else:
        out = [
            chr(63 + _OFFSET),
            chr(((n >> 12) & 63) + _OFFSET),
            chr(((n >> 6) & 63) + _OFFSET),
            chr((n & 63) + _OFFSET),
        ]
    group = 0
    filled = 0
    edges = g.edges
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | ((i, j) in edges)
            filled += 1
            if filled == 6:
                out.append(chr(group + _OFFSET))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + _OFFSET))
    return "".join(out)


def _edge_list_lines(doc: Union[str, Iterable[str]]) -> list[str]:
    if isinstance(doc, str):
        return doc.splitlines()
    return list(doc)


def parse_edge_list(doc: Union[str, Iterable[str]]) -> Graph:
    """Parse an edge-list document: a vertex-count header line followed by
    one "u v" pair per line. Lines starting with '#' and blank lines are
    ignored; duplicate pairs collapse.
    """
    n = None
    pairs = []
    for line_no, raw in enumerate(_edge_list_lines(doc), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise FormatError(
                    f"header must be a single vertex count, got {line!r}", line_no
                )
            try:
                n = int(tokens[0])
            except ValueError:
                raise FormatError(f"non-integer vertex count {tokens[0]!r}", line_no) from None
            if n < 0:
                raise FormatError(f"negative vertex count {n}", line_no)
            continue
        if len(tokens) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint in {line!r}", line_no) from None
        if u == v:
            raise FormatError(f"loop edge ({u}, {v})", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) has an endpoint out of range [0, {n})", line_no)
        pairs.append((u, v))
    if n is None:
        raise FormatError("missing header line with the vertex count")
    return build_graph(n, pairs)


def stream_graphs(
    source: Iterable[str], format: str = "graph6"
) -> Iterator[tuple[int, Union[Graph, FormatError]]]:
    """Yield (record index, Graph or FormatError) over a multi-graph source.

    graph6 sources carry one graph per non-blank line; a malformed line
    yields a positioned error and parsing continues. An edge-list source
    is a single document, so it yields at most one record (none when the
    source holds only blanks and comments).
    """
    if format == "graph6":
        index = 0
        for line_no, raw in enumerate(source, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield index, parse_graph6(line)
            except FormatError as err:
                err.line_number = line_no
                yield index, err
            index += 1
    elif format == "edgelist":
        lines = _edge_list_lines(source)
        if all(not line.strip() or line.strip().startswith("#") for line in lines):
            return
        try:
            yield 0, parse_edge_list(lines)
        except FormatError as err:
            yield 0, err
    else:
        raise ValueError(f"unknown format {format!r}, expected 'graph6' or 'edgelist'")
