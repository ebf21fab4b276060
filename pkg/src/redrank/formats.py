"""Graph interchange formats: graph6 and a plain edge-list format.

graph6 (bit-exact): the order is encoded as byte 63 + n for n <= 62,
or as '~' followed by three bytes carrying an 18-bit big-endian value
for 63 <= n <= 258047.  The upper-triangle adjacency bits follow in
column-major order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed
big-endian into 6-bit groups, each emitted as byte value 63 + group;
trailing pad bits are zero.  One graph per line.

Edge list: first line "n m", then m lines "u v" with 0-based vertex
indices; blank lines and '#' comments are ignored anywhere.

All parse failures raise FormatError carrying a 1-based line and,
where it makes sense, a 1-based column.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .graphs import Graph

_OFFSET = 63
_LONG_MARK = 126  # '~'
_MAX_SHORT = 62
_MAX_LONG = 258047


class FormatError(ValueError):
    """Malformed graph input, with position information."""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


# ── graph6 ───────────────────────────────────────────────────────


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= _MAX_SHORT:
        head = [chr(_OFFSET + n)]
    elif n <= _MAX_LONG:
        head = [chr(_LONG_MARK),
                chr(_OFFSET + (n >> 12 & 63)),
                chr(_OFFSET + (n >> 6 & 63)),
                chr(_OFFSET + (n & 63))]
    else:
        raise ValueError(f"graph6 supports at most {_MAX_LONG} vertices")
    out = head
    group = 0
    filled = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(_OFFSET + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(_OFFSET + (group << (6 - filled))))
    return "".join(out)


def graph6_decode(text: str, line: int = 1) -> Graph:
    if not text:
        raise FormatError("empty graph6 string", line, 1)
    for pos, ch in enumerate(text, start=1):
        if not (_OFFSET <= ord(ch) <= 126):
            raise FormatError(f"byte {ord(ch)} outside graph6 range 63..126",
                              line, pos)
    if ord(text[0]) != _LONG_MARK:
        n = ord(text[0]) - _OFFSET
        body_at = 1
    else:
        if len(text) < 4:
            raise FormatError("truncated long-form order", line, len(text) + 1)
        if ord(text[1]) == _LONG_MARK:
            raise FormatError("order beyond the supported long form", line, 2)
        n = ((ord(text[1]) - _OFFSET) << 12 | (ord(text[2]) - _OFFSET) << 6
             | (ord(text[3]) - _OFFSET))
        if n <= _MAX_SHORT:
            raise FormatError(f"long-form order {n} must use the short form",
                              line, 2)
        body_at = 4
    need = (n * (n - 1) // 2 + 5) // 6
    have = len(text) - body_at
    if have != need:
        raise FormatError(
            f"order {n} needs {need} adjacency bytes, found {have}",
            line, body_at + min(have, need) + 1)
    rows = [0] * n
    bit_at = 0
    for off in range(need):
        group = ord(text[body_at + off]) - _OFFSET
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if bit_at >= n * (n - 1) // 2:
                if bit:
                    raise FormatError("nonzero padding bits", line,
                                      body_at + off + 1)
                continue
            i, j = _triangle_position(bit_at)
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_at += 1
    return Graph._raw(n, tuple(rows))


def _triangle_position(index: int) -> tuple[int, int]:
    """The (i, j) pair, i < j, at a column-major upper-triangle index."""
    j = 1
    while j * (j - 1) // 2 + j <= index:
        j += 1
    return index - j * (j - 1) // 2, j


def parse_graph6(text: str) -> list[Graph]:
    """All graphs in a graph6 document, one per line; blank lines and
    the conventional '>>graph6<<' header are ignored."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped == ">>graph6<<":
            continue
        out.append(graph6_decode(stripped, lineno))
    return out


# ── edge list ────────────────────────────────────────────────────


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield lineno, stripped


def _two_ints(stripped: str, lineno: int, what: str) -> tuple[int, int]:
    parts = stripped.split()
    if len(parts) != 2:
        raise FormatError(f"{what} needs two integers", lineno, 1)
    values = []
    col = 1
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise FormatError(f"{what}: {part!r} is not an integer",
                              lineno, stripped.index(part) + 1) from None
        col += len(part) + 1
    return values[0], values[1]


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty edge-list document", 1, 1)
    head_line, head = lines[0]
    n, m = _two_ints(head, head_line, "header")
    if n < 0 or m < 0:
        raise FormatError("header counts must be non-negative", head_line, 1)
    if len(lines) - 1 != m:
        raise FormatError(
            f"header announces {m} edges, found {len(lines) - 1} edge lines",
            head_line, 1)
    edges = []
    seen = set()
    for lineno, body in lines[1:]:
        u, v = _two_ints(body, lineno, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}",
                              lineno, 1)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno, 1)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({key[0]}, {key[1]})", lineno, 1)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Best-effort input classification: 'edges' when the first content
    line is two integers (an edge-list header), else 'graph6'."""
    for _, stripped in _content_lines(text):
        if stripped == ">>graph6<<":
            return "graph6"
        parts = stripped.split()
        if len(parts) == 2:
            try:
                int(parts[0]), int(parts[1])
                return "edges"
            except ValueError:
                pass
        return "graph6"
    return "graph6"
