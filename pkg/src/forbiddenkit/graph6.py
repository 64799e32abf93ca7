"""
graph6 codec (short form only, n <= 62 by the format, n <= 32 here).

Layout: one size byte n+63, then the upper triangle read column by
column, x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into 6-bit
groups, zero-padded, each group offset by 63.
"""
from __future__ import annotations

import io
import sys
from typing import Iterable, Iterator, Tuple, Union

from .graph import Graph, GraphError, MAX_VERTICES

HEADER = '>>graph6<<'


class Graph6Error(GraphError):
    """Malformed graph6 input. `line_no` is set by the file reader."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def triangle_bits(g: Graph) -> int:
    """The upper triangle as one int, x(0,1) being the most significant bit."""
    bits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
    return bits


def encode_bits(n: int, bits: int) -> str:
    """graph6 text for n vertices whose column-ordered triangle is `bits`."""
    if not 0 <= n <= 62:
        raise Graph6Error(f"short graph6 form holds at most 62 vertices, got {n}")
    length = n * (n - 1) // 2
    groups = -(-length // 6)
    padded = bits << (groups * 6 - length)
    body = [chr(63 + (padded >> (6 * (groups - 1 - i)) & 0x3F)) for i in range(groups)]
    return chr(63 + n) + ''.join(body)


def graph6_encode(g: Graph) -> str:
    return encode_bits(g.n, triangle_bits(g))


def graph6_decode(text: Union[str, bytes]) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError:
            raise Graph6Error("non-ASCII byte in graph6 line") from None
    line = text.rstrip('\r\n')
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable range 63..126")
    n = ord(line[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 header (n > 62) is not supported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 declares {n} vertices, at most {MAX_VERTICES} supported")
    length = n * (n - 1) // 2
    groups = -(-length // 6)
    body = line[1:]
    if len(body) < groups:
        raise Graph6Error(f"truncated body: {len(body)} of {groups} bytes for n={n}")
    if len(body) > groups:
        raise Graph6Error(f"body too long: {len(body)} bytes, expected {groups} for n={n}")
    padded = 0
    for ch in body:
        padded = padded << 6 | (ord(ch) - 63)
    pad = groups * 6 - length
    if padded & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    bits = padded >> pad
    rows = [0] * n
    position = length
    for j in range(1, n):
        for i in range(j):
            position -= 1
            if bits >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# --- files ---

def _open_source(source):
    if source is None or source == '-':
        return sys.stdin, False
    if isinstance(source, io.IOBase) or hasattr(source, 'read'):
        return source, False
    return open(source, 'r'), True


def read_graph6_file(source=None) -> Iterator[Tuple[int, Graph]]:
    """Yield (line number, graph) for every non-blank line of a path, stream or stdin."""
    stream, owned = _open_source(source)
    try:
        for line_no, raw in enumerate(stream, 1):
            line = raw.strip()
            if line_no == 1 and line.startswith(HEADER):
                line = line[len(HEADER):]
            if not line:
                continue
            try:
                yield line_no, graph6_decode(line)
            except Graph6Error as e:
                raise Graph6Error(str(e), line_no) from None
    finally:
        if owned:
            stream.close()


def write_graph6_file(path, graphs: Iterable[Graph]):
    """Write one LF-terminated graph6 line per graph; returns the line count."""
    count = 0
    with open(path, 'w', newline='\n') as f:
        for g in graphs:
            f.write(graph6_encode(g) + '\n')
            count += 1
    return count
