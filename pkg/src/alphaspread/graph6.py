"""graph6 short-form codec (n <= 62) and catalog file reading."""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterator

from .graph import Graph

SHORT_FORM_MAX = 62


class Graph6Error(ValueError):
    """Malformed graph6 input. ``lineno`` is set when reading from a file."""

    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def graph6_encode(G: Graph) -> str:
    n = G.n
    if n > SHORT_FORM_MAX:
        raise ValueError(f"short-form graph6 only covers n <= {SHORT_FORM_MAX}")
    bits = [(G.rows[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > SHORT_FORM_MAX:
        raise Graph6Error("only the short form (n <= 62) is supported")
    if n < 1:
        raise Graph6Error("graph6 string encodes zero vertices")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def iter_graph6_lines(lines, start: int = 1) -> Iterator[Graph]:
    """Decode graph6 lines, skipping blanks and ``>`` comments; errors carry the line number."""
    for lineno, line in enumerate(lines, start):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith(">") and not line.startswith(">>graph6<<"):
            continue
        try:
            yield graph6_decode(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), lineno) from None


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return list(iter_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for G in graphs:
            fh.write(graph6_encode(G) + "\n")


def file_sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
