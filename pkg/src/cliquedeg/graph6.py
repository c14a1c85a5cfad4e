"""graph6 encoding plus a plain edge-list text fallback.

graph6 layout: a size header (byte 63+n for n <= 62, '~' plus three
6-bit bytes for larger n), then the upper triangle of the adjacency
matrix in column order, six bits per printable byte (offset 63),
zero-padded.  Parsing is strict: wrong length, stray bytes and nonzero
padding are all rejected, with the byte offset of the problem.
"""

from __future__ import annotations

from .graphs import VERTEX_CAP, Graph, ResourceLimitError

_HEADER = ">>graph6<<"


class Graph6ParseError(ValueError):
    """Malformed graph6 or edge-list input; ``offset`` is the byte/line position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def _triangle_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no trailing newline)."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    elif n <= 258047:
        out = ["~", chr(63 + (n >> 12)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    else:
        raise ValueError(f"graph6 encoding for n={n} not supported")
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(63 + (group << (6 - filled))))
    return "".join(out)


def from_graph6(text: str, cap: int = VERTEX_CAP) -> Graph:
    """Decode a graph6 string; raises Graph6ParseError with the failing offset."""
    s = text.rstrip("\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        code = ord(ch)
        if code < 63 or code > 126:
            raise Graph6ParseError(f"byte {code!r} outside graph6 range 63..126", pos)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body_at = 1
    elif len(s) == 1:
        raise Graph6ParseError("truncated extended size header", 1)
    elif s[1] != "~":
        if len(s) < 4:
            raise Graph6ParseError("truncated extended size header", len(s))
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        if n <= 62:
            raise Graph6ParseError(f"non-canonical extended header for n={n}", 0)
        body_at = 4
    else:
        raise Graph6ParseError("8-byte size header not supported", 0)
    if n > cap:
        raise ResourceLimitError(f"vertex count {n} exceeds cap {cap}")
    nbits = _triangle_bit_count(n)
    nchars = (nbits + 5) // 6
    if len(s) - body_at < nchars:
        raise Graph6ParseError(
            f"truncated bit field: need {nchars} bytes, got {len(s) - body_at}", len(s)
        )
    if len(s) - body_at > nchars:
        raise Graph6ParseError("trailing bytes after bit field", body_at + nchars)
    adj = [0] * n
    bit_index = 0
    for k in range(nchars):
        group = ord(s[body_at + k]) - 63
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", body_at + k)
                bit_index += 1
                continue
            if bit:
                i, j = _triangle_position(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph._raw(n, tuple(adj))


def _triangle_position(index: int) -> tuple[int, int]:
    """Map a column-order upper-triangle bit index to its (i, j) pair, i < j."""
    j = 1
    while _triangle_bit_count(j + 1) <= index:
        j += 1
    i = index - _triangle_bit_count(j)
    return i, j


def to_edge_list_text(g: Graph) -> str:
    """Plain text form: a "n m" header line then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str, cap: int = VERTEX_CAP) -> Graph:
    """Parse the "n m" / "u v" edge-list format; strict about counts and ranges."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise Graph6ParseError("empty edge-list input", 0)
    head = lines[0].split()
    if len(head) != 2:
        raise Graph6ParseError("header must be 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise Graph6ParseError("header must be two integers", 1) from None
    if n < 0 or m < 0:
        raise Graph6ParseError("header values must be nonnegative", 1)
    if n > cap:
        raise ResourceLimitError(f"vertex count {n} exceeds cap {cap}")
    if len(lines) - 1 != m:
        raise Graph6ParseError(f"expected {m} edge lines, got {len(lines) - 1}", len(lines))
    adj = [0] * n
    for lineno, line in enumerate(lines[1:], start=2):
        pair = line.split()
        if len(pair) != 2:
            raise Graph6ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(pair[0]), int(pair[1])
        except ValueError:
            raise Graph6ParseError("edge line must be two integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise Graph6ParseError(f"edge ({u}, {v}) out of range 0..{n - 1}", lineno)
        if u == v:
            raise Graph6ParseError(f"loop edge ({u}, {u})", lineno)
        if adj[u] >> v & 1:
            raise Graph6ParseError(f"duplicate edge ({u}, {v})", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._raw(n, tuple(adj))


def load_graph_text(text: str, cap: int = VERTEX_CAP) -> Graph:
    """Read either format: an edge list if the first line is two integers, else graph6."""
    stripped = text.lstrip()
    first = stripped.splitlines()[0] if stripped else ""
    fields = first.split()
    if len(fields) == 2:
        try:
            int(fields[0]), int(fields[1])
        except ValueError:
            pass
        else:
            return from_edge_list_text(text, cap=cap)
    return from_graph6(stripped.splitlines()[0] if stripped else "", cap=cap)
