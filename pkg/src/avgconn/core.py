"""Graph, digraph and orientation types plus the parsing/serialization layer.

Vertices are dense integers 0..n-1.  Edges are stored as (a, b) pairs with
a < b, sorted lexicographically; the position of an edge in that sorted list
is its *edge index*.  Edge indices are a public contract: orientation bit
vectors, hex serializations and search witnesses all refer to edges by this
index, so results are reproducible across runs.

All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "Digraph",
    "Orientation",
    "ParseError",
    "from_edge_list",
    "from_graph6",
    "to_graph6",
    "parse_edge_list_text",
    "to_edge_list_text",
    "parse_arc_list_text",
    "orient",
    "to_digraph",
    "reverse",
    "bits_to_hex",
    "bits_from_hex",
    "is_connected",
    "is_2_connected",
    "is_2_edge_connected",
    "degree_sequence",
    "in_out_degrees",
    "fraction_json",
]

Rational = Fraction  # exact arithmetic for every average, bound and ratio


class ParseError(ValueError):
    """Malformed textual input.  ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices 0..n-1 with an indexed edge list."""

    __slots__ = ("n", "edges", "adjacency", "edge_index")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        edges: list[tuple[int, int]] = []
        for pair in pairs:
            a, b = pair
            if a == b:
                raise ValueError(f"self-loop rejected: {pair!r}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"vertex out of range 0..{n - 1}: {pair!r}")
            if a > b:
                a, b = b, a
            if (a, b) in seen:
                raise ValueError(f"duplicate edge rejected: {pair!r}")
            seen.add((a, b))
            edges.append((a, b))
        edges.sort()
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        self.n = n
        self.edges = tuple(edges)
        self.adjacency = tuple(tuple(sorted(nb)) for nb in adj)
        self.edge_index = {e: i for i, e in enumerate(edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edge_index

    def without_edge(self, a: int, b: int) -> "Graph":
        e = (min(a, b), max(a, b))
        return Graph(self.n, [f for f in self.edges if f != e])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Directed graph; antiparallel arc pairs allowed, loops and duplicates not."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        arc_list: list[tuple[int, int]] = []
        for arc in arcs:
            u, v = arc
            if u == v:
                raise ValueError(f"self-loop rejected: {arc!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range 0..{n - 1}: {arc!r}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc rejected: {arc!r}")
            seen.add((u, v))
            arc_list.append((u, v))
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in arc_list:
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.n = n
        self.arcs = tuple(arc_list)
        self.out_adj = tuple(tuple(sorted(a)) for a in out_adj)
        self.in_adj = tuple(tuple(sorted(a)) for a in in_adj)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and set(self.arcs) == set(other.arcs)
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.arcs)))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class Orientation:
    """A graph plus one direction bit per edge.

    Bit i = 0 orients edge i = (a, b) as the arc (a, b); bit i = 1 as (b, a).
    """

    __slots__ = ("graph", "bits")

    def __init__(self, graph: Graph, bits: Sequence[int] | str):
        if isinstance(bits, str):
            bits = [int(c) for c in bits]
        bits = tuple(int(b) for b in bits)
        if len(bits) != graph.m:
            raise ValueError(
                f"bit vector length {len(bits)} != edge count {graph.m}"
            )
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        self.graph = graph
        self.bits = bits

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (b, a) if bit else (a, b)
            for (a, b), bit in zip(self.graph.edges, self.bits)
        )

    def flip(self, i: int) -> "Orientation":
        bits = list(self.bits)
        bits[i] ^= 1
        return Orientation(self.graph, bits)

    def reverse(self) -> "Orientation":
        return Orientation(self.graph, [b ^ 1 for b in self.bits])

    def bits_int(self) -> int:
        mask = 0
        for i, b in enumerate(self.bits):
            mask |= b << i
        return mask

    @classmethod
    def from_bits_int(cls, graph: Graph, mask: int) -> "Orientation":
        return cls(graph, [(mask >> i) & 1 for i in range(graph.m)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.bits))

    def __repr__(self) -> str:
        return f"Orientation(n={self.graph.n}, bits={''.join(map(str, self.bits))})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical Graph from unordered vertex pairs."""
    return Graph(n, pairs)


def orient(graph: Graph, bits: Sequence[int] | str) -> Orientation:
    return Orientation(graph, bits)


def to_digraph(o: Orientation) -> Digraph:
    return Digraph(o.graph.n, o.arcs())


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, [(v, u) for (u, v) in d.arcs])


# ----------------------------------------------------------------------
# graph6 codec (McKay's format): printable bytes 63..126, optional
# ">>graph6<<" header, N(n) size prefix, then the upper triangle of the
# adjacency matrix in column-major order packed 6 bits per byte.
# ----------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return (
            chr(126)
            + chr(126)
            + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
        )
    raise ValueError(f"graph6 cannot encode n={n}")


def _g6_decode_n(s: str) -> tuple[int, int]:
    """Return (n, chars consumed); raise ParseError with the bad offset."""
    if not s:
        raise ParseError("empty graph6 string", 0)
    if ord(s[0]) != 126:
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and ord(s[1]) == 126:
        if len(s) < 8:
            raise ParseError("truncated graph6 size field", len(s))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (ord(s[i]) - 63)
        return n, 8
    if len(s) < 4:
        raise ParseError("truncated graph6 size field", len(s))
    n = 0
    for i in range(1, 4):
        n = (n << 6) | (ord(s[i]) - 63)
    return n, 4


def from_graph6(text: str) -> Graph:
    """Parse one graph from its graph6 encoding."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", i)
    n, pos = _g6_decode_n(s)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise ParseError(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)}",
            pos + min(len(body), nbytes),
        )
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits", pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a Graph in graph6 (no header)."""
    out = [_g6_encode_n(g.n)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        chunk += [0] * (6 - len(chunk))
        v = 0
        for b in chunk:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# ----------------------------------------------------------------------
# Plain-text formats: first line "n m", then m lines "a b".
# ----------------------------------------------------------------------

def parse_edge_list_text(text: str) -> Graph:
    n, pairs = _parse_pairs_text(text)
    return Graph(n, pairs)


def parse_arc_list_text(text: str) -> Digraph:
    n, pairs = _parse_pairs_text(text)
    return Digraph(n, pairs)


def _parse_pairs_text(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge list", 0)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}", 0)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}", 0) from None
    if len(lines) - 1 != m:
        raise ParseError(f"declared m={m} but found {len(lines) - 1} pair lines", 0)
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'a b', got {ln!r}", 0)
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer pair {ln!r}", 0) from None
    return n, pairs


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Orientation bit-vector hex serialization.  Bit i of the vector lands in
# byte i // 8 at position 7 - (i % 8) (most significant bit first); edge
# count comes from the accompanying base graph.
# ----------------------------------------------------------------------

def bits_to_hex(bits: Sequence[int]) -> str:
    nbytes = (len(bits) + 7) // 8
    buf = bytearray(nbytes)
    for i, b in enumerate(bits):
        if b:
            buf[i // 8] |= 1 << (7 - i % 8)
    return buf.hex()

def bits_from_hex(hx: str, m: int) -> tuple[int, ...]:
    if len(hx) != 2 * ((m + 7) // 8):
        raise ParseError(f"hex bit vector length {len(hx)} wrong for m={m}", 0)
    try:
        buf = bytes.fromhex(hx)
    except ValueError:
        raise ParseError(f"invalid hex bit vector {hx!r}", 0) from None
    bits = tuple((buf[i // 8] >> (7 - i % 8)) & 1 for i in range(m))
    trailing = sum(
        (buf[i // 8] >> (7 - i % 8)) & 1 for i in range(m, 8 * len(buf))
    )
    if trailing:
        raise ParseError("nonzero padding bits in hex bit vector", len(hx) - 1)
    return bits


# ----------------------------------------------------------------------
# Structural predicates.
# ----------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def _dfs_low(g: Graph):
    """Iterative DFS returning (disc, low, parent, order); -1 = unvisited."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    order = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        order.append(root)
        while stack:
            u, i = stack[-1]
            if i < len(g.adjacency[u]):
                stack[-1] = (u, i + 1)
                w = g.adjacency[u][i]
                if disc[w] == -1:
                    parent[w] = u
                    disc[w] = low[w] = timer
                    timer += 1
                    order.append(w)
                    stack.append((w, 0))
                elif w != parent[u]:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if parent[u] != -1:
                    low[parent[u]] = min(low[parent[u]], low[u])
    return disc, low, parent, order


def is_2_edge_connected(g: Graph) -> bool:
    """Connected with no bridge (K_1 counts vacuously)."""
    if not is_connected(g):
        return False
    if g.n == 1:
        return True
    disc, low, parent, _ = _dfs_low(g)
    return all(low[v] < disc[v] for v in range(g.n) if parent[v] != -1)


def is_2_connected(g: Graph) -> bool:
    """No cut vertex; requires n >= 3."""
    if g.n < 3 or not is_connected(g):
        return False
    disc, low, parent, _ = _dfs_low(g)
    root_children = sum(1 for v in range(g.n) if parent[v] == 0)
    if root_children > 1:
        return False
    for v in range(1, g.n):
        if parent[v] > 0 and low[v] >= disc[parent[v]]:
            return False
    return True


def degree_sequence(g: Graph) -> list[int]:
    """Degrees in nondecreasing order."""
    return sorted(len(a) for a in g.adjacency)


def in_out_degrees(d: Digraph) -> list[tuple[int, int]]:
    """Per-vertex (in-degree, out-degree)."""
    return [(len(d.in_adj[v]), len(d.out_adj[v])) for v in range(d.n)]


def fraction_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}
