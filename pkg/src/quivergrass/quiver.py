"""Quivers as directed trees: vertices, arrows, paths and the Euler form.

A quiver here is always an orientation of a tree, and in practice an
orientation of a simply-laced Dynkin diagram (type A or D).  Vertices carry
external integer names (matching the usual figures); internally everything
is indexed densely from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    """A directed path: a non-empty sequence of composable arrow indices."""

    arrows: tuple[int, ...]
    source: int  # internal vertex index
    target: int  # internal vertex index

    def __len__(self):
        return len(self.arrows)


class Quiver:
    """A directed tree with stable vertex and arrow indices.

    Vertices are externally named by positive integers; ``arrows`` is a list
    of (source_name, target_name) pairs.  The underlying undirected graph
    must be a tree (no loops, no multiple edges, connected).
    """

    def __init__(self, vertices: Sequence[int], arrows: Iterable[tuple[int, int]]):
        self.vertex_names = tuple(vertices)
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise QuiverError("duplicate vertex names")
        self._index = {v: k for k, v in enumerate(self.vertex_names)}
        self.n = len(self.vertex_names)
        arrow_list = []
        seen_edges = set()
        for s, t in arrows:
            if s not in self._index or t not in self._index:
                raise QuiverError(f"arrow {s}->{t} uses unknown vertex")
            if s == t:
                raise QuiverError(f"loop at vertex {s}")
            edge = frozenset((s, t))
            if edge in seen_edges:
                raise QuiverError(f"multiple edge between {s} and {t}")
            seen_edges.add(edge)
            arrow_list.append((self._index[s], self._index[t]))
        self.arrows = tuple(arrow_list)  # internal (source, target) pairs
        if len(self.arrows) != self.n - 1:
            raise QuiverError("underlying graph is not a tree (wrong edge count)")
        if self.n and not self._connected():
            raise QuiverError("underlying graph is not connected")
        self.dynkin = classify_tree(self)

    # -- basic structure ---------------------------------------------------

    def _connected(self) -> bool:
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def index(self, name: int) -> int:
        return self._index[name]

    def name(self, idx: int) -> int:
        return self.vertex_names[idx]

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in self.arrows:
            adj[s].append(t)
            adj[t].append(s)
        return adj

    def arrows_out(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_in(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def is_sink(self, v: int) -> bool:
        return not self.arrows_out(v)

    def is_source(self, v: int) -> bool:
        return not self.arrows_in(v)

    def reversed_at(self, v: int) -> "Quiver":
        """The quiver with every arrow incident to vertex ``v`` (external name) reversed."""
        vi = self.index(v)
        new = []
        for s, t in self.arrows:
            if vi in (s, t):
                new.append((self.name(t), self.name(s)))
            else:
                new.append((self.name(s), self.name(t)))
        return Quiver(self.vertex_names, new)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_names, [(self.name(t), self.name(s)) for s, t in self.arrows])

    def check_dimvector(self, d: Sequence[int]) -> tuple[int, ...]:
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise QuiverError(f"dimension vector of length {len(d)}, expected {self.n}")
        if any(x < 0 for x in d):
            raise QuiverError("negative entry in dimension vector")
        return d

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertex_names == other.vertex_names
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertex_names, self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{self.name(s)}->{self.name(t)}" for s, t in self.arrows)
        return f"Quiver({list(self.vertex_names)}; {arrows})"

    # -- Euler form and paths ----------------------------------------------

    def euler_form(self, a: Sequence[int], b: Sequence[int]) -> int:
        """<a, b> = sum_i a_i b_i - sum_{alpha} a_{s(alpha)} b_{t(alpha)}."""
        a = self.check_dimvector_signed(a)
        b = self.check_dimvector_signed(b)
        val = sum(x * y for x, y in zip(a, b))
        val -= sum(a[s] * b[t] for s, t in self.arrows)
        return val

    def check_dimvector_signed(self, d: Sequence[int]) -> tuple[int, ...]:
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise QuiverError(f"vector of length {len(d)}, expected {self.n}")
        return d

    def paths(self) -> list[Path]:
        """All directed paths of length >= 1, each exactly once.

        Finite because the quiver is a tree: a directed path is determined
        by its endpoints.
        """
        out: list[Path] = []
        for v in range(self.n):
            # DFS along arrow directions from v
            stack = [(v, ())]
            while stack:
                cur, arrs = stack.pop()
                if arrs:
                    out.append(Path(arrs, v, cur))
                for a in self.arrows_out(cur):
                    stack.append((self.target(a), arrs + (a,)))
        out.sort(key=lambda p: (len(p), p.arrows))
        return out

    def path_between(self, i: int, j: int) -> Path | None:
        """The directed path from internal vertex i to j, if one exists."""
        for p in self.paths():
            if p.source == i and p.target == j:
                return p
        return None

    def path_order(self) -> list[int]:
        """For type A: internal vertex indices along the underlying path.

        Oriented so that the endpoint with the smaller external name comes
        first; for a single vertex, trivial.
        """
        if self.n == 1:
            return [0]
        adj = self.neighbors()
        ends = [v for v in range(self.n) if len(adj[v]) == 1]
        if len(ends) != 2 or any(len(adj[v]) > 2 for v in range(self.n)):
            raise QuiverError("not a type A quiver")
        start = min(ends, key=lambda v: self.name(v))
        order = [start]
        prev = -1
        cur = start
        while len(order) < self.n:
            nxt = [w for w in adj[cur] if w != prev][0]
            order.append(nxt)
            prev, cur = cur, nxt
        return order


def classify_tree(q: Quiver) -> str:
    """Classify the underlying tree: 'A', 'D' or 'other-tree'."""
    degs = [0] * q.n
    for s, t in q.arrows:
        degs[s] += 1
        degs[t] += 1
    if q.n == 0:
        raise QuiverError("empty quiver")
    if max(degs, default=0) <= 2:
        return "A"
    branch = [v for v in range(q.n) if degs[v] >= 3]
    if len(branch) == 1 and degs[branch[0]] == 3 and q.n >= 4:
        # D_n: one degree-3 vertex, at least two of whose branches are leaves
        b = branch[0]
        adj = q.neighbors()
        arm_lengths = []
        for w in adj[b]:
            length = 1
            prev, cur = b, w
            while True:
                nxt = [x for x in adj[cur] if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arm_lengths.append(length)
        arm_lengths.sort()
        if arm_lengths[0] == 1 and arm_lengths[1] == 1:
            return "D"
    return "other-tree"


def dynkin_type(q: Quiver) -> str:
    """Tag 'A_n', 'D_n' or 'other-tree' for the underlying graph."""
    t = classify_tree(q)
    if t in ("A", "D"):
        return f"{t}_{q.n}"
    return "other-tree"


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver text format.

    One declaration per line::

        vertices: 1 2 3 4
        arrow: 1 -> 2

    Whitespace-insensitive; ``#`` starts a comment.
    """
    vertices: list[int] | None = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise QuiverError(f"line {lineno}: expected 'key: value'")
        key, _, val = line.partition(":")
        key = key.strip().lower()
        if key == "vertices":
            vertices = [int(tok) for tok in val.split()]
        elif key == "arrow":
            if "->" not in val:
                raise QuiverError(f"line {lineno}: arrow needs 'a -> b'")
            s, _, t = val.partition("->")
            arrows.append((int(s.strip()), int(t.strip())))
        else:
            raise QuiverError(f"line {lineno}: unknown declaration {key!r}")
    if vertices is None:
        raise QuiverError("missing 'vertices:' declaration")
    return Quiver(vertices, arrows)


def format_quiver(q: Quiver) -> str:
    lines = ["vertices: " + " ".join(str(v) for v in q.vertex_names)]
    for s, t in q.arrows:
        lines.append(f"arrow: {q.name(s)} -> {q.name(t)}")
    return "\n".join(lines) + "\n"


# -- convenience constructors used all over the test corpus ----------------

def linear_quiver(n: int, orientation: str | None = None) -> Quiver:
    """Type A_n quiver on vertices 1..n.

    ``orientation`` is a string of '>' and '<' of length n-1; default is
    equioriented 1 -> 2 -> ... -> n.
    """
    if orientation is None:
        orientation = ">" * (n - 1)
    if len(orientation) != n - 1:
        raise QuiverError("orientation string has wrong length")
    arrows = []
    for i, c in enumerate(orientation, start=1):
        if c == ">":
            arrows.append((i, i + 1))
        elif c == "<":
            arrows.append((i + 1, i))
        else:
            raise QuiverError(f"bad orientation char {c!r}")
    return Quiver(range(1, n + 1), arrows)


def zigzag_quiver(n: int) -> Quiver:
    """Alternating orientation 1 -> 2 <- 3 -> 4 ... on n vertices."""
    return linear_quiver(n, "".join("><"[i % 2] for i in range(n - 1)))
