"""Undirected simple graphs with cycle queries, plus plane embeddings.

Graphs are immutable once built.  Adjacency is kept both as frozensets and
as integer bitmasks; the bitmasks are what the search kernels in the other
modules index into, so vertex counts are expected to stay small (the audits
never need more than ~16 vertices).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph input: bad vertex ids, loops, broken invariants."""


class BudgetError(RuntimeError):
    """A search exceeded its configured size or node budget."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "edges", "labels", "adj", "adj_bits", "edge_list")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None):
        if vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        self.vertex_count = vertex_count
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u},{v}) out of range")
            seen.add(_norm_edge(u, v))
        self.edges = frozenset(seen)
        self.edge_list = tuple(sorted(seen))
        self.labels = tuple(labels) if labels is not None else None
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        bits = [0] * vertex_count
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adj = tuple(frozenset(s) for s in adj)
        self.adj_bits = tuple(bits)

    # -- basics ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise GraphError(f"vertex {v} out of range (n={self.vertex_count})")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    # -- derived graphs -------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        return Graph(self.vertex_count, list(self.edges) + [(u, v)], self.labels)

    def identify(self, keep: int, drop: int) -> "Graph":
        """Merge `drop` into `keep`, relabel to keep vertex ids contiguous."""
        self.check_vertex(keep)
        self.check_vertex(drop)
        if keep == drop:
            raise GraphError("cannot identify a vertex with itself")
        remap = {}
        nxt = 0
        for v in range(self.vertex_count):
            if v == drop:
                continue
            remap[v] = nxt
            nxt += 1
        remap[drop] = remap[keep]
        new_edges = set()
        for u, v in self.edges:
            a, b = remap[u], remap[v]
            if a != b:
                new_edges.add(_norm_edge(a, b))
        return Graph(self.vertex_count - 1, new_edges)

    def distance(self, u: int, v: int) -> int:
        """BFS distance; -1 if disconnected."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return 0
        seen = {u}
        frontier = [u]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for w in frontier:
                for x in self.adj[w]:
                    if x == v:
                        return d
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return -1

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        seen_mask = 1
        stack = [0]
        while stack:
            w = stack.pop()
            rest = self.adj_bits[w] & ~seen_mask
            while rest:
                b = rest & -rest
                rest ^= b
                seen_mask |= b
                stack.append(b.bit_length() - 1)
        return seen_mask == (1 << self.vertex_count) - 1

    # -- cycles ----------------------------------------------------------

    def enumerate_cycles(self, max_len: int) -> list[tuple[int, ...]]:
        """All simple cycles of length 3..max_len, once up to rotation/reflection.

        Each cycle is reported with its smallest vertex first and the smaller
        of the two neighbors second.
        """
        if max_len < 3:
            raise GraphError("max_len must be at least 3")
        cycles: list[tuple[int, ...]] = []
        n = self.vertex_count
        for start in range(n):
            # paths start at `start`; all other vertices on the path are > start
            path = [start]
            on_path = 1 << start

            def extend(last: int) -> None:
                nonlocal on_path
                for w in sorted(self.adj[last]):
                    if w == start and len(path) >= 3:
                        if path[1] < path[-1]:  # reflection dedup
                            cycles.append(tuple(path))
                        continue
                    if w <= start or (on_path >> w) & 1 or len(path) >= max_len:
                        continue
                    path.append(w)
                    on_path |= 1 << w
                    extend(w)
                    path.pop()
                    on_path &= ~(1 << w)

            extend(start)
        cycles.sort(key=lambda c: (len(c), c))
        return cycles

    def _chord_count(self, cycle: tuple[int, ...]) -> int:
        k = len(cycle)
        count = 0
        for i in range(k):
            for j in range(i + 1, k):
                if j - i in (1, k - 1):
                    continue
                if self.has_edge(cycle[i], cycle[j]):
                    count += 1
        return count

    def contains_chorded_cycle(self, length: int) -> bool:
        """True iff some `length`-cycle has an edge between non-consecutive vertices."""
        if length < 4:
            raise GraphError("chorded cycles need length >= 4")
        for cycle in self.enumerate_cycles(length):
            if len(cycle) == length and self._chord_count(cycle) >= 1:
                return True
        return False

    def contains_doubly_chorded_cycle(self, length: int) -> bool:
        """True iff some `length`-cycle carries at least two chords."""
        if length < 5:
            raise GraphError("doubly-chorded cycles need length >= 5")
        for cycle in self.enumerate_cycles(length):
            if len(cycle) == length and self._chord_count(cycle) >= 2:
                return True
        return False

    # -- isomorphism-grade canonical key ----------------------------------

    def canonical_key(self, colors: Sequence[object] | None = None) -> tuple:
        """Canonical form of the (vertex-colored) graph by permutation search.

        Brute-force with partition refinement seeding; intended for graphs of
        the sizes handled here (<= ~13 vertices).
        """
        n = self.vertex_count
        cols = tuple(colors) if colors is not None else tuple(0 for _ in range(n))
        if len(cols) != n:
            raise GraphError("color sequence length mismatch")
        # initial classes by (color, degree), iteratively refined by class
        # multiset of neighbor classes
        cls = {v: (cols[v], len(self.adj[v])) for v in range(n)}
        while True:
            sig = {v: (cls[v], tuple(sorted(cls[w] for w in self.adj[v])))
                   for v in range(n)}
            ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
            new = {v: ranks[sig[v]] for v in range(n)}
            if len(set(new.values())) == len(set(cls.values())):
                cls = new
                break
            cls = new

        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(cls[v], []).append(v)
        order_groups = [groups[c] for c in sorted(groups)]

        best: list[tuple] = []

        def key_for(perm: dict[int, int]) -> tuple:
            edges = sorted(_norm_edge(perm[u], perm[v]) for u, v in self.edges)
            colseq = [None] * n
            for v, p in perm.items():
                colseq[p] = cols[v]
            return (tuple(colseq), tuple(edges))

        def assign(gi: int, perm: dict[int, int], used: int) -> None:
            if gi == len(order_groups):
                k = key_for(perm)
                if not best or k < best[0]:
                    best[:] = [k]
                return
            group = order_groups[gi]
            # positions for this group are the next len(group) ids
            base = sum(len(g) for g in order_groups[:gi])
            import itertools
            for orderv in itertools.permutations(group):
                for i, v in enumerate(orderv):
                    perm[v] = base + i
                assign(gi + 1, perm, used)
            for v in group:
                perm.pop(v, None)

        assign(0, {}, 0)
        return best[0]


class PlaneGraph:
    """A graph with an explicit face list (boundary walks, cyclic)."""

    __slots__ = ("graph", "faces")

    def __init__(self, graph: Graph, faces: Sequence[Sequence[int]]):
        self.graph = graph
        self.faces = tuple(tuple(w) for w in faces)
        self._validate()

    def _validate(self) -> None:
        g = self.graph
        if not g.is_connected():
            raise GraphError("plane graph must be connected")
        edge_uses: dict[tuple[int, int], int] = {e: 0 for e in g.edges}
        for walk in self.faces:
            if len(walk) < 3:
                raise GraphError(f"face walk too short: {walk}")
            for i, u in enumerate(walk):
                v = walk[(i + 1) % len(walk)]
                e = _norm_edge(u, v)
                if e not in edge_uses:
                    raise GraphError(f"face walk uses non-edge {e}")
                edge_uses[e] += 1
        bad = [e for e, c in edge_uses.items() if c != 2]
        if bad:
            raise GraphError(f"edges not on exactly two face walks: {sorted(bad)}")
        if g.vertex_count - g.edge_count + len(self.faces) != 2:
            raise GraphError("Euler check |V|-|E|+|F| = 2 failed")

    def face_length(self, index: int) -> int:
        return len(self.faces[index])

    def face_lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.faces)

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.graph.vertex_count}, f={len(self.faces)})"


# -- small constructors used across tests and fixtures ----------------------

def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
