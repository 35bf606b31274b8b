"""Alon-Tarsi orientation certificates.

An orientation certifies f-choosability when every out-degree stays below
the list size and the counts of even- and odd-size Eulerian edge subsets
differ.  Both counts are computed exactly: the primary routine enumerates
edge subsets with balance pruning, and an independent memoized recursion
over (edge index, balance vector) is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import BudgetError, Graph, GraphError

EULERIAN_EDGE_CAP = 30
ORIENTATION_EDGE_CAP = 20


@dataclass(frozen=True)
class EulerianParity:
    ee: int  # Eulerian edge subsets of even size (the empty set counts)
    eo: int


class Orientation:
    """One direction per edge of a simple graph."""

    __slots__ = ("base", "arcs")

    def __init__(self, base: Graph, arcs: Iterable[tuple[int, int]]):
        self.base = base
        arc_list = tuple(arcs)
        covered = set()
        for u, v in arc_list:
            e = (u, v) if u < v else (v, u)
            if e not in base.edges:
                raise GraphError(f"arc ({u},{v}) is not an edge of the base graph")
            if e in covered:
                raise GraphError(f"edge {e} directed twice")
            covered.add(e)
        if covered != base.edges:
            raise GraphError("every edge needs exactly one direction")
        self.arcs = tuple(sorted(arc_list))

    @classmethod
    def from_bits(cls, base: Graph, bits: int) -> "Orientation":
        """Bit i directs edge_list[i]; 0 means low->high."""
        arcs = []
        for i, (u, v) in enumerate(base.edge_list):
            arcs.append((v, u) if (bits >> i) & 1 else (u, v))
        return cls(base, arcs)

    def direction_bits(self) -> int:
        bits = 0
        arcset = set(self.arcs)
        for i, (u, v) in enumerate(self.base.edge_list):
            if (v, u) in arcset:
                bits |= 1 << i
        return bits

    def out_degree(self, v: int) -> int:
        self.base.check_vertex(v)
        return sum(1 for a, _ in self.arcs if a == v)

    def in_degree(self, v: int) -> int:
        self.base.check_vertex(v)
        return sum(1 for _, b in self.arcs if b == v)

    def out_degrees(self) -> tuple[int, ...]:
        d = [0] * self.base.vertex_count
        for a, _ in self.arcs:
            d[a] += 1
        return tuple(d)

    def reversed(self) -> "Orientation":
        return Orientation(self.base, [(b, a) for a, b in self.arcs])

    def __repr__(self) -> str:
        return f"Orientation({self.arcs})"


def eulerian_counts(d: Orientation, cap: int = EULERIAN_EDGE_CAP) -> EulerianParity:
    """Exact (EE, EO) over edge subsets balanced at every vertex."""
    arcs = d.arcs
    m = len(arcs)
    if m > cap:
        raise BudgetError(f"{m} edges exceeds the Eulerian subset cap {cap}")
    n = d.base.vertex_count
    # remaining incident arcs per vertex, for pruning: a partial balance can
    # still reach zero only if |balance| <= remaining incidences
    remaining = [0] * (m + 1)
    inc_after = [[0] * n for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        u, v = arcs[i]
        for w in range(n):
            inc_after[i][w] = inc_after[i + 1][w]
        inc_after[i][u] += 1
        inc_after[i][v] += 1
    counts = [0, 0]
    balance = [0] * n

    def walk(i: int, size: int) -> None:
        if i == m:
            counts[size & 1] += 1
            return
        u, v = arcs[i]
        after = inc_after[i + 1]
        # skip arc i
        if abs(balance[u]) <= after[u] and abs(balance[v]) <= after[v]:
            walk(i + 1, size)
        # take arc i (u -> v): out at u, in at v
        balance[u] += 1
        balance[v] -= 1
        if abs(balance[u]) <= after[u] and abs(balance[v]) <= after[v]:
            walk(i + 1, size + 1)
        balance[u] -= 1
        balance[v] += 1

    walk(0, 0)
    return EulerianParity(counts[0], counts[1])


def eulerian_counts_recursive(d: Orientation) -> EulerianParity:
    """Independent oracle: memoized recursion on (edge index, balance vector)."""
    arcs = d.arcs
    n = d.base.vertex_count

    @lru_cache(maxsize=None)
    def count(i: int, balance: tuple[int, ...]) -> tuple[int, int]:
        if i == len(arcs):
            return (1, 0) if all(b == 0 for b in balance) else (0, 0)
        u, v = arcs[i]
        ee, eo = count(i + 1, balance)
        b = list(balance)
        b[u] += 1
        b[v] -= 1
        ee2, eo2 = count(i + 1, tuple(b))
        # taking an arc flips subset-size parity
        return (ee + eo2, eo + ee2)

    ee, eo = count(0, tuple([0] * n))
    count.cache_clear()
    return EulerianParity(ee, eo)


def is_alon_tarsi(d: Orientation, f: Sequence[int]) -> bool:
    """Out-degrees below the list sizes and EE != EO."""
    if len(f) != d.base.vertex_count:
        raise GraphError("f must assign a size to every vertex")
    if any(dd > f[v] - 1 for v, dd in enumerate(d.out_degrees())):
        return False
    parity = eulerian_counts(d)
    return parity.ee != parity.eo


def find_at_orientation(g: Graph, f: Sequence[int],
                        cap: int = ORIENTATION_EDGE_CAP) -> Orientation | None:
    """Lexicographically first Alon-Tarsi orientation, or None.

    Sweeps direction vectors in lexicographic order (bit 0 = low->high on
    the sorted edge list), pruning on partial out-degree bounds.
    """
    if len(f) != g.vertex_count:
        raise GraphError("f must assign a size to every vertex")
    m = g.edge_count
    if m > cap:
        raise BudgetError(f"{m} edges exceeds the orientation sweep cap {cap}")
    limits = [f[v] - 1 for v in range(g.vertex_count)]
    if any(l < 0 for l in limits):
        return None
    edges = g.edge_list
    # residual capacity prune: every undirected edge raises some out-degree
    out = [0] * g.vertex_count

    def sweep(i: int, bits: int) -> int | None:
        if i == m:
            cand = Orientation.from_bits(g, bits)
            parity = eulerian_counts(cand)
            return bits if parity.ee != parity.eo else None
        if sum(min(limits[v] - out[v], sum(1 for u, w in edges[i:] if v in (u, w)))
               for v in range(g.vertex_count)) < m - i:
            return None
        u, v = edges[i]
        for flip in (0, 1):
            tail = v if flip else u
            if out[tail] < limits[tail]:
                out[tail] += 1
                res = sweep(i + 1, bits | (flip << i))
                out[tail] -= 1
                if res is not None:
                    return res
        return None

    bits = sweep(0, 0)
    return Orientation.from_bits(g, bits) if bits is not None else None
