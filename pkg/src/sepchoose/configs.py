"""Configurations: a plane-drawable graph, a deletable vertex set, and
per-vertex external degree bounds.

The external degree EX_INF marks a vertex whose neighborhood outside the
configuration is unconstrained (it models an arbitrarily precolored
neighbor); such vertices never sit in the deletable set and always get
list size 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import ChoosabilityVerdict, DEFAULT_BUDGET, is_fs_choosable
from .graphs import Graph, GraphError, PlaneGraph

EX_INF: None = None  # sentinel, never arithmetic


@dataclass(frozen=True)
class Configuration:
    name: str
    graph: Graph
    x: frozenset[int]
    ex: tuple[int | None, ...]

    def __post_init__(self):
        n = self.graph.vertex_count
        if len(self.ex) != n:
            raise GraphError("ex must be defined on every vertex")
        for v in self.x:
            self.graph.check_vertex(v)
            if self.ex[v] not in (0, 1, 2):
                raise GraphError(
                    f"vertex {v} in X needs ex in 0..2, got {self.ex[v]}")

    def list_size(self, v: int) -> int:
        self.graph.check_vertex(v)
        if v in self.x:
            return 4 - self.ex[v]  # type: ignore[operator]
        return 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.list_size(v) for v in range(self.graph.vertex_count))

    def canonical_key(self) -> tuple:
        colors = [(self.list_size(v), v in self.x)
                  for v in range(self.graph.vertex_count)]
        return self.graph.canonical_key(colors)

    def is_isomorphic(self, other: "Configuration") -> bool:
        return self.canonical_key() == other.canonical_key()


def list_size(conf: Configuration, v: int) -> int:
    return conf.list_size(v)


def apply_iteration(conf: Configuration, u: int, v: int) -> Configuration:
    """Add the edge uv and lower both external degrees by one.

    Keeps reducibility (checked, not assumed, by the test suite): removing
    a shared color pair from the two enlarged lists turns any assignment of
    the new configuration into one of the old.
    """
    if u not in conf.x or v not in conf.x:
        raise GraphError("iteration endpoints must lie in X")
    if conf.graph.has_edge(u, v):
        raise GraphError("iteration endpoints must be nonadjacent")
    if conf.ex[u] is None or conf.ex[v] is None or conf.ex[u] < 1 or conf.ex[v] < 1:
        raise GraphError("iteration needs external degree >= 1 at both ends")
    ex = list(conf.ex)
    ex[u] -= 1  # type: ignore[operator]
    ex[v] -= 1  # type: ignore[operator]
    return Configuration(f"{conf.name}+{u}{v}", conf.graph.with_edge(u, v),
                         conf.x, tuple(ex))


def is_reducible(conf: Configuration, budget: int = DEFAULT_BUDGET,
                 mode: str = "auto") -> ChoosabilityVerdict:
    """Reducible means the graph is (f,2)-choosable for the derived sizes."""
    return is_fs_choosable(conf.graph, conf.f_vector(), 2,
                           budget=budget, mode=mode)


# ---------------------------------------------------------------------------
# clusters of 3-faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cluster:
    """A maximal edge-connected arrangement of 3-faces, as a plane fragment."""
    kind: str           # triangle, diamond, fan, wheel, strip, or a named case
    k: int              # number of 3-faces
    fragment: PlaneGraph
    triangles: tuple[tuple[int, ...], ...]
    separating_3cycle: bool = False

    def __post_init__(self):
        for t in self.triangles:
            if len(t) != 3:
                raise GraphError("cluster faces must be triangles")
        if len(self.triangles) != self.k:
            raise GraphError("cluster must carry exactly k 3-faces")
        if self.kind == "fan":
            apex = self._common_vertex()
            if self.fragment.graph.degree(apex) < self.k + 1:
                raise GraphError("fan apex needs degree >= k+1")
        if self.kind == "wheel":
            hub = self._common_vertex()
            if self.fragment.graph.degree(hub) != self.k:
                raise GraphError("wheel hub needs degree exactly k")
        if self.kind == "strip":
            for a, b in zip(self.triangles, self.triangles[1:]):
                if len(set(a) & set(b)) != 2:
                    raise GraphError("consecutive strip faces must share an edge")
            for a, b in zip(self.triangles, self.triangles[2:]):
                if len(set(a) & set(b)) != 1:
                    raise GraphError("strip faces two apart must share one vertex")

    def _common_vertex(self) -> int:
        common = set(self.triangles[0])
        for t in self.triangles[1:]:
            common &= set(t)
        if len(common) != 1:
            raise GraphError(f"{self.kind} cluster needs one common vertex")
        return next(iter(common))


def _fragment(n: int, edges, faces) -> PlaneGraph:
    return PlaneGraph(Graph(n, edges), faces)


def make_triangle_cluster() -> Cluster:
    pg = _fragment(3, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2), (0, 2, 1)])
    return Cluster("triangle", 1, pg, ((0, 1, 2),))


def make_diamond_cluster() -> Cluster:
    pg = _fragment(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
                   [(0, 1, 3), (1, 2, 3), (0, 3, 2, 1)])
    return Cluster("diamond", 2, pg, ((0, 1, 3), (1, 2, 3)))


def make_fan_cluster(k: int) -> Cluster:
    """k 3-faces around an apex of degree k+1 (named (K5a) at k=3, (K6b) at k=4)."""
    if k < 2:
        raise GraphError("fans need k >= 2")
    apex = 0
    rim = list(range(1, k + 2))
    edges = [(apex, r) for r in rim] + [(rim[i], rim[i + 1]) for i in range(k)]
    tris = tuple((apex, rim[i], rim[i + 1]) for i in range(k))
    outer = tuple([apex] + rim[::-1])
    return Cluster("fan", k, _fragment(k + 2, edges, list(tris) + [outer]), tris)


def make_wheel_cluster(k: int) -> Cluster:
    """k 3-faces around a hub of degree exactly k ((K5b) at k=4, (K6e) at k=5)."""
    if k < 3:
        raise GraphError("wheels need k >= 3")
    hub = 0
    rim = list(range(1, k + 1))
    edges = [(hub, r) for r in rim] + [(rim[i], rim[(i + 1) % k]) for i in range(k)]
    tris = tuple((hub, rim[i], rim[(i + 1) % k]) for i in range(k))
    return Cluster("wheel", k, _fragment(k + 1, edges, list(tris) + [tuple(rim[::-1])]),
                   tris)


def make_strip_cluster(k: int) -> Cluster:
    """k 3-faces in a zigzag; consecutive faces share an edge ((K6a) at k=4)."""
    if k < 2:
        raise GraphError("strips need k >= 2")
    n = k + 2
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    tris = tuple((i, i + 1, i + 2) for i in range(k))
    evens = [i for i in range(n) if i % 2 == 0]
    odds = [i for i in range(n) if i % 2 == 1]
    outer = tuple(evens + odds[::-1])
    return Cluster("strip", k, _fragment(n, edges, list(tris) + [outer]), tris)


def make_k5c_cluster() -> Cluster:
    """Four 3-faces from a 4-fan with its end vertices identified (K5c).

    The triangle 0-2-3 is a separating 3-cycle in any host graph.
    """
    edges = [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4), (2, 4), (0, 3), (0, 4)]
    tris = ((0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4))
    faces = list(tris) + [(0, 1, 3), (0, 2, 4)]
    return Cluster("K5c", 4, _fragment(5, edges, faces), tris, separating_3cycle=True)


def make_k6c_cluster() -> Cluster:
    """A central 3-face adjacent to three outer 3-faces (K6c)."""
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)]
    tris = ((0, 1, 2), (0, 1, 3), (1, 2, 4), (0, 2, 5))
    faces = list(tris) + [(3, 1, 4, 2, 5, 0)]
    return Cluster("K6c", 4, _fragment(6, edges, faces), tris)


def make_k6d_cluster() -> Cluster:
    """A 4-wheel plus one 3-face hanging off a rim edge (K6d)."""
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
             (4, 5), (1, 5)]
    tris = ((0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1), (1, 4, 5))
    faces = list(tris) + [(1, 5, 4, 3, 2)]
    return Cluster("K6d", 5, _fragment(6, edges, faces), tris)


def make_k6f_cluster() -> Cluster:
    """Two 4-wheels (hubs 0 and 1) overlapping on two interior 3-faces (K6f)."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (3, 4),
             (1, 5), (2, 5), (3, 5)]
    tris = ((0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4), (1, 2, 5), (1, 3, 5))
    faces = list(tris) + [(2, 4, 3, 5)]
    return Cluster("K6f", 6, _fragment(6, edges, faces), tris)
