"""Template constructions for reducible configurations.

Two families are generated.  Both hang an extra-special path (internal
2-lists except one consecutive pair of 3-lists guarded by a precolored
apex) and a special path (internal 2-lists) off a triangle:

* B1: triangle u-v-w with external degrees (2, 0, 2), an extra-special
  u..v path and a special v..w path.
* B2: triangle v-w-r with r precolored, external degrees (0, 1) at (v, w),
  a pendant vertex u adjacent to v with external degree 2, an extra-special
  u..v path and a special v..w path.

Path lengths count internal vertices; the tripod position indexes the
first vertex of the consecutive pair along the extra-special path,
starting from u.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configs import EX_INF, Configuration
from .coloring import SpecialPath
from .graphs import Graph, GraphError


@dataclass(frozen=True)
class TemplateInstance:
    configuration: Configuration
    extra_special: SpecialPath   # u..v with tripod
    special: SpecialPath         # v..w
    lists_key: tuple             # (kind, p1_len, tripod_pos, p2_len)


def build_template(kind: str, p1_len: int, p1_tripod_pos: int,
                   p2_len: int) -> TemplateInstance:
    if kind not in ("B1", "B2"):
        raise GraphError(f"unknown template kind {kind!r}")
    if p1_len < 2:
        raise GraphError("the extra-special path needs at least two internals")
    if not (0 <= p1_tripod_pos <= p1_len - 2):
        raise GraphError(f"tripod position {p1_tripod_pos} impossible for "
                         f"p1_len={p1_len}")
    if p2_len < 1:
        raise GraphError("the special path needs at least one internal")

    u, v, w = 0, 1, 2
    nxt = 3
    edges: list[tuple[int, int]] = [(u, v), (v, w)]
    ex: dict[int, int | None] = {}
    if kind == "B1":
        edges.append((u, w))
        ex[u] = 2
        ex[v] = 0
        ex[w] = 2
        r = None
    else:
        r = nxt
        nxt += 1
        edges += [(v, r), (w, r)]
        ex[u] = 2
        ex[v] = 0
        ex[w] = 1
        ex[r] = EX_INF

    p1 = list(range(nxt, nxt + p1_len))
    nxt += p1_len
    z = nxt
    nxt += 1
    chain = [u] + p1 + [v]
    edges += list(zip(chain, chain[1:]))
    x_vtx, y_vtx = p1[p1_tripod_pos], p1[p1_tripod_pos + 1]
    edges += [(x_vtx, z), (y_vtx, z)]
    for p in p1:
        ex[p] = 1 if p in (x_vtx, y_vtx) else 2
    ex[z] = EX_INF

    p2 = list(range(nxt, nxt + p2_len))
    nxt += p2_len
    chain2 = [v] + p2 + [w]
    edges += list(zip(chain2, chain2[1:]))
    for q in p2:
        ex[q] = 2

    graph = Graph(nxt, edges)
    x_set = frozenset(i for i in range(nxt) if i != z and i != r)
    conf = Configuration(f"{kind.lower()}_p{p1_len}t{p1_tripod_pos}q{p2_len}",
                         graph, x_set, tuple(ex[i] for i in range(nxt)))

    sub1 = sorted([u, v] + p1 + [z])
    map1 = {orig: i for i, orig in enumerate(sub1)}
    g1 = Graph(len(sub1), [(map1[a], map1[b]) for a, b in graph.edges
                           if a in map1 and b in map1
                           and not {a, b} <= {u, v, w}])
    extra = SpecialPath(g1, map1[u], map1[v],
                        (map1[x_vtx], map1[y_vtx], map1[z]))

    sub2 = sorted([v, w] + p2)
    map2 = {orig: i for i, orig in enumerate(sub2)}
    g2 = Graph(len(sub2), [(map2[a], map2[b]) for a, b in graph.edges
                           if a in map2 and b in map2
                           and not {a, b} <= {u, v, w} and (r is None or r not in (a, b))])
    special = SpecialPath(g2, map2[v], map2[w])

    return TemplateInstance(conf, extra, special,
                            (kind, p1_len, p1_tripod_pos, p2_len))


def shipped_instances(max_vertices: int = 10) -> list[TemplateInstance]:
    """Every B1/B2 instance within the audited size range, deterministically."""
    out = []
    for kind, base in (("B1", 4), ("B2", 5)):  # triangle+z (+r for B2)
        p1 = 2
        while base + p1 + 1 <= max_vertices:
            for pos in range(p1 - 1):
                p2 = 1
                while base + p1 + p2 <= max_vertices:
                    out.append(build_template(kind, p1, pos, p2))
                    p2 += 1
            p1 += 1
    return out
