"""Line-oriented fixture parsing shared by the verification suites.

Three block kinds live in fixture files:

    graph <name> / vertices <n> / edge <u> <v> / [face <v0> ... <vk>]
        / [orient <u> <v>] / end
    config <name> / vertices <n> / edge <u> <v> / x <v> [...]
        / ex <v> <0|1|2|inf> / end
    case <name> variant <c5|cc6|dcc67|cc7> / initial <p>/<q>
        / gain <p>/<q> x <count> via <rule> [note ...] / require nonneg
        / [expect <p>/<q>] / end

Parse failures report the offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, GraphError, PlaneGraph


class FixtureError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class GraphBlock:
    name: str
    graph: Graph
    faces: tuple[tuple[int, ...], ...] = ()
    orients: tuple[tuple[int, int], ...] = ()

    def plane(self) -> PlaneGraph:
        if not self.faces:
            raise GraphError(f"graph {self.name!r} carries no face list")
        return PlaneGraph(self.graph, self.faces)


@dataclass
class ConfigBlock:
    name: str
    graph: Graph
    x: frozenset[int]
    ex: tuple[int | None, ...]


@dataclass
class CaseBlock:
    name: str
    variant: str
    initial: Fraction
    gains: tuple[tuple[Fraction, int, str, str], ...]  # amount, count, rule, note
    require_nonneg: bool = False
    expect: Fraction | None = None


def _frac(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise FixtureError(lineno, f"bad rational {token!r}: {exc}") from None


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FixtureError(lineno, f"bad integer {token!r}") from None


def parse_fixtures(text: str) -> list[GraphBlock | ConfigBlock | CaseBlock]:
    blocks: list[GraphBlock | ConfigBlock | CaseBlock] = []
    state: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if state is None:
            if head in ("graph", "config"):
                if len(parts) != 2:
                    raise FixtureError(lineno, f"{head} wants exactly one name")
                state = {"kind": head, "name": parts[1], "line": lineno,
                         "vertices": None, "edges": [], "faces": [],
                         "orients": [], "x": set(), "ex": {}}
            elif head == "case":
                if len(parts) != 4 or parts[2] != "variant":
                    raise FixtureError(lineno, "case wants: case <name> variant <v>")
                state = {"kind": "case", "name": parts[1], "variant": parts[3],
                         "line": lineno, "initial": None, "gains": [],
                         "nonneg": False, "expect": None}
            else:
                raise FixtureError(lineno, f"unexpected {head!r} outside a block")
            continue
        if head == "end":
            blocks.append(_finish(state, lineno))
            state = None
            continue
        if state["kind"] in ("graph", "config"):
            if head == "vertices":
                state["vertices"] = _int(parts[1], lineno)
            elif head == "edge":
                if len(parts) != 3:
                    raise FixtureError(lineno, "edge wants two endpoints")
                state["edges"].append((_int(parts[1], lineno), _int(parts[2], lineno)))
            elif head == "face" and state["kind"] == "graph":
                state["faces"].append(tuple(_int(t, lineno) for t in parts[1:]))
            elif head == "orient" and state["kind"] == "graph":
                if len(parts) != 3:
                    raise FixtureError(lineno, "orient wants two endpoints")
                state["orients"].append((_int(parts[1], lineno), _int(parts[2], lineno)))
            elif head == "x" and state["kind"] == "config":
                state["x"].update(_int(t, lineno) for t in parts[1:])
            elif head == "ex" and state["kind"] == "config":
                if len(parts) != 3:
                    raise FixtureError(lineno, "ex wants a vertex and a value")
                v = _int(parts[1], lineno)
                if parts[2] == "inf":
                    state["ex"][v] = None
                else:
                    val = _int(parts[2], lineno)
                    if val not in (0, 1, 2):
                        raise FixtureError(lineno, f"ex value {val} not in 0..2/inf")
                    state["ex"][v] = val
            else:
                raise FixtureError(lineno, f"unexpected {head!r} in {state['kind']} block")
        else:  # case
            if head == "initial":
                state["initial"] = _frac(parts[1], lineno)
            elif head == "gain":
                if len(parts) < 6 or parts[2] != "x" or parts[4] != "via":
                    raise FixtureError(
                        lineno, "gain wants: gain <p>/<q> x <count> via <rule> [note]")
                state["gains"].append((_frac(parts[1], lineno),
                                       _int(parts[3], lineno), parts[5],
                                       " ".join(parts[6:])))
            elif head == "require":
                if parts[1:] != ["nonneg"]:
                    raise FixtureError(lineno, "only 'require nonneg' is supported")
                state["nonneg"] = True
            elif head == "expect":
                state["expect"] = _frac(parts[1], lineno)
            else:
                raise FixtureError(lineno, f"unexpected {head!r} in case block")
    if state is not None:
        raise FixtureError(state["line"], f"unterminated {state['kind']} block")
    return blocks


def _finish(state: dict, lineno: int):
    kind = state["kind"]
    if kind in ("graph", "config"):
        if state["vertices"] is None:
            raise FixtureError(lineno, "block is missing a vertices line")
        try:
            graph = Graph(state["vertices"], state["edges"])
        except GraphError as exc:
            raise FixtureError(lineno, str(exc)) from None
        if kind == "graph":
            return GraphBlock(state["name"], graph,
                              tuple(state["faces"]), tuple(state["orients"]))
        n = state["vertices"]
        ex = []
        for v in range(n):
            if v not in state["ex"]:
                raise FixtureError(lineno, f"config missing ex value for vertex {v}")
            ex.append(state["ex"][v])
        bad = [v for v in state["x"] if not (0 <= v < n)]
        if bad:
            raise FixtureError(lineno, f"x vertices out of range: {bad}")
        return ConfigBlock(state["name"], graph, frozenset(state["x"]), tuple(ex))
    if state["initial"] is None:
        raise FixtureError(lineno, "case is missing an initial line")
    return CaseBlock(state["name"], state["variant"], state["initial"],
                     tuple(state["gains"]), state["nonneg"], state["expect"])
