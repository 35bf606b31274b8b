"""Vertex-pair identification in configurations and its classification.

Merging two deletable vertices is how a configuration can sit inside a
host graph with repeated vertices.  A pair within distance two would
collapse an edge or create a multi-edge, so it is discarded outright; a
merge whose result contains a chorded cycle of the forbidden length can
never occur in the graphs under audit; everything else is a candidate and
must be re-verified reducible by the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .configs import Configuration
from .graphs import GraphError

TOO_CLOSE = "TooClose"
CREATES_CHORD = "CreatesChord"
CANDIDATE = "Candidate"


@dataclass(frozen=True)
class MergeClassification:
    tag: str
    merged: Configuration | None = None
    note: str = ""


def merge_pair(conf: Configuration, a: int, b: int,
               forbidden_chorded_len: int) -> MergeClassification:
    """Classify identifying a and b (both in X); a keeps the lower index."""
    if a not in conf.x or b not in conf.x:
        raise GraphError("merge endpoints must lie in X")
    if a == b:
        raise GraphError("merge endpoints must differ")
    keep, drop = (a, b) if a < b else (b, a)
    dist = conf.graph.distance(a, b)
    if 0 <= dist <= 2:
        return MergeClassification(TOO_CLOSE, note=f"distance {dist}")
    merged_graph = conf.graph.identify(keep, drop)

    def remap(v: int) -> int:
        if v == drop:
            v = keep
        return v - 1 if v > drop else v

    new_x = frozenset(remap(v) for v in conf.x)
    new_ex: list[int | None] = [None] * merged_graph.vertex_count
    for v in range(conf.graph.vertex_count):
        if v in (keep, drop):
            continue
        new_ex[remap(v)] = conf.ex[v]
    # identification preserves vertex degrees: the merged vertex keeps the
    # smaller of the two allowed degrees, and its external budget is what
    # remains after the now-internal edges are paid for
    w = remap(keep)
    role = min(conf.graph.degree(keep) + conf.ex[keep],   # type: ignore[operator]
               conf.graph.degree(drop) + conf.ex[drop])   # type: ignore[operator]
    residual = role - merged_graph.degree(w)
    note = ""
    if residual < 0:
        # the identified vertex would need more edges than its role allows,
        # so the merged drawing can never occur; verified anyway
        note = f"degree-saturated by {-residual}"
        residual = 0
    if residual > 2:
        residual = 2  # external budgets are capped at two inside X
    new_ex[w] = residual
    merged = Configuration(f"{conf.name}/{keep}={drop}", merged_graph,
                           new_x, tuple(new_ex))
    if merged_graph.contains_chorded_cycle(forbidden_chorded_len):
        return MergeClassification(CREATES_CHORD, merged,
                                   f"chorded {forbidden_chorded_len}-cycle")
    return MergeClassification(CANDIDATE, merged, note)


@dataclass(frozen=True)
class MergeList:
    pairs: tuple[tuple[int, int], ...]  # original vertex labels
    merged: Configuration


def enumerate_merge_lists(conf: Configuration,
                          forbidden_chorded_len: int) -> list[MergeList]:
    """All valid pair lists, applied left to right, deduplicated by the
    isomorphism type of the merged result."""
    results: dict[tuple, MergeList] = {}
    base_pairs = sorted(
        (a, b) for i, a in enumerate(sorted(conf.x))
        for b in sorted(conf.x)[i + 1:])
    visited: set[frozenset] = set()

    def extend(current: Configuration, trace: dict[int, int],
               done: tuple[tuple[int, int], ...]) -> None:
        # a fixed pair set quotients to the same graph in any order, but
        # validity is order-sensitive, so all orders are walked and the
        # reached sets are pruned
        for a, b in base_pairs:
            if (a, b) in done:
                continue
            key_set = frozenset(done + ((a, b),))
            if key_set in visited:
                continue
            ca, cb = trace[a], trace[b]
            if ca == cb:
                continue  # already identified through earlier merges
            cls = merge_pair(current, ca, cb, forbidden_chorded_len)
            if cls.tag != CANDIDATE:
                continue
            visited.add(key_set)
            merged = cls.merged
            assert merged is not None
            keep, drop = (ca, cb) if ca < cb else (cb, ca)
            new_trace = {}
            for orig, cur in trace.items():
                if cur == drop:
                    cur = keep
                new_trace[orig] = cur - (1 if cur > drop else 0)
            new_done = done + ((a, b),)
            iso_key = merged.canonical_key()
            if iso_key not in results:
                results[iso_key] = MergeList(new_done, merged)
            extend(merged, new_trace, new_done)

    extend(conf, {v: v for v in range(conf.graph.vertex_count)}, ())
    return sorted(results.values(), key=lambda ml: (len(ml.pairs), ml.pairs))


def identifiable_triples(conf: Configuration,
                         forbidden_chorded_len: int) -> list[tuple[int, int, int]]:
    """X-triples whose three pairs each classify Candidate in isolation.

    The audited arguments rely on there being none; the report surfaces any
    violation instead of assuming it.
    """
    xs = sorted(conf.x)
    bad = []
    for i, a in enumerate(xs):
        for j in range(i + 1, len(xs)):
            b = xs[j]
            for c in xs[j + 1:]:
                if all(merge_pair(conf, p, q, forbidden_chorded_len).tag == CANDIDATE
                       for p, q in ((a, b), (a, c), (b, c))):
                    bad.append((a, b, c))
    return bad
