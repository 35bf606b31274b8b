"""List-coloring search and exhaustive (f,s)-choosability decisions.

The choosability verdict is a for-all statement over list assignments, so
the engine enumerates assignments up to color permutation and runs an exact
backtracking colorer on each.  Enumeration modes, from literal to reduced:

* ``all`` -- every canonical assignment exactly once.  Colors are numbered
  in first-use order over the vertex ordering 0..n-1; colors introduced at
  the same vertex stay in "tie groups" and only prefixes of a group may be
  reused later, which picks one representative per color-permutation class.

* ``connected`` -- additionally requires every color's support to induce a
  connected subgraph.  Splitting a color along the components of its
  support is a bijection on proper colorings, so colorability is invariant
  and the restricted family decides the same verdict.

* ``taut`` -- additionally requires every support to have size >= 2 and
  allows vertices to be skipped (enumerating induced subgraphs).  A color
  private to a vertex can always be assigned to it last, so the graph is
  (f,s)-choosable iff every induced subgraph is colorable from every
  assignment without private colors.

* ``reduced`` -- compresses maximal chains of size-2-list degree-2 vertices
  before enumerating.  A chain influences its two anchor endpoints only
  through the set of endpoint color pairs it blocks, and that behavior set
  depends only on the chain length and the anchor-list intersection
  pattern, so it is computed once per pattern by brute force on the small
  path and cached.  Anchor assignments are enumerated with connectivity
  allowed through chains, and every failing verdict is re-verified on the
  full graph before being reported.

``is_fs_choosable`` defaults to picking ``reduced`` when chains exist and
``taut`` otherwise; the literal modes stay available for cross-checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import BudgetError, Graph, GraphError

DEFAULT_BUDGET = 10**9

ListAssignment = tuple[tuple[int, ...], ...]


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetError("search budget exhausted")


# ---------------------------------------------------------------------------
# exact list-coloring
# ---------------------------------------------------------------------------

def coloring_order(g: Graph) -> tuple[int, ...]:
    """Static vertex order for the colorer: decreasing degree, ties by index."""
    return tuple(sorted(range(g.vertex_count), key=lambda v: (-len(g.adj[v]), v)))


def find_coloring(g: Graph, lists: Sequence[Sequence[int]],
                  budget: _Budget | None = None) -> dict[int, int] | None:
    """Proper coloring with c(v) in lists[v], or None (decided exactly)."""
    n = g.vertex_count
    if len(lists) != n:
        raise GraphError("one list per vertex required")
    sorted_lists = [tuple(sorted(set(l))) for l in lists]
    if any(not l for l in sorted_lists):
        raise GraphError("empty color list")
    if n == 0:
        return {}
    order = coloring_order(g)
    adj = g.adj
    chosen: list[int | None] = [None] * n

    def place(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for c in sorted_lists[v]:
            if budget is not None:
                budget.spend()
            if all(chosen[w] != c for w in adj[v]):
                chosen[v] = c
                if place(idx + 1):
                    return True
                chosen[v] = None
        return False

    if place(0):
        return {v: c for v, c in enumerate(chosen)}  # type: ignore[misc]
    return None


# ---------------------------------------------------------------------------
# canonical assignment enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _ColorGroup:
    """Colors with identical membership history; interchangeable prefixes."""
    members: tuple[int, ...]
    support: int        # bitmask of vertices whose list holds these colors
    support_nbr: int    # union of connectivity-neighbor masks over the support
    pinned: bool = False  # exempt from support-size/connectivity checks


def _edge_caps(g: Graph, f: Sequence[int], s: int) -> dict[tuple[int, int], int]:
    caps = {}
    for u, v in g.edge_list:
        caps[(u, v)] = 0 if (f[u] == 1 and f[v] == 1) else s
    return caps


def _mask_connected(conn_bits: Sequence[int], mask: int,
                    memo: dict[int, bool]) -> bool:
    hit = memo.get(mask)
    if hit is not None:
        return hit
    if mask == 0 or mask & (mask - 1) == 0:
        memo[mask] = True
        return True
    start = mask & -mask
    seen = start
    stack = [start.bit_length() - 1]
    while stack:
        w = stack.pop()
        rest = conn_bits[w] & mask & ~seen
        while rest:
            b = rest & -rest
            rest ^= b
            seen |= b
            stack.append(b.bit_length() - 1)
    ok = seen == mask
    memo[mask] = ok
    return ok


def _enumerate_core(g: Graph, f: Sequence[int], s: int, *,
                    need_connected: bool, min_support: int, allow_skip: bool,
                    conn_bits: Sequence[int] | None = None,
                    pinned: Sequence[Sequence[int]] | None = None,
                    support_exempt: int = 0,
                    budget: _Budget | None = None) -> Iterator[ListAssignment]:
    n = g.vertex_count
    f = tuple(f)
    if len(f) != n:
        raise GraphError("f must assign a size to every vertex")
    if any(x < 1 for x in f):
        raise GraphError("list sizes must be positive")
    if s < 0:
        raise GraphError("s must be nonnegative")
    caps = _edge_caps(g, f, s)
    adj_bits = g.adj_bits
    cbits = tuple(conn_bits) if conn_bits is not None else adj_bits
    lists: list[tuple[int, ...]] = [() for _ in range(n)]
    conn_memo: dict[int, bool] = {}

    start_at = 0
    start_groups: tuple[_ColorGroup, ...] = ()
    start_colors = 0
    if pinned:
        start_at = len(pinned)
        groups = []
        cid = 0
        for v, lst in enumerate(pinned):
            lists[v] = tuple(lst)
            for _ in lst:
                cid += 1
        # pinned colors are mutually distinguishable: one group each
        support: dict[int, int] = {}
        for v, lst in enumerate(pinned):
            for c in lst:
                support[c] = support.get(c, 0) | (1 << v)
        for c in sorted(support):
            nbr = 0
            m = support[c]
            while m:
                b = m & -m
                m ^= b
                nbr |= cbits[b.bit_length() - 1]
            groups.append(_ColorGroup((c,), support[c], nbr, pinned=True))
        start_groups = tuple(groups)
        start_colors = cid

    def selections(i: int, groups: tuple[_ColorGroup, ...], color_count: int):
        fi = f[i]
        ibit = 1 << i
        open_mask = ((1 << n) - 1) & ~((ibit << 1) - 1)  # vertices > i
        prev_nbrs = [j for j in range(i) if (adj_bits[i] >> j) & 1]
        cap_of = {j: caps[(min(i, j), max(i, j))] for j in prev_nbrs}

        eligible: list[int] = []
        for gi, grp in enumerate(groups):
            if need_connected and not grp.pinned:
                adjacent_now = grp.support & cbits[i]
                reconnectable = (grp.support_nbr & open_mask) and (cbits[i] & open_mask)
                if not adjacent_now and not reconnectable:
                    continue
            eligible.append(gi)

        out: list[tuple[tuple[int, ...], tuple[_ColorGroup, ...], int]] = []

        def close_out(taken: list[tuple[int, int]], total: int) -> None:
            fresh = fi - total
            if (fresh and min_support > 1 and not (cbits[i] & open_mask)
                    and not (ibit & support_exempt)):
                return  # a fresh color here could never reach support 2
            chosen: list[int] = []
            new_groups: list[_ColorGroup] = []
            taken_map = dict(taken)
            for gi, grp in enumerate(groups):
                t = taken_map.get(gi, 0)
                if t == 0:
                    new_groups.append(grp)
                    continue
                sel = grp.members[:t]
                chosen.extend(sel)
                new_groups.append(_ColorGroup(sel, grp.support | ibit,
                                              grp.support_nbr | cbits[i],
                                              grp.pinned))
                if t < len(grp.members):
                    new_groups.append(_ColorGroup(grp.members[t:], grp.support,
                                                  grp.support_nbr, grp.pinned))
            if fresh:
                fresh_ids = tuple(range(color_count, color_count + fresh))
                chosen.extend(fresh_ids)
                new_groups.append(_ColorGroup(fresh_ids, ibit, cbits[i]))
            out.append((tuple(sorted(chosen)), tuple(new_groups),
                        color_count + fresh))

        def pick(ei: int, taken: list[tuple[int, int]], total: int,
                 used: dict[int, int]) -> None:
            if ei == len(eligible):
                close_out(taken, total)
                return
            gi = eligible[ei]
            grp = groups[gi]
            in_nbr = [j for j in prev_nbrs if (grp.support >> j) & 1]
            max_t = min(len(grp.members), fi - total)
            for j in in_nbr:
                max_t = min(max_t, cap_of[j] - used.get(j, 0))
            pick(ei + 1, taken, total, used)  # take nothing from this group
            for t in range(1, max_t + 1):
                for j in in_nbr:
                    used[j] = used.get(j, 0) + 1
                taken.append((gi, t))
                pick(ei + 1, taken, total + t, used)
                taken.pop()
            if max_t >= 1:
                for j in in_nbr:
                    used[j] -= max_t
                    if used[j] == 0:
                        del used[j]

        pick(0, [], 0, {})
        out.sort(key=lambda e: e[0])
        return out

    def groups_viable(i_next: int, groups: tuple[_ColorGroup, ...]) -> bool:
        open_mask = ((1 << n) - 1) & ~((1 << i_next) - 1) if i_next < n else 0
        for grp in groups:
            if grp.pinned or grp.support_nbr & open_mask:
                continue
            if (min_support > 1 and not grp.support & support_exempt
                    and bin(grp.support).count("1") < min_support):
                return False
            if need_connected and not _mask_connected(cbits, grp.support, conn_memo):
                return False
        return True

    check_state = need_connected or min_support > 1

    def place(i: int, groups: tuple[_ColorGroup, ...], color_count: int):
        if budget is not None:
            budget.spend()
        if i == n:
            yield tuple(lists)
            return
        for chosen, new_groups, new_count in selections(i, groups, color_count):
            if check_state and not groups_viable(i + 1, new_groups):
                continue
            lists[i] = chosen
            yield from place(i + 1, new_groups, new_count)
            lists[i] = ()
        if allow_skip:
            if not check_state or groups_viable(i + 1, groups):
                lists[i] = ()
                yield from place(i + 1, groups, color_count)

    yield from place(start_at, start_groups, start_colors)


_MODES = {
    "all": dict(need_connected=False, min_support=1, allow_skip=False),
    "connected": dict(need_connected=True, min_support=1, allow_skip=False),
    "taut": dict(need_connected=True, min_support=2, allow_skip=True),
}


def enumerate_assignments(g: Graph, f: Sequence[int], s: int,
                          mode: str = "all",
                          budget: _Budget | None = None) -> Iterator[ListAssignment]:
    """Stream (f,s)-list assignments up to color permutation.

    List sizes are exactly f(v): larger lists only ever make coloring
    easier, so size-exact assignments decide choosability.  ``mode``
    selects which reduced family is produced (see module docstring); in
    ``taut`` mode skipped vertices appear as empty tuples.
    """
    if mode not in _MODES:
        raise GraphError(f"unknown enumeration mode {mode!r}")
    yield from _enumerate_core(g, f, s, budget=budget, **_MODES[mode])


# ---------------------------------------------------------------------------
# chain compression
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Chain:
    u: int                    # anchor endpoint (original vertex id)
    v: int                    # anchor endpoint
    internals: tuple[int, ...]  # original ids, in order from u to v


def find_chains(g: Graph, f: Sequence[int]) -> tuple[list[int], list[_Chain]]:
    """Split vertices into anchors and maximal compressible chains.

    A chain internal has degree 2 and list size 2.  Chains that close on a
    single anchor (or whole 2-regular components) are left uncompressed.
    """
    n = g.vertex_count
    internal = [g.degree(v) == 2 and f[v] == 2 for v in range(n)]
    anchors = [v for v in range(n) if not internal[v]]
    seen = set()
    chains: list[_Chain] = []
    demoted: set[int] = set()
    for a in anchors:
        for b in sorted(g.adj[a]):
            if not internal[b] or b in seen:
                continue
            run = [b]
            prev, cur = a, b
            while True:
                nxt = [w for w in g.adj[cur] if w != prev][0]
                if internal[nxt]:
                    run.append(nxt)
                    prev, cur = cur, nxt
                else:
                    end = nxt
                    break
            if end == a:
                demoted.update(run)  # chain loops back; keep literal
            else:
                seen.update(run)
                chains.append(_Chain(a, end, tuple(run)))
    covered = set(anchors) | seen | demoted
    if covered != set(range(n)):
        # untouched 2-regular components (pure cycles): leave literal
        demoted.update(set(range(n)) - covered)
    anchors = sorted(set(anchors) | demoted)
    chains = [c for c in chains if not (set(c.internals) & demoted)]
    return anchors, chains


_BEHAVIOR_CACHE: dict[tuple, list[tuple[frozenset, tuple]]] = {}


def _canonical_behaviors(k: int, s: int, la: int, lb: int, shared: int,
                         budget: _Budget | None) -> list[tuple[frozenset, tuple]]:
    """Blocked-pair sets a k-internal chain can impose on endpoint lists of
    sizes (la, lb) sharing `shared` colors.

    The endpoint lists act as tuples of distinguishable tokens, so the only
    structure that matters is the intersection size.  Canonical space:
    A = 0..la-1 with the shared block first, B = (0..shared-1) then fresh
    ids.  Results carry (blocked canonical index pairs, representative
    internal lists with chain-local colors negative).  Only
    inclusion-maximal behaviors are kept: extra blocked pairs only make the
    anchor side harder.
    """
    key = (k, s, la, lb, shared)
    hit = _BEHAVIOR_CACHE.get(key)
    if hit is not None:
        return hit
    locA = tuple(range(la))
    locB = tuple(range(shared)) + tuple(range(la, la + lb - shared))
    # path graph: 0 = u, 1 = v, 2..k+1 internals in order from u to v
    edges = [(0, 2)] + [(2 + i, 3 + i) for i in range(k - 1)] + [(k + 1, 1)]
    pg = Graph(k + 2, edges)
    f_path = [la, lb] + [2] * k
    order = list(range(2, k + 2))
    anchor_colors = set(locA) | set(locB)
    found: dict[frozenset, tuple] = {}
    for assign in _enumerate_core(pg, f_path, s, need_connected=True,
                                  min_support=1, allow_skip=False,
                                  pinned=[locA, locB], budget=budget):
        blocked = set()
        for ia, a in enumerate(locA):
            for ib, b in enumerate(locB):
                trial = list(assign)
                trial[0] = (a,)
                trial[1] = (b,)
                if find_coloring(pg, trial, budget=budget) is None:
                    blocked.add((ia, ib))
        fb = frozenset(blocked)
        if fb not in found:
            rep = tuple(tuple(c if c in anchor_colors else -1 - c
                              for c in assign[i]) for i in order)
            found[fb] = rep
    items = sorted(found.items(), key=lambda kv: (-len(kv[0]), sorted(kv[0])))
    kept: list[tuple[frozenset, tuple]] = []
    for blocked, rep in items:
        if not any(blocked < other for other, _ in kept):
            kept.append((blocked, rep))
    _BEHAVIOR_CACHE[key] = kept
    return kept


def _chain_behaviors(k: int, s: int, A: tuple[int, ...], B: tuple[int, ...],
                     budget: _Budget | None) -> list[tuple[frozenset, tuple]]:
    """Behaviors of a chain between actual anchor lists A and B.

    Blocked pairs are (index into A, index into B); representatives carry
    actual anchor color values, with chain-local colors negative.
    """
    shared = sorted(set(A) & set(B))
    a_order = shared + sorted(set(A) - set(shared))
    b_order = shared + sorted(set(B) - set(shared))
    canon = _canonical_behaviors(k, s, len(A), len(B), len(shared), budget)
    a_index = {i: A.index(c) for i, c in enumerate(a_order)}
    b_index = {i: B.index(c) for i, c in enumerate(b_order)}
    la = len(A)
    value_of = {i: c for i, c in enumerate(a_order)}
    for j, c in enumerate(b_order[len(shared):]):
        value_of[la + j] = c
    out = []
    for blocked, rep in canon:
        real_blocked = frozenset((a_index[ia], b_index[ib])
                                 for ia, ib in blocked)
        real_rep = tuple(tuple(value_of[c] if c >= 0 else c for c in lst)
                         for lst in rep)
        out.append((real_blocked, real_rep))
    return out


def _coloring_profiles(lists: Sequence[tuple[int, ...]],
                       real_adj: Sequence[Sequence[int]],
                       ends: Sequence[int],
                       budget: _Budget | None) -> list[tuple[int, ...]]:
    """Projections of the skeleton's proper colorings onto `ends`.

    Only the chain-endpoint colors matter to the adversary analysis, so
    colorings agreeing there collapse to one profile; the rest of the
    skeleton only contributes an extensibility check.
    """
    n = len(lists)
    others = [v for v in range(n) if v not in ends]
    chosen: list[int | None] = [None] * n
    out: list[tuple[int, ...]] = []

    def extend(idx: int) -> bool:
        if idx == len(others):
            return True
        v = others[idx]
        for c in lists[v]:
            if budget is not None:
                budget.spend()
            if any(chosen[w] == c for w in real_adj[v]):
                continue
            chosen[v] = c
            if extend(idx + 1):
                chosen[v] = None
                return True
            chosen[v] = None
        return False

    def place(idx: int) -> None:
        if idx == len(ends):
            if extend(0):
                out.append(tuple(lists[v].index(chosen[v]) for v in ends))
            return
        v = ends[idx]
        for c in lists[v]:
            if budget is not None:
                budget.spend()
            if any(chosen[w] == c for w in real_adj[v] if chosen[w] is not None):
                continue
            chosen[v] = c
            place(idx + 1)
            chosen[v] = None

    place(0)
    return out


# ---------------------------------------------------------------------------
# choosability verdicts
# ---------------------------------------------------------------------------

@dataclass
class ChoosabilityVerdict:
    choosable: bool
    witness: ListAssignment | None
    assignments_examined: int
    colorings_attempted: int

    def __bool__(self) -> bool:
        return self.choosable


def _fill_fresh(assignment: Sequence[tuple[int, ...]],
                f: Sequence[int]) -> ListAssignment:
    """Give skipped vertices fresh disjoint lists; cannot affect colorability."""
    top = max((c for lst in assignment for c in lst), default=-1) + 1
    full = []
    for v, lst in enumerate(assignment):
        if lst:
            full.append(tuple(lst))
        else:
            full.append(tuple(range(top, top + f[v])))
            top += f[v]
    return tuple(full)


def _reduced_verdict(g: Graph, f: Sequence[int], s: int,
                     budget: _Budget) -> ChoosabilityVerdict:
    n = g.vertex_count
    raw_anchors, chains = find_chains(g, f)
    # larger lists go first: their fresh colors collapse canonically before
    # the smaller lists start sampling them
    anchors = sorted(raw_anchors, key=lambda v: (-f[v], v))
    pos = {v: i for i, v in enumerate(anchors)}
    na = len(anchors)
    real_edges = [(pos[u], pos[v]) for u, v in g.edge_list
                  if u in pos and v in pos]
    skel = Graph(na, real_edges)
    conn_bits = list(skel.adj_bits)
    chain_ends = []
    chainy = 0
    for ch in chains:
        a, b = pos[ch.u], pos[ch.v]
        chain_ends.append((min(a, b), max(a, b)))
        chainy |= (1 << a) | (1 << b)
        conn_bits[a] |= 1 << b
        conn_bits[b] |= 1 << a
    f_sk = [f[v] for v in anchors]
    real_adj = [sorted(skel.adj[v]) for v in range(na)]
    end_positions = sorted({p for ends in chain_ends for p in ends})

    examined = 0
    checks = 0
    # chain-free anchors obey tautness outright; a chain endpoint may hold a
    # color whose second support member lives on the chain, so it is exempt
    for assign in _enumerate_core(skel, f_sk, s, need_connected=True,
                                  min_support=2, allow_skip=True,
                                  conn_bits=conn_bits, support_exempt=chainy,
                                  budget=budget):
        examined += 1
        full_assign = _fill_fresh(assign, f_sk)
        behaviors = []
        for ci, ch in enumerate(chains):
            u, v = chain_ends[ci]
            A, B = full_assign[u], full_assign[v]
            behaviors.append(_chain_behaviors(len(ch.internals), s, A, B, budget))
        profiles = _coloring_profiles(full_assign, real_adj, end_positions,
                                      budget)
        checks += 1
        if not profiles:
            witness = _materialize_witness(
                g, f, anchors, chains, full_assign,
                [bs[0][1] for bs in behaviors])
            if find_coloring(g, witness, budget=budget) is not None:
                raise AssertionError(
                    "internal error: reduced witness failed re-verification")
            return ChoosabilityVerdict(False, witness, examined, checks)
        # each behavior kills the profiles hitting one of its blocked
        # pairs; the assignment fails iff some behavior choice per chain
        # kills every profile
        end_index = {p: i for i, p in enumerate(end_positions)}
        full_mask = (1 << len(profiles)) - 1
        kills: list[list[tuple[int, tuple]]] = []
        for ci, bs in enumerate(behaviors):
            u, v = chain_ends[ci]
            ui, vi = end_index[u], end_index[v]
            pair_mask: dict[tuple[int, int], int] = {}
            for w, col in enumerate(profiles):
                key = (col[ui], col[vi])
                pair_mask[key] = pair_mask.get(key, 0) | (1 << w)
            per = []
            for blocked, rep in bs:
                mask = 0
                for pair in blocked:
                    mask |= pair_mask.get(pair, 0)
                per.append((mask, rep))
            kills.append(per)
        # quick screen: some coloring surviving every chain's worst case
        alive_all = full_mask
        for per in kills:
            union_kill = 0
            for mask, _ in per:
                union_kill |= mask
            alive_all &= ~union_kill
        if alive_all:
            continue
        chosen_reps: list[tuple] = []

        def adversary(ci: int, alive: int) -> bool:
            if budget is not None:
                budget.spend()
            if alive == 0:
                return True
            if ci == len(kills):
                return False
            seen_alive = set()
            for mask, rep in kills[ci]:
                nxt = alive & ~mask
                if nxt in seen_alive:
                    continue
                seen_alive.add(nxt)
                chosen_reps.append(rep)
                if adversary(ci + 1, nxt):
                    return True
                chosen_reps.pop()
            return False

        if adversary(0, full_mask):
            while len(chosen_reps) < len(chains):
                chosen_reps.append(behaviors[len(chosen_reps)][0][1])
            witness = _materialize_witness(g, f, anchors, chains, full_assign,
                                           chosen_reps)
            if find_coloring(g, witness, budget=budget) is not None:
                raise AssertionError(
                    "internal error: reduced witness failed re-verification")
            return ChoosabilityVerdict(False, witness, examined, checks)
    return ChoosabilityVerdict(True, None, examined, checks)


def _materialize_witness(g: Graph, f: Sequence[int], anchors: Sequence[int],
                         chains: Sequence[_Chain],
                         anchor_assign: Sequence[tuple[int, ...]],
                         reps: Sequence[tuple]) -> ListAssignment:
    """Expand an anchor-level failure into concrete lists on the full graph.

    Representatives carry actual anchor colors; negative entries are
    chain-local colors and become globally fresh.
    """
    lists: list[tuple[int, ...]] = [()] * g.vertex_count
    pos = {v: i for i, v in enumerate(anchors)}
    for v in anchors:
        lists[v] = anchor_assign[pos[v]]
    top = max((c for lst in anchor_assign for c in lst), default=-1) + 1
    for ch, rep in zip(chains, reps):
        remap: dict[int, int] = {}
        internals = (ch.internals if pos[ch.u] <= pos[ch.v]
                     else tuple(reversed(ch.internals)))
        for w, lst in zip(internals, rep):
            out = []
            for c in lst:
                if c >= 0:
                    out.append(c)
                    continue
                if c not in remap:
                    remap[c] = top
                    top += 1
                out.append(remap[c])
            lists[w] = tuple(sorted(out))
    return _fill_fresh(lists, f)


def is_fs_choosable(g: Graph, f: Sequence[int], s: int,
                    budget: int = DEFAULT_BUDGET,
                    mode: str = "auto") -> ChoosabilityVerdict:
    """True iff every (f,s)-list assignment admits a proper coloring.

    The first failing assignment in the engine's deterministic enumeration
    order is returned as a full witness.  Raises BudgetError (never a
    silent wrong answer) if the node budget is exhausted.
    """
    f = tuple(f)
    if len(f) != g.vertex_count:
        raise GraphError("f must assign a size to every vertex")
    tracker = _Budget(budget)
    if mode == "auto":
        _, chains = find_chains(g, f)
        mode = "reduced" if chains else "taut"
    if mode == "reduced":
        return _reduced_verdict(g, f, s, tracker)
    if mode not in _MODES:
        raise GraphError(f"unknown verdict mode {mode!r}")
    examined = 0
    for assignment in _enumerate_core(g, f, s, budget=tracker, **_MODES[mode]):
        examined += 1
        full = _fill_fresh(assignment, f) if mode == "taut" else assignment
        if find_coloring(g, full, budget=tracker) is None:
            return ChoosabilityVerdict(False, full, examined, examined)
    return ChoosabilityVerdict(True, None, examined, examined)


# ---------------------------------------------------------------------------
# odd cycles and path propagation
# ---------------------------------------------------------------------------

def odd_cycle_2list_colorable(lists: Sequence[Sequence[int]]) -> bool:
    """2-list colorability of an odd cycle: false iff all lists are equal."""
    if len(lists) % 2 == 0:
        raise GraphError("odd cycle required")
    sets = [frozenset(l) for l in lists]
    if any(len(s) != 2 for s in sets):
        raise GraphError("every list must have exactly two colors")
    return len(set(sets)) > 1


@dataclass(frozen=True)
class SpecialPath:
    """A u..v path, optionally with one triangle tripod on a consecutive
    internal pair (x, y, apex z)."""
    graph: Graph
    u: int
    v: int
    tripod: tuple[int, int, int] | None = None

    def __post_init__(self):
        self.spine()

    def spine(self) -> list[int]:
        """Vertices from u to v along the path; validates path shape."""
        g = self.graph
        skip = set()
        if self.tripod is not None:
            x, y, z = self.tripod
            if g.neighbors(z) != frozenset({x, y}):
                raise GraphError("tripod apex must see exactly the pair (x, y)")
            skip = {z}
        seq = [self.u]
        prev = None
        cur = self.u
        while cur != self.v:
            nxt = [w for w in g.neighbors(cur) if w != prev and w not in skip]
            if len(nxt) != 1:
                raise GraphError("not a path between the given endpoints")
            prev, cur = cur, nxt[0]
            seq.append(cur)
        if set(seq) | skip != set(range(g.vertex_count)):
            raise GraphError("path contains stray vertices")
        if self.tripod is not None:
            x, y, z = self.tripod
            inner = seq[1:-1]
            if x not in inner or y not in inner:
                raise GraphError("tripod pair must be internal to the path")
            if abs(seq.index(x) - seq.index(y)) != 1:
                raise GraphError("tripod pair must be consecutive on the path")
        for w in seq[1:-1]:
            expected = 3 if (self.tripod and w in self.tripod[:2]) else 2
            if g.degree(w) != expected:
                raise GraphError(f"internal vertex {w} has wrong degree")
        return seq


def path_block_set(path: SpecialPath, lists: Sequence[Sequence[int]],
                   end: int, color: int) -> frozenset[int]:
    """g_P^end(color): colors at the far endpoint admitting no extension."""
    if end == path.u:
        other = path.v
    elif end == path.v:
        other = path.u
    else:
        raise GraphError("end must be one of the path endpoints")
    if color not in set(lists[end]):
        raise GraphError("color must come from the endpoint's list")
    g = path.graph
    blocked = []
    for b in lists[other]:
        pinned = list(lists)
        pinned[end] = (color,)
        pinned[other] = (b,)
        if find_coloring(g, pinned) is None:
            blocked.append(b)
    return frozenset(blocked)
