import sys, time
sys.path.insert(0, "src")
from sepchoose.graphs import Graph, cycle_graph
from sepchoose.coloring import enumerate_assignments, is_fs_choosable, find_coloring

# sanity: spec-pinned enumeration counts
g1 = Graph(1, [])
assert sum(1 for _ in enumerate_assignments(g1, [2], 2)) == 1
ge = Graph(2, [(0, 1)])
assert sum(1 for _ in enumerate_assignments(ge, [2, 2], 0)) == 1
assert sum(1 for _ in enumerate_assignments(ge, [2, 2], 2)) == 3
print("counts ok")

# C3 not (2,2)-choosable, witness = identical lists; C4 is
c3 = cycle_graph(3)
v = is_fs_choosable(c3, [2, 2, 2], 2)
print("C3:", v.choosable, v.witness, v.assignments_examined)
assert not v.choosable and find_coloring(c3, v.witness) is None
c4 = cycle_graph(4)
v = is_fs_choosable(c4, [2, 2, 2, 2], 2)
print("C4:", v.choosable, v.assignments_examined)
assert v.choosable

# cross-check taut vs connected vs all on small graphs
import itertools, random
random.seed(7)
for trial in range(40):
    n = random.randint(2, 5)
    edges = [e for e in itertools.combinations(range(n), 2) if random.random() < 0.55]
    g = Graph(n, edges)
    f = [random.randint(1, 3) for _ in range(n)]
    s = random.randint(0, 2)
    va = is_fs_choosable(g, f, s, mode="all").choosable
    vc = is_fs_choosable(g, f, s, mode="connected").choosable
    vt = is_fs_choosable(g, f, s, mode="taut").choosable
    assert va == vc == vt, (n, edges, f, s, va, vc, vt)
print("mode agreement ok")

def timed(name, g, f):
    t0 = time.time()
    v = is_fs_choosable(g, f, 2, mode="taut")
    dt = time.time() - t0
    print(f"{name}: choosable={v.choosable} assignments={v.assignments_examined} {dt:.2f}s")
    return v

# diamond1
d1g = Graph(4, [(0,1),(1,2),(2,3),(3,0),(1,3)])
timed("diamond1", d1g, [1,3,1,3])
# diamond2
timed("diamond2", d1g, [2,3,2,2])

# K6hconfig1/2/3 wheels
wheel = Graph(6, [(0,1),(0,2),(0,3),(0,4),(0,5),(1,2),(2,3),(3,4),(4,5),(5,1)])
timed("K6hconfig1", wheel, [4,1,3,3,1,3])
timed("K6hconfig2", wheel, [4,3,2,3,3,3])
timed("K6hconfig3", wheel, [4,2,2,2,3,3])

# d2: pentagon 0-4 + apex 5 on edge 0-1
d2g = Graph(6, [(0,1),(1,2),(2,3),(3,4),(4,0),(0,5),(1,5)])
timed("d2", d2g, [2,3,2,2,2,2])

# d1: two pentagons sharing edge 0-1
d1gg = Graph(8, [(0,1),(1,2),(2,3),(3,4),(4,0),(1,5),(5,6),(6,7),(7,0)])
timed("d1", d1gg, [2,3,2,2,2,2,2,2])

# d7: 9 vertices
d7g = Graph(9, [(0,1),(0,2),(1,2),(0,3),(3,4),(4,5),(1,5),(0,6),(6,7),(7,8),(2,8)])
timed("d7", d7g, [4,2,2,2,2,2,2,2,2])

# d9
d9g = Graph(9, [(0,1),(1,2),(2,3),(3,4),(4,0),(0,5),(5,6),(6,7),(7,8),(8,0),(1,5)])
timed("d9", d9g, [3,2,2,2,2,3,2,2,2])

# bigneedy: 13 vertices
bng = Graph(13, [(0,4),(4,3),(3,2),(2,1),(1,0),(0,5),(1,5),(1,6),(2,6),
                 (5,7),(7,8),(8,9),(9,0),(6,10),(10,11),(11,12),(12,2)])
t0 = time.time()
timed("bigneedy", bng, [3,3,3,2,2,3,3,2,2,2,2,2,2])
