#!/usr/bin/env python3
"""Regenerates the Tutte graph embedding table used by corpus.cpp.

Takes the 46-vertex Tutte graph, computes a planar embedding, renumbers
darts as 2e/2e+1 for edge e, traces faces, picks the largest face as the
outer face, and prints the rotation table as a C++ initializer. Also
brute-forces perfect matchings to report the 2-factor component spectrum.
"""
import networkx as nx

G = nx.tutte_graph()
assert G.number_of_nodes() == 46 and G.number_of_edges() == 69

ok, emb = nx.check_planarity(G)
assert ok

edges = sorted(tuple(sorted(e)) for e in G.edges())
eid = {e: i for i, e in enumerate(edges)}


def dart(v, u):
    a, b = (v, u) if v < u else (u, v)
    i = eid[(a, b)]
    return 2 * i if v == a else 2 * i + 1


data = emb.get_data()
rot = {v: [dart(v, u) for u in data[v]] for v in sorted(G.nodes())}

tail = {}
for v, ds in rot.items():
    for d in ds:
        tail[d] = v


def twin(d):
    return d ^ 1


def succ(d):
    # dart immediately before twin(d) in the rotation at tail(twin(d))
    w = tail[twin(d)]
    r = rot[w]
    k = r.index(twin(d))
    return r[k - 1]


seen = set()
faces = []
for d0 in range(2 * len(edges)):
    if d0 in seen:
        continue
    walk = []
    d = d0
    while d not in seen:
        seen.add(d)
        walk.append(d)
        d = succ(d)
    assert d == d0
    faces.append(walk)

sizes = sorted(len(f) for f in faces)
assert len(faces) == 25, len(faces)
print("// face sizes:", sizes)

big = max(len(f) for f in faces)
outer = min((f for f in faces if len(f) == big), key=lambda f: min(f))
outer_dart = min(outer)
print("// outer face size", big, "outer_dart", outer_dart)
print("// outer walk vertices:", [tail[d] for d in outer])

print("static const int kTutteRotations[46][3] = {")
for v in range(46):
    print("    {%d, %d, %d}," % tuple(rot[v]))
print("};")
print("static const int kTutteOuterDart = %d;" % outer_dart)

# --- perfect matching / 2-factor statistics (brute force) ---
adj = {v: [] for v in G.nodes()}
for (u, v), i in eid.items():
    adj[u].append((v, i))
    adj[v].append((u, i))
for v in adj:
    adj[v].sort()

matchings = []


def enum(free, acc):
    if not free:
        matchings.append(sorted(acc))
        return
    v = min(free)
    for (u, i) in adj[v]:
        if u in free and u != v:
            enum(free - {v, u}, acc + [i])


enum(frozenset(G.nodes()), [])
print("// perfect matchings:", len(matchings))


def comp_count(matching):
    used = set(matching)
    nxt = {}
    for v in G.nodes():
        nbrs = [u for (u, i) in adj[v] if i not in used]
        nxt[v] = nbrs
    seen = set()
    n = 0
    for v in G.nodes():
        if v in seen:
            continue
        n += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(nxt[x])
    return n


best = None
from collections import Counter
spectrum = Counter()
for m in sorted(matchings):
    n = comp_count(m)
    spectrum[n] += 1
    key = (n, m)
    if best is None or key < best:
        best = key
print("// component spectrum {n: count}:", dict(sorted(spectrum.items())))
print("// min components:", best[0])
print("// lex-min minimizing matching:", best[1])
