#!/usr/bin/env python3
"""Brute-force oracle for the unicyclic test goldens.

Enumerates every n-edge subset of K_n, keeps the connected ones and
deduplicates them with networkx isomorphism tests. Everything here is
independent of the C++ enumeration and canonicalization code; its output
is frozen into tests/*.cpp by hand.
"""
import itertools
import sys
from collections import defaultdict

import networkx as nx


def unicyclic_classes(n):
    pairs = list(itertools.combinations(range(n), 2))
    buckets = defaultdict(list)
    for edges in itertools.combinations(pairs, n):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        if not nx.is_connected(g):
            continue
        key = (tuple(sorted((d for _, d in g.degree()), reverse=True)),
               nx.weisfeiler_lehman_graph_hash(g))
        if not any(nx.is_isomorphic(g, h) for h in buckets[key]):
            buckets[key].append(g)
    return [g for gs in buckets.values() for g in gs]


def degseq(g):
    return tuple(sorted((d for _, d in g.degree()), reverse=True))


def report(n, classes):
    print(f"n={n}: {len(classes)} classes")
    m1 = {}
    for g in classes:
        ds = degseq(g)
        m1.setdefault(ds[0], []).append((sum(d * d for d in ds), ds))
    for delta in sorted(m1):
        vals = m1[delta]
        lo = min(v for v, _ in vals)
        hi = max(v for v, _ in vals)
        lo_seqs = sorted({s for v, s in vals if v == lo})
        hi_seqs = sorted({s for v, s in vals if v == hi})
        print(f"  delta={delta}: {len(vals)} graphs, M1 min {lo} "
              f"(x{sum(1 for v, _ in vals if v == lo)}, {lo_seqs}) "
              f"max {hi} (x{sum(1 for v, _ in vals if v == hi)}, {hi_seqs})")
    pend = defaultdict(list)
    for g in classes:
        ds = degseq(g)
        pend[ds.count(1)].append((sum(d * d for d in ds), ds))
    for p in sorted(pend):
        vals = pend[p]
        lo = min(v for v, _ in vals)
        hi = max(v for v, _ in vals)
        print(f"  p={p}: {len(vals)} graphs, M1 min {lo} max {hi}; "
              f"seqs {sorted({s for _, s in vals})}")
    nk = [(eval('*'.join(map(str, degseq(g)))), degseq(g)) for g in classes]
    print(f"  NK min {min(nk)} max {max(nk)}")


if __name__ == "__main__":
    hi = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    for n in range(3, hi + 1):
        report(n, unicyclic_classes(n))
