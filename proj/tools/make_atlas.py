#!/usr/bin/env python3
"""Write connected graphs as graph6 lines, one per isomorphism class.

  make_atlas.py 7            all connected graphs on 1..7 vertices (networkx atlas)
  make_atlas.py --exact 8    all connected graphs on exactly 8 vertices

The atlas stops at 7 vertices. The 8-vertex list comes from adding a vertex
to every connected 7-vertex graph in every possible way (each connected graph
has a vertex whose removal leaves it connected) and keeping one graph per
isomorphism class. Expected sizes: 996 for 1..7, 11117 for exactly 8.
"""
import argparse
import itertools
import sys
from collections import defaultdict

import networkx as nx


def atlas(max_n):
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 0 < n <= max_n and nx.is_connected(g):
            yield g


def extend_by_one(graphs):
    buckets = defaultdict(list)
    for base in graphs:
        n = base.number_of_nodes()
        for k in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), k):
                g = base.copy()
                g.add_edges_from((n, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in g.degree())), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                bucket = buckets[key]
                if not any(nx.is_isomorphic(g, other) for other in bucket):
                    bucket.append(g)
    for key in sorted(buckets):
        yield from buckets[key]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int, nargs="?", default=7)
    ap.add_argument("--exact", action="store_true", help="only graphs with exactly n vertices")
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    if args.exact and args.n == 8:
        graphs = extend_by_one(g for g in atlas(7) if g.number_of_nodes() == 7)
    elif 1 <= args.n <= 7:
        graphs = (g for g in atlas(args.n) if not args.exact or g.number_of_nodes() == args.n)
    else:
        sys.exit("supported: 1..7, or --exact 8")

    lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
    if args.n == 8:
        lines.sort()
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    for line in lines:
        out.write(line + "\n")
    print(f"{len(lines)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
