#!/usr/bin/env python3
"""Writes the bundled topologies in SNDlib native format.

nobel-us is a 14-node NSFNET layout. The other four are deterministic
geometric graphs with the node/link counts of the evaluation profiles:
a Euclidean spanning tree, then a shortest extra edge for every leaf, then
the shortest remaining edges until the link count is reached.
"""

import argparse
import math
import random
from pathlib import Path

NOBEL_NODES = [
    ("Seattle", -122.33, 47.61), ("PaloAlto", -122.14, 37.44), ("SanDiego", -117.16, 32.72),
    ("SaltLakeCity", -111.89, 40.76), ("Boulder", -105.27, 40.01), ("Houston", -95.37, 29.76),
    ("Lincoln", -96.70, 40.81), ("Champaign", -88.24, 40.12), ("Pittsburgh", -79.99, 40.44),
    ("Atlanta", -84.39, 33.75), ("AnnArbor", -83.74, 42.28), ("Ithaca", -76.50, 42.44),
    ("Princeton", -74.66, 40.35), ("CollegePark", -76.94, 38.99),
]
NOBEL_EDGES = [(1, 2), (1, 3), (1, 8), (2, 3), (2, 4), (3, 6), (4, 5), (4, 11), (5, 6), (5, 7), (6, 10),
               (6, 14), (7, 8), (8, 9), (9, 10), (9, 12), (9, 13), (11, 12), (11, 13), (12, 14), (13, 14)]

SYNTHETIC = {
    "janos-us": ("JU", 26, 84, (-124.0, -70.0, 26.0, 48.0)),
    "janos-us-ca": ("JC", 39, 122, (-124.0, -63.0, 26.0, 54.0)),
    "germany50": ("DE", 50, 88, (6.0, 15.0, 47.5, 54.5)),
    "ta2": ("TA", 65, 108, (-10.0, 30.0, 36.0, 60.0)),
}


def geometric(prefix, n, m, box, seed):
    rng = random.Random(seed)
    lon0, lon1, lat0, lat1 = box
    nodes = [(f"{prefix}{i + 1:02d}", round(rng.uniform(lon0, lon1), 2), round(rng.uniform(lat0, lat1), 2))
             for i in range(n)]

    def dist(e):
        a, b = nodes[e[0]], nodes[e[1]]
        return (math.hypot(a[1] - b[1], a[2] - b[2]), e)

    pairs = sorted((dist((i, j)) for i in range(n) for j in range(i + 1, n)))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = set()
    for _, (i, j) in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.add((i, j))
    degree = [0] * n
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    for leaf in range(n):
        if degree[leaf] != 1:
            continue
        for _, (i, j) in pairs:
            if leaf in (i, j) and (i, j) not in edges:
                edges.add((i, j))
                degree[i] += 1
                degree[j] += 1
                break
    for _, e in pairs:
        if len(edges) >= m:
            break
        edges.add(e)
    assert len(edges) == m, (prefix, len(edges), m)
    return nodes, sorted(edges)


def native(name, nodes, edges):
    out = [f"?SNDlib native format; type: network; version: 1.0", f"# network {name}", "", "NODES ("]
    out += [f"  {nid} ( {lon:.2f} {lat:.2f} )" for nid, lon, lat in nodes]
    out += [")", "", "LINKS ("]
    for i, j in edges:
        a, b = nodes[i][0], nodes[j][0]
        out.append(f"  {a}_{b} ( {a} {b} ) 2500.00 0.00 0.00 0.00 ( )")
    out += [")", ""]
    return "\n".join(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "topologies"))
    ap.add_argument("--seed", type=int, default=20170601)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "nobel-us.txt").write_text(native("nobel-us", NOBEL_NODES, [(a - 1, b - 1) for a, b in NOBEL_EDGES]))
    for k, (name, shape) in enumerate(SYNTHETIC.items()):
        nodes, edges = geometric(*shape, seed=args.seed + k)
        (out / f"{name}.txt").write_text(native(name, nodes, edges))


if __name__ == "__main__":
    main()
