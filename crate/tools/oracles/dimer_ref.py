#!/usr/bin/env python3
"""Brute-force dimer reference for Fisher graphs of one-cell lattices.

Builds the Fisher decoration of the 1x1 square and triangular lattices by hand
(single base vertex, loop edges), enumerates every perfect matching by
backtracking, and tallies matchings by the subset of long edges they use.
Long-edge subsets map to homology parity sectors via the base edge shifts, so
the tables printed here pin the four parity-sector sums

    Z[p][q] = sum over matchings with crossing parities (p, q) of prod(weights)

as integer-coefficient polynomials in the long-edge weights t_e.  These feed
the frozen tables in crates/frustrix/tests/kasteleyn_poly.rs: evaluations of
the characteristic polynomial at (z, w) = (+-1, +-1) must be squares of
+-1-combinations of the Z[p][q] with a single consistent sign pattern.

Fisher decoration of a dart x (sigma = counterclockwise dart rotation):
  vertices  o = 3x, u = 3x+1, up = 3x+2
  triangle  (o,u), (o,up), (u,up)          weight 1
  junction  (up_x, u_{sigma(x)})           weight 1
  long edge (o_{2e}, o_{2e+1}) per base e  weight t_e, crossing parity s_e
"""

import itertools
from collections import defaultdict


def sigma_from_rotation(rotation):
    nxt = {}
    for i, d in enumerate(rotation):
        nxt[d] = rotation[(i + 1) % len(rotation)]
    return nxt


def fisher_edges(rotation, shifts):
    """Edge list [(a, b, base_edge_or_None)] of the Fisher graph."""
    sigma = sigma_from_rotation(rotation)
    edges = []
    for x in rotation:
        o, u, up = 3 * x, 3 * x + 1, 3 * x + 2
        edges.append((o, u, None))
        edges.append((o, up, None))
        edges.append((u, up, None))
    for x in rotation:
        edges.append((3 * x + 2, 3 * sigma[x] + 1, None))
    for e in range(len(shifts)):
        edges.append((3 * (2 * e), 3 * (2 * e + 1), e))
    return edges


def perfect_matchings(n_vertices, edges):
    """Yield matchings as tuples of edge indices, lowest-vertex backtracking."""
    incident = defaultdict(list)
    for idx, (a, b, _) in enumerate(edges):
        incident[a].append(idx)
        incident[b].append(idx)

    def rec(matched, chosen):
        if len(matched) == n_vertices:
            yield tuple(sorted(chosen))
            return
        v = min(set(range(n_vertices)) - matched)
        for idx in incident[v]:
            a, b = edges[idx][0], edges[idx][1]
            o = b if a == v else a
            if o in matched or o == v:
                continue
            yield from rec(matched | {v, o}, chosen + [idx])

    yield from rec(frozenset(), [])


def analyze(name, rotation, shifts):
    n_darts = len(rotation)
    n_vertices = 3 * n_darts
    edges = fisher_edges(rotation, shifts)
    counts = defaultdict(int)
    for m in perfect_matchings(n_vertices, edges):
        longs = frozenset(edges[i][2] for i in m if edges[i][2] is not None)
        counts[longs] += 1

    print(f"== {name}: {n_vertices} vertices, {len(edges)} edges ==")
    total = 0
    for subset in sorted(counts, key=lambda s: (len(s), sorted(s))):
        label = "{" + ",".join(str(e) for e in sorted(subset)) + "}"
        print(f"  long subset {label:>9}: {counts[subset]} matchings")
        total += counts[subset]
    print(f"  total matchings: {total}")

    sectors = defaultdict(list)
    for subset, c in sorted(counts.items(), key=lambda kv: sorted(kv[0])):
        p = sum(shifts[e][0] for e in subset) % 2
        q = sum(shifts[e][1] for e in subset) % 2
        sectors[(p, q)].append((sorted(subset), c))
    for (p, q) in sorted(sectors):
        terms = " + ".join(
            f"{c}*" + ("1" if not s else "*".join(f"t{e}" for e in s))
            for s, c in sectors[(p, q)]
        )
        print(f"  Z[{p}][{q}] = {terms}")
    print()
    return counts


def main():
    # Rotations match the crate's generators: counterclockwise dart order
    # around the single base vertex; dart 2e/2e+1 are the two ends of edge e.
    analyze("square 1x1", rotation=[0, 2, 1, 3], shifts=[(1, 0), (0, 1)])
    analyze(
        "triangular 1x1",
        rotation=[0, 4, 2, 1, 5, 3],
        shifts=[(1, 0), (0, 1), (1, 1)],
    )


if __name__ == "__main__":
    main()
