"""Brute-force oracles that share no code with the library's elimination routines."""

from fractions import Fraction
from itertools import combinations


def brute_force_tree_count(g):
    """Count spanning trees by testing every (|V|-1)-subset of edges with union-find."""
    vertices = list(g.vertices)
    edges = [(e.tail, e.head) for e in g.edges if e.tail != e.head]
    count = 0
    for subset in combinations(edges, len(vertices) - 1):
        parent = {v: v for v in vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count


def recurrence_table(x0, x1, n):
    out = [x0, x1]
    while len(out) <= n:
        out.append(4 * out[-1] - out[-2])
    return out[: n + 1]


def adjacency_laplacian(adj, order):
    """Degree-minus-adjacency Laplacian from a neighbour map, as nested Fractions."""
    return [[Fraction(len(adj[u])) if u == v else Fraction(-1 if v in adj[u] else 0) for v in order]
            for u in order]
