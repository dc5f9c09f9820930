"""Shared test-side oracles that must stay independent of the package logic."""

from itertools import combinations

from cosec.cotree import Graph, iter_set_bits


def has_induced_p4(g: Graph) -> bool:
    """Brute-force induced-P4 search, organized by the path's middle edge.

    a-b-c-d is an induced P4 iff (b,c) is an edge, a is adjacent to b but
    not c, d is adjacent to c but not b, and a,d are non-adjacent.  Every
    induced P4 is found through its middle edge, so scanning all edges is
    exhaustive.
    """
    adj = g.adj
    for b, c in g.edges():
        a_side = adj[b] & ~adj[c] & ~(1 << c)
        d_side = adj[c] & ~adj[b] & ~(1 << b)
        if not a_side or not d_side:
            continue
        for a in iter_set_bits(a_side):
            if d_side & ~adj[a]:
                return True
    return False


def has_induced_p4_by_quadruples(g: Graph) -> bool:
    """Slow cross-check: an induced 4-vertex subgraph is a P4 exactly when
    it has 3 edges and degree sequence (1, 1, 2, 2)."""
    for quad in combinations(range(g.n), 4):
        mask = 0
        for v in quad:
            mask |= 1 << v
        degs = sorted((g.adj[v] & mask).bit_count() for v in quad)
        if degs == [1, 1, 2, 2]:
            return True
    return False


def graph_from_edges(n: int, edges) -> Graph:
    """Direct Graph construction for test graphs that are not cographs."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n=n, labels=tuple(f"x{i}" for i in range(n)), adj=tuple(adj))


def independent_shape_counts(max_leaves: int) -> list[int]:
    """Count normalized cotree shapes per leaf count, without enumerating.

    A union-rooted shape on n >= 2 leaves is a multiset of children drawn
    from one leaf kind (weight 1) and the join-rooted shapes of each weight
    m < n; any such multiset totaling n has >= 2 members because no single
    child weighs n.  Union/join symmetry gives the total 2·c(n) for n >= 2.
    Multisets are counted by the generating function ∏ (1 - x^w)^(-kinds_w).
    """
    c = [0] * (max_leaves + 1)  # c[n] = union-rooted (= join-rooted) shapes
    for n in range(2, max_leaves + 1):
        poly = [1] + [0] * n
        kinds_per_weight = [(1, 1)] + [(m, c[m]) for m in range(2, n)]
        for weight, kinds in kinds_per_weight:
            for _ in range(kinds):
                for i in range(weight, n + 1):
                    poly[i] += poly[i - weight]
        c[n] = poly[n]
    totals = [0] * (max_leaves + 1)
    totals[1] = 1
    for n in range(2, max_leaves + 1):
        totals[n] = 2 * c[n]
    return totals
