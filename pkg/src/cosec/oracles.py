"""Definitional oracles: exact, exponential, deliberately unclever.

Everything in here evaluates a definition by exhaustive search over vertex
subsets.  These functions are the ground truth that the linear-time
annotation pass is validated against, so they must stay as close to the
written definitions as possible — no shortcuts that presuppose what we are
trying to check.

Subset arguments (``VertexSet``) are either an iterable of vertex indices or
an int bitmask; internally everything is bitmasks.  The minimization oracles
scan subsets in ascending cardinality and stop at the first witness, which
is exact (the first size with a witness is the minimum) and fast on dense
graphs where γ and γ_s are small.  Graphs above the configured vertex caps
raise :class:`~cosec.errors.BudgetExceededError` instead of degrading to a
heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .cotree import (
    JOIN,
    UNION,
    Cotree,
    Graph,
    iter_set_bits,
    materialize,
    normalize,
    subtree,
)
from .errors import BudgetExceededError, NotAJoinError

VertexSet = int | Iterable[int]


@dataclass(frozen=True)
class OracleBudget:
    """Vertex caps for the 2^n subset scans.

    ``max_vertices_secure`` is the smaller cap because the secure-domination
    check multiplies the subset scan by a per-subset swap scan.
    """

    max_vertices_domination: int = 20
    max_vertices_secure: int = 16

    def __post_init__(self):
        if self.max_vertices_secure < 1 or self.max_vertices_domination < 1:
            raise ValueError("budget caps must be positive")
        if self.max_vertices_secure > self.max_vertices_domination:
            raise ValueError("secure cap must not exceed domination cap")


DEFAULT_BUDGET = OracleBudget()


def as_mask(g: Graph, s: VertexSet) -> int:
    """Normalize a vertex set to a bitmask; rejects out-of-range indices."""
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise IndexError(f"vertex mask {s:#x} out of range for n={g.n}")
        return s
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex index {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """Does every vertex outside s have a neighbor in s?"""
    mask = as_mask(g, s)
    cover = mask
    for v in iter_set_bits(mask):
        cover |= g.adj[v]
    return cover == g.full_mask


def is_secure_dominating(g: Graph, s: VertexSet) -> bool:
    """Dominating, and every outsider x has a neighbor y in s whose swap
    (s ∪ {x}) ∖ {y} still dominates."""
    mask = as_mask(g, s)
    if not is_dominating(g, mask):
        return False
    adj = g.adj
    for x in iter_set_bits(g.full_mask & ~mask):
        guarded = False
        for y in iter_set_bits(adj[x] & mask):
            if is_dominating(g, (mask | 1 << x) & ~(1 << y)):
                guarded = True
                break
        if not guarded:
            return False
    return True


def domination_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """γ(g) by ascending-cardinality subset scan."""
    cap = budget.max_vertices_domination
    if g.n > cap:
        raise BudgetExceededError("domination_number", g.n, cap)
    closed = [g.closed_mask(v) for v in range(g.n)]
    full = g.full_mask
    for k in range(1, g.n + 1):
        for sub in combinations(closed, k):
            cover = 0
            for m in sub:
                cover |= m
            if cover == full:
                return k
    raise AssertionError("V(g) always dominates")  # pragma: no cover


def secure_domination_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """γ_s(g) by ascending-cardinality subset scan."""
    cap = budget.max_vertices_secure
    if g.n > cap:
        raise BudgetExceededError("secure_domination_number", g.n, cap)
    for k in range(1, g.n + 1):
        for sub in combinations(range(g.n), k):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if is_secure_dominating(g, mask):
                return k
    raise AssertionError("V(g) always secure-dominates")  # pragma: no cover


def is_clique(g: Graph, s: VertexSet) -> bool:
    """All pairs in s adjacent; vacuously true for |s| ≤ 1 (and empty s)."""
    mask = as_mask(g, s)
    for v in iter_set_bits(mask):
        if mask & ~(1 << v) & ~g.adj[v]:
            return False
    return True


def is_complete(g: Graph) -> bool:
    return is_clique(g, g.full_mask)


def gamma_is_one(g: Graph) -> bool:
    """Whether γ(g) = 1, i.e. some single vertex dominates.

    Same verdict as ``domination_number(g) == 1`` — the ascending scan's
    first round is exactly this singleton loop — but polynomial, so it
    needs no budget.
    """
    full = g.full_mask
    return any(g.closed_mask(v) == full for v in range(g.n))


def gamma_s_is_one(g: Graph) -> bool:
    """Whether γ_s(g) = 1, i.e. some single vertex secure-dominates.

    Singleton round of ``secure_domination_number``; polynomial.  Kept as a
    scan over the definition (not the "complete graph" shortcut) so it can
    serve as an independent check of that very equivalence.
    """
    return any(is_secure_dominating(g, 1 << v) for v in range(g.n))


def property_p_definitional(t: Cotree) -> bool:
    """Does the join-rooted cograph of t admit two vertices x ≠ y with
    {x, y} dominating and both V ∖ N[x], V ∖ N[y] empty or a clique?

    Evaluated on the materialized graph by an O(n²) pair scan after an
    O(n²)-word precomputation of the per-vertex remainder-is-clique flags.
    """
    tn = normalize(t)
    if tn.kinds[tn.root] != JOIN:
        raise NotAJoinError(
            f"property is defined for join-rooted cographs; root is {tn.kinds[tn.root]}"
        )
    g = materialize(tn)
    full = g.full_mask
    closed = [g.closed_mask(v) for v in range(g.n)]
    ok = [is_clique(g, full & ~closed[v]) for v in range(g.n)]
    for x in range(g.n):
        if not ok[x]:
            continue
        for y in range(x + 1, g.n):
            if ok[y] and closed[x] | closed[y] == full:
                return True
    return False


def label_r_definitional(
    t: Cotree, u: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Is node u a union with exactly two children, one subtree with γ = 1
    and the other with γ_s = 1 (under some assignment)?

    The two =1 tests are the singleton rounds of the minimization oracles;
    see ``gamma_is_one`` / ``gamma_s_is_one``.  Budget caps still apply to
    the child subtrees so the call refuses the same inputs the full oracles
    would refuse.
    """
    if t.kinds[u] != UNION or len(t.children[u]) != 2:
        return False
    a, b = t.children[u]
    mats: dict[int, Graph] = {}

    def graph_of(v: int, check: str, cap: int) -> Graph:
        size = sum(1 for w in _subtree_nodes(t, v) if t.is_leaf(w))
        if size > cap:
            raise BudgetExceededError(check, size, cap)
        if v not in mats:
            mats[v] = materialize(subtree(t, v))
        return mats[v]

    deferred: BudgetExceededError | None = None
    for x, y in ((a, b), (b, a)):
        try:
            if gamma_is_one(
                graph_of(x, "domination_number", budget.max_vertices_domination)
            ) and gamma_s_is_one(
                graph_of(y, "secure_domination_number", budget.max_vertices_secure)
            ):
                return True
        except BudgetExceededError as exc:
            deferred = exc
    if deferred is not None:
        raise deferred
    return False


def label_r_structural(t: Cotree, u: int) -> bool:
    """Lemma-style structural test: the subtree graph is disconnected and
    some vertex w leaves a clique as V ∖ N[w]."""
    g = materialize(subtree(t, u))
    if _is_connected(g):
        return False
    full = g.full_mask
    return any(is_clique(g, full & ~g.closed_mask(w)) for w in range(g.n))


def _subtree_nodes(t: Cotree, root: int):
    stack = [root]
    while stack:
        v = stack.pop()
        yield v
        stack.extend(t.children[v])


def _is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grown = 0
        for v in iter_set_bits(frontier):
            grown |= g.adj[v]
        frontier = grown & ~seen
        seen |= frontier
    return seen == g.full_mask
