"""Corpus generators: the G_k counterexample family, seeded random cotrees,
and an exhaustive enumerator of small normalized cotree shapes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .cotree import JOIN, UNION, Cotree, from_nested, leaf, normalize

_OPPOSITE = {UNION: JOIN, JOIN: UNION}


@dataclass(frozen=True)
class GkSpec:
    """Parameter for the counterexample family; k is the clique size."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class RandomSpec:
    leaf_count: int
    seed: int
    max_arity: int = 4

    def __post_init__(self):
        if self.leaf_count < 1:
            raise ValueError(f"leaf_count must be >= 1, got {self.leaf_count}")
        if self.max_arity < 2:
            raise ValueError(f"max_arity must be >= 2, got {self.max_arity}")


def g_k(spec: GkSpec) -> Cotree:
    """Cotree of G_k: K_k joined to the independent triple {c, d, e}, plus a
    vertex b adjacent to exactly c, d, e.

    Shape: (J (U c d e) (U (J a1 … ak) b)), normalized — for k = 1 the unary
    inner join collapses and the a-side is the single leaf a1.  The right
    union child is the classic label-ℛ witness: its components are the
    clique {a_i} and the single vertex b.
    """
    a_side = (JOIN, [f"a{i}" for i in range(1, spec.k + 1)])
    nested = (JOIN, [(UNION, ["c", "d", "e"]), (UNION, [a_side, "b"])])
    return normalize(from_nested(nested))


def random_cotree(spec: RandomSpec) -> Cotree:
    """Deterministic pseudo-random normalized cotree with exactly
    ``spec.leaf_count`` leaves.

    Levels alternate union/join (top kind random), arities are drawn from
    [2, max_arity], so the output is normalized by construction.  Leaves are
    labeled v0, v1, … in construction order.  Identical specs give identical
    trees.
    """
    rng = random.Random(spec.seed)
    if spec.leaf_count == 1:
        return leaf("v0")
    counter = 0

    def next_label() -> str:
        nonlocal counter
        lbl = f"v{counter}"
        counter += 1
        return lbl

    root: list = [rng.choice((UNION, JOIN)), []]
    stack: list[tuple[list, int]] = [(root, spec.leaf_count)]
    while stack:
        node, budget = stack.pop()
        arity = rng.randint(2, min(spec.max_arity, budget))
        cuts = sorted(rng.sample(range(1, budget), arity - 1))
        bounds = [0, *cuts, budget]
        parts = [bounds[i + 1] - bounds[i] for i in range(arity)]
        child_kind = _OPPOSITE[node[0]]
        inner: list[tuple[list, int]] = []
        for part in parts:
            if part == 1:
                node[1].append(next_label())
            else:
                child: list = [child_kind, []]
                node[1].append(child)
                inner.append((child, part))
        stack.extend(reversed(inner))
    return from_nested(root)


def random_corpus(count: int, max_leaves: int, seed: int) -> Iterator[Cotree]:
    """``count`` random cotrees with 1..max_leaves leaves; fully determined
    by ``seed`` (leaf counts and per-tree seeds come from one master RNG)."""
    master = random.Random(seed)
    for _ in range(count):
        yield random_cotree(
            RandomSpec(
                leaf_count=master.randint(1, max_leaves),
                seed=master.getrandbits(63),
            )
        )


# ---------------------------------------------------------------------------
# exhaustive enumeration of small shapes

_ENUMERATION_GUARD = 10
_L = ("L",)
_OP = {UNION: "U", JOIN: "J"}
_KIND = {"U": UNION, "J": JOIN}


def enumerate_cotrees(max_leaves: int) -> Iterator[Cotree]:
    """Every normalized cotree shape with <= max_leaves leaves, each exactly
    once up to child-order permutation, leaves auto-labeled v0, v1, … in
    pre-order.

    Shapes are generated as canonically sorted child multisets, so no
    deduplication pass is needed.  Guarded at max_leaves <= 10: the count
    roughly triples per extra leaf.
    """
    if not 1 <= max_leaves <= _ENUMERATION_GUARD:
        raise ValueError(
            f"max_leaves must be in 1..{_ENUMERATION_GUARD}, got {max_leaves}"
        )
    memo: dict[tuple[int, str], tuple[tuple, ...]] = {}
    for n in range(1, max_leaves + 1):
        if n == 1:
            yield leaf("v0")
            continue
        for op in ("U", "J"):
            for shape in _shapes(n, op, memo):
                yield _shape_to_cotree(shape)


def _shapes(n: int, op: str, memo: dict) -> tuple[tuple, ...]:
    """All canonical shapes of an op-rooted normalized cotree on n leaves.

    A shape is ("L",) or (op, child1, child2, …) with children sorted; the
    children of an op node are leaves or nodes of the opposite op.
    """
    key = (n, op)
    if key in memo:
        return memo[key]
    other = "J" if op == "U" else "U"
    candidates: list[tuple[int, tuple]] = [(1, _L)]
    for m in range(2, n):
        candidates.extend((m, s) for s in _shapes(m, other, memo))
    out: list[tuple] = []
    picked: list[tuple] = []

    def extend(lo: int, remaining: int) -> None:
        if remaining == 0:
            if len(picked) >= 2:
                out.append((op, *sorted(picked)))
            return
        for j in range(lo, len(candidates)):
            weight, shape = candidates[j]
            if weight <= remaining:
                picked.append(shape)
                extend(j, remaining - weight)
                picked.pop()

    extend(0, n)
    memo[key] = tuple(out)
    return memo[key]


def _shape_to_cotree(shape: tuple) -> Cotree:
    counter = 0

    def conv(s: tuple):
        nonlocal counter
        if s == _L:
            lbl = f"v{counter}"
            counter += 1
            return lbl
        return (_KIND[s[0]], [conv(child) for child in s[1:]])

    return from_nested(conv(shape))
