"""Cotree data model: parsing, printing, normalization, materialization.

A cotree is a rooted tree whose leaves are the vertices of a cograph and whose
inner nodes are marked ``union`` or ``join``.  Two leaves are adjacent in the
represented graph exactly when their lowest common ancestor is a join node.

Representation notes:

- Nodes live in flat parallel tuples indexed by node id.  Ids are pre-order
  positions, so every child id is strictly greater than its parent id and a
  subtree occupies a contiguous id range.  Bottom-up passes are therefore a
  single reversed loop over ``range(len(tree))``; no recursion anywhere, so
  degenerate caterpillar trees with a million leaves are fine.
- ``Cotree`` and ``Graph`` values are immutable after construction and safe to
  share between threads.  All operations here are pure functions.
- Child order is preserved but carries no meaning; use ``canonical_key`` /
  ``shape_key`` for order-insensitive comparison.

Text format (``.cotree`` files)::

    cotree := leaf | "(" op ws cotree (ws cotree)* ")"
    op     := "U" | "J"
    leaf   := [A-Za-z0-9_]+

The parser is whitespace-liberal between tokens and accepts unnormalized
input (unary nodes, nested same-kind nodes); ``normalize`` is an explicit
separate pass.  Leaf labels must be unique within one tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CotreeParseError, UnknownLeafError

LEAF = "leaf"
UNION = "union"
JOIN = "join"

_OPPOSITE = {UNION: JOIN, JOIN: UNION}
_OP_OF_KIND = {UNION: "U", JOIN: "J"}
_KIND_OF_OP = {"U": UNION, "J": JOIN}
_DOT_LABEL = {UNION: "∪", JOIN: "+"}

_LEAF_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"
)
_WS = frozenset(" \t\r\n")

_CLOSE = object()  # sentinel for the iterative printer


@dataclass(frozen=True)
class Cotree:
    """Immutable cotree; see the module docstring for the id invariant."""

    kinds: tuple[str, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[str | None, ...]
    root: int = 0

    def __len__(self) -> int:
        return len(self.kinds)

    def is_leaf(self, v: int) -> bool:
        return self.kinds[v] == LEAF

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v, k in enumerate(self.kinds) if k == LEAF)

    def n_leaves(self) -> int:
        return sum(1 for k in self.kinds if k == LEAF)

    def leaf_id(self, label: str) -> int:
        for v, lbl in enumerate(self.labels):
            if lbl == label:
                return v
        raise UnknownLeafError(label)

    def parents(self) -> list[int]:
        """Parent id per node, -1 for the root."""
        par = [-1] * len(self.kinds)
        for v, ch in enumerate(self.children):
            for c in ch:
                par[c] = v
        return par

    def validate(self) -> None:
        """Check structural invariants; raises ValueError on violation."""
        n = len(self.kinds)
        if not (len(self.children) == len(self.labels) == n and n > 0):
            raise ValueError("inconsistent node arrays")
        if self.root != 0:
            raise ValueError("root must be node 0")
        seen_labels: set[str] = set()
        for v in range(n):
            kind = self.kinds[v]
            ch = self.children[v]
            if kind == LEAF:
                lbl = self.labels[v]
                if ch:
                    raise ValueError(f"leaf {v} has children")
                if not lbl or not set(lbl) <= _LEAF_CHARS:
                    raise ValueError(f"bad leaf label at node {v}: {lbl!r}")
                if lbl in seen_labels:
                    raise ValueError(f"duplicate leaf label {lbl!r}")
                seen_labels.add(lbl)
            elif kind in (UNION, JOIN):
                if not ch:
                    raise ValueError(f"inner node {v} has no children")
                if self.labels[v] is not None:
                    raise ValueError(f"inner node {v} carries a label")
            else:
                raise ValueError(f"unknown node kind {kind!r}")
        # ids must enumerate a pre-order DFS from the root
        expect = 0
        stack = [0]
        while stack:
            v = stack.pop()
            if v != expect:
                raise ValueError("node ids are not pre-order positions")
            expect += 1
            stack.extend(reversed(self.children[v]))
        if expect != n:
            raise ValueError("unreachable nodes present")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices 0..n-1 with bitmask adjacency rows."""

    n: int
    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_mask(self, v: int) -> int:
        """Closed neighborhood of v as a bitmask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_set_bits(rest):
                yield u, v

    def edge_labels(self) -> set[frozenset[str]]:
        """Edge set keyed by leaf labels; the label-matched equality used in tests."""
        return {frozenset((self.labels[u], self.labels[v])) for u, v in self.edges()}

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLeafError(label) from None


def iter_set_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# construction

def from_nested(nested) -> Cotree:
    """Build a Cotree from nested ``(kind, [children])`` tuples / label strings.

    Assigns pre-order ids.  Raises ValueError for empty inner nodes or
    duplicate leaf labels.
    """
    kinds: list[str] = []
    children: list[list[int]] = []
    labels: list[str | None] = []
    seen: set[str] = set()
    stack: list[tuple[object, int]] = [(nested, -1)]
    while stack:
        node, parent = stack.pop()
        nid = len(kinds)
        if parent >= 0:
            children[parent].append(nid)
        if isinstance(node, str):
            if not node or not set(node) <= _LEAF_CHARS:
                raise ValueError(f"bad leaf label {node!r}")
            if node in seen:
                raise ValueError(f"duplicate leaf label {node!r}")
            seen.add(node)
            kinds.append(LEAF)
            children.append([])
            labels.append(node)
        else:
            kind, kids = node
            if kind not in (UNION, JOIN):
                raise ValueError(f"unknown node kind {kind!r}")
            if not kids:
                raise ValueError("inner node with no children")
            kinds.append(kind)
            children.append([])
            labels.append(None)
            for kid in reversed(kids):
                stack.append((kid, nid))
    return Cotree(
        kinds=tuple(kinds),
        children=tuple(tuple(c) for c in children),
        labels=tuple(labels),
        root=0,
    )


def leaf(label: str) -> Cotree:
    """Single-leaf cotree (the one-vertex graph)."""
    return from_nested(label)


def union(*trees: Cotree) -> Cotree:
    """Combine cotrees under a fresh union root; labels must not clash."""
    return _combine(UNION, trees)


def join(*trees: Cotree) -> Cotree:
    """Combine cotrees under a fresh join root; labels must not clash."""
    return _combine(JOIN, trees)


def _combine(kind: str, trees: tuple[Cotree, ...]) -> Cotree:
    if len(trees) < 2:
        raise ValueError("need at least two cotrees to combine")
    return from_nested((kind, [_nested_of(t, t.root) for t in trees]))


def _dfs_order(t: Cotree, root: int) -> list[int]:
    order = []
    stack = [root]
    children = t.children
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    return order


def _nested_of(t: Cotree, root: int):
    order = _dfs_order(t, root)
    res: dict[int, object] = {}
    for v in reversed(order):
        if t.kinds[v] == LEAF:
            res[v] = t.labels[v]
        else:
            res[v] = (t.kinds[v], [res[c] for c in t.children[v]])
    return res[root]


def subtree(t: Cotree, v: int) -> Cotree:
    """The cotree rooted at node v, re-indexed from 0."""
    if not 0 <= v < len(t):
        raise ValueError(f"node id {v} out of range")
    return from_nested(_nested_of(t, v))


# ---------------------------------------------------------------------------
# text format

def parse_cotree(text: str) -> Cotree:
    """Parse a cotree expression; see the module docstring for the grammar.

    The tree is returned exactly as written, without normalization.
    Errors report byte offsets into the UTF-8 encoding of ``text``.
    """
    pos = 0
    end = len(text)
    stack: list[tuple[str, list]] = []
    top = None
    have_top = False
    seen: set[str] = set()

    def fail(message: str, at: int):
        raise CotreeParseError(message, len(text[:at].encode("utf-8")))

    def attach(node, at: int) -> None:
        nonlocal top, have_top
        if stack:
            stack[-1][1].append(node)
        elif have_top:
            fail("trailing content after complete cotree", at)
        else:
            top = node
            have_top = True

    while pos < end:
        ch = text[pos]
        if ch in _WS:
            pos += 1
            continue
        if ch == "(":
            if not stack and have_top:
                fail("trailing content after complete cotree", pos)
            pos += 1
            while pos < end and text[pos] in _WS:
                pos += 1
            start = pos
            while pos < end and text[pos] in _LEAF_CHARS:
                pos += 1
            kind = _KIND_OF_OP.get(text[start:pos])
            if kind is None:
                fail("expected operator U or J after '('", start)
            stack.append((kind, []))
        elif ch == ")":
            if not stack:
                fail("unbalanced ')'", pos)
            kind, kids = stack.pop()
            if not kids:
                fail("empty node: operator without children", pos)
            attach((kind, kids), pos)
            pos += 1
        elif ch in _LEAF_CHARS:
            start = pos
            while pos < end and text[pos] in _LEAF_CHARS:
                pos += 1
            label = text[start:pos]
            if label in seen:
                fail(f"duplicate leaf label {label!r}", start)
            seen.add(label)
            attach(label, start)
        else:
            fail(f"unexpected character {ch!r}", pos)
    if stack:
        fail("unexpected end of input: unclosed '('", end)
    if not have_top:
        fail("empty input", 0)
    return from_nested(top)


def to_text(t: Cotree) -> str:
    """Canonical expression text; ``parse_cotree(to_text(t)) == t``."""
    parts: list[str] = []
    stack: list[object] = [t.root]
    kinds = t.kinds
    while stack:
        item = stack.pop()
        if item is _CLOSE:
            parts.append(")")
            continue
        v = item
        if kinds[v] == LEAF:
            parts.append(t.labels[v])
        else:
            parts.append("(" + _OP_OF_KIND[kinds[v]])
            stack.append(_CLOSE)
            for c in reversed(t.children[v]):
                stack.append(c)
    out = []
    for i, p in enumerate(parts):
        if i and p != ")":
            out.append(" ")
        out.append(p)
    return "".join(out)


def to_dot(t: Cotree) -> str:
    """Graphviz rendering: inner nodes show the set-union sign or '+'."""
    lines = ["graph cotree {", "  node [shape=circle];"]
    for v in range(len(t)):
        label = t.labels[v] if t.kinds[v] == LEAF else _DOT_LABEL[t.kinds[v]]
        lines.append(f'  n{v} [label="{label}"];')
    for v in range(len(t)):
        for c in t.children[v]:
            lines.append(f"  n{v} -- n{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(t: Cotree) -> dict:
    """JSON-ready document: {"root": id, "nodes": [{id, kind, label, children}]}."""
    return {
        "root": t.root,
        "nodes": [
            {
                "id": v,
                "kind": t.kinds[v],
                "label": t.labels[v],
                "children": list(t.children[v]),
            }
            for v in range(len(t))
        ],
    }


# ---------------------------------------------------------------------------
# normalization

def is_normalized(t: Cotree) -> bool:
    """True iff every inner node has >= 2 children and no same-kind child."""
    for v in range(len(t)):
        kind = t.kinds[v]
        if kind == LEAF:
            continue
        ch = t.children[v]
        if len(ch) < 2:
            return False
        for c in ch:
            if t.kinds[c] == kind:
                return False
    return True


def normalize(t: Cotree) -> Cotree:
    """Collapse unary nodes and flatten same-kind nesting.

    Idempotent; the induced graph is unchanged (leaves keep their labels).
    """
    res: list[object] = [None] * len(t)
    for v in range(len(t) - 1, -1, -1):
        kind = t.kinds[v]
        if kind == LEAF:
            res[v] = t.labels[v]
            continue
        merged: list[object] = []
        for c in t.children[v]:
            r = res[c]
            if isinstance(r, tuple) and r[0] == kind:
                merged.extend(r[1])
            else:
                merged.append(r)
        res[v] = merged[0] if len(merged) == 1 else (kind, merged)
    return from_nested(res[t.root])


# ---------------------------------------------------------------------------
# graph materialization and adjacency

def materialize(t: Cotree) -> Graph:
    """The graph a cotree denotes: one vertex per leaf (in id order), an edge
    where the lowest common ancestor is a join node."""
    leaf_ids = [v for v in range(len(t)) if t.kinds[v] == LEAF]
    index = {v: i for i, v in enumerate(leaf_ids)}
    n = len(leaf_ids)
    adj = [0] * n
    masks = [0] * len(t)
    for v in range(len(t) - 1, -1, -1):
        kind = t.kinds[v]
        if kind == LEAF:
            masks[v] = 1 << index[v]
            continue
        total = 0
        for c in t.children[v]:
            total |= masks[c]
        masks[v] = total
        if kind == JOIN:
            for c in t.children[v]:
                other = total ^ masks[c]
                if other:
                    for u in iter_set_bits(masks[c]):
                        adj[u] |= other
    return Graph(
        n=n,
        labels=tuple(t.labels[v] for v in leaf_ids),
        adj=tuple(adj),
    )


def complement(t: Cotree) -> Cotree:
    """Swap union and join marks; materializes to the graph complement.

    An involution: ``complement(complement(t)) == t`` exactly (ids included).
    """
    new_kinds = tuple(k if k == LEAF else _OPPOSITE[k] for k in t.kinds)
    return Cotree(new_kinds, t.children, t.labels, t.root)


def lca_kind(t: Cotree, leaf1: str, leaf2: str) -> str:
    """Kind of the lowest common ancestor of two distinct leaves.

    Returns ``"join"`` iff the leaves are adjacent in ``materialize(t)``;
    an adjacency test without materializing.
    """
    if leaf1 == leaf2:
        raise ValueError("leaves must be distinct")
    a = t.leaf_id(leaf1)
    b = t.leaf_id(leaf2)
    par = t.parents()
    ancestors = set()
    v = a
    while v != -1:
        ancestors.add(v)
        v = par[v]
    v = b
    while v not in ancestors:
        v = par[v]
    return t.kinds[v]


# ---------------------------------------------------------------------------
# structural comparison helpers

def canonical_key(t: Cotree, root: int | None = None):
    """Order-insensitive structural key including leaf labels.

    Equal keys mean equal trees up to reordering children (the equality used
    throughout the tests).
    """
    return _key(t, t.root if root is None else root, with_labels=True)


def shape_key(t: Cotree, root: int | None = None):
    """Order-insensitive structural key ignoring leaf labels."""
    return _key(t, t.root if root is None else root, with_labels=False)


def _key(t: Cotree, root: int, with_labels: bool):
    order = _dfs_order(t, root)
    res: dict[int, tuple] = {}
    for v in reversed(order):
        if t.kinds[v] == LEAF:
            res[v] = ("L", t.labels[v]) if with_labels else ("L",)
        else:
            res[v] = (t.kinds[v], tuple(sorted(res[c] for c in t.children[v])))
    return res[root]


def node_paths(t: Cotree) -> tuple[str, ...]:
    """Human-readable child-index path per node, e.g. "root.1.0"."""
    paths = [""] * len(t)
    paths[t.root] = "root"
    for v in range(len(t)):
        for i, c in enumerate(t.children[v]):
            paths[c] = f"{paths[v]}.{i}"
    return tuple(paths)


def subtree_leaf_labels(t: Cotree, v: int) -> tuple[str, ...]:
    """Labels of the leaves under node v, in id order."""
    return tuple(
        t.labels[w] for w in sorted(_dfs_order(t, v)) if t.kinds[w] == LEAF
    )
