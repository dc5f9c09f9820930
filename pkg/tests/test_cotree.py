import json
import random

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings

from cosec.cotree import (
    JOIN,
    LEAF,
    UNION,
    Cotree,
    canonical_key,
    complement,
    from_nested,
    is_normalized,
    iter_set_bits,
    join,
    lca_kind,
    leaf,
    materialize,
    node_paths,
    normalize,
    parse_cotree,
    subtree,
    subtree_leaf_labels,
    to_dot,
    to_json,
    to_text,
    union,
)
from cosec.errors import CotreeParseError, UnknownLeafError

from strategies import cotrees

G1_TEXT = "(J (U c d e) (U (J a1) b))"
G1_EDGES = {
    frozenset(e) for e in (("b", "c"), ("b", "d"), ("b", "e"),
                           ("a1", "c"), ("a1", "d"), ("a1", "e"))
}


# ---------------------------------------------------------------------------
# parsing

def test_parse_g1_shape():
    t = parse_cotree(G1_TEXT)
    assert t.n_leaves() == 5
    assert t.kinds[t.root] == JOIN
    assert sorted(t.labels[v] for v in t.leaves()) == ["a1", "b", "c", "d", "e"]


def test_parse_single_leaf():
    t = parse_cotree("x")
    assert len(t) == 1 and t.kinds[0] == LEAF and t.labels[0] == "x"


def test_parse_accepts_unnormalized_input():
    t = parse_cotree("(U a (U b c))")
    assert not is_normalized(t)
    # and unary nodes too
    assert parse_cotree("(J (J a b))").n_leaves() == 2


def test_parse_is_whitespace_liberal():
    assert parse_cotree("  (J\n\ta\r\n  b )\n") == parse_cotree("(J a b)")


def test_operator_names_are_legal_leaf_labels():
    t = parse_cotree("(U U J)")
    assert sorted(t.labels[v] for v in t.leaves()) == ["J", "U"]


@pytest.mark.parametrize(
    "text, offset, fragment",
    [
        ("(U a", 4, "unclosed"),
        ("(U a b))", 7, "unbalanced"),
        ("(X a b)", 1, "expected operator"),
        ("(U a a)", 5, "duplicate leaf label"),
        ("(U)", 2, "empty node"),
        ("(U a) b", 6, "trailing content"),
        ("a b", 2, "trailing content"),
        ("(U a,b)", 4, "unexpected character"),
        ("", 0, "empty input"),
        ("   ", 0, "empty input"),
        (")", 0, "unbalanced"),
    ],
)
def test_parse_errors_carry_byte_offsets(text, offset, fragment):
    with pytest.raises(CotreeParseError) as exc_info:
        parse_cotree(text)
    assert exc_info.value.offset == offset
    assert fragment in str(exc_info.value)
    assert f"at byte {offset}" in str(exc_info.value)


def test_parse_rejects_non_ascii_with_offset():
    with pytest.raises(CotreeParseError) as exc_info:
        parse_cotree("(U à b)")
    assert exc_info.value.offset == 3
    assert "unexpected character" in str(exc_info.value)


@given(cotrees())
@settings(deadline=None)
def test_round_trip_parse_print(t):
    assert parse_cotree(to_text(t)) == t


@given(cotrees(), st.integers(0, 2**32))
@settings(deadline=None)
def test_parse_tolerates_extra_whitespace(t, seed):
    rng = random.Random(seed)
    text = to_text(t)
    loose = "".join(
        ch + rng.choice(["", " ", "\n", "  ", "\t"]) if ch in "() " else ch
        for ch in text
    )
    assert parse_cotree(" " + loose + "\n") == t


# ---------------------------------------------------------------------------
# printing

def test_to_text_canonical_spacing():
    assert to_text(parse_cotree("( J  a ( U b c ) )")) == "(J a (U b c))"


def test_to_dot_marks_inner_nodes():
    dot = to_dot(parse_cotree("(J a (U b c))"))
    assert '[label="+"]' in dot and '[label="∪"]' in dot
    assert '[label="a"]' in dot
    assert "n0 -- n1" in dot


def test_to_json_schema():
    doc = to_json(parse_cotree("(U a b)"))
    assert doc["root"] == 0
    assert doc["nodes"][0] == {"id": 0, "kind": "union", "label": None, "children": [1, 2]}
    assert doc["nodes"][1] == {"id": 1, "kind": "leaf", "label": "a", "children": []}
    json.dumps(doc)  # must be serializable as-is


# ---------------------------------------------------------------------------
# normalization

def test_normalize_flattens_same_kind_nesting():
    t = normalize(parse_cotree("(U a (U b c))"))
    assert to_text(t) == "(U a b c)"


def test_normalize_collapses_unary_nodes():
    assert to_text(normalize(parse_cotree("(J (J a b))"))) == "(J a b)"
    assert to_text(normalize(parse_cotree("(U (J (U x)))"))) == "x"


def test_normalize_keeps_normalized_trees_as_is():
    t = parse_cotree("(U (J a1 a2) b)")
    assert normalize(t) == t


@given(cotrees())
@settings(deadline=None)
def test_normalize_is_idempotent(t):
    tn = normalize(t)
    assert is_normalized(tn)
    assert normalize(tn) == tn


@given(cotrees())
@settings(deadline=None)
def test_normalize_preserves_the_graph(t):
    ga, gb = materialize(t), materialize(normalize(t))
    assert set(ga.labels) == set(gb.labels)
    assert ga.edge_labels() == gb.edge_labels()


# ---------------------------------------------------------------------------
# materialization

def test_materialize_join_and_union_of_two():
    k2 = materialize(parse_cotree("(J a b)"))
    assert k2.edge_count() == 1 and k2.has_edge(0, 1)
    e2 = materialize(parse_cotree("(U a b)"))
    assert e2.edge_count() == 0


def test_materialize_g1_edge_set():
    g = materialize(parse_cotree(G1_TEXT))
    assert g.n == 5
    assert g.edge_labels() == G1_EDGES


def test_materialize_vertex_order_follows_leaf_ids():
    g = materialize(parse_cotree("(J (U c d e) (U (J a1) b))"))
    assert g.labels == ("c", "d", "e", "a1", "b")


def test_graph_degree_and_edges():
    g = materialize(parse_cotree("(J a (U b c))"))  # P3 centered at a
    assert g.degree(g.index_of("a")) == 2
    assert g.degree(g.index_of("b")) == 1
    assert sorted(g.edges()) == [(0, 1), (0, 2)]
    with pytest.raises(UnknownLeafError):
        g.index_of("nope")


def test_iter_set_bits():
    assert list(iter_set_bits(0b101001)) == [0, 3, 5]
    assert list(iter_set_bits(0)) == []


# ---------------------------------------------------------------------------
# complement

def test_complement_swaps_kinds():
    assert to_text(complement(parse_cotree("(J a b)"))) == "(U a b)"


def test_complement_of_c4_is_2k2():
    comp = complement(parse_cotree("(J (U a b) (U c d))"))
    assert to_text(comp) == "(U (J a b) (J c d))"
    g = materialize(comp)
    assert g.edge_labels() == {frozenset(("a", "b")), frozenset(("c", "d"))}


@given(cotrees())
@settings(deadline=None)
def test_complement_is_an_involution(t):
    assert complement(complement(t)) == t


@given(cotrees())
@settings(deadline=None)
def test_complement_materializes_to_graph_complement(t):
    g = materialize(t)
    gc = materialize(complement(t))
    all_pairs = {
        frozenset((g.labels[u], g.labels[v]))
        for u in range(g.n)
        for v in range(u + 1, g.n)
    }
    assert gc.edge_labels() == all_pairs - g.edge_labels()


# ---------------------------------------------------------------------------
# structure helpers

def test_lca_kind_matches_adjacency():
    t = parse_cotree(G1_TEXT)
    assert lca_kind(t, "b", "c") == JOIN
    assert lca_kind(t, "c", "d") == UNION
    assert lca_kind(parse_cotree("(J a b)"), "a", "b") == JOIN


def test_lca_kind_rejects_bad_leaves():
    t = parse_cotree("(J a b)")
    with pytest.raises(UnknownLeafError):
        lca_kind(t, "a", "zz")
    with pytest.raises(ValueError):
        lca_kind(t, "a", "a")


@given(cotrees())
@settings(deadline=None, max_examples=50)
def test_lca_kind_agrees_with_materialize(t):
    g = materialize(t)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            expected = JOIN if g.has_edge(u, v) else UNION
            assert lca_kind(t, g.labels[u], g.labels[v]) == expected


def test_union_join_builders():
    t = join(leaf("a"), union(leaf("b"), leaf("c")))
    assert to_text(t) == "(J a (U b c))"
    with pytest.raises(ValueError):
        join(leaf("a"))
    with pytest.raises(ValueError):
        union(leaf("a"), leaf("a"))  # clashing labels


@given(cotrees(prefix="v"), cotrees(prefix="w"))
@settings(deadline=None)
def test_de_morgan_join_identity(t1, t2):
    direct = materialize(join(t1, t2))
    via_complement = materialize(
        complement(union(complement(t1), complement(t2)))
    )
    assert direct.edge_labels() == via_complement.edge_labels()


def test_subtree_reindexes_from_zero():
    t = parse_cotree(G1_TEXT)
    right = t.children[t.root][1]
    sub = subtree(t, right)
    assert sub.root == 0
    assert to_text(sub) == "(U (J a1) b)"
    sub.validate()
    with pytest.raises(ValueError):
        subtree(t, 99)


def test_subtree_leaf_labels():
    t = parse_cotree(G1_TEXT)
    assert subtree_leaf_labels(t, t.children[t.root][0]) == ("c", "d", "e")


def test_node_paths():
    t = parse_cotree("(J a (U b c))")
    assert node_paths(t) == ("root", "root.0", "root.1", "root.1.0", "root.1.1")


def _shuffled_children(t: Cotree, seed: int) -> Cotree:
    rng = random.Random(seed)
    order = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(t.children[v])
    nested = {}
    for v in reversed(order):
        if t.kinds[v] == LEAF:
            nested[v] = t.labels[v]
        else:
            kids = [nested[c] for c in t.children[v]]
            rng.shuffle(kids)
            nested[v] = (t.kinds[v], kids)
    return from_nested(nested[t.root])


@given(cotrees(), st.integers(0, 2**32))
@settings(deadline=None)
def test_canonical_key_ignores_child_order(t, seed):
    assert canonical_key(_shuffled_children(t, seed)) == canonical_key(t)


def test_canonical_key_distinguishes_labels_and_kinds():
    assert canonical_key(parse_cotree("(U a b)")) != canonical_key(parse_cotree("(J a b)"))
    assert canonical_key(parse_cotree("(U a b)")) != canonical_key(parse_cotree("(U a c)"))


@given(cotrees())
@settings(deadline=None)
def test_from_nested_output_validates(t):
    t.validate()


def test_validate_rejects_broken_trees():
    with pytest.raises(ValueError):
        Cotree(kinds=(UNION,), children=((),), labels=(None,)).validate()
    with pytest.raises(ValueError):
        # ids not in pre-order: root lists its children right-to-left
        Cotree(
            kinds=(UNION, LEAF, LEAF),
            children=((2, 1), (), ()),
            labels=(None, "a", "b"),
            root=0,
        ).validate()


def test_leaf_id_lookup():
    t = parse_cotree("(U a b)")
    assert t.labels[t.leaf_id("b")] == "b"
    with pytest.raises(UnknownLeafError):
        t.leaf_id("zz")
