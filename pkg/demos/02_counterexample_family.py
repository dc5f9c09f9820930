"""
The counterexample family G_k
=============================

G_k is a clique K_k joined to three isolated vertices {c, d, e}, plus one
extra vertex b adjacent to exactly c, d, e.  The family separates two rules
for deciding whether a join-rooted cograph has a two-vertex secure
configuration (property 𝒫):

- the original rule wants at least two root children that are leaves or
  carry label ℛ — G_k's root has neither;
- the corrected rule additionally accepts a child that carries label ℛ and
  is a union of two cliques — which is exactly G_k's right child, the
  union of K_k and the single vertex b.

The definitional oracle (brute force over vertex pairs) confirms that the
corrected rule is the right one: {a_1, b} is a dominating pair whose
closed-neighborhood complements are a single vertex and the clique K_k.
"""

from cosec import GkSpec, annotate, g_k, materialize, property_p_definitional, to_text

print(f"{'k':>3}  {'vertices':>8}  {'edges':>5}  {'original':>8}  "
      f"{'corrected':>9}  {'definitional':>12}")
for k in range(1, 11):
    t = g_k(GkSpec(k))
    g = materialize(t)
    root = annotate(t).node(0)
    print(
        f"{k:>3}  {g.n:>8}  {g.edge_count():>5}  {str(root.p_original):>8}  "
        f"{str(root.p_corrected):>9}  {str(property_p_definitional(t)):>12}"
    )

# The rows all read False / True / True: the original rule rejects every
# member of the family even though each one satisfies the property.

# Zoom into k = 3 to see where the verdicts come from.
t = g_k(GkSpec(3))
at = annotate(t)
print()
print("G_3 cotree:", to_text(t))
left, right = t.children[t.root]
for v, name in ((left, "left child  (U c d e)"), (right, "right child (U (J a1 a2 a3) b)")):
    a = at.node(v)
    print(
        f"{name}: label_r={a.label_r}  union_of_two_cliques={a.union_of_two_cliques}"
    )

# The left union has three children, so it can never carry label ℛ.  The
# right union is K_3 ∪ K_1: label ℛ *and* a union of two cliques — the case
# the original rule forgot.
