"""
Exhaustive search for the smallest counterexample
=================================================

How small can a cograph be and still separate the original join rule from
the definitional property check?  Enumerate every normalized cotree shape
by leaf count, run the full oracle cross-check, and watch where the first
disagreement appears.
"""

from collections import Counter

from cosec import enumerate_cotrees
from cosec.verify import report_text, verify_corpora

# The enumerator yields each shape exactly once, children treated as a
# multiset.  Counts grow roughly 3x per leaf:
per_size = Counter(t.n_leaves() for t in enumerate_cotrees(8))
print("shapes per leaf count:", dict(sorted(per_size.items())))

# Sweep upward.  At 4 leaves and below everything agrees; at 5 leaves the
# first original-rule disagreement appears, and it is the 5-vertex member
# of the G_k family.
for n in range(2, 6):
    report = verify_corpora(max_n=n)
    found = report.original_lemma_disagreements
    print(
        f"n <= {n}: {report.instances:>3} cotrees, "
        f"{len(report.mismatches)} mismatches, "
        f"{len(found)} original-rule disagreement(s)"
    )
    for f in found:
        print(f"         -> {f.cotree} (node {f.node}, {f.path})")

# The corrected rule never disagrees with the definition - that is the
# "mismatches: 0" column - while the original rule starts failing as soon
# as a union-of-two-cliques child can exist whose parts are not single
# leaves.  The full report of the n <= 5 run:
print()
print(report_text(verify_corpora(max_n=5)))
