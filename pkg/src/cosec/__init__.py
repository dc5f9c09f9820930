"""cosec — cotree toolkit for secure-domination bookkeeping on cographs.

The package revolves around one comparison: a linear-time bottom-up pass
(:func:`annotate`) computes, for every node of a normalized cotree, the facts
needed to decide whether a join-rooted cograph admits a two-vertex secure
configuration — including an intentionally flawed published rule
(``p_original``) and its correction (``p_corrected``) — and exponential
definitional oracles (:mod:`cosec.oracles`) provide the ground truth both are
judged against.  :mod:`cosec.generators` produces the counterexample family
``g_k`` that separates the two rules, plus exhaustive and random corpora;
:mod:`cosec.verify` runs the cross-checks at corpus scale.
"""

from .annotate import (
    AnnotatedCotree,
    NodeAnnotations,
    annotate,
    property_p_corrected,
    property_p_original,
)
from .cotree import (
    JOIN,
    LEAF,
    UNION,
    Cotree,
    Graph,
    complement,
    from_nested,
    is_normalized,
    join,
    lca_kind,
    leaf,
    materialize,
    normalize,
    parse_cotree,
    subtree,
    to_dot,
    to_json,
    to_text,
    union,
)
from .errors import (
    BudgetExceededError,
    CotreeParseError,
    NotAJoinError,
    NotNormalizedError,
    UnknownLeafError,
)
from .generators import (
    GkSpec,
    RandomSpec,
    enumerate_cotrees,
    g_k,
    random_corpus,
    random_cotree,
)
from .oracles import (
    DEFAULT_BUDGET,
    OracleBudget,
    domination_number,
    is_clique,
    is_complete,
    is_dominating,
    is_secure_dominating,
    label_r_definitional,
    label_r_structural,
    property_p_definitional,
    secure_domination_number,
)
from .verify import VerificationReport, verify_corpora

__version__ = "0.1.0"

__all__ = [
    "AnnotatedCotree",
    "BudgetExceededError",
    "Cotree",
    "CotreeParseError",
    "DEFAULT_BUDGET",
    "GkSpec",
    "Graph",
    "JOIN",
    "LEAF",
    "NodeAnnotations",
    "NotAJoinError",
    "NotNormalizedError",
    "OracleBudget",
    "RandomSpec",
    "UNION",
    "UnknownLeafError",
    "VerificationReport",
    "annotate",
    "complement",
    "domination_number",
    "enumerate_cotrees",
    "from_nested",
    "g_k",
    "is_clique",
    "is_complete",
    "is_dominating",
    "is_normalized",
    "is_secure_dominating",
    "join",
    "label_r_definitional",
    "label_r_structural",
    "lca_kind",
    "leaf",
    "materialize",
    "normalize",
    "parse_cotree",
    "property_p_corrected",
    "property_p_definitional",
    "property_p_original",
    "random_corpus",
    "random_cotree",
    "secure_domination_number",
    "subtree",
    "to_dot",
    "to_json",
    "to_text",
    "union",
    "verify_corpora",
]
