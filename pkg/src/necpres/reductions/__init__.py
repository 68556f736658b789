"""Instance generators compiling hard source problems into Necessary President."""

from .clique import (
    MulticoloredGraph,
    clique_to_ranked_pairs,
    exhaustive_clique,
    parse_clique,
    random_multicolored_graph,
    to_clique_text,
)
from .hitting_set import (
    HittingSetInstance,
    exhaustive_hitting_set,
    hitting_set_to_short,
    hitting_set_to_vetolike,
    parse_hitting_set,
    to_hitting_set_text,
)
from .sat import (
    Formula22E3,
    enumerate_assignments,
    parse_dimacs,
    random_formula,
    sat_to_ranked_pairs,
    sat_to_short,
    sat_to_vetolike,
    to_dimacs,
    validate_formula,
)

__all__ = [
    "Formula22E3",
    "HittingSetInstance",
    "MulticoloredGraph",
    "clique_to_ranked_pairs",
    "enumerate_assignments",
    "exhaustive_clique",
    "exhaustive_hitting_set",
    "hitting_set_to_short",
    "hitting_set_to_vetolike",
    "parse_clique",
    "parse_dimacs",
    "parse_hitting_set",
    "random_formula",
    "random_multicolored_graph",
    "sat_to_ranked_pairs",
    "sat_to_short",
    "sat_to_vetolike",
    "to_clique_text",
    "to_dimacs",
    "to_hitting_set_text",
    "validate_formula",
]
