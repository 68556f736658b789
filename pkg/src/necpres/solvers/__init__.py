from .borda import borda_delta, solve_borda
from .bruteforce import solve_bruteforce
from .copeland import copeland_pair_delta, solve_copeland
from .dispatch import route, solve
from .matching import saturating_matching
from .maximin import solve_maximin
from .short_fpt import StructureGuess, solve_short_fpt, well_placed
from .verdict import BudgetExceeded, Verdict, certificate_holds
from .vetolike import solve_vetolike_fpt

__all__ = [
    "BudgetExceeded",
    "StructureGuess",
    "Verdict",
    "borda_delta",
    "certificate_holds",
    "copeland_pair_delta",
    "route",
    "saturating_matching",
    "solve",
    "solve_borda",
    "solve_bruteforce",
    "solve_copeland",
    "solve_maximin",
    "solve_short_fpt",
    "solve_vetolike_fpt",
    "well_placed",
]
