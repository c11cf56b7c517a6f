"""v-numbers, Frobenius-power invariants and Betti numbers of monomial ideals."""

from .core import (
    AmbientRing,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon,
    contains,
    frobenius_power,
    intersect,
    minimalize,
    parse_ideal,
    polarize,
)
from .corpus import Graph, edge_ideal, paper_graph_11, whisker
from .decomposition import associated_primes, height_profile, irreducible_decomposition
from .errors import DomainError, ParseError, ResourceError, StructuralError, VNumError
from .homological import QQ, BettiTable, FieldChoice, betti_table, hilbert_series, koszul_betti_oracle, summary
from .vnumber import alpha_q, brute_force_v, local_v_number, v_number, v_of_frobenius, v_via_polarization

__version__ = "0.1.0"
