"""Link invariants from linear switches: diagrams, presentations, ideals."""

from .diagrams import (UNKNOT, VIRTUAL_TREFOIL, BraidWord, GaussCode, Letter, Passage,
                       braid_closure_gauss, move_fixtures, parse_braid, parse_gauss,
                       r1, r1_variants, r2, r2_variants)
from .ideals import InvariantResult, invariants
from .presentation import (Presentation, braid_rep, presentation_from_braid,
                           presentation_from_gauss, switch_units)

__all__ = [
    "UNKNOT", "VIRTUAL_TREFOIL", "BraidWord", "GaussCode", "Letter", "Passage",
    "braid_closure_gauss", "move_fixtures", "parse_braid", "parse_gauss", "r1", "r1_variants",
    "r2", "r2_variants", "InvariantResult", "invariants", "Presentation", "braid_rep",
    "presentation_from_braid", "presentation_from_gauss", "switch_units",
]
