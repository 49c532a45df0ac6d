"""Free resolutions and cohomology of augmented algebras over GF(p)."""

from .anick import AnickResolution, build_quiver, chains
from .cohom import betti, betti_numbers, chain_iso_check, cup_even, dual_differential, verify_chain_map
from .freealg import Alphabet, NcPoly, cmp_deglex, rising
from .gfp import FieldScalar, inv
from .parse import ParseError, parse_poly
from .rewrite import CompletionInconclusive, Presentation, RewriteSystem, complete, normal_form, normal_words
from .ttp import TwistParams, verify_identities

__all__ = [
    "Alphabet", "NcPoly", "cmp_deglex", "rising", "FieldScalar", "inv", "ParseError",
    "parse_poly", "CompletionInconclusive", "Presentation", "RewriteSystem", "complete",
    "normal_form", "normal_words", "AnickResolution", "build_quiver", "chains",
    "TwistParams", "verify_identities", "betti", "betti_numbers", "chain_iso_check",
    "cup_even", "dual_differential", "verify_chain_map",
]
__version__ = "0.1.0"
