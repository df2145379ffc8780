"""Exact Poisson algebra, valuations and automorphisms for small Poisson fields."""

from .exactpoly import Poly, PolyError, ParseError, parse_poly, jacobian_det
from .poisson import PoissonStructure, structure_from_potential, weyl, skew, torus, bracket
from .quotient import MonomialOrder, QuotientRing, normal_form
from .groebner import buchberger, singularity_report, milnor_number, linear_syzygy_kernel
from .valuation import FilteredContext, min_weight_w, is_classical_on_generators
from .automorphism import PolyMap, MonomialSymmetry, enumerate_fermat, group_verify, epsilon_check
from .catalog import list_entries, distinguisher_report, build_named_valuation, NamedValuationSpec

__version__ = "0.1.0"
