"""Exact computations with Brauer classes of F_p(t) and of the completed field K^(X)."""
from .brauer_complete import CompletedClass, certify_indecomposable, index, period, scale_completed
from .brauer_global import GlobalBrauerClass, SymbolSum, from_invariants, restrict, scale_class, symbol
from .characters import CyclicCharacter, grunwald_constant_witnesses, local_order, splitting_at
from .constructions import (
    IndecomposableSpec,
    build_indecomposable,
    build_remark_p1,
    ncp_admissible,
    ncp_parameters,
)
from .field import Place, Poly, RationalFunction, factor, parse_place, parse_poly, places_up_to, valuation
from .lift import VLift, index_report, lift_class, restrict_back
from .qmodz import QmodZ

__version__ = "0.1.0"
