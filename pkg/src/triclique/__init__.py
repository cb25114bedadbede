"""Triadic concepts, switching generators and MCCS closures on small contexts."""

from .context import (
    DyadicContext,
    EntityRef,
    TriContext,
    Triple,
    all_trisets,
    derive,
    flat,
    is_triset,
    triset_leq,
    tuple_of,
)
from .enumeration import (
    WeededSystem,
    brute_force_triconcepts,
    count_switching_generators,
    fixpoint_triconcepts,
    list_closed_sets,
    switching_count_closed_form,
    switching_count_triple_sum,
    switching_generators,
    triconcepts_by_listing,
)
from .errors import ContractError, InputError, ResourceError, TricliqueError
from .mrd import (
    Mrd,
    add_isolated_elements,
    encode_tripartite,
    enumerate_mccs,
    mccs_to_triset,
    phantom_edges,
)
from .operators import ORDERINGS, AxisOrdering, h_close, is_triconcept, sigma_close

__version__ = "0.1.0"

__all__ = [
    "AxisOrdering",
    "ContractError",
    "DyadicContext",
    "EntityRef",
    "InputError",
    "Mrd",
    "ORDERINGS",
    "ResourceError",
    "TriContext",
    "TricliqueError",
    "Triple",
    "WeededSystem",
    "add_isolated_elements",
    "all_trisets",
    "brute_force_triconcepts",
    "count_switching_generators",
    "derive",
    "encode_tripartite",
    "enumerate_mccs",
    "fixpoint_triconcepts",
    "flat",
    "h_close",
    "is_triconcept",
    "is_triset",
    "list_closed_sets",
    "mccs_to_triset",
    "phantom_edges",
    "sigma_close",
    "switching_count_closed_form",
    "switching_count_triple_sum",
    "switching_generators",
    "triconcepts_by_listing",
    "triset_leq",
    "tuple_of",
]
