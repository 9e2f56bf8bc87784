"""Exact packing, limited packing and tuple domination numbers, the upper
bounds relating them to order, size and degrees, and the extremal graph
families attaining those bounds."""

from .bounds import (
    BoundEvaluation,
    Surd,
    double_domination_bounds,
    l2_pendant_bound,
    lk_order_size_bound,
    lk_trivial_threshold,
    open_packing_min_degree_bound,
    open_packing_order_size_bound,
    packing_min_degree_bound,
)
from .enumeration import enumerate_connected
from .families import (
    Family,
    FamilyWitness,
    check_witness,
    generate_family,
    recognize_gamma,
    recognize_gamma_prime,
    recognize_omega,
    recognize_sigma,
)
from .graph import (
    Graph,
    StructuralProfile,
    augment_weak_supports,
    parse_graph6,
    structural_profile,
    to_graph6,
)
from .solvers import (
    SolveOptions,
    SolveResult,
    domination_number,
    double_domination_number,
    limited_packing_number,
    open_packing_number,
    packing_number,
    tuple_domination_number,
)
from .verifier import ClaimId, Status, hunt_tight, verify_graph, verify_stream

__version__ = "0.1.0"
