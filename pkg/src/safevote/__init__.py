"""Safe zones and intervention solvers for majority voting with
uncertain agent preferences."""

from .core import (
    APPROVE,
    REJECT,
    Belief,
    DomainClass,
    OutcomeSet,
    VotingInstance,
    acceptable_count,
    classify_domain,
    correct_outcomes,
    is_safe,
    possible_outcomes,
    safe_zone,
)
from .interventions import (
    DelegationGraph,
    apply_delegations,
    educate,
    remove,
    resolve_gurus,
    willing,
    willingness_digraph,
)
from .exact import SolveResult, cld_exact, dap_exact, eap_exact
from .ilp import (
    Infeasible,
    IntegerProgram,
    IPSolution,
    build_cld_ip,
    build_dap_ip,
    build_eap_ip,
    delegation_graph_from_assignment,
    educated_set_from_assignment,
    export_lp,
    parse_lp,
    removed_set_from_assignment,
    solve_ip,
    type_census,
)
from .radical import (
    CorrectProfile,
    cld_pair_feasible,
    cld_radical,
    correct_profile,
    dap_radical,
    eap_radical,
    unsafe_interval,
)
from .reductions import (
    TwoPathColoredGraph,
    UndirectedGraph,
    four_edge_color,
    gen_random,
    reduce_vc2pc_to_dap,
    reduce_vc2pc_to_eap,
    reduce_vccg_to_cld,
    to_2path_colored,
    vc_exact,
)
from .serialize import (
    document_to_instance,
    dumps_instance,
    format_graph,
    instance_to_document,
    loads_instance,
    parse_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
