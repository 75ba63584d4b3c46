"""Polynomial-time solvers for the radical one-dimensional domain.

In this domain every benefit set is a suffix of the proposal order and
every uncertainty set is one interval around the agent's switch point.
With an odd number of agents the correct-outcome list is monotone
(0...0 1...1) and the unsafe proposals form one contiguous block, so an
optimal intervention only needs to secure one boundary pair (p_j, p_k):
everything outside the open interval (j, k) then comes out correct.

The pair sweep ranges j over {-1} + bad proposals and k over good
proposals + {m}; the sentinels mean "no proposal on that side needs
protecting".
"""

from dataclasses import dataclass

from .core import (
    Belief,
    DomainClass,
    VotingInstance,
    classify_domain,
    correct_outcomes,
    is_safe,
    acceptable_count,
    safe_zone,
)
from .exact import SolveResult
from .interventions import (
    DelegationGraph,
    apply_delegations,
    educate,
    remove,
    willing,
)
from . import ilp


@dataclass(frozen=True)
class CorrectProfile:
    """threshold tau: corr(p_j) = {0} for j < tau and {1} for j >= tau."""

    threshold: int


def _require_radical(instance):
    if classify_domain(instance) != DomainClass.RADICAL_ONE_DIMENSIONAL:
        raise ValueError("instance is not radical one-dimensional")
    if instance.n % 2 == 0:
        raise ValueError("radical solvers require an odd number of agents")


def correct_profile(instance):
    """The unique 0-to-1 threshold of the correct-outcome list."""
    _require_radical(instance)
    outcomes = []
    for p in range(instance.m):
        corr = correct_outcomes(instance, p)
        outcomes.append(1 if corr.approve_possible else 0)
    tau = outcomes.count(0)
    if outcomes != [0] * tau + [1] * (instance.m - tau):
        raise AssertionError("correct outcomes are not monotone")
    return CorrectProfile(tau)


def unsafe_interval(instance):
    """The contiguous block of unsafe proposals, or None if all are safe."""
    _require_radical(instance)
    unsafe = [p for p in range(instance.m) if not is_safe(instance, p)]
    if not unsafe:
        return None
    lo, hi = unsafe[0], unsafe[-1]
    if unsafe != list(range(lo, hi + 1)):
        raise AssertionError("unsafe proposals are not contiguous")
    return (lo, hi)


def _pairs(instance):
    """Sentinel-extended boundary pairs (j, k) with their values."""
    m = instance.m
    tau = correct_profile(instance).threshold
    for j in [-1] + list(range(tau)):
        for k in list(range(tau, m)) + [m]:
            yield j, k, m - (k - j - 1)


def _project(instance, props):
    """Restrict beliefs to the listed proposals (reindexed in order)."""
    beliefs = []
    for b in instance.beliefs:
        plus = frozenset(q for q, p in enumerate(props) if p in b.plus_set)
        known = frozenset(q for q, p in enumerate(props) if p in b.known_set)
        beliefs.append(Belief(plus, known))
    return VotingInstance(len(props), beliefs)


def _forced_pair_program(instance, j, k, problem, kappa):
    """The two-proposal FPT program for the pair, with both outcomes
    forced, or None when the pair has no real proposal. Returns the
    program together with the projected instance.
    """
    props = [p for p in (j, k) if 0 <= p < instance.m]
    if not props:
        return None, None
    projected = _project(instance, props)
    if problem == "eap":
        program, _ = ilp.build_eap_ip(projected, kappa)
    else:
        program, _ = ilp.build_dap_ip(projected, kappa)
    for q in range(len(props)):
        program.add_constraint({"z_%d" % q: 1}, "==", 1)
    return program, projected


def _margin_pair_solve(instance, problem, kappa):
    best = None
    for j, k, value in _pairs(instance):
        if best is not None and value <= best[0]:
            continue
        program, projected = _forced_pair_program(instance, j, k, problem, kappa)
        if program is None:
            witness = frozenset()
        else:
            try:
                solution = ilp.solve_ip(program)
            except ilp.Infeasible:
                continue
            if problem == "eap":
                witness = ilp.educated_set_from_assignment(
                    projected, solution.assignment
                )
            else:
                witness = ilp.removed_set_from_assignment(
                    projected, solution.assignment
                )
        best = (value, witness)
    return best


def eap_radical(instance, kappa):
    """Radical-domain EAP: secure the best feasible boundary pair by
    educating agents chosen from the pair-projected program.
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    best_value, witness = _margin_pair_solve(instance, "eap", kappa)
    replay = len(safe_zone(educate(instance, witness)))
    if replay != best_value:
        raise AssertionError(
            "witness replay %d does not match best value %d" % (replay, best_value)
        )
    return SolveResult(best_value, witness)


def dap_radical(instance, kappa):
    """Radical-domain DAP: secure the best feasible boundary pair by
    removing agents chosen from the pair-projected program.
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    best_value, witness = _margin_pair_solve(instance, "dap", kappa)
    if len(witness) >= instance.n:
        # Removing everyone is never strictly better than keeping one agent.
        witness = frozenset(sorted(witness)[: instance.n - 1])
    replay = acceptable_count(instance, remove(instance, witness))
    if replay != best_value:
        raise AssertionError(
            "witness replay %d does not match best value %d" % (replay, best_value)
        )
    return SolveResult(best_value, witness)


def _pair_witness(instance, j, k):
    """Delegation targets securing the pair (p_j, p_k), or None.

    Partitions agents by certain correctness on the two proposals, grows
    the correct-on-both set by the delegation closure, then (if one side
    lacks a majority) converts reachable agents from the surplus side.
    """
    n = instance.n
    beliefs = instance.beliefs
    maj = (n + 1) // 2

    def correct_low(i):
        return j == -1 or j in beliefs[i].minus_certain

    def correct_high(i):
        return k == instance.m or k in beliefs[i].plus_certain

    group_a = [i for i in range(n) if correct_low(i) and correct_high(i)]
    if not group_a:
        return None
    in_a = set(group_a)
    targets = {}
    rest = [i for i in range(n) if i not in in_a]
    changed = True
    while changed:
        changed = False
        for i in rest:
            if i in in_a:
                continue
            for a in sorted(in_a):
                if willing(instance, i, a):
                    targets[i] = a
                    in_a.add(i)
                    changed = True
                    break
    low_only = [i for i in rest if i not in in_a and correct_low(i)]
    high_only = [i for i in rest if i not in in_a and correct_high(i)]
    neither = [
        i
        for i in rest
        if i not in in_a and not correct_low(i) and not correct_high(i)
    ]
    if neither:
        raise AssertionError(
            "agents %r are certain-correct on neither pair proposal after "
            "the delegation closure" % (neither,)
        )
    if len(in_a) + len(low_only) >= maj and len(in_a) + len(high_only) >= maj:
        return targets
    if len(in_a) + len(low_only) < maj:
        deficient, surplus = low_only, high_only
        need = maj - len(in_a) - len(low_only)
    else:
        deficient, surplus = high_only, low_only
        need = maj - len(in_a) - len(high_only)
    # Reverse BFS from the deficient side along willingness arcs restricted
    # to the undecided agents; converting an agent at distance d points her
    # at her distance-(d-1) parent, so conversions are closed under parents
    # when taken in distance order.
    undecided = sorted(deficient + surplus)
    dist = {i: 0 for i in deficient}
    parent = {}
    frontier = sorted(deficient)
    while frontier:
        nxt = []
        for u in frontier:
            for v in undecided:
                if v in dist:
                    continue
                if willing(instance, v, u):
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    nxt.append(v)
        frontier = sorted(nxt)
    marked = sorted(
        (i for i in surplus if i in dist), key=lambda i: (dist[i], i)
    )
    if len(marked) < need:
        return None
    for i in marked[:need]:
        targets[i] = parent[i]
    return targets


def cld_pair_feasible(instance, j, k):
    """Whether delegations can force correct outcomes on both p_j and p_k."""
    _require_radical(instance)
    tau = correct_profile(instance).threshold
    if not 0 <= j < tau or not tau <= k < instance.m:
        raise ValueError("pair must be a bad proposal followed by a good one")
    return _pair_witness(instance, j, k) is not None


def cld_radical(instance):
    """Radical-domain CLD via the boundary-pair sweep."""
    _require_radical(instance)
    best = None
    for j, k, value in _pairs(instance):
        if best is not None and value <= best[0]:
            continue
        targets = _pair_witness(instance, j, k)
        if targets is not None:
            best = (value, targets)
    best_value, targets = best
    graph = DelegationGraph(instance, targets)
    replay = acceptable_count(instance, apply_delegations(instance, graph))
    if replay != best_value:
        raise AssertionError(
            "witness replay %d does not match best value %d" % (replay, best_value)
        )
    return SolveResult(best_value, graph)
