"""Brute-force exact solvers for the three intervention problems.

These enumerate subsets (education, removal) or delegation target maps in
lexicographic order, keeping incremental per-proposal tallies so that each
enumeration step costs O(m). They serve as the reference oracles for the
integer-programming and radical-domain solvers.
"""

from dataclasses import dataclass

from .core import correct_outcomes
from .interventions import DelegationGraph, willingness_digraph

# Correct-outcome codes used by the incremental scorers.
_REJECT, _APPROVE, _TIE = 0, 1, 2


@dataclass(frozen=True)
class SolveResult:
    best_value: int
    witness: object


def _corr_codes(instance):
    codes = []
    for p in range(instance.m):
        corr = correct_outcomes(instance, p)
        if corr.approve_possible and corr.reject_possible:
            codes.append(_TIE)
        elif corr.approve_possible:
            codes.append(_APPROVE)
        else:
            codes.append(_REJECT)
    return codes


def eap_exact(instance, kappa):
    """Best number of safe proposals after educating at most kappa agents.

    Only agents with nonempty uncertainty are candidates (educating a
    certain agent changes nothing). Subsets are visited in lexicographic
    order and the first subset attaining the optimum is kept, so the
    witness is the lexicographically smallest optimal one.
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    m, n = instance.m, instance.n
    codes = _corr_codes(instance)
    plus_cert = [instance.plus_certain_count(p) for p in range(m)]
    minus_cert = [instance.minus_certain_count(p) for p in range(m)]
    candidates = []
    deltas = []
    for i, b in enumerate(instance.beliefs):
        unc = b.uncertain(m)
        if unc:
            candidates.append(i)
            deltas.append(
                (
                    [p for p in unc if p in b.plus_set],
                    [p for p in unc if p not in b.plus_set],
                )
            )

    def count_safe():
        count = 0
        for p in range(m):
            code = codes[p]
            if code == _TIE:
                count += 1
            elif code == _APPROVE:
                count += 2 * (n - plus_cert[p]) < n
            else:
                count += 2 * (n - minus_cert[p]) < n
        return count

    best_value = -1
    best_witness = None
    chosen = []
    done = False

    def visit(start):
        nonlocal best_value, best_witness, done
        value = count_safe()
        if value > best_value:
            best_value = value
            best_witness = frozenset(chosen)
            if best_value == m:
                done = True
                return
        if len(chosen) == kappa:
            return
        for idx in range(start, len(candidates)):
            plus_ps, minus_ps = deltas[idx]
            for p in plus_ps:
                plus_cert[p] += 1
            for p in minus_ps:
                minus_cert[p] += 1
            chosen.append(candidates[idx])
            visit(idx + 1)
            chosen.pop()
            for p in plus_ps:
                plus_cert[p] -= 1
            for p in minus_ps:
                minus_cert[p] -= 1
            if done:
                return

    visit(0)
    return SolveResult(best_value, best_witness)


def dap_exact(instance, kappa):
    """Best number of acceptable proposals after removing at most kappa
    agents (never all of them).

    A proposal is acceptable when the possible outcomes on the residual
    instance are contained in the correct outcomes of the original one.
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    m, n = instance.m, instance.n
    codes = _corr_codes(instance)
    plus_cert = [instance.plus_certain_count(p) for p in range(m)]
    minus_cert = [instance.minus_certain_count(p) for p in range(m)]
    limit = min(kappa, n - 1)
    # Per agent: her certain-plus / certain-minus proposal lists.
    agent_plus = [sorted(b.plus_certain) for b in instance.beliefs]
    agent_minus = [sorted(b.minus_certain) for b in instance.beliefs]

    def count_acceptable(remaining):
        count = 0
        for p in range(m):
            code = codes[p]
            if code == _TIE:
                count += 1
            elif code == _APPROVE:
                count += 2 * (remaining - plus_cert[p]) < remaining
            else:
                count += 2 * (remaining - minus_cert[p]) < remaining
        return count

    best_value = -1
    best_witness = None
    chosen = []
    done = False

    def visit(start):
        nonlocal best_value, best_witness, done
        value = count_acceptable(n - len(chosen))
        if value > best_value:
            best_value = value
            best_witness = frozenset(chosen)
            if best_value == m:
                done = True
                return
        if len(chosen) == limit:
            return
        for i in range(start, n):
            for p in agent_plus[i]:
                plus_cert[p] -= 1
            for p in agent_minus[i]:
                minus_cert[p] -= 1
            chosen.append(i)
            visit(i + 1)
            chosen.pop()
            for p in agent_plus[i]:
                plus_cert[p] += 1
            for p in agent_minus[i]:
                minus_cert[p] += 1
            if done:
                return

    visit(0)
    return SolveResult(best_value, best_witness)


def cld_exact(instance):
    """Best number of acceptable proposals over all consistent delegation
    graphs.

    Agents are processed in order of decreasing certain-set size, so every
    willing target precedes its delegator and gurus are known incrementally.
    The enumeration space is the product over agents of (1 + #targets).
    """
    m, n = instance.m, instance.n
    codes = _corr_codes(instance)
    adjacency = willingness_digraph(instance)
    # Agents without willing targets always keep their own vote; only the
    # others branch. Decreasing certain-set size still puts every target
    # before its delegators.
    order = sorted(
        (i for i in range(n) if adjacency[i]),
        key=lambda i: (-len(instance.beliefs[i].known_set), i),
    )
    plus_cert = [instance.plus_certain_count(p) for p in range(m)]
    minus_cert = [instance.minus_certain_count(p) for p in range(m)]
    agent_plus = [sorted(b.plus_certain) for b in instance.beliefs]
    agent_minus = [sorted(b.minus_certain) for b in instance.beliefs]
    guru = list(range(n))
    targets = {}

    def count_acceptable():
        count = 0
        for p in range(m):
            code = codes[p]
            if code == _TIE:
                count += 1
            elif code == _APPROVE:
                count += 2 * (n - plus_cert[p]) < n
            else:
                count += 2 * (n - minus_cert[p]) < n
        return count

    def swap_belief(i, old, new):
        for p in agent_plus[old]:
            plus_cert[p] -= 1
        for p in agent_minus[old]:
            minus_cert[p] -= 1
        for p in agent_plus[new]:
            plus_cert[p] += 1
        for p in agent_minus[new]:
            minus_cert[p] += 1
        guru[i] = new

    best_value = -1
    best_targets = None
    done = False

    def visit(k):
        nonlocal best_value, best_targets, done
        if k == len(order):
            value = count_acceptable()
            if value > best_value:
                best_value = value
                best_targets = dict(targets)
                if best_value == m:
                    done = True
            return
        i = order[k]
        visit(k + 1)
        if done:
            return
        for t in sorted(adjacency[i]):
            targets[i] = t
            swap_belief(i, i, guru[t])
            visit(k + 1)
            swap_belief(i, guru[i], i)
            del targets[i]
            if done:
                return

    visit(0)
    return SolveResult(best_value, DelegationGraph(instance, best_targets))
