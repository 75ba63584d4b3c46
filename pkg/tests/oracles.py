"""Independent reference implementations used to cross-check the library.

These deliberately avoid the library's formulas: possible outcomes are
computed by enumerating every completion of the uncertain ballots, and
integer programs are solved by full grid enumeration. Only usable at
miniature scale.
"""

from itertools import product


def outcomes_of_tally(approvals, n):
    outcomes = set()
    if 2 * approvals >= n:
        outcomes.add(1)
    if 2 * (n - approvals) >= n:
        outcomes.add(0)
    return frozenset(outcomes)


def correct_oracle(instance, p):
    approvals = sum(p in b.plus_set for b in instance.beliefs)
    return outcomes_of_tally(approvals, instance.n)


def possible_oracle(instance, p):
    """Union of outcomes over every completion of the uncertain ballots."""
    n = instance.n
    fixed = 0
    uncertain = 0
    for b in instance.beliefs:
        if p in b.known_set:
            fixed += p in b.plus_set
        else:
            uncertain += 1
    outcomes = set()
    for votes in product((0, 1), repeat=uncertain):
        outcomes |= outcomes_of_tally(fixed + sum(votes), n)
    return frozenset(outcomes)


def grid_solve(program):
    """Best objective value of a bounded integer program by enumeration,
    or None when infeasible."""
    names = program.variables
    ranges = [
        range(program.bounds(name)[0], program.bounds(name)[1] + 1)
        for name in names
    ]
    best = None
    for values in product(*ranges):
        point = dict(zip(names, values))
        ok = True
        for coeffs, sense, rhs in program.constraints:
            total = sum(coef * point[name] for name, coef in coeffs.items())
            if sense == "<=" and total > rhs:
                ok = False
            elif sense == ">=" and total < rhs:
                ok = False
            elif sense == "==" and total != rhs:
                ok = False
            if not ok:
                break
        if not ok:
            continue
        value = sum(
            coef * point[name] for name, coef in program.objective.items()
        )
        if best is None or value > best:
            best = value
    return best
