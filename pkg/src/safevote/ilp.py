"""Type-based integer programs for the three intervention problems.

Agents are grouped into types (one symbol per proposal); only occupied
types are materialized, which makes the programs fixed-parameter sized in
the number of proposals. Tie proposals are satisfied by any outcome, so
they are stripped from the programs and credited as a constant offset.

Also provides an exact branch-and-bound solver for bounded integer
programs and a CPLEX-LP-format writer/reader.
"""

import re
from dataclasses import dataclass

from .core import Belief, correct_outcomes
from .interventions import DelegationGraph

# Type symbols: P = certain plus, N = certain minus, U = uncertain (3-letter
# alphabet); the 4-letter alphabet splits U into p (uncertain plus) and
# n (uncertain minus).
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Infeasible(Exception):
    """The integer program has no feasible assignment."""


class IntegerProgram:
    """Bounded integer variables, linear constraints, maximize objective."""

    def __init__(self):
        self.variables = []
        self._bounds = {}
        self.constraints = []
        self.objective = {}

    def add_variable(self, name, lower, upper):
        if not _NAME_RE.match(name):
            raise ValueError("bad variable name %r" % name)
        if name in self._bounds:
            raise ValueError("duplicate variable %r" % name)
        if not (isinstance(lower, int) and isinstance(upper, int)):
            raise ValueError("bounds must be integers")
        if lower > upper:
            raise ValueError("empty bound range for %r" % name)
        self.variables.append(name)
        self._bounds[name] = (lower, upper)

    def bounds(self, name):
        return self._bounds[name]

    def add_constraint(self, coeffs, sense, rhs):
        if sense not in ("<=", ">=", "=="):
            raise ValueError("bad constraint sense %r" % sense)
        if not isinstance(rhs, int):
            raise ValueError("right-hand side must be an integer")
        for name, coef in coeffs.items():
            if name not in self._bounds:
                raise ValueError("undeclared variable %r" % name)
            if not isinstance(coef, int):
                raise ValueError("coefficients must be integers")
        self.constraints.append((dict(coeffs), sense, rhs))

    def set_objective(self, coeffs):
        for name in coeffs:
            if name not in self._bounds:
                raise ValueError("undeclared variable %r" % name)
        self.objective = dict(coeffs)


@dataclass(frozen=True)
class IPSolution:
    value: int
    assignment: dict


def solve_ip(program):
    """Exact maximization by depth-first branch and bound.

    Branches in declaration order with values ascending; after each choice,
    constraint-based bound tightening runs to a fixpoint; subtrees whose
    admissible objective bound cannot beat the incumbent are pruned.
    Raises Infeasible when no assignment satisfies the constraints.
    """
    names = program.variables
    index = {name: i for i, name in enumerate(names)}
    nvars = len(names)
    lows = [program.bounds(name)[0] for name in names]
    highs = [program.bounds(name)[1] for name in names]
    cons = []
    for coeffs, sense, rhs in program.constraints:
        pairs = tuple((index[name], coef) for name, coef in coeffs.items() if coef)
        if sense in ("<=", "=="):
            cons.append((pairs, rhs))
        if sense in (">=", "=="):
            cons.append((tuple((v, -c) for v, c in pairs), -rhs))
    obj = [(index[name], coef) for name, coef in program.objective.items() if coef]

    def propagate(lo, hi):
        changed = True
        while changed:
            changed = False
            for pairs, rhs in cons:
                minsum = 0
                for v, c in pairs:
                    minsum += c * lo[v] if c > 0 else c * hi[v]
                if minsum > rhs:
                    return False
                for v, c in pairs:
                    if c > 0:
                        rest = rhs - (minsum - c * lo[v])
                        bound = rest // c
                        if bound < hi[v]:
                            hi[v] = bound
                            if hi[v] < lo[v]:
                                return False
                            changed = True
                    else:
                        # c*x <= rest with c < 0 means x >= ceil(rest/c).
                        rest = rhs - (minsum - c * hi[v])
                        bound = -(rest // (-c))
                        if bound > lo[v]:
                            lo[v] = bound
                            if hi[v] < lo[v]:
                                return False
                            changed = True
        return True

    best = None

    def dfs(lo, hi):
        nonlocal best
        upper = 0
        for v, c in obj:
            upper += c * hi[v] if c > 0 else c * lo[v]
        if best is not None and upper <= best[0]:
            return
        for v in range(nvars):
            if lo[v] < hi[v]:
                for value in range(lo[v], hi[v] + 1):
                    lo2 = lo[:]
                    hi2 = hi[:]
                    lo2[v] = hi2[v] = value
                    if propagate(lo2, hi2):
                        dfs(lo2, hi2)
                return
        value = sum(c * lo[v] for v, c in obj)
        if best is None or value > best[0]:
            best = (value, lo[:])

    lo0 = lows[:]
    hi0 = highs[:]
    if propagate(lo0, hi0):
        dfs(lo0, hi0)
    if best is None:
        raise Infeasible()
    value, assignment = best
    return IPSolution(value, {name: assignment[index[name]] for name in names})


def agent_type(belief, m, letters=3):
    """The agent's type string, one symbol per proposal."""
    symbols = []
    for p in range(m):
        if p in belief.known_set:
            symbols.append("P" if p in belief.plus_set else "N")
        elif letters == 3:
            symbols.append("U")
        else:
            symbols.append("p" if p in belief.plus_set else "n")
    return "".join(symbols)


def type_census(instance, letters=3):
    """Map occupied type -> number of agents of that type."""
    if letters not in (3, 4):
        raise ValueError("alphabet must have 3 or 4 letters")
    census = {}
    for belief in instance.beliefs:
        t = agent_type(belief, instance.m, letters)
        census[t] = census.get(t, 0) + 1
    return census


def _proposal_sides(instance):
    """Classify each proposal: 'good', 'bad', or 'tie' (on the original I)."""
    sides = []
    for p in range(instance.m):
        corr = correct_outcomes(instance, p)
        if corr.approve_possible and corr.reject_possible:
            sides.append("tie")
        elif corr.approve_possible:
            sides.append("good")
        else:
            sides.append("bad")
    return sides


def _margin_coef(symbol, side):
    """Coefficient of a type's variable in the forced-majority margin of a
    proposal: certain agents on the correct side count +1, certain agents
    on the wrong side and uncertain agents count -1.
    """
    if side == "good":
        return 1 if symbol == "P" else -1
    return 1 if symbol == "N" else -1


def _add_indicator(program, margin_name, z_name, n):
    """z = 1 iff margin > 0, for margin in [-n, n], via big-M = n + 1."""
    big = n + 1
    program.add_variable(z_name, 0, 1)
    program.add_constraint({z_name: big, margin_name: -1}, ">=", 0)
    program.add_constraint({margin_name: 1, z_name: -big}, ">=", -n)


def build_dap_ip(instance, kappa):
    """Integer program for removing at most kappa agents.

    Variables x_t count the agents of each 3-letter type that remain; a
    non-tie proposal scores when its forced-majority margin is positive.
    Returns (program, offset) with offset = number of tie proposals.
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    n = instance.n
    census = type_census(instance, 3)
    types = sorted(census)
    sides = _proposal_sides(instance)
    program = IntegerProgram()
    for t in types:
        program.add_variable("x_%s" % t, 0, census[t])
    program.add_constraint({"x_%s" % t: 1 for t in types}, ">=", n - kappa)
    objective = {}
    offset = 0
    for p in range(instance.m):
        side = sides[p]
        if side == "tie":
            offset += 1
            continue
        margin = "a_%d" % p if side == "good" else "b_%d" % p
        program.add_variable(margin, -n, n)
        coeffs = {"x_%s" % t: _margin_coef(t[p], side) for t in types}
        coeffs[margin] = -1
        program.add_constraint(coeffs, "==", 0)
        z = "z_%d" % p
        _add_indicator(program, margin, z, n)
        objective[z] = 1
    program.set_objective(objective)
    return program, offset


def _education_image(t):
    return t.replace("p", "P").replace("n", "N")


def build_eap_ip(instance, kappa):
    """Integer program for educating at most kappa agents.

    4-letter types; x_t counts the agents left at confused type t, and for
    each reachable unconfused type the conservation constraint moves the
    educated agents to their image type. Returns (program, offset).
    """
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    n = instance.n
    census = type_census(instance, 4)
    confused = sorted(t for t in census if t != _education_image(t))
    images = sorted(
        {_education_image(t) for t in confused}
        | {t for t in census if t == _education_image(t)}
    )
    preimage = {u: [t for t in confused if _education_image(t) == u] for u in images}
    sides = _proposal_sides(instance)
    program = IntegerProgram()
    for t in confused:
        program.add_variable("x_%s" % t, 0, census[t])
    for u in images:
        base = census.get(u, 0)
        room = sum(census[t] for t in preimage[u])
        program.add_variable("x_%s" % u, base, base + room)
    for u in images:
        coeffs = {"x_%s" % u: 1}
        total = census.get(u, 0)
        for t in preimage[u]:
            coeffs["x_%s" % t] = 1
            total += census[t]
        program.add_constraint(coeffs, "==", total)
    base_total = sum(census.get(u, 0) for u in images)
    program.add_constraint({"x_%s" % u: 1 for u in images}, "<=", base_total + kappa)
    objective = {}
    offset = 0
    materialized = confused + images
    for p in range(instance.m):
        side = sides[p]
        if side == "tie":
            offset += 1
            continue
        margin = "a_%d" % p if side == "good" else "b_%d" % p
        program.add_variable(margin, -n, n)
        coeffs = {}
        for t in materialized:
            symbol = "U" if t[p] in ("p", "n") else t[p]
            coeffs["x_%s" % t] = _margin_coef(symbol, side)
        coeffs[margin] = -1
        program.add_constraint(coeffs, "==", 0)
        z = "z_%d" % p
        _add_indicator(program, margin, z, n)
        objective[z] = 1
    program.set_objective(objective)
    return program, offset


def _type_willing(t, u):
    """Type-level willingness: certain sets never conflict and u's certain
    set is strictly larger.
    """
    certain_t = sum(s != "U" for s in t)
    certain_u = sum(s != "U" for s in u)
    if certain_t >= certain_u:
        return False
    for st, su in zip(t, u):
        if (st == "P" and su == "N") or (st == "N" and su == "P"):
            return False
    return True


def _type_reach(types):
    """Reachable guru types per type in the type-level willingness digraph."""
    arcs = {
        t: [u for u in types if u != t and _type_willing(t, u)] for t in types
    }
    reach = {}
    for t in types:
        seen = set()
        stack = [t]
        while stack:
            cur = stack.pop()
            for u in arcs[cur]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        reach[t] = seen
    return arcs, reach


def build_cld_ip(instance):
    """Integer program for constrained delegation, as a guru assignment.

    x_{t,u} counts the type-t agents whose guru has type u; r_{t,u} is 1
    iff that count is positive. A positive x_{t,u} with t != u needs a
    supporting positive r_{w,u} for some willing neighbor type w, grounded
    at r_{u,u} (an actual type-u sink). Chains strictly increase the
    certain-set size, so the support recursion is well founded.
    Returns (program, offset).
    """
    n = instance.n
    census = type_census(instance, 3)
    types = sorted(census)
    arcs, reach = _type_reach(types)
    sides = _proposal_sides(instance)
    program = IntegerProgram()
    pairs = {t: sorted(reach[t] | {t}) for t in types}
    for t in types:
        for u in pairs[t]:
            program.add_variable("x_%s__%s" % (t, u), 0, census[t])
    for t in types:
        for u in pairs[t]:
            program.add_variable("r_%s__%s" % (t, u), 0, 1)
    for t in types:
        program.add_constraint(
            {"x_%s__%s" % (t, u): 1 for u in pairs[t]}, "==", census[t]
        )
        for u in pairs[t]:
            x = "x_%s__%s" % (t, u)
            r = "r_%s__%s" % (t, u)
            program.add_constraint({x: 1, r: -1}, ">=", 0)
            program.add_constraint({x: 1, r: -n}, "<=", 0)
            if u != t:
                support = {r: -1}
                for w in arcs[t]:
                    if u in pairs[w]:
                        support["r_%s__%s" % (w, u)] = 1
                program.add_constraint(support, ">=", 0)
    objective = {}
    offset = 0
    for p in range(instance.m):
        side = sides[p]
        if side == "tie":
            offset += 1
            continue
        margin = "a_%d" % p if side == "good" else "b_%d" % p
        program.add_variable(margin, -n, n)
        coeffs = {margin: -1}
        for t in types:
            for u in pairs[t]:
                coeffs["x_%s__%s" % (t, u)] = _margin_coef(u[p], side)
        program.add_constraint(coeffs, "==", 0)
        z = "z_%d" % p
        _add_indicator(program, margin, z, n)
        objective[z] = 1
    program.set_objective(objective)
    return program, offset


def educated_set_from_assignment(instance, assignment):
    """Recover a concrete educated-agent set from an EAP solution.

    For each confused type, census[t] - x_t of its agents are educated;
    the lowest-indexed agents of the type are picked.
    """
    m = instance.m
    census = type_census(instance, 4)
    by_type = {}
    for i, b in enumerate(instance.beliefs):
        by_type.setdefault(agent_type(b, m, 4), []).append(i)
    educated = set()
    for t, members in sorted(by_type.items()):
        if t == _education_image(t):
            continue
        count = census[t] - assignment["x_%s" % t]
        educated.update(members[:count])
    return frozenset(educated)


def removed_set_from_assignment(instance, assignment):
    """Recover a concrete removed-agent set from a DAP solution."""
    m = instance.m
    census = type_census(instance, 3)
    by_type = {}
    for i, b in enumerate(instance.beliefs):
        by_type.setdefault(agent_type(b, m, 3), []).append(i)
    removed = set()
    for t, members in sorted(by_type.items()):
        count = census[t] - assignment["x_%s" % t]
        removed.update(members[:count])
    return frozenset(removed)


def delegation_graph_from_assignment(instance, assignment):
    """Recover a concrete DelegationGraph from a CLD solution.

    Types are processed in decreasing certain-set size, so whenever a
    block x_{t,u} > 0 with t != u is placed, some supporting type w
    already has an agent assigned to guru type u to point at.
    """
    m = instance.m
    census = type_census(instance, 3)
    types = sorted(census)
    arcs, reach = _type_reach(types)
    by_type = {}
    for i, b in enumerate(instance.beliefs):
        by_type.setdefault(agent_type(b, m, 3), []).append(i)
    order = sorted(types, key=lambda t: (-sum(s != "U" for s in t), t))
    # representative[(t, u)] = one type-t agent whose guru has type u
    representative = {}
    targets = {}
    for t in order:
        members = list(by_type[t])
        for u in sorted(reach[t] | {t}):
            count = assignment.get("x_%s__%s" % (t, u), 0)
            if count == 0:
                continue
            block, members = members[:count], members[count:]
            if u != t:
                anchor = None
                for w in sorted(arcs[t]):
                    if (w, u) in representative:
                        anchor = representative[(w, u)]
                        break
                if anchor is None:
                    raise ValueError("unsupported delegation block %s -> %s" % (t, u))
                for i in block:
                    targets[i] = anchor
            representative[(t, u)] = block[0]
    return DelegationGraph(instance, targets)


def _format_terms(coeffs, order):
    parts = []
    for name in order:
        if name not in coeffs or coeffs[name] == 0:
            continue
        coef = coeffs[name]
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        term = name if mag == 1 else "%d %s" % (mag, name)
        if not parts:
            parts.append(term if coef > 0 else "- %s" % term)
        else:
            parts.append("%s %s" % (sign, term))
    return " ".join(parts)


def export_lp(program):
    """Serialize the program in CPLEX LP format.

    Sections: Maximize / Subject To / Bounds / Generals / End. Ordering is
    deterministic: declaration order for variables and constraint order as
    added. All variables are listed as general integers.
    """
    order = program.variables
    lines = ["Maximize"]
    objective = _format_terms(program.objective, order)
    lines.append(" obj: %s" % objective if objective else " obj:")
    lines.append("Subject To")
    for idx, (coeffs, sense, rhs) in enumerate(program.constraints):
        op = {"<=": "<=", ">=": ">=", "==": "="}[sense]
        lines.append(
            " c%d: %s %s %d" % (idx, _format_terms(coeffs, order), op, rhs)
        )
    lines.append("Bounds")
    for name in order:
        lower, upper = program.bounds(name)
        lines.append(" %d <= %s <= %d" % (lower, name, upper))
    lines.append("Generals")
    if order:
        lines.append(" " + " ".join(order))
    lines.append("End")
    return "\n".join(lines) + "\n"


def _parse_terms(text):
    tokens = text.split()
    coeffs = {}
    sign = 1
    pending = None
    for token in tokens:
        if token == "+":
            sign = 1
        elif token == "-":
            sign = -1
        elif re.fullmatch(r"-?\d+", token):
            pending = int(token)
        else:
            coef = sign * (pending if pending is not None else 1)
            coeffs[token] = coeffs.get(token, 0) + coef
            sign = 1
            pending = None
    return coeffs


def parse_lp(text):
    """Parse text produced by export_lp back into an IntegerProgram."""
    section = None
    objective_text = []
    constraint_texts = []
    bounds = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        lowered = line.lower()
        if lowered in ("maximize", "subject to", "bounds", "generals", "end"):
            section = lowered
            continue
        if section == "maximize":
            objective_text.append(line.split(":", 1)[-1])
        elif section == "subject to":
            constraint_texts.append(line.split(":", 1)[-1])
        elif section == "bounds":
            match = re.fullmatch(r"(-?\d+)\s*<=\s*(\S+)\s*<=\s*(-?\d+)", line)
            if not match:
                raise ValueError("bad bounds line %r" % line)
            bounds.append((match.group(2), int(match.group(1)), int(match.group(3))))
    program = IntegerProgram()
    for name, lower, upper in bounds:
        program.add_variable(name, lower, upper)
    for text_part in constraint_texts:
        match = re.search(r"(<=|>=|=)\s*(-?\d+)\s*$", text_part)
        if not match:
            raise ValueError("bad constraint %r" % text_part)
        sense = {"<=": "<=", ">=": ">=", "=": "=="}[match.group(1)]
        program.add_constraint(
            _parse_terms(text_part[: match.start()]), sense, int(match.group(2))
        )
    program.set_objective(_parse_terms(" ".join(objective_text)))
    return program
