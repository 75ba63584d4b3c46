"""Instance transformations: education, removal, and vote delegation."""

from .core import Belief, VotingInstance


def _check_agents(instance, agents):
    for i in agents:
        if not isinstance(i, int) or not 0 <= i < instance.n:
            raise IndexError("agent index %r out of range" % (i,))


def educate(instance, agents):
    """Make the agents in `agents` certain about every proposal.

    Benefit sets are untouched, so correct outcomes never change; education
    can only shrink the possible outcomes toward the correct ones.
    """
    agents = frozenset(agents)
    _check_agents(instance, agents)
    full = frozenset(range(instance.m))
    beliefs = tuple(
        Belief(b.plus_set, full) if i in agents else b
        for i, b in enumerate(instance.beliefs)
    )
    return VotingInstance(instance.m, beliefs)


def remove(instance, agents):
    """Drop the agents in `agents`, keeping the survivors in order.

    At least one agent must remain.
    """
    agents = frozenset(agents)
    _check_agents(instance, agents)
    if len(agents) >= instance.n:
        raise ValueError("cannot remove all agents")
    beliefs = tuple(
        b for i, b in enumerate(instance.beliefs) if i not in agents
    )
    return VotingInstance(instance.m, beliefs)


def _willing_beliefs(bi, bj):
    if bi.plus_certain & bj.minus_certain:
        return False
    if bi.minus_certain & bj.plus_certain:
        return False
    return len(bi.known_set) < len(bj.known_set)


def willing(instance, i, j):
    """Whether agent i is willing to delegate to agent j.

    Requires that the two never disagree with certainty, and that j is
    strictly more knowledgeable (strictly larger certain set).
    """
    if i == j:
        raise ValueError("an agent cannot delegate to herself")
    _check_agents(instance, (i, j))
    return _willing_beliefs(instance.beliefs[i], instance.beliefs[j])


def willingness_digraph(instance):
    """adjacency[i] = set of agents i is willing to delegate to.

    Willingness depends only on beliefs, so agents sharing a belief are
    processed once.
    """
    groups = {}
    for i, b in enumerate(instance.beliefs):
        groups.setdefault((b.plus_set, b.known_set), []).append(i)
    keys = list(groups)
    group_targets = {}
    for key in keys:
        bi = Belief(*key)
        targets = []
        for other in keys:
            bj = Belief(*other)
            if _willing_beliefs(bi, bj):
                targets.extend(groups[other])
        group_targets[key] = targets
    adjacency = {}
    for key, members in groups.items():
        targets = group_targets[key]
        for i in members:
            adjacency[i] = frozenset(t for t in targets if t != i)
    return adjacency


class DelegationGraph:
    """A consistent delegation scenario: a partial agent -> agent map.

    Every arc is validated against willingness at construction time; since
    each arc strictly increases the size of the certain set, the graph is
    automatically acyclic (a cycle check still runs defensively).
    """

    def __init__(self, instance, targets):
        targets = dict(targets)
        for i, j in targets.items():
            if not willing(instance, i, j):
                raise ValueError("agent %d is not willing to delegate to %d" % (i, j))
        self.instance = instance
        self._targets = targets
        # Defensive: follow every chain; willingness already rules cycles out.
        for start in targets:
            seen = set()
            i = start
            while i in targets:
                if i in seen:
                    raise ValueError("delegation cycle through agent %d" % i)
                seen.add(i)
                i = targets[i]

    @property
    def targets(self):
        return dict(self._targets)

    def __eq__(self, other):
        if not isinstance(other, DelegationGraph):
            return NotImplemented
        return self.instance == other.instance and self._targets == other._targets


def resolve_gurus(instance, graph):
    """Map each agent to her guru: the sink reached by following arcs."""
    if graph.instance != instance:
        raise ValueError("delegation graph built against a different instance")
    targets = graph.targets
    guru = {}

    def follow(i):
        if i in guru:
            return guru[i]
        guru[i] = follow(targets[i]) if i in targets else i
        return guru[i]

    for i in range(instance.n):
        follow(i)
    return guru


def apply_delegations(instance, graph):
    """Each agent copies her guru's belief; n and m are unchanged."""
    guru = resolve_gurus(instance, graph)
    beliefs = tuple(instance.beliefs[guru[i]] for i in range(instance.n))
    return VotingInstance(instance.m, beliefs)
