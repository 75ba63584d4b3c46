"""Voting instances with uncertain agents: outcomes, safety, and domains.

A voting instance consists of m binary proposals and n agents. Each agent
holds a belief: the set of proposals she would benefit from, and the set of
proposals she is certain about. A proposal's correct outcome is determined
by the (possibly hidden) benefit majority; its possible outcomes are those
achievable under some completion of the uncertain ballots. A proposal is
safe when the two coincide.

Proposals are indexed 0..m-1. Whenever one-dimensional semantics apply,
the left-to-right order of the axis is the index order.
"""

from dataclasses import dataclass
from enum import Enum

APPROVE = 1
REJECT = 0


class DomainClass(Enum):
    GENERAL = "general"
    ONE_DIMENSIONAL = "one-dimensional"
    RADICAL_ONE_DIMENSIONAL = "radical-one-dimensional"


@dataclass(frozen=True)
class Belief:
    """One agent's view of the proposals.

    plus_set holds the proposals the agent benefits from; known_set holds
    the proposals she is certain about. The four quadrants (certain-plus,
    certain-minus, uncertain-plus, uncertain-minus) are derived views.
    """

    plus_set: frozenset
    known_set: frozenset

    def __post_init__(self):
        object.__setattr__(self, "plus_set", frozenset(self.plus_set))
        object.__setattr__(self, "known_set", frozenset(self.known_set))

    @property
    def plus_certain(self):
        return self.plus_set & self.known_set

    @property
    def minus_certain(self):
        return self.known_set - self.plus_set

    def uncertain(self, m):
        """The proposals the agent is uncertain about, given m proposals."""
        return frozenset(range(m)) - self.known_set


@dataclass(frozen=True)
class VotingInstance:
    """m proposals plus an ordered list of agent beliefs."""

    m: int
    beliefs: tuple

    def __post_init__(self):
        object.__setattr__(self, "beliefs", tuple(self.beliefs))
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("proposal count must be a positive integer")
        if len(self.beliefs) < 1:
            raise ValueError("at least one agent is required")
        for i, belief in enumerate(self.beliefs):
            for p in belief.plus_set | belief.known_set:
                if not isinstance(p, int) or not 0 <= p < self.m:
                    raise ValueError(
                        "agent %d: proposal index %r out of range" % (i, p)
                    )
        # Per-proposal tallies, cached once; every solver reads these.
        plus_total = [0] * self.m
        plus_cert = [0] * self.m
        minus_cert = [0] * self.m
        for belief in self.beliefs:
            for p in belief.plus_set:
                plus_total[p] += 1
            for p in belief.plus_certain:
                plus_cert[p] += 1
            for p in belief.minus_certain:
                minus_cert[p] += 1
        object.__setattr__(self, "_plus_total", tuple(plus_total))
        object.__setattr__(self, "_plus_certain", tuple(plus_cert))
        object.__setattr__(self, "_minus_certain", tuple(minus_cert))

    @property
    def n(self):
        return len(self.beliefs)

    def plus_count(self, p):
        """|N+(p)|: agents who benefit from p, certain or not."""
        return self._plus_total[p]

    def plus_certain_count(self, p):
        return self._plus_certain[p]

    def minus_certain_count(self, p):
        return self._minus_certain[p]


@dataclass(frozen=True)
class OutcomeSet:
    """A nonempty subset of {approve, reject}."""

    approve_possible: bool
    reject_possible: bool

    def __post_init__(self):
        if not (self.approve_possible or self.reject_possible):
            raise ValueError("outcome set must be nonempty")

    def as_set(self):
        outcomes = set()
        if self.reject_possible:
            outcomes.add(REJECT)
        if self.approve_possible:
            outcomes.add(APPROVE)
        return frozenset(outcomes)

    def issubset(self, other):
        return self.as_set() <= other.as_set()


def _check_proposal(instance, p):
    if not isinstance(p, int) or not 0 <= p < instance.m:
        raise IndexError("proposal index %r out of range" % (p,))


def correct_outcomes(instance, p):
    """corr(p, I): approve iff a weak benefit majority exists, reject iff a
    weak non-benefit majority exists; both on an exact tie.

    Comparisons are exact integer arithmetic (2*count vs n), never floats.
    """
    _check_proposal(instance, p)
    n = instance.n
    plus = instance.plus_count(p)
    return OutcomeSet(2 * plus >= n, 2 * (n - plus) >= n)


def possible_outcomes(instance, p):
    """poss(p, I): outcomes reachable under some completion of uncertain
    ballots; approve iff |N+ u N?| >= n/2, reject iff |N- u N?| >= n/2.
    """
    _check_proposal(instance, p)
    n = instance.n
    return OutcomeSet(
        2 * (n - instance.minus_certain_count(p)) >= n,
        2 * (n - instance.plus_certain_count(p)) >= n,
    )


def is_safe(instance, p):
    """A proposal is safe when poss(p, I) == corr(p, I)."""
    return possible_outcomes(instance, p).as_set() == correct_outcomes(
        instance, p
    ).as_set()


def safe_zone(instance):
    return frozenset(p for p in range(instance.m) if is_safe(instance, p))


def acceptable_count(reference, evaluated):
    """Number of proposals with poss(p, evaluated) a subset of
    corr(p, reference).

    The correct side is always judged on the reference instance; the
    possible outcomes on the evaluated one (which may have fewer agents).
    """
    if reference.m != evaluated.m:
        raise ValueError("mismatched proposal counts")
    count = 0
    for p in range(reference.m):
        if possible_outcomes(evaluated, p).issubset(correct_outcomes(reference, p)):
            count += 1
    return count


def _runs(indices):
    """Split a set of indices into maximal consecutive runs [(lo, hi), ...]."""
    runs = []
    for p in sorted(indices):
        if runs and p == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], p)
        else:
            runs.append((p, p))
    return runs


def _is_interval(indices):
    runs = _runs(indices)
    return len(runs) <= 1


def _belief_one_dimensional(belief, m):
    """Plus set is an interval [j, k]; uncertainty splits into at most two
    runs, one touching {j-1, j} and one touching {k, k+1}.
    """
    plus_runs = _runs(belief.plus_set)
    if len(plus_runs) > 1:
        return False
    unc_runs = _runs(belief.uncertain(m))
    if not unc_runs:
        return True
    if not plus_runs:
        # No plus interval to anchor at; allow a single uncertainty block.
        return len(unc_runs) == 1
    j, k = plus_runs[0]
    left = {j - 1, j}
    right = {k, k + 1}

    def touches(run, anchor):
        lo, hi = run
        return any(lo <= a <= hi for a in anchor)

    if len(unc_runs) == 1:
        return touches(unc_runs[0], left) or touches(unc_runs[0], right)
    if len(unc_runs) == 2:
        return touches(unc_runs[0], left) and touches(unc_runs[1], right)
    return False


def _belief_radical(belief, m):
    """Plus set is a suffix of the order; uncertainty is empty or one run
    touching the switch point {tau-1, tau} (tau = m for an empty suffix).

    Anchoring at the switch point is what makes every radical belief also
    one-dimensional, and it is what the pairwise delegation closure of the
    radical CLD algorithm relies on.
    """
    plus_runs = _runs(belief.plus_set)
    if len(plus_runs) > 1:
        return False
    if plus_runs and plus_runs[0][1] != m - 1:
        return False
    tau = plus_runs[0][0] if plus_runs else m
    unc_runs = _runs(belief.uncertain(m))
    if not unc_runs:
        return True
    if len(unc_runs) > 1:
        return False
    lo, hi = unc_runs[0]
    anchor = {a for a in (tau - 1, tau) if 0 <= a < m}
    return any(lo <= a <= hi for a in anchor)


def classify_domain(instance):
    """Classify the instance as radical-1D, 1D, or general.

    Radical one-dimensional implies one-dimensional; both are per-agent
    properties, so classification is monotone under agent removal.
    """
    m = instance.m
    if all(_belief_radical(b, m) for b in instance.beliefs):
        return DomainClass.RADICAL_ONE_DIMENSIONAL
    if all(_belief_one_dimensional(b, m) for b in instance.beliefs):
        return DomainClass.ONE_DIMENSIONAL
    return DomainClass.GENERAL
