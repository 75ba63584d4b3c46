"""Hardness constructions as certified instance generators.

Each reduction takes a vertex-cover question and emits a voting instance
whose intervention problem has the answer "all proposals securable within
the stated budget" exactly when the cover exists. Construction-time
assertions check every support and uncertainty target, so a generated
instance is a certificate, not just test data.

Also provides the supporting graph algorithms (edge coloring, the
two-path-colored expansion, an exact vertex-cover oracle) and seeded
random instance generators for the test corpora.
"""

import random
from dataclasses import dataclass

from .core import Belief, DomainClass, VotingInstance, classify_domain


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph: vertex count plus sorted edge pairs."""

    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not 0 <= u < self.vertex_count or not 0 <= v < self.vertex_count:
                raise ValueError("edge (%d, %d) out of range" % (u, v))
        if len(set(edges)) != len(edges):
            raise ValueError("multi-edges are not allowed")
        object.__setattr__(self, "edges", edges)

    def degree(self, v):
        return sum(v in e for e in self.edges)

    def is_cubic(self):
        return all(self.degree(v) == 3 for v in range(self.vertex_count))

    def incident(self, v):
        return [e for e in self.edges if v in e]


def four_edge_color(graph):
    """Proper edge coloring of a cubic graph with colors 0..3.

    Backtracking search, always branching on an uncolored edge with the
    fewest available colors. A cubic graph always admits one (its
    chromatic index is 3 or 4).
    """
    if not graph.is_cubic():
        raise ValueError("graph is not cubic")
    return _edge_color(graph, 4)


def _edge_color(graph, num_colors):
    edges = list(graph.edges)
    adjacent = {
        e: [f for f in edges if f != e and set(e) & set(f)] for e in edges
    }
    coloring = {}

    def available(e):
        used = {coloring[f] for f in adjacent[e] if f in coloring}
        return [c for c in range(num_colors) if c not in used]

    def solve():
        pending = [e for e in edges if e not in coloring]
        if not pending:
            return True
        e = min(pending, key=lambda f: (len(available(f)), f))
        for c in available(e):
            coloring[e] = c
            if solve():
                return True
            del coloring[e]
        return False

    if not solve():
        raise ValueError("graph admits no %d-edge-coloring" % num_colors)
    return coloring


@dataclass(frozen=True)
class TwoPathColoredGraph:
    """A graph with a partition E = E1 u E2 where every monochromatic
    component is an edge or a two-edge path, every vertex meets both
    parts, vertex degrees are at most 3, and |E1| = |E2|.
    """

    graph: UndirectedGraph
    part1: frozenset
    part2: frozenset

    def __post_init__(self):
        part1 = frozenset(tuple(sorted(e)) for e in self.part1)
        part2 = frozenset(tuple(sorted(e)) for e in self.part2)
        object.__setattr__(self, "part1", part1)
        object.__setattr__(self, "part2", part2)
        edges = set(self.graph.edges)
        if part1 | part2 != edges or part1 & part2:
            raise ValueError("parts must partition the edge set")
        if len(part1) != len(part2):
            raise ValueError("parts must have equal size")
        for v in range(self.graph.vertex_count):
            incident = self.graph.incident(v)
            if len(incident) > 3:
                raise ValueError("vertex %d has degree > 3" % v)
            for part in (part1, part2):
                if not any(tuple(e) in part for e in incident):
                    raise ValueError("vertex %d misses one part" % v)
        for part in (part1, part2):
            for component in _part_components(part):
                if len(component) > 2:
                    raise ValueError("monochromatic component larger than a path")
                if len(component) == 2:
                    e, f = component
                    if len(set(e) & set(f)) != 1:
                        raise ValueError("two-edge component is not a path")


def _part_components(part):
    """Connected components of a monochromatic part, as edge lists."""
    remaining = set(part)
    components = []
    while remaining:
        seed = min(remaining)
        component = {seed}
        remaining.discard(seed)
        grew = True
        while grew:
            grew = False
            for e in sorted(remaining):
                if any(set(e) & set(f) for f in component):
                    component.add(e)
                    remaining.discard(e)
                    grew = True
        components.append(sorted(component))
    return components


def _number_part(part):
    """Deterministic numbering of a part's edges with path edges adjacent.

    Components are sorted by smallest incident vertex; within a two-edge
    path the edges appear in sorted order. Returns the edge list in
    numbering order.
    """
    components = _part_components(part)
    components.sort(key=lambda c: min(min(e) for e in c))
    numbered = []
    for component in components:
        numbered.extend(component)
    for i, e in enumerate(numbered):
        for k, f in enumerate(numbered):
            if k > i and set(e) & set(f) and k - i != 1:
                raise AssertionError("path edges are not numbered consecutively")
    return numbered


def to_2path_colored(graph, kappa):
    """Expand a cubic graph into a two-path-colored one.

    Two disjoint copies; each original edge becomes a 3-edge path whose
    red/blue pattern depends on the edge's color class, with the pattern
    swapped between the copies. Covers of size kappa correspond to covers
    of size kappa* = 2*(kappa + |E|).
    """
    coloring = four_edge_color(graph)
    n = graph.vertex_count
    total = 2 * n
    edges = []
    part1 = []
    part2 = []

    def add_path(u, v, pattern):
        nonlocal total
        x, y = total, total + 1
        total += 2
        for (a, b), red in zip(((u, x), (x, y), (y, v)), pattern):
            edge = tuple(sorted((a, b)))
            edges.append(edge)
            (part1 if red else part2).append(edge)

    for e in graph.edges:
        u, v = e
        first_copy_red = coloring[e] in (0, 1)
        add_path(u, v, (first_copy_red, not first_copy_red, first_copy_red))
        add_path(u + n, v + n, (not first_copy_red, first_copy_red, not first_copy_red))

    expanded = UndirectedGraph(total, edges)
    colored = TwoPathColoredGraph(expanded, frozenset(part1), frozenset(part2))
    return colored, 2 * (kappa + len(graph.edges))


def vc_exact(graph, kappa):
    """Whether a vertex cover of size at most kappa exists (branch on an
    uncovered edge)."""
    if kappa < 0:
        raise ValueError("budget must be nonnegative")

    def decide(edges, budget):
        if not edges:
            return True
        if budget == 0:
            return False
        u, v = edges[0]
        for w in (u, v):
            rest = [e for e in edges if w not in e]
            if decide(rest, budget - 1):
                return True
        return False

    return decide(list(graph.edges), kappa)


def _interval(lo, hi):
    return frozenset(range(lo, hi + 1))


def reduce_vc2pc_to_eap(colored, kappa):
    """EAP hardness instance: one proposal per edge; one coding agent per
    vertex, uncertain exactly on its incident edges' proposals; balancing
    agents pin every proposal to a +3 support margin with two uncertain
    supporters. All proposals become safe with kappa educations iff the
    graph has a vertex cover of size kappa.

    Returns (instance, kappa, lam) with lam = proposal count.
    """
    graph = colored.graph
    order1 = _number_part(colored.part1)
    order2 = _number_part(colored.part2)
    half = len(order1)
    prop_of = {e: j for j, e in enumerate(order1)}
    prop_of.update({e: half + j for j, e in enumerate(order2)})
    m = 2 * half
    full = frozenset(range(m))
    beliefs = []
    for v in range(graph.vertex_count):
        uncertain = frozenset(prop_of[e] for e in graph.incident(v))
        plus = _interval(min(uncertain), max(uncertain))
        beliefs.append(Belief(plus, full - uncertain))
    plus_counts = [0] * m
    for b in beliefs:
        for p in b.plus_set:
            plus_counts[p] += 1
    peak = max(plus_counts)
    for p in range(m):
        for _ in range(peak - plus_counts[p]):
            beliefs.append(Belief(frozenset({p}), full))
    minus_side = len(beliefs) - peak
    if peak < minus_side + 3:
        for _ in range(minus_side + 3 - peak):
            beliefs.append(Belief(full, full))
    elif peak > minus_side + 3:
        for _ in range(peak - minus_side - 3):
            beliefs.append(Belief(frozenset(), full))
    instance = VotingInstance(m, beliefs)
    for p in range(m):
        plus = instance.plus_count(p)
        assert plus == (instance.n - plus) + 3
        uncertain = [b for b in instance.beliefs if p in b.uncertain(m)]
        assert len(uncertain) == 2
        assert all(p in b.plus_set for b in uncertain)
    assert classify_domain(instance) in (
        DomainClass.ONE_DIMENSIONAL,
        DomainClass.RADICAL_ONE_DIMENSIONAL,
    )
    return instance, kappa, m


def reduce_vc2pc_to_dap(colored, kappa):
    """DAP hardness instance: paired good/bad proposals per edge plus a
    middle pair; agent groups A (uncertain everywhere) through F
    (single-proposal boosters). All proposals become acceptable with
    4*kappa removals iff the graph has a vertex cover of size kappa.

    Returns (instance, 4*kappa, lam) with lam = proposal count.
    """
    graph = colored.graph
    n = graph.vertex_count
    if kappa > n:
        raise ValueError("budget exceeds vertex count")
    order1 = _number_part(colored.part1)
    order2 = _number_part(colored.part2)
    half = len(order1)
    edge_count = 2 * half
    # Proposal layout: a/b pairs for part 1, the middle pair, a/b pairs
    # for part 2.
    a1 = {j: 2 * j for j in range(half)}
    a_mid = 2 * half
    b_mid = a_mid + 1
    a2 = {j: 2 * half + 2 + 2 * j for j in range(half)}
    m = 2 * edge_count + 2
    full = frozenset(range(m))
    half_support = 2 * edge_count + 2 * n  # the paper's H
    beliefs = []
    for _ in range(kappa):
        beliefs.append(Belief(full, frozenset()))
    for _ in range(2 * edge_count + n - kappa):
        beliefs.append(Belief(full, full))
    for v in range(n):
        first1 = min(j for j, e in enumerate(order1) if v in e)
        last2 = max(j for j, e in enumerate(order2) if v in e)
        uncertain = {a1[first1], a1[first1] + 1, a2[last2], a2[last2] + 1}
        for j, e in enumerate(order1):
            if v in e and j != first1:
                uncertain |= {a1[j], a1[j] + 1}
        for j, e in enumerate(order2):
            if v in e and j != last2:
                uncertain |= {a2[j], a2[j] + 1}
        assert len(uncertain) in (4, 6)
        lo, hi = a1[first1], a2[last2] + 1
        beliefs.append(Belief(_interval(lo, hi), full - frozenset(uncertain)))
        beliefs.append(Belief(_interval(0, lo - 1) if lo else frozenset(), full))
        beliefs.append(
            Belief(_interval(hi + 1, m - 1) if hi < m - 1 else frozenset(), full)
        )
    beliefs.append(Belief(frozenset({a_mid}), full))
    for a_of in (a1, a2):
        for j in range(half):
            beliefs.append(Belief(frozenset({a_of[j]}), full))
            beliefs.append(Belief(frozenset({a_of[j]}), full))
    instance = VotingInstance(m, beliefs)
    assert instance.n == 2 * half_support + 1
    uncertain_counts = [0] * m
    for b in instance.beliefs:
        for p in b.uncertain(m):
            uncertain_counts[p] += 1
    for p in range(m):
        plus = instance.plus_count(p)
        if p == a_mid:
            assert plus == half_support + 1 and uncertain_counts[p] == kappa
        elif p == b_mid or p % 2 == 1:
            assert plus == half_support and uncertain_counts[p] <= kappa + 2
        else:
            assert plus == half_support + 2
            assert uncertain_counts[p] == kappa + 2
    assert classify_domain(instance) in (
        DomainClass.ONE_DIMENSIONAL,
        DomainClass.RADICAL_ONE_DIMENSIONAL,
    )
    return instance, 4 * kappa, m


def reduce_vccg_to_cld(graph, kappa):
    """CLD hardness instance built from edge, vertex, and sink gadgets.

    Eight agents per vertex realize the delegation chains; balancing
    agents pin every proposal's support to its target K + t(p). A
    delegation graph making all proposals safe exists iff the graph has a
    vertex cover of size kappa.

    Returns (instance, lam) with lam = proposal count.
    """
    if not graph.is_cubic():
        raise ValueError("graph is not cubic")
    if kappa < 0:
        raise ValueError("budget must be nonnegative")
    vertices = range(graph.vertex_count)
    edges = list(graph.edges)  # already in lexicographic order
    sep_e = {}
    r_of = {}
    p_of = {}
    pos = 0
    for e in edges:
        u, v = e
        sep_e[e] = pos
        r_of[(e, u)] = pos + 1
        p_of[e] = pos + 2
        r_of[(e, v)] = pos + 3
        pos += 4
    sep_v = {}
    p_v = {}
    q_v = {}
    for u in vertices:
        sep_v[u] = pos
        p_v[u] = pos + 1
        q_v[u] = pos + 2
        pos += 3
    sep_sink = pos
    p_sink = pos + 1
    m = pos + 2
    full = frozenset(range(m))

    beliefs = []
    for u in vertices:
        inc = sorted(graph.incident(u))
        chain = [
            (inc[0], r_of[(inc[1], u)]),
            (inc[1], r_of[(inc[2], u)]),
            (inc[2], p_v[u]),
        ]
        for e, successor in chain:
            anchor = {p_of[e], r_of[(e, u)]}
            span = anchor | {successor}
            plus = _interval(min(span), max(span))
            beliefs.append(Belief(plus, full - frozenset(anchor)))
            beliefs.append(Belief(plus, full - frozenset({successor})))
        plus = _interval(p_v[u], p_sink)
        beliefs.append(Belief(plus, full - frozenset({p_v[u], q_v[u]})))
        beliefs.append(Belief(plus, full - frozenset({p_sink})))

    plus0 = [0] * m
    uncertain0 = [0] * m
    for b in beliefs:
        for p in b.plus_set:
            plus0[p] += 1
        for p in b.uncertain(m):
            uncertain0[p] += 1

    nv = graph.vertex_count
    target = [0] * m
    for e in edges:
        u, v = e
        assert uncertain0[sep_e[e]] == 0 and uncertain0[p_of[e]] == 2
        target[sep_e[e]] = 1
        target[p_of[e]] = 2
        for w in (u, v):
            assert uncertain0[r_of[(e, w)]] in (1, 2)
            target[r_of[(e, w)]] = 1 + uncertain0[r_of[(e, w)]]
    for u in vertices:
        assert uncertain0[sep_v[u]] == 0
        assert uncertain0[p_v[u]] == 2 and uncertain0[q_v[u]] == 1
        target[sep_v[u]] = 1
        target[p_v[u]] = 3
        target[q_v[u]] = 3
    assert uncertain0[sep_sink] == 0 and uncertain0[p_sink] == nv
    target[sep_sink] = 1
    target[p_sink] = nv + kappa + 1

    # Choose the margin shift W and the all-proposal supporter count so
    # every per-proposal booster count W + target - plus0 is nonnegative,
    # the total is 2K + 1, and K leaves room for |N-(p_sink)| >= 0.
    shift = max(plus0[p] - target[p] for p in range(m))
    base = 8 * nv + sum(target) - sum(plus0) - 1
    while True:
        allsup = base + (m - 2) * shift
        if allsup >= 0 and shift + allsup >= nv + kappa:
            break
        shift += 1
    big_k = shift + allsup
    for p in range(m):
        for _ in range(shift + target[p] - plus0[p]):
            beliefs.append(Belief(frozenset({p}), full))
    for _ in range(allsup):
        beliefs.append(Belief(full, full))

    instance = VotingInstance(m, beliefs)
    assert instance.n == 2 * big_k + 1
    for p in range(m):
        assert instance.plus_count(p) == big_k + target[p]
    return instance, m


def gen_random(n, m, domain=DomainClass.GENERAL, uncertainty=0.3, seed=0):
    """Seeded random instance of the requested domain class.

    Radical requests force an odd number of agents and anchor every
    uncertainty interval at the agent's switch point; one-dimensional
    requests anchor the (up to two) uncertainty intervals at the plus
    interval's endpoints.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if not 0 <= uncertainty <= 1:
        raise ValueError("uncertainty rate must be in [0, 1]")
    if domain == DomainClass.RADICAL_ONE_DIMENSIONAL and n % 2 == 0:
        raise ValueError("radical instances require an odd number of agents")
    # A string seed hashes the same in every process, unlike a tuple.
    rng = random.Random("%d|%d|%d|%s|%r" % (seed, n, m, domain.value, uncertainty))
    full = frozenset(range(m))
    reach = max(1, round(uncertainty * m))

    def stretch(anchor):
        lo = max(0, anchor - rng.randint(0, reach - 1))
        hi = min(m - 1, anchor + rng.randint(0, reach - 1))
        return set(range(lo, hi + 1))

    beliefs = []
    for _ in range(n):
        if domain == DomainClass.GENERAL:
            plus = frozenset(p for p in range(m) if rng.random() < 0.5)
            known = frozenset(p for p in range(m) if rng.random() >= uncertainty)
            beliefs.append(Belief(plus, known))
            continue
        uncertain = set()
        if domain == DomainClass.RADICAL_ONE_DIMENSIONAL:
            tau = rng.randint(0, m)
            plus = frozenset(range(tau, m))
            if rng.random() < uncertainty * 2:
                anchors = [a for a in (tau - 1, tau) if 0 <= a < m]
                uncertain = stretch(rng.choice(anchors))
        else:
            if rng.random() < 0.15:
                plus = frozenset()
                if rng.random() < uncertainty * 2:
                    uncertain = stretch(rng.randint(0, m - 1))
            else:
                lo = rng.randint(0, m - 1)
                hi = rng.randint(lo, m - 1)
                plus = frozenset(range(lo, hi + 1))
                if rng.random() < uncertainty * 2:
                    anchors = [a for a in (lo - 1, lo) if 0 <= a < m]
                    uncertain |= stretch(rng.choice(anchors))
                if rng.random() < uncertainty * 2:
                    anchors = [a for a in (hi, hi + 1) if 0 <= a < m]
                    uncertain |= stretch(rng.choice(anchors))
        beliefs.append(Belief(plus, full - frozenset(uncertain)))
    instance = VotingInstance(m, beliefs)
    result = classify_domain(instance)
    if domain == DomainClass.RADICAL_ONE_DIMENSIONAL:
        assert result == DomainClass.RADICAL_ONE_DIMENSIONAL
    elif domain == DomainClass.ONE_DIMENSIONAL:
        assert result in (
            DomainClass.ONE_DIMENSIONAL,
            DomainClass.RADICAL_ONE_DIMENSIONAL,
        )
    return instance
