import random

import pytest

from safevote import (
    Belief,
    DelegationGraph,
    DomainClass,
    VotingInstance,
    acceptable_count,
    apply_delegations,
    correct_outcomes,
    educate,
    gen_random,
    remove,
    resolve_gurus,
    safe_zone,
    willing,
    willingness_digraph,
)


class TestEducate:
    def test_educating_agent_2_secures_everything(self, example1):
        assert safe_zone(educate(example1, {1})) == frozenset(range(5))

    def test_correct_outcomes_unchanged(self, example1):
        educated = educate(example1, {0, 1, 2})
        for p in range(5):
            assert (
                correct_outcomes(educated, p).as_set()
                == correct_outcomes(example1, p).as_set()
            )

    def test_out_of_range(self, example1):
        with pytest.raises(IndexError):
            educate(example1, {3})

    def test_monotone_in_the_educated_set(self):
        rng = random.Random(7)
        for _ in range(50):
            inst = gen_random(rng.randint(1, 6), rng.randint(1, 5),
                              uncertainty=0.5, seed=rng.randint(0, 999))
            agents = list(range(inst.n))
            rng.shuffle(agents)
            small = frozenset(agents[: rng.randint(0, inst.n)])
            extra = frozenset(agents[: rng.randint(len(small), inst.n)])
            assert safe_zone(educate(inst, small)) <= safe_zone(
                educate(inst, small | extra)
            )


class TestRemove:
    def test_survivors_keep_order(self, example1):
        residual = remove(example1, {1})
        assert residual.n == 2
        assert residual.beliefs == (example1.beliefs[0], example1.beliefs[2])

    def test_cannot_remove_everyone(self, example1):
        with pytest.raises(ValueError):
            remove(example1, {0, 1, 2})

    def test_removal_tradeoff(self, example1):
        # Removing agents 2 and 3 fixes p1 but sacrifices p2 and p4.
        residual = remove(example1, {1, 2})
        assert acceptable_count(example1, residual) < 5


class TestWilling:
    def test_example_arcs(self, example1):
        assert willing(example1, 0, 1)
        assert willing(example1, 1, 2)
        assert not willing(example1, 0, 2)
        assert not willing(example1, 2, 1)

    def test_self_delegation_rejected(self, example1):
        with pytest.raises(ValueError):
            willing(example1, 1, 1)

    def test_digraph_matches_pairwise(self):
        for seed in range(30):
            inst = gen_random(seed % 5 + 2, seed % 4 + 1, seed=seed)
            adjacency = willingness_digraph(inst)
            for i in range(inst.n):
                expected = {
                    j
                    for j in range(inst.n)
                    if j != i and willing(inst, i, j)
                }
                assert adjacency[i] == expected

    def test_certain_size_strictly_increases(self):
        for seed in range(30):
            inst = gen_random(seed % 5 + 2, seed % 4 + 1, seed=seed)
            for i, targets in willingness_digraph(inst).items():
                for j in targets:
                    assert len(inst.beliefs[i].known_set) < len(
                        inst.beliefs[j].known_set
                    )


class TestDelegationGraph:
    def test_rejects_unwilling_arc(self, example1):
        with pytest.raises(ValueError):
            DelegationGraph(example1, {0: 2})

    def test_targets_returns_copy(self, example1):
        graph = DelegationGraph(example1, {0: 1})
        graph.targets[2] = 0
        assert graph.targets == {0: 1}

    def test_chain_resolves_to_guru(self, example1):
        graph = DelegationGraph(example1, {0: 1, 1: 2})
        guru = resolve_gurus(example1, graph)
        assert guru == {0: 2, 1: 2, 2: 2}

    def test_guru_idempotent(self, example1):
        graph = DelegationGraph(example1, {0: 1, 1: 2})
        guru = resolve_gurus(example1, graph)
        assert all(guru[guru[i]] == guru[i] for i in range(example1.n))

    def test_wrong_instance_rejected(self, example1):
        other = remove(example1, {0})
        graph = DelegationGraph(other, {})
        with pytest.raises(ValueError):
            resolve_gurus(example1, graph)


class TestApplyDelegations:
    def test_guru_beliefs_copied(self, example1):
        graph = DelegationGraph(example1, {0: 1, 1: 2})
        delegated = apply_delegations(example1, graph)
        assert delegated.n == example1.n
        assert delegated.beliefs == (example1.beliefs[2],) * 3

    def test_full_chain_acceptability(self, example1):
        graph = DelegationGraph(example1, {0: 1, 1: 2})
        assert acceptable_count(example1, apply_delegations(example1, graph)) == 4

    def test_empty_graph_is_identity(self, example1):
        graph = DelegationGraph(example1, {})
        assert apply_delegations(example1, graph) == example1
