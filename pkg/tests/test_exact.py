from itertools import combinations, product

import pytest

from safevote import (
    DelegationGraph,
    VotingInstance,
    acceptable_count,
    apply_delegations,
    cld_exact,
    dap_exact,
    eap_exact,
    educate,
    gen_random,
    remove,
    safe_zone,
    willingness_digraph,
)


def eap_oracle(instance, kappa):
    """Best safe-zone size and the first optimal subset in lexicographic
    subset order, by full enumeration."""
    candidates = [
        i for i in range(instance.n) if instance.beliefs[i].uncertain(instance.m)
    ]
    best = (-1, None)
    subsets = [()]
    for size in range(1, kappa + 1):
        subsets.extend(combinations(candidates, size))
    for subset in sorted(subsets):
        value = len(safe_zone(educate(instance, subset)))
        if value > best[0]:
            best = (value, frozenset(subset))
    return best


def dap_oracle(instance, kappa):
    best = (-1, None)
    limit = min(kappa, instance.n - 1)
    subsets = [()]
    for size in range(1, limit + 1):
        subsets.extend(combinations(range(instance.n), size))
    for subset in sorted(subsets):
        value = acceptable_count(instance, remove(instance, subset))
        if value > best[0]:
            best = (value, frozenset(subset))
    return best


def cld_oracle(instance):
    """Best acceptability over every consistent delegation graph, by
    enumerating the full product of per-agent target options."""
    adjacency = willingness_digraph(instance)
    options = [
        [None] + sorted(adjacency[i]) for i in range(instance.n)
    ]
    best = -1
    count = 0
    for choice in product(*options):
        targets = {i: t for i, t in enumerate(choice) if t is not None}
        graph = DelegationGraph(instance, targets)
        count += 1
        value = acceptable_count(instance, apply_delegations(instance, graph))
        best = max(best, value)
    expected = 1
    for opts in options:
        expected *= len(opts)
    assert count == expected
    return best


class TestEapExact:
    def test_example_budget_one(self, example1):
        result = eap_exact(example1, 1)
        assert result.best_value == 5
        assert result.witness == frozenset({1})

    def test_example_budget_zero(self, example1):
        assert eap_exact(example1, 0).best_value == 4

    def test_negative_budget(self, example1):
        with pytest.raises(ValueError):
            eap_exact(example1, -1)

    def test_against_enumeration(self):
        for seed in range(40):
            inst = gen_random(seed % 5 + 1, seed % 4 + 1, uncertainty=0.5, seed=seed)
            for kappa in (0, 1, 2):
                result = eap_exact(inst, kappa)
                value, witness = eap_oracle(inst, kappa)
                assert result.best_value == value
                assert result.witness == witness

    def test_witness_replays(self):
        for seed in range(20):
            inst = gen_random(6, 4, uncertainty=0.5, seed=seed)
            result = eap_exact(inst, 2)
            assert len(safe_zone(educate(inst, result.witness))) == result.best_value


class TestDapExact:
    def test_example_no_budget_helps(self, example1):
        for kappa in range(4):
            assert dap_exact(example1, kappa).best_value == 4

    def test_against_enumeration(self):
        for seed in range(40):
            inst = gen_random(seed % 5 + 1, seed % 4 + 1, uncertainty=0.5, seed=seed)
            for kappa in (0, 1, 2):
                result = dap_exact(inst, kappa)
                value, witness = dap_oracle(inst, kappa)
                assert result.best_value == value
                assert result.witness == witness

    def test_agent_order_invariance(self):
        for seed in range(20):
            inst = gen_random(5, 3, uncertainty=0.5, seed=seed)
            reversed_inst = VotingInstance(inst.m, tuple(reversed(inst.beliefs)))
            for kappa in (1, 2):
                assert (
                    dap_exact(inst, kappa).best_value
                    == dap_exact(reversed_inst, kappa).best_value
                )

    def test_never_removes_everyone(self):
        inst = gen_random(2, 2, uncertainty=0.8, seed=3)
        result = dap_exact(inst, 5)
        assert len(result.witness) < inst.n


class TestCldExact:
    def test_example(self, example1):
        result = cld_exact(example1)
        assert result.best_value == 4
        assert isinstance(result.witness, DelegationGraph)

    def test_against_enumeration(self):
        for seed in range(40):
            inst = gen_random(seed % 5 + 1, seed % 4 + 1, uncertainty=0.5, seed=seed)
            assert cld_exact(inst).best_value == cld_oracle(inst)

    def test_agent_permutation_invariance(self):
        import random

        rng = random.Random(11)
        for seed in range(15):
            inst = gen_random(5, 3, uncertainty=0.5, seed=seed)
            perm = list(range(inst.n))
            rng.shuffle(perm)
            permuted = VotingInstance(
                inst.m, tuple(inst.beliefs[i] for i in perm)
            )
            assert cld_exact(inst).best_value == cld_exact(permuted).best_value

    def test_witness_replays(self):
        for seed in range(20):
            inst = gen_random(6, 4, uncertainty=0.5, seed=seed)
            result = cld_exact(inst)
            value = acceptable_count(
                inst, apply_delegations(inst, result.witness)
            )
            assert value == result.best_value
