import pytest

from safevote import (
    Belief,
    DomainClass,
    OutcomeSet,
    VotingInstance,
    acceptable_count,
    classify_domain,
    correct_outcomes,
    gen_random,
    is_safe,
    possible_outcomes,
    safe_zone,
)

import oracles


class TestBelief:
    def test_quadrants(self):
        b = Belief(frozenset({1, 2}), frozenset({0, 2}))
        assert b.plus_certain == {2}
        assert b.minus_certain == {0}
        assert b.uncertain(4) == {1, 3}

    def test_frozen(self):
        b = Belief(frozenset(), frozenset())
        with pytest.raises(AttributeError):
            b.plus_set = frozenset({1})


class TestVotingInstance:
    def test_counts_cached(self, example1):
        assert example1.n == 3
        assert example1.plus_count(0) == 1
        assert example1.plus_certain_count(0) == 1
        assert example1.minus_certain_count(0) == 1
        assert example1.plus_count(1) == 3

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            VotingInstance(3, [])
        with pytest.raises(ValueError):
            VotingInstance(0, [Belief(frozenset(), frozenset())])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            VotingInstance(2, [Belief(frozenset({2}), frozenset())])


class TestOutcomeSet:
    def test_nonempty(self):
        with pytest.raises(ValueError):
            OutcomeSet(False, False)

    def test_as_set(self):
        assert OutcomeSet(True, False).as_set() == {1}
        assert OutcomeSet(True, True).as_set() == {0, 1}

    def test_issubset(self):
        assert OutcomeSet(True, False).issubset(OutcomeSet(True, True))
        assert not OutcomeSet(True, True).issubset(OutcomeSet(True, False))


class TestOutcomes:
    def test_example_semantics(self, example1):
        assert correct_outcomes(example1, 0).as_set() == {0}
        assert possible_outcomes(example1, 0).as_set() == {0, 1}
        assert not is_safe(example1, 0)
        assert safe_zone(example1) == {1, 2, 3, 4}

    def test_bad_proposal_index(self, example1):
        with pytest.raises(IndexError):
            correct_outcomes(example1, 5)
        with pytest.raises(IndexError):
            possible_outcomes(example1, -1)

    def test_tie_gives_both(self):
        inst = VotingInstance(
            1,
            [
                Belief(frozenset({0}), frozenset({0})),
                Belief(frozenset(), frozenset({0})),
            ],
        )
        assert correct_outcomes(inst, 0).as_set() == {0, 1}
        assert is_safe(inst, 0)

    def test_against_ballot_completion_oracle(self):
        for seed in range(120):
            n = seed % 5 + 1
            m = seed % 4 + 1
            inst = gen_random(n, m, DomainClass.GENERAL, 0.4, seed)
            for p in range(m):
                assert (
                    correct_outcomes(inst, p).as_set()
                    == oracles.correct_oracle(inst, p)
                )
                assert (
                    possible_outcomes(inst, p).as_set()
                    == oracles.possible_oracle(inst, p)
                )

    def test_correct_subset_of_possible(self):
        for seed in range(60):
            inst = gen_random(seed % 6 + 1, seed % 4 + 1, seed=seed)
            for p in range(inst.m):
                assert correct_outcomes(inst, p).issubset(
                    possible_outcomes(inst, p)
                )


class TestAcceptableCount:
    def test_same_instance_counts_safe(self, example1):
        assert acceptable_count(example1, example1) == 4

    def test_mismatched_m(self, example1):
        other = VotingInstance(4, [Belief(frozenset(), frozenset())])
        with pytest.raises(ValueError):
            acceptable_count(example1, other)


class TestClassifyDomain:
    def test_example_is_one_dimensional(self, example1):
        assert classify_domain(example1) == DomainClass.ONE_DIMENSIONAL

    def test_non_interval_plus_breaks_it(self, example1):
        beliefs = example1.beliefs + (
            Belief(frozenset({0, 4}), frozenset(range(5))),
        )
        inst = VotingInstance(5, beliefs)
        assert classify_domain(inst) == DomainClass.GENERAL

    def test_unanchored_uncertainty_breaks_it(self, example1):
        # Plus interval {1, 2, 3} but uncertain only about the middle.
        beliefs = example1.beliefs + (
            Belief(frozenset({1, 2, 3}), frozenset({0, 1, 3, 4})),
        )
        inst = VotingInstance(5, beliefs)
        assert classify_domain(inst) == DomainClass.GENERAL

    def test_suffix_beliefs_are_radical(self):
        inst = VotingInstance(
            4,
            [
                Belief(frozenset({2, 3}), frozenset({0, 3})),
                Belief(frozenset(), frozenset(range(4))),
                Belief(frozenset(range(4)), frozenset()),
            ],
        )
        assert classify_domain(inst) == DomainClass.RADICAL_ONE_DIMENSIONAL

    def test_unanchored_suffix_uncertainty_is_not_radical(self):
        # Plus suffix {2, 3} but the uncertainty run {0} misses the
        # switch point {1, 2}.
        inst = VotingInstance(
            4, [Belief(frozenset({2, 3}), frozenset({1, 2, 3}))]
        )
        assert classify_domain(inst) == DomainClass.ONE_DIMENSIONAL

    def test_radical_implies_one_dimensional(self):
        from safevote.core import _belief_one_dimensional, _belief_radical

        for seed in range(80):
            inst = gen_random(
                seed % 2 * 2 + 3, 5, DomainClass.RADICAL_ONE_DIMENSIONAL, 0.5, seed
            )
            for b in inst.beliefs:
                assert _belief_radical(b, inst.m)
                assert _belief_one_dimensional(b, inst.m)
