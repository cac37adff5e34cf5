"""Sequential heuristics and the greedy ground-state subsystem."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from paintshop import (
    brute_force_opt,
    color_changes,
    coloring_to_spins,
    greedy,
    greedy_subsystem,
    hard_instance,
    instance_rng,
    random_instance,
    recursive_greedy,
    red_first,
    validate,
)
from paintshop.ising import adjacency_energy


def naive_greedy(word, n, initial=0):
    """Paint left to right with the running color, flip only when forced."""
    fc = [-1] * n
    current = initial
    for car in word:
        if fc[car] < 0:
            fc[car] = current
        else:
            current = 1 - fc[car]
    return fc


def words(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations([i for i in range(n) for _ in range(2)])
    )


class TestGreedy:
    @given(words())
    def test_matches_naive_walk(self, word):
        inst = validate(word)
        assert greedy(inst).first_color.tolist() == naive_greedy(word, inst.n)
        assert greedy(inst, initial_color=1).first_color.tolist() == naive_greedy(
            word, inst.n, initial=1
        )

    @given(words())
    def test_never_below_optimum(self, word):
        inst = validate(word)
        assert color_changes(inst, greedy(inst)) >= brute_force_opt(inst).opt_changes

    def test_mean_cost_per_car_near_half(self):
        total = 0
        count, n = 20, 2000
        for k in range(count):
            inst = random_instance(n, instance_rng(21, k))
            total += color_changes(inst, greedy(inst)) / n
        assert abs(total / count - 0.5) < 0.03


class TestRedFirst:
    @given(words())
    def test_all_first_occurrences_share_a_color(self, word):
        inst = validate(word)
        coloring = red_first(inst)
        assert coloring.first_color.tolist() == [0] * inst.n

    def test_mean_cost_per_car_near_two_thirds(self):
        total = 0
        count, n = 20, 2000
        for k in range(count):
            inst = random_instance(n, instance_rng(22, k))
            total += color_changes(inst, red_first(inst)) / n
        assert abs(total / count - 2 / 3) < 0.03


class TestRecursiveGreedy:
    @given(words())
    @settings(max_examples=60)
    def test_never_below_optimum(self, word):
        inst = validate(word)
        assert (
            color_changes(inst, recursive_greedy(inst))
            >= brute_force_opt(inst).opt_changes
        )

    def test_solves_nested_ladder_exactly(self):
        # the peel-and-reinsert order handles (0,1,...,n-1,n-1,...,1,0) optimally
        for n in (2, 5, 9, 16):
            inst = hard_instance(n)
            assert color_changes(inst, recursive_greedy(inst)) == 1

    def test_mean_cost_per_car_near_two_fifths(self):
        total = 0
        count, n = 20, 2000
        for k in range(count):
            inst = random_instance(n, instance_rng(23, k))
            total += color_changes(inst, recursive_greedy(inst)) / n
        assert abs(total / count - 0.4) < 0.03

    def test_beats_greedy_on_average(self):
        count, n = 30, 500
        rec = grd = 0
        for k in range(count):
            inst = random_instance(n, instance_rng(24, k))
            rec += color_changes(inst, recursive_greedy(inst))
            grd += color_changes(inst, greedy(inst))
        assert rec < grd


class TestGreedySubsystem:
    @given(words(max_n=10))
    @settings(max_examples=60)
    def test_acyclic_unit_couplings_one_less_than_cars(self, word):
        inst = validate(word)
        sub = greedy_subsystem(inst)
        assert len(sub.couplings) == inst.n - 1
        assert set(sub.couplings.values()) <= {-1, 1}
        # acyclicity via union-find: each coupling joins two components
        parent = list(range(inst.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, b) in sub.couplings:
            ra, rb = find(a), find(b)
            assert ra != rb
            parent[ra] = rb

    @given(words(max_n=10))
    @settings(max_examples=60)
    def test_greedy_reaches_subsystem_ground_energy(self, word):
        # an acyclic +-1 system is frustration free: minimum is -(n-1)
        inst = validate(word)
        sub = greedy_subsystem(inst)
        spins = coloring_to_spins(greedy(inst))
        assert adjacency_energy(sub, spins) == -(inst.n - 1)
