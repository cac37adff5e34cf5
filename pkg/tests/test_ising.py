"""Coupling construction, energy identities, gauge handling."""
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paintshop import (
    Coloring,
    CouplingGraph,
    NonUnitCoupling,
    NotATree,
    apply_gauge,
    coloring_to_spins,
    coupling_stats,
    graph_from_json,
    graph_to_json,
    instance_rng,
    random_instance,
    spins_to_coloring,
    to_ising,
    tree_gauge,
    validate,
)
from paintshop.ising import adjacency_energy, hamiltonian_energy


def naive_changes(seq, fc):
    seen = {}
    colors = []
    for car in seq:
        k = seen.get(car, 0)
        seen[car] = k + 1
        colors.append(fc[car] ^ k)
    return sum(a != b for a, b in zip(colors, colors[1:]))


def words(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations([i for i in range(n) for _ in range(2)])
    )


class TestMerging:
    def test_alternating_pair_merges_to_minus_one(self):
        g = to_ising(validate([0, 1, 0, 1]))
        assert g.couplings == {(0, 1): -1}
        assert g.constant == 0

    def test_interleaved_triple(self):
        g = to_ising(validate([0, 1, 2, 0, 1, 2]))
        assert g.couplings == {(0, 1): -2, (0, 2): 1, (1, 2): -2}
        assert g.constant == 0

    def test_self_adjacencies_become_constants(self):
        g = to_ising(validate([0, 0, 1, 1]))
        assert g.couplings == {(0, 1): 1}
        assert g.constant == 2

    def test_cancelled_pairs_are_dropped_but_counted(self):
        inst = validate([0, 1, 0, 2, 1, 2])
        g = to_ising(inst)
        assert g.couplings == {(0, 2): 1}
        stats = coupling_stats([inst])
        assert stats.zero_merged == 2
        assert stats.histogram.get(0) == 2

    @given(words())
    def test_values_are_small_integers_and_degree_at_most_four(self, word):
        g = to_ising(validate(word))
        assert set(g.couplings.values()) <= {-2, -1, 1, 2}
        assert g.degrees().max(initial=0) <= 4
        for (a, b) in g.couplings:
            assert a < b


class TestEnergyIdentity:
    @given(words())
    @settings(max_examples=40)
    def test_cost_equals_shifted_adjacency_energy(self, word):
        inst = validate(word)
        g = to_ising(inst)
        for fc in itertools.product((0, 1), repeat=inst.n):
            coloring = Coloring(first_color=np.array(fc, dtype=np.int8))
            spins = coloring_to_spins(coloring)
            e = adjacency_energy(g, spins)
            assert naive_changes(word, fc) == (e + 2 * inst.n - 1) / 2
            assert hamiltonian_energy(g, spins) == e / 2

    def test_spin_color_round_trip(self):
        coloring = Coloring(first_color=np.array([0, 1, 1, 0], dtype=np.int8))
        spins = coloring_to_spins(coloring)
        assert spins.tolist() == [1, -1, -1, 1]
        back = spins_to_coloring(spins)
        assert back.first_color.tolist() == [0, 1, 1, 0]


class TestCouplingStats:
    def test_large_instance_fractions(self):
        instances = [random_instance(20_000, instance_rng(9, k)) for k in range(5)]
        stats = coupling_stats(instances)
        assert abs(stats.frac_minus_one - 2 / 3) < 0.03
        assert abs(stats.frac_plus_one - 1 / 3) < 0.03
        assert stats.frac_mag_two < 0.01
        assert stats.mean_degree > 3.9
        assert stats.pair_count > 0

    def test_rejects_empty_input(self):
        with pytest.raises(ValueError):
            coupling_stats([])


class TestTreeGauge:
    def test_path_example(self):
        g = CouplingGraph(n=3, couplings={(0, 1): -1, (1, 2): 1}, constant=0)
        assert tree_gauge(g) == frozenset({0})

    def test_tie_prefers_set_without_smallest_qubit(self):
        g = CouplingGraph(n=2, couplings={(0, 1): -1}, constant=0)
        assert tree_gauge(g) == frozenset({1})

    def test_apply_gauge_makes_all_couplings_positive(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            n = int(rng.integers(2, 14))
            parent = [int(rng.integers(0, k)) for k in range(1, n)]
            couplings = {}
            for child, par in enumerate(parent, start=1):
                a, b = min(par, child), max(par, child)
                couplings[(a, b)] = int(rng.choice([-1, 1]))
            g = CouplingGraph(n=n, couplings=couplings, constant=0)
            fixed = apply_gauge(g, tree_gauge(g))
            assert set(fixed.couplings.values()) <= {1}
            assert fixed.couplings.keys() == couplings.keys()

    def test_gauge_preserves_energy_spectrum(self):
        g = CouplingGraph(
            n=4, couplings={(0, 1): -1, (1, 2): 1, (1, 3): -1}, constant=0
        )
        flips = tree_gauge(g)
        fixed = apply_gauge(g, flips)
        for bits in itertools.product((1, -1), repeat=4):
            spins = np.array(bits)
            flipped = spins.copy()
            for q in flips:
                flipped[q] *= -1
            assert adjacency_energy(g, spins) == adjacency_energy(fixed, flipped)

    def test_rejects_cycles(self):
        cyc = CouplingGraph(
            n=3, couplings={(0, 1): 1, (1, 2): 1, (0, 2): 1}, constant=0
        )
        with pytest.raises(NotATree):
            tree_gauge(cyc)
        frustrated = CouplingGraph(
            n=3, couplings={(0, 1): 1, (1, 2): 1, (0, 2): -1}, constant=0
        )
        with pytest.raises(NotATree):
            tree_gauge(frustrated)

    def test_rejects_non_unit_couplings(self):
        g = CouplingGraph(n=2, couplings={(0, 1): 2}, constant=0)
        with pytest.raises(NonUnitCoupling):
            tree_gauge(g)


class TestGraphJson:
    def test_round_trip(self):
        g = to_ising(validate([0, 1, 2, 0, 1, 2]))
        obj = graph_to_json(g)
        assert obj["couplings"] == [[0, 1, -2], [0, 2, 1], [1, 2, -2]]
        back = graph_from_json(obj)
        assert back.n == g.n
        assert back.couplings == g.couplings
        assert back.constant == g.constant
