"""Dense statevector simulation of the QAOA circuit and derived estimators.

Basis convention: for a state over ``qubit_ids``, bit t of a basis index is
the first color of ``qubit_ids[t]`` (0 -> spin +1, 1 -> spin -1), so index
bits, spins, and colorings convert without reordering.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import BpspInstance, Coloring, TooLarge, brute_force_opt
from ..ising import CouplingGraph, to_ising
from .params import PHASE_SCALE, QaoaParams


class DegenerateBaseline(ZeroDivisionError):
    """The random baseline coincides with the simulated mean."""


@dataclass(frozen=True)
class Statevector:
    qubit_ids: tuple
    amplitudes: np.ndarray


@dataclass(frozen=True)
class EnergySummary:
    mean_adjacency_energy: float
    mean_color_changes: float


def pair_energy_vector(
    graph: CouplingGraph, qubit_order: tuple | None = None
) -> np.ndarray:
    """sum_ij J_ij s_i s_j per basis index, as an integer vector.

    ``qubit_order`` restricts and re-indexes the graph to the listed qubits;
    couplings with an endpoint outside the list are ignored.
    """
    if qubit_order is None:
        qubit_order = tuple(range(graph.n))
    index = {q: t for t, q in enumerate(qubit_order)}
    k = len(qubit_order)
    basis = np.arange(1 << k, dtype=np.int64)
    energies = np.zeros(1 << k, dtype=np.int64)
    for (i, j) in sorted(graph.couplings):
        if i not in index or j not in index:
            continue
        parity = ((basis >> index[i]) ^ (basis >> index[j])) & 1
        energies += graph.couplings[(i, j)] * (1 - 2 * parity)
    return energies


def _apply_x_rotation(state: np.ndarray, beta: float, bit: int) -> None:
    """In-place exp(-i beta X) on the given index bit."""
    # Python scalars keep single-precision states single precision.
    c = float(np.cos(beta))
    s = complex(-1j * np.sin(beta))
    view = state.reshape(-1, 2, 1 << bit)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = c * a0 + s * a1
    view[:, 1, :] = s * a0 + c * a1


def _run_circuit(
    state: np.ndarray,
    energies: np.ndarray,
    params: QaoaParams,
    n_qubits: int,
    phase_scale: float,
) -> np.ndarray:
    for gamma, beta in params.angles:
        phases = np.exp((-1j * gamma * phase_scale) * energies)
        state = state * phases.astype(state.dtype, copy=False)
        for bit in range(n_qubits):
            _apply_x_rotation(state, beta, bit)
    return state


def simulate_state(
    graph: CouplingGraph,
    params: QaoaParams,
    *,
    phase_scale: float = PHASE_SCALE,
    cap_qubits: int = 22,
) -> Statevector:
    """Evolve |+...+> through p levels of phase and mixer unitaries.

    Single precision is used above 22 qubits to halve the footprint.
    """
    n = graph.n
    if n > cap_qubits:
        raise TooLarge(f"statevector capped at {cap_qubits} qubits, got {n}")
    dtype = np.complex128 if n <= 22 else np.complex64
    state = np.full(1 << n, 1 / np.sqrt(1 << n), dtype=dtype)
    energies = pair_energy_vector(graph)
    state = _run_circuit(state, energies, params, n, phase_scale)
    return Statevector(qubit_ids=tuple(range(n)), amplitudes=state)


def expectation(
    graph: CouplingGraph,
    params: QaoaParams,
    *,
    phase_scale: float = PHASE_SCALE,
    cap_qubits: int = 22,
) -> EnergySummary:
    """Exact circuit expectations of the adjacency energy and the cost."""
    state = simulate_state(
        graph, params, phase_scale=phase_scale, cap_qubits=cap_qubits
    )
    probs = np.abs(state.amplitudes) ** 2
    energies = pair_energy_vector(graph)
    mean_adj = graph.constant + float(probs @ energies)
    return EnergySummary(
        mean_adjacency_energy=mean_adj,
        mean_color_changes=(mean_adj + 2 * graph.n - 1) / 2,
    )


def z_expectations(state: Statevector) -> np.ndarray:
    """<Z_q> for each qubit of the state (order follows qubit_ids)."""
    probs = np.abs(state.amplitudes) ** 2
    k = len(state.qubit_ids)
    basis = np.arange(1 << k, dtype=np.int64)
    out = np.empty(k, dtype=np.float64)
    for t in range(k):
        spins = 1 - 2 * ((basis >> t) & 1)
        out[t] = float(probs @ spins)
    return out


def _sample_indices(
    state: Statevector, shots: int, rng: np.random.Generator | int
) -> np.ndarray:
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    probs = np.abs(state.amplitudes) ** 2
    probs = probs / probs.sum()
    return rng.choice(probs.size, size=shots, p=probs)


def sample(
    state: Statevector, shots: int, rng: np.random.Generator | int
) -> np.ndarray:
    """Measure the state ``shots`` times; rows are +-1 spin configurations.

    Column t corresponds to ``state.qubit_ids[t]``.
    """
    indices = _sample_indices(state, shots, rng)
    k = len(state.qubit_ids)
    bits = (indices[:, None] >> np.arange(k)[None, :]) & 1
    return (1 - 2 * bits).astype(np.int8)


def color_change_vector(instance: BpspInstance) -> np.ndarray:
    """Cost of every first-color assignment, indexed by the basis index."""
    graph = to_ising(instance)
    energies = pair_energy_vector(graph)
    return (energies + graph.constant + 2 * instance.n - 1) // 2


def p_alpha(
    instance: BpspInstance,
    state: Statevector,
    alpha: float,
    *,
    oracle_cap: int = 24,
) -> float:
    """Probability mass on assignments with cost <= alpha * optimum.

    The threshold is inclusive; the optimum comes from the exact oracle.
    """
    if state.qubit_ids != tuple(range(instance.n)):
        raise ValueError("state must cover qubits 0..n-1 of the instance")
    opt = brute_force_opt(instance, cap_cars=oracle_cap).opt_changes
    costs = color_change_vector(instance)
    probs = np.abs(state.amplitudes) ** 2
    # renormalize so a mask covering every outcome yields exactly 1.0
    return float(probs[costs <= alpha * opt].sum() / probs.sum())


def delta_c_metric(qpu_mean: float, sim_mean: float, random_mean: float) -> float:
    """(qpu - sim) / (random - sim): 0 at the simulator, 1 at random guessing."""
    denom = random_mean - sim_mean
    if denom == 0:
        raise DegenerateBaseline("random baseline equals the simulated mean")
    return (qpu_mean - sim_mean) / denom
