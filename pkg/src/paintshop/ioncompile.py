"""Compilation of the QAOA circuit to a trapped-ion native gate set.

Native gates:

* ``r``: single-qubit R(theta, phi) =
  [[cos(theta/2), -i e^{-i phi} sin(theta/2)],
   [-i e^{i phi} sin(theta/2), cos(theta/2)]];
  R_X(theta) = R(theta, 0), R_Y(theta) = R(theta, pi/2).
* ``rxx``: two-qubit R_XX(alpha) = exp(-i alpha XX / 2).
* ``rz``: virtual R_Z(theta) = exp(-i theta Z / 2) (zero-cost phase advance).

Pushing the initial Hadamard layer through the circuit turns every phase
layer into an R_XX layer (coupling sign and magnitude folded into the
angle), every intermediate mixer into a virtual Z layer, and the final
mixer-plus-Hadamard into R_Y(pi/2) followed by R_X(2 beta_p - pi), up to a
global phase.  Depth is the plain gate count (sequential execution):
p * m two-qubit gates plus n * (p + 1) single-qubit gates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TooLarge
from .ising import CouplingGraph
from .qaoa.params import PHASE_SCALE, QaoaParams
from .qaoa.statevector import Statevector


@dataclass(frozen=True)
class NativeGate:
    kind: str
    qubits: tuple
    angles: tuple

    def to_json(self) -> dict:
        if self.kind == "rxx":
            return {
                "kind": "rxx",
                "qubits": [self.qubits[0], self.qubits[1]],
                "angle": self.angles[0],
            }
        if self.kind == "r":
            return {
                "kind": "r",
                "qubit": self.qubits[0],
                "theta": self.angles[0],
                "phi": self.angles[1],
            }
        if self.kind == "rz":
            return {"kind": "rz", "qubit": self.qubits[0], "theta": self.angles[0]}
        raise ValueError(f"unknown gate kind {self.kind!r}")


@dataclass(frozen=True)
class NativeCircuit:
    n: int
    gates: tuple

    @property
    def depth(self) -> int:
        return len(self.gates)


@dataclass(frozen=True)
class GateCounts:
    depth: int
    singles: int
    doubles: int


def rxx(i: int, j: int, angle: float) -> NativeGate:
    return NativeGate(kind="rxx", qubits=(i, j), angles=(angle,))


def r(qubit: int, theta: float, phi: float) -> NativeGate:
    return NativeGate(kind="r", qubits=(qubit,), angles=(theta, phi))


def rz(qubit: int, theta: float) -> NativeGate:
    return NativeGate(kind="rz", qubits=(qubit,), angles=(theta,))


def compile_qaoa(
    graph: CouplingGraph, params: QaoaParams, *, phase_scale: float = PHASE_SCALE
) -> NativeCircuit:
    """Native-gate realization of the p-level circuit on |0...0>.

    Equivalent to the reference simulator's unitary applied to |+...+>, up
    to global phase.  Couplings are visited in sorted order so the gate list
    is deterministic.
    """
    pairs = sorted(graph.couplings)
    gates: list[NativeGate] = []

    def phase_layer(gamma: float) -> None:
        # exp(-i gamma * phase_scale * J * XX) = R_XX(2 gamma * phase_scale * J)
        for a, b in pairs:
            gates.append(rxx(a, b, 2 * gamma * phase_scale * graph.couplings[(a, b)]))

    angles = params.angles
    phase_layer(angles[0][0])
    for level in range(1, params.p):
        beta_prev = angles[level - 1][1]
        for q in range(graph.n):
            gates.append(rz(q, 2 * beta_prev))  # exp(-i beta Z) virtually
        phase_layer(angles[level][0])
    beta_last = angles[-1][1]
    for q in range(graph.n):
        gates.append(r(q, np.pi / 2, np.pi / 2))
    for q in range(graph.n):
        gates.append(r(q, 2 * beta_last - np.pi, 0.0))
    return NativeCircuit(n=graph.n, gates=tuple(gates))


def gate_counts(circuit: NativeCircuit) -> GateCounts:
    singles = sum(1 for g in circuit.gates if g.kind in ("r", "rz"))
    doubles = sum(1 for g in circuit.gates if g.kind == "rxx")
    return GateCounts(depth=circuit.depth, singles=singles, doubles=doubles)


def _gate_matrix(gate: NativeGate) -> np.ndarray:
    if gate.kind == "r":
        theta, phi = gate.angles
        c = np.cos(theta / 2)
        s = np.sin(theta / 2)
        return np.array(
            [
                [c, -1j * np.exp(-1j * phi) * s],
                [-1j * np.exp(1j * phi) * s, c],
            ],
            dtype=np.complex128,
        )
    if gate.kind == "rz":
        (theta,) = gate.angles
        return np.array(
            [[np.exp(-1j * theta / 2), 0], [0, np.exp(1j * theta / 2)]],
            dtype=np.complex128,
        )
    if gate.kind == "rxx":
        (alpha,) = gate.angles
        c = np.cos(alpha / 2)
        s = -1j * np.sin(alpha / 2)
        return np.array(
            [
                [c, 0, 0, s],
                [0, c, s, 0],
                [0, s, c, 0],
                [s, 0, 0, c],
            ],
            dtype=np.complex128,
        )
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def _apply_1q(state: np.ndarray, mat: np.ndarray, bit: int) -> None:
    view = state.reshape(-1, 2, 1 << bit)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = mat[0, 0] * a0 + mat[0, 1] * a1
    view[:, 1, :] = mat[1, 0] * a0 + mat[1, 1] * a1


def _apply_2q(state: np.ndarray, mat: np.ndarray, bit_a: int, bit_b: int, n: int) -> np.ndarray:
    tensor = state.reshape([2] * n)
    # Axis for index bit t is n-1-t; matrix rows/cols are ordered (a, b).
    axes = (n - 1 - bit_a, n - 1 - bit_b)
    moved = np.moveaxis(tensor, axes, (0, 1)).reshape(4, -1)
    moved = mat @ moved
    restored = np.moveaxis(moved.reshape(2, 2, *([2] * (n - 2))), (0, 1), axes)
    return np.ascontiguousarray(restored).reshape(-1)


def simulate_native(circuit: NativeCircuit, *, cap_qubits: int = 22) -> Statevector:
    """Run the native circuit on |0...0>."""
    n = circuit.n
    if n > cap_qubits:
        raise TooLarge(f"native simulation capped at {cap_qubits} qubits, got {n}")
    state = np.zeros(1 << n, dtype=np.complex128)
    state[0] = 1.0
    for gate in circuit.gates:
        mat = _gate_matrix(gate)
        if gate.kind == "rxx":
            state = _apply_2q(state, mat, gate.qubits[0], gate.qubits[1], n)
        else:
            _apply_1q(state, mat, gate.qubits[0])
    return Statevector(qubit_ids=tuple(range(n)), amplitudes=state)


def state_fidelity(a: Statevector, b: Statevector) -> float:
    """|<a|b>| with both states normalized; global phase drops out."""
    if a.qubit_ids != b.qubit_ids:
        raise ValueError("states are over different qubits")
    va = a.amplitudes / np.linalg.norm(a.amplitudes)
    vb = b.amplitudes / np.linalg.norm(b.amplitudes)
    return float(np.abs(np.vdot(va, vb)))


def circuit_to_json(circuit: NativeCircuit) -> dict:
    """Stable JSON form: {"n": ..., "gates": [...]} in execution order."""
    return {"n": circuit.n, "gates": [g.to_json() for g in circuit.gates]}


def circuit_from_json(obj: dict) -> NativeCircuit:
    gates = []
    for g in obj["gates"]:
        if g["kind"] == "rxx":
            gates.append(rxx(g["qubits"][0], g["qubits"][1], g["angle"]))
        elif g["kind"] == "r":
            gates.append(r(g["qubit"], g["theta"], g["phi"]))
        elif g["kind"] == "rz":
            gates.append(rz(g["qubit"], g["theta"]))
        else:
            raise ValueError(f"unknown gate kind {g['kind']!r}")
    return NativeCircuit(n=int(obj["n"]), gates=tuple(gates))
