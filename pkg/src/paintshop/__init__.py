"""Binary paint shop problem: solvers, QAOA simulation, benchmarks."""
from .core import (
    BadIdentifier,
    BpspInstance,
    Coloring,
    OracleResult,
    TooLarge,
    WrongMultiplicity,
    brute_force_opt,
    color_changes,
    easy_instance,
    expand,
    from_labels,
    hard_instance,
    instance_rng,
    random_guess_expectation,
    random_instance,
    read_jsonl,
    validate,
    write_jsonl,
)
from .heuristics import greedy, greedy_subsystem, recursive_greedy, red_first
from .ioncompile import (
    GateCounts,
    NativeCircuit,
    NativeGate,
    circuit_from_json,
    circuit_to_json,
    compile_qaoa,
    gate_counts,
    simulate_native,
    state_fidelity,
)
from .ising import (
    CouplingGraph,
    CouplingStats,
    NonUnitCoupling,
    NotATree,
    apply_gauge,
    coloring_to_spins,
    coupling_stats,
    graph_from_json,
    graph_to_json,
    spins_to_coloring,
    to_ising,
    tree_gauge,
)
from .qaoa import (
    DegenerateBaseline,
    EnergySummary,
    LightconeTask,
    QaoaParams,
    Statevector,
    SupportTooLarge,
    UnknownParams,
    calibrate_phase_convention,
    color_change_vector,
    delta_c_metric,
    edge_correlation,
    expectation,
    lightcone_expectation,
    lightcone_support,
    p_alpha,
    sample,
    simulate_state,
    tree_params,
    z_expectations,
)

__version__ = "0.1.0"
