//! Pauli, Clifford and Bell gate groups and the Pauli commutation graph.

mod gates;
mod graph;
mod pauli;

pub use gates::{
    bell_generators, bell_group, clifford_generators, clifford_group, clifford_order_formula,
    named_generators, pauli2_five_generators, pauli_generators, pauli_group, yang_baxter_check,
    GateCatalog,
};
pub use graph::SimpleGraph;
pub use pauli::{
    mub_chain, pauli_graph, phase_representative, quadrangle_checks, AutOrder, ChainStep,
    PauliGraph, QuadrangleReport,
};
