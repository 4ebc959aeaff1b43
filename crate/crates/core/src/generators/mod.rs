//! Explicit constructions of transition graphs and branching programs.

mod branching;
mod graph_properties;
mod sat;
mod streaming;

pub use branching::{from_monotone_bp, ordered_triples, p3f_branching_program};
pub use graph_properties::{
    clique_family, clique_indicator_graph, not_p3f_graph, p3f_family, MAX_P3F_VERTICES,
};
pub use sat::{sat_reduction, CnfFormula};
pub use streaming::{
    counter_algorithm, eq_graph, eq_x_var, eq_y_var, from_streaming_algorithm,
    from_streaming_algorithm_in_order, slice_graph, symmetric_graph, threshold_graph, xor_graph,
    StreamingAlgorithmSpec,
};
