//! Toll convexity on simple graphs: tolled walks and toll intervals, toll
//! closures and hulls, extreme vertices, toll and t-hull numbers, graph
//! products, and an exhaustive verification harness for strong products.

pub mod cli;
pub mod error;
pub mod exec;
pub mod graph;
pub mod harness;
pub mod io;
pub mod product;
pub mod search;
pub mod toll;
pub mod vertex_set;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{family, DistanceMatrix, Family, Graph};
pub use io::{emit_edge_list, emit_graph6, enumerate_connected, parse_edge_list, parse_graph6, Corpus};
pub use product::{
    cartesian_product, lexicographic_product, strong_equals_lex_on_complete, strong_product, ProductGraph, ProductKind,
};
pub use search::{
    dominance_free_pair, geodetic_number, has_dominated_neighbor, hull_number, t_hull_number, tn2_witness_predicate,
    toll_number, InvariantResult,
};
pub use toll::{
    extreme_vertices, geodesic_interval, is_extreme_vertex, is_toll_convex, is_tolled_walk, monophonic_interval,
    toll_certificate, toll_closure, toll_hull, toll_interval, toll_interval_oracle, HullTrace, IntervalTable,
    TollCertificate, Walk,
};
pub use vertex_set::VertexSet;
