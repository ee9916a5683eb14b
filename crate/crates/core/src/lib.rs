//! Packing colorings of small graphs.
//!
//! An exact solver for the packing chromatic number, vertex and edge
//! criticality sweeps, a structural recognizer for graphs with packing
//! chromatic number 3, generators and recognizers for every family of
//! 4-critical graphs, and a harness that checks those characterizations
//! exhaustively on all small connected graphs.

pub mod canon;
pub mod cli;
pub mod critical;
pub mod cycles;
pub mod dot;
pub mod error;
pub mod families;
pub mod g3;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod solver;

pub use canon::{are_isomorphic, canonical_form, find_isomorphism, CanonicalForm};
pub use critical::{analyze, is_k_vertex_critical, CriticalityReport};
pub use cycles::cycle_spectrum;
pub use error::{Error, Result};
pub use families::{classify, generate, list_members, ClassificationResult, FamilyId, Universe};
pub use g3::{recognize_g3, validate_certificate, G3Certificate, Part};
pub use graph::{parse_edge_list, DistanceMatrix, Graph, INFINITY};
pub use graph6::{parse_graph6, to_graph6};
pub use solver::{chi_rho, chi_rho_closed_form, find_k_packing_coloring, is_valid, lower_bound, ChiRhoResult, ClosedFormShape, PackingColoring};
