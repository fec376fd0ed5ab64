//! Hamiltonian completion numbers of caterpillar trees.
//!
//! The crate computes the minimum number of edges whose addition makes a
//! caterpillar Hamiltonian using closed forms for several families
//! ([`closed_form`]), builds explicit completing edge sets with witness
//! cycles ([`construct`]), and checks everything against an exhaustive
//! search ([`oracle`]) on small instances.

pub mod caterpillar;
pub mod closed_form;
pub mod construct;
pub mod error;
pub mod graph;
pub mod ham;
pub mod io;
pub mod oracle;
pub mod sweep;

pub use caterpillar::{build_graph, classify, decompose_segments, CaterpillarSpec, ClassLabel, SegmentDecomposition};
pub use closed_form::{lambda, lambda_closed_form, LambdaResult};
pub use construct::{construct, AugmentationPlan};
pub use error::{Error, GraphError, Result};
pub use graph::{Edge, Graph, VertexId};
pub use oracle::{min_cycle_augmentation, min_path_augmentation, OracleResult};
