//! Exact computation of LLT polynomials and LLT cumulants of shape sequences
//! and LLT graphs, the tree, path and parking-function bijections relating
//! them, and verifiers for the cumulant identities of melting lollipops.
//!
//! Polynomial types are generic over the coefficient ring; [`QPoly`] and
//! [`SymPoly`] fix it to arbitrary-precision integers.

pub mod coeff;
pub mod cumulant;
pub mod error;
pub mod lltgraph;
pub mod qpoly;
pub mod report;
pub mod shapes;
pub mod simple_graph;
pub mod symfunc;
pub mod theorem;
pub mod treebij;

pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use lltgraph::{LltGraph, MeltingLollipop};
pub use report::{VerificationReport, Verdict};
pub use shapes::{ShapeSequence, SkewShape};
pub use simple_graph::SimpleGraph;
pub use symfunc::Partition;
pub use treebij::{LabeledTree, ParkingFunction, PlaneTree, SchroderPath};

pub use num_bigint::BigInt;

pub type QPoly = qpoly::Poly<num_bigint::BigInt>;
pub type SymPoly = symfunc::SymFunc<num_bigint::BigInt>;
