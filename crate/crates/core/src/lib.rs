//! Exact computation of fractional chromatic numbers with primal/dual
//! certificates, the principal/sparse vertex-set machinery behind the
//! random-subgraph lower bound, and a harness that checks the bound by
//! Monte Carlo sampling and by exhaustive enumeration on tiny graphs.
//!
//! All decision-making arithmetic is exact: rationals for LP and set
//! predicates, rational interval enclosures for the logarithmic bound
//! formulas. Floating point appears only in confidence-interval statistics.

pub mod bounds;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod harness;
pub mod indset;
pub mod interval;
pub mod lp;
pub mod order;
pub mod ratio;
pub mod rng;
mod simplex;
pub mod stats;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
